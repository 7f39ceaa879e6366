#include "glueform/presentation.hpp"

#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "glueform/error.hpp"

namespace glueform {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Entry {
  std::string key;
  std::string value;
  std::size_t line;
};

struct Section {
  std::string kind;  // space | plot | pullback | compute
  std::string name;
  std::size_t line;
  std::vector<Entry> entries;
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  if (line == 0) throw ParseError(message, 0);
  throw ParseError("line " + std::to_string(line) + ": " + message, line);
}

std::vector<Section> read_sections(std::string_view text) {
  std::vector<Section> sections;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      const auto parts = words(std::string_view(line).substr(1, line.size() - 2));
      if (parts.empty()) fail(line_no, "empty section header");
      const std::string& kind = parts[0];
      if (kind == "space" || kind == "compute") {
        if (parts.size() != 1) fail(line_no, "[" + kind + "] takes no name");
      } else if (kind == "plot" || kind == "pullback") {
        if (parts.size() != 2 || !is_identifier(parts[1]))
          fail(line_no, "[" + kind + "] requires exactly one identifier name");
      } else {
        fail(line_no, "unknown section [" + kind + "]");
      }
      sections.push_back({kind, parts.size() > 1 ? parts[1] : "", line_no, {}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    if (!is_identifier(key)) fail(line_no, "invalid key '" + key + "'");
    if (sections.empty()) fail(line_no, "entry outside of any section");
    sections.back().entries.push_back({key, trim(std::string_view(line).substr(eq + 1)), line_no});
  }
  return sections;
}

// Entries of one section, keyed for lookup with duplicate and unknown-key
// detection.
class SectionReader {
 public:
  SectionReader(const Section& section, std::set<std::string> allowed_prefixes,
                std::set<std::string> repeatable = {})
      : section_(section) {
    for (const auto& e : section.entries) {
      bool known = false;
      for (const auto& p : allowed_prefixes)
        known = known || e.key == p || (p.back() == '_' && e.key.rfind(p, 0) == 0);
      if (!known) fail(e.line, "unknown key '" + e.key + "' in " + title());
      if (!repeatable.count(e.key) && by_key_.count(e.key))
        fail(e.line, "duplicate key '" + e.key + "' in " + title());
      by_key_[e.key].push_back(&e);
    }
  }

  std::string title() const {
    return "[" + section_.kind + (section_.name.empty() ? "" : " " + section_.name) + "]";
  }

  const Entry* find(const std::string& key) const {
    const auto it = by_key_.find(key);
    return it == by_key_.end() ? nullptr : it->second.front();
  }
  const Entry& require(const std::string& key) const {
    if (const Entry* e = find(key)) return *e;
    fail(section_.line, title() + " is missing '" + key + "'");
  }
  std::vector<const Entry*> all(const std::string& key) const {
    const auto it = by_key_.find(key);
    return it == by_key_.end() ? std::vector<const Entry*>{} : it->second;
  }
  std::vector<std::string> keys_with_prefix(const std::string& prefix) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : by_key_)
      if (k.rfind(prefix, 0) == 0) out.push_back(k);
    return out;
  }
  std::size_t line() const { return section_.line; }

 private:
  const Section& section_;
  std::map<std::string, std::vector<const Entry*>> by_key_;
};

VarContext read_vars(const Entry& e) {
  try {
    return VarContext(words(e.value));
  } catch (const UsageError& err) {
    fail(e.line, err.what());
  }
}

Polynomial read_poly(const std::string& text, const VarContext& ctx, std::size_t line) {
  try {
    return parse_polynomial(text, ctx);
  } catch (const ParseError& err) {
    fail(line, err.what());
  }
}

// Comma-separated polynomials; `expected` components are required.
PolyMap read_map(const std::string& text, const VarContext& source, std::size_t expected,
                 std::size_t line, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != expected)
    fail(line, what + " has " + std::to_string(parts.size()) + " component(s), expected " +
                   std::to_string(expected));
  std::vector<Polynomial> comps;
  for (const auto& p : parts) {
    if (p.empty()) fail(line, what + " has an empty component");
    comps.push_back(read_poly(p, source, line));
  }
  return PolyMap(source, std::move(comps));
}

std::uint64_t read_uint(const std::string& text, std::size_t line, const std::string& what) {
  if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos)
    fail(line, what + " must be an unsigned integer, got '" + text + "'");
  return std::stoull(text);
}

Plot read_plot(const Section& section, const VarContext& ambient) {
  SectionReader r(section, {"vars", "components", "retraction", "symmetry_vars", "symmetry"},
                  {"symmetry"});
  const VarContext domain = read_vars(r.require("vars"));
  const Entry& comps = r.require("components");
  PolyMap map = read_map(comps.value, domain, ambient.size(), comps.line, "components");

  const Entry* retraction = r.find("retraction");
  const auto symmetries = r.all("symmetry");
  if ((retraction != nullptr) == !symmetries.empty())
    fail(section.line, r.title() + " needs exactly one of 'retraction' or 'symmetry' lines");
  if (retraction) {
    if (r.find("symmetry_vars")) fail(section.line, r.title() + ": symmetry_vars without symmetry");
    return Plot{section.name, std::move(map),
                Retraction{read_map(retraction->value, ambient, domain.size(), retraction->line,
                                    "retraction")}};
  }
  const VarContext sym_vars = read_vars(r.require("symmetry_vars"));
  SymmetryGenerators gens{sym_vars, {}};
  for (const Entry* e : symmetries) {
    const auto sides = split(e->value, '|');
    if (sides.size() != 2) fail(e->line, "symmetry needs 'h components | h' components'");
    gens.pairs.push_back({read_map(sides[0], sym_vars, domain.size(), e->line, "symmetry h"),
                          read_map(sides[1], sym_vars, domain.size(), e->line, "symmetry h'")});
  }
  return Plot{section.name, std::move(map), std::move(gens)};
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string components_text(const PolyMap& map) {
  std::vector<std::string> parts;
  for (const auto& c : map.components()) parts.push_back(c.to_string());
  return join(parts, ", ");
}

void print_entry(std::ostream& os, const std::string& key, const std::string& value) {
  os << key << " =";
  if (!value.empty()) os << ' ' << value;
  os << '\n';
}

}  // namespace

PresentationFile parse_presentation(std::string_view text) {
  const auto sections = read_sections(text);
  const Section* space = nullptr;
  const Section* compute = nullptr;
  std::vector<const Section*> plots;
  std::vector<const Section*> pullbacks;
  std::set<std::string> names;
  for (const auto& s : sections) {
    if (s.kind == "space") {
      if (space) fail(s.line, "exactly one [space] section required");
      space = &s;
    } else if (s.kind == "compute") {
      if (compute) fail(s.line, "at most one [compute] section allowed");
      compute = &s;
    } else {
      if (!names.insert(s.name).second) fail(s.line, "duplicate section name '" + s.name + "'");
      (s.kind == "plot" ? plots : pullbacks).push_back(&s);
    }
  }
  if (!space) fail(0, "exactly one [space] section required");
  if (plots.size() != 2)
    fail(plots.size() > 2 ? plots[2]->line : 0,
         "exactly two plots required, found " + std::to_string(plots.size()));

  SectionReader sr(*space, {"vars", "equations"});
  const VarContext ambient = read_vars(sr.require("vars"));
  std::vector<Polynomial> equations;
  if (const Entry* e = sr.find("equations")) {
    for (const auto& piece : split(e->value, ';')) {
      if (piece.empty()) fail(e->line, "empty equation");
      equations.push_back(read_poly(piece, ambient, e->line));
    }
  }

  Plot alpha = read_plot(*plots[0], ambient);
  Plot beta = read_plot(*plots[1], ambient);

  std::vector<PullbackChart> charts;
  for (const Section* s : pullbacks) {
    SectionReader r(*s, {"vars", "to_"});
    for (const auto& key : r.keys_with_prefix("to_"))
      if (key != "to_" + alpha.name && key != "to_" + beta.name)
        fail(r.find(key)->line, "'" + key + "' does not name a plot");
    const VarContext vars = read_vars(r.require("vars"));
    const Entry& ta = r.require("to_" + alpha.name);
    const Entry& tb = r.require("to_" + beta.name);
    charts.push_back({s->name,
                      read_map(ta.value, vars, alpha.domain().size(), ta.line, ta.key),
                      read_map(tb.value, vars, beta.domain().size(), tb.line, tb.key)});
  }

  ComputeSettings settings;
  if (compute) {
    SectionReader r(*compute, {"bound", "degrees"});
    if (const Entry* e = r.find("bound"))
      settings.bound = static_cast<std::uint32_t>(read_uint(e->value, e->line, "bound"));
    if (const Entry* e = r.find("degrees")) {
      settings.degrees.clear();
      for (const auto& w : words(e->value)) settings.degrees.push_back(read_uint(w, e->line, "degree"));
    }
  }

  try {
    return {SpacePresentation(ambient, std::move(equations), std::move(alpha), std::move(beta),
                              std::move(charts)),
            settings};
  } catch (const UsageError& err) {
    fail(space->line, err.what());
  }
}

std::string print_presentation(const PresentationFile& file) {
  const SpacePresentation& space = file.space;
  std::ostringstream os;
  os << "[space]\n";
  print_entry(os, "vars", join(space.ambient().names(), " "));
  std::vector<std::string> eqs;
  for (const auto& e : space.equations()) eqs.push_back(e.to_string());
  print_entry(os, "equations", join(eqs, " ; "));

  for (const Plot* plot : {&space.alpha(), &space.beta()}) {
    os << "\n[plot " << plot->name << "]\n";
    print_entry(os, "vars", join(plot->domain().names(), " "));
    print_entry(os, "components", components_text(plot->map));
    if (const auto* r = std::get_if<Retraction>(&plot->witness)) {
      print_entry(os, "retraction", components_text(r->map));
    } else {
      const auto& sym = std::get<SymmetryGenerators>(plot->witness);
      print_entry(os, "symmetry_vars", join(sym.variables.names(), " "));
      for (const auto& pair : sym.pairs)
        print_entry(os, "symmetry", components_text(pair.h) + " | " + components_text(pair.h_prime));
    }
  }
  for (const auto& chart : space.charts()) {
    os << "\n[pullback " << chart.name << "]\n";
    print_entry(os, "vars", join(chart.variables().names(), " "));
    print_entry(os, "to_" + space.alpha().name, components_text(chart.to_alpha));
    print_entry(os, "to_" + space.beta().name, components_text(chart.to_beta));
  }
  os << "\n[compute]\n";
  print_entry(os, "bound", std::to_string(file.compute.bound));
  std::vector<std::string> degs;
  for (auto d : file.compute.degrees) degs.push_back(std::to_string(d));
  print_entry(os, "degrees", join(degs, " "));
  return os.str();
}

DifferentialForm parse_form_file(std::string_view text, const VarContext& domain) {
  static const std::regex entry_re(R"re(^coeff\s*=\s*"([^"]*)"\s*frame\s*=(.*)$)re");
  static const std::regex ident_re(R"([A-Za-z_][A-Za-z0-9_]*)");
  std::optional<DifferentialForm> form;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::smatch m;
    if (!std::regex_match(line, m, entry_re))
      fail(line_no, "expected 'coeff = \"<poly>\" frame = <var> ...'");
    const std::string coeff_text = m[1].str();
    for (auto it = std::sregex_iterator(coeff_text.begin(), coeff_text.end(), ident_re);
         it != std::sregex_iterator(); ++it)
      if (!domain.index_of(it->str()))
        throw UsageError("line " + std::to_string(line_no) + ": variable '" + it->str() +
                         "' is not in the plot domain " + domain.to_string());
    IndexTuple frame;
    for (const auto& v : words(m[2].str())) {
      const auto idx = domain.index_of(v);
      if (!idx)
        throw UsageError("line " + std::to_string(line_no) + ": frame variable '" + v +
                         "' is not in the plot domain " + domain.to_string());
      if (!frame.empty() && frame.back() >= *idx)
        fail(line_no, "frame variables must be strictly increasing in domain order");
      frame.push_back(static_cast<std::uint32_t>(*idx));
    }
    if (!form) form.emplace(domain, frame.size());
    if (form->degree() != frame.size())
      throw UsageError("line " + std::to_string(line_no) + ": frame of length " +
                       std::to_string(frame.size()) + " in a degree-" +
                       std::to_string(form->degree()) + " form");
    form->add_term(frame, read_poly(coeff_text, domain, line_no));
  }
  if (!form) fail(line_no, "form file has no entries");
  return *form;
}

}  // namespace glueform
