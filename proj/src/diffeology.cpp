#include "glueform/diffeology.hpp"

#include <random>
#include <set>
#include <sstream>

#include "glueform/error.hpp"

namespace glueform {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

void check_witness_shape(const Plot& plot, const VarContext& ambient) {
  const std::size_t dim = plot.domain().size();
  if (const auto* r = std::get_if<Retraction>(&plot.witness)) {
    require(r->map.source() == ambient,
            "plot " + plot.name + ": retraction must be written in the ambient variables");
    require(r->map.target_arity() == dim,
            "plot " + plot.name + ": retraction has " + std::to_string(r->map.target_arity()) +
                " components, plot domain has " + std::to_string(dim) + " variables");
    return;
  }
  const auto& sym = std::get<SymmetryGenerators>(plot.witness);
  for (const auto& pair : sym.pairs) {
    require(pair.h.source() == sym.variables && pair.h_prime.source() == sym.variables,
            "plot " + plot.name + ": symmetry maps must use the declared symmetry variables");
    require(pair.h.target_arity() == dim && pair.h_prime.target_arity() == dim,
            "plot " + plot.name + ": symmetry maps must have " + std::to_string(dim) +
                " components");
  }
}

// First index where the two maps differ, if any.
std::optional<std::size_t> first_difference(const PolyMap& a, const PolyMap& b) {
  for (std::size_t i = 0; i < a.target_arity(); ++i)
    if (!(a.component(i) == b.component(i))) return i;
  return std::nullopt;
}

std::string point_to_string(const VarContext& vars, const std::vector<Rational>& point) {
  if (vars.empty()) return "()";
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ", ";
    out += vars.name(i) + "=" + point[i].to_string();
  }
  return out + ")";
}

std::string values_to_string(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].to_string();
  }
  return out + ")";
}

}  // namespace

std::string witness_regime(const HorizontalityWitness& witness) {
  if (std::holds_alternative<Retraction>(witness)) return "retraction (horizontality vacuous)";
  const auto& sym = std::get<SymmetryGenerators>(witness);
  return "symmetry generators (" + std::to_string(sym.pairs.size()) + " pair" +
         (sym.pairs.size() == 1 ? "" : "s") + ", user-asserted)";
}

SpacePresentation::SpacePresentation(VarContext ambient, std::vector<Polynomial> equations,
                                     Plot alpha, Plot beta, std::vector<PullbackChart> charts)
    : ambient_(std::move(ambient)),
      equations_(std::move(equations)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      charts_(std::move(charts)) {
  for (const auto& e : equations_)
    require(e.context() == ambient_, "equation " + e.to_string() + " is not over the ambient variables");
  for (const Plot* p : {&alpha_, &beta_}) {
    require(p->map.target_arity() == ambient_.size(),
            "plot " + p->name + " has " + std::to_string(p->map.target_arity()) +
                " components, ambient space has " + std::to_string(ambient_.size()));
    check_witness_shape(*p, ambient_);
  }
  require(alpha_.name != beta_.name, "plot names must differ");
  std::set<std::string> names;
  for (const auto& c : charts_) {
    require(names.insert(c.name).second, "duplicate pullback chart '" + c.name + "'");
    require(c.to_alpha.source() == c.to_beta.source(),
            "chart " + c.name + ": both maps must share the chart variables");
    require(c.to_alpha.target_arity() == alpha_.domain().size(),
            "chart " + c.name + ": to_" + alpha_.name + " has wrong arity");
    require(c.to_beta.target_arity() == beta_.domain().size(),
            "chart " + c.name + ": to_" + beta_.name + " has wrong arity");
  }
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string VerificationReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

VerificationReport verify_plot(const SpacePresentation& space, const Plot& plot) {
  if (plot.map.target_arity() != space.ambient().size())
    throw UsageError("verify_plot: plot " + plot.name + " has wrong arity");
  Check check{"plot " + plot.name + " lands in X", true, {}, std::nullopt};
  for (const auto& e : space.equations()) {
    Polynomial composed = compose(e, plot.map);
    if (!composed.is_zero()) {
      check.passed = false;
      check.detail = "equation " + e.to_string() + " composes to " + composed.to_string();
      check.witness = std::move(composed);
      break;
    }
  }
  if (check.passed)
    check.detail = std::to_string(space.equations().size()) + " equation(s) vanish identically";
  return {{check}};
}

VerificationReport verify_witness(const Plot& plot) {
  if (const auto* r = std::get_if<Retraction>(&plot.witness)) {
    if (r->map.target_arity() != plot.domain().size() || r->map.source().size() != plot.map.target_arity())
      throw UsageError("verify_witness: retraction arity mismatch for plot " + plot.name);
    Check check{"retraction of plot " + plot.name, true, {}, std::nullopt};
    const PolyMap round_trip = compose(r->map, plot.map);
    const PolyMap id = PolyMap::identity(plot.domain());
    if (const auto i = first_difference(round_trip, id)) {
      check.passed = false;
      check.detail = "component " + std::to_string(*i) + " of q o " + plot.name + " is " +
                     round_trip.component(*i).to_string() + ", expected " +
                     id.component(*i).to_string();
      check.witness = round_trip.component(*i) - id.component(*i);
    } else {
      check.detail = "q o " + plot.name + " = id";
    }
    return {{check}};
  }
  VerificationReport report;
  const auto& sym = std::get<SymmetryGenerators>(plot.witness);
  for (std::size_t k = 0; k < sym.pairs.size(); ++k) {
    const auto& pair = sym.pairs[k];
    if (pair.h.target_arity() != plot.domain().size() ||
        pair.h_prime.target_arity() != plot.domain().size())
      throw UsageError("verify_witness: symmetry pair arity mismatch for plot " + plot.name);
    Check check{"symmetry pair " + std::to_string(k) + " of plot " + plot.name, true, {}, std::nullopt};
    const PolyMap lhs = compose(plot.map, pair.h);
    const PolyMap rhs = compose(plot.map, pair.h_prime);
    if (const auto i = first_difference(lhs, rhs)) {
      check.passed = false;
      check.detail = "component " + std::to_string(*i) + ": " + lhs.component(*i).to_string() +
                     " != " + rhs.component(*i).to_string();
      check.witness = lhs.component(*i) - rhs.component(*i);
    } else {
      check.detail = plot.name + " o " + pair.h.to_string() + " = " + plot.name + " o " +
                     pair.h_prime.to_string();
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

VerificationReport verify_pullback_chart(const SpacePresentation& space, const PullbackChart& chart) {
  if (chart.to_alpha.target_arity() != space.alpha().domain().size() ||
      chart.to_beta.target_arity() != space.beta().domain().size() ||
      !(chart.to_alpha.source() == chart.to_beta.source()))
    throw UsageError("verify_pullback_chart: arity mismatch in chart " + chart.name);
  const PolyMap via_alpha = compose(space.alpha().map, chart.to_alpha);
  const PolyMap via_beta = compose(space.beta().map, chart.to_beta);
  Check check{"pullback chart " + chart.name + " commutes", true, {}, std::nullopt};
  if (const auto i = first_difference(via_alpha, via_beta)) {
    check.passed = false;
    check.detail = space.alpha().name + " o to_" + space.alpha().name + " = " + via_alpha.to_string() +
                   " != " + via_beta.to_string() + " = " + space.beta().name + " o to_" +
                   space.beta().name + " (component " + std::to_string(*i) + ")";
    check.witness = via_alpha.component(*i) - via_beta.component(*i);
  } else {
    check.detail = via_alpha.to_string() + " on both sides";
  }
  return {{check}};
}

VerificationReport verify_factorization(const PolyMap& candidate, const SpacePresentation& space,
                                        PlotSelector through, const PolyMap& h) {
  const Plot& plot = space.plot(through);
  if (h.target_arity() != plot.domain().size() || !(h.source() == candidate.source()) ||
      candidate.target_arity() != space.ambient().size())
    throw UsageError("verify_factorization: arity mismatch");
  const PolyMap factored = compose(plot.map, h);
  Check check{"factorization through " + plot.name, true, {}, std::nullopt};
  if (const auto i = first_difference(candidate, factored)) {
    check.passed = false;
    check.detail = "component " + std::to_string(*i) + ": candidate " +
                   candidate.component(*i).to_string() + " != " + factored.component(*i).to_string();
    check.witness = candidate.component(*i) - factored.component(*i);
  } else {
    check.detail = "candidate = " + plot.name + " o " + h.to_string();
  }
  return {{check}};
}

VerificationReport verify_presentation(const SpacePresentation& space) {
  VerificationReport report;
  for (const Plot* p : {&space.alpha(), &space.beta()}) {
    report.append(verify_plot(space, *p));
    report.append(verify_witness(*p));
  }
  for (const auto& c : space.charts()) report.append(verify_pullback_chart(space, c));
  return report;
}

bool is_horizontal(const Plot& plot, const DifferentialForm& w) {
  if (!(w.context() == plot.domain()))
    throw UsageError("is_horizontal: form over " + w.context().to_string() + ", plot " + plot.name +
                     " has domain " + plot.domain().to_string());
  if (std::holds_alternative<Retraction>(plot.witness)) return true;
  for (const auto& pair : std::get<SymmetryGenerators>(plot.witness).pairs)
    if (!(pullback(pair.h, w) == pullback(pair.h_prime, w))) return false;
  return true;
}

void flatten_horizontality_defect(const Plot& plot, const DifferentialForm& w,
                                  const std::string& prefix,
                                  linalg::ColumnAssembler::SparseColumn& column) {
  if (std::holds_alternative<Retraction>(plot.witness)) return;
  const auto& pairs = std::get<SymmetryGenerators>(plot.witness).pairs;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    flatten_into(pullback(pairs[k].h, w) - pullback(pairs[k].h_prime, w),
                 prefix + "|pair" + std::to_string(k), column);
}

std::vector<DifferentialForm> horizontal_basis(const Plot& plot, std::size_t k,
                                               std::uint32_t max_degree) {
  auto candidates = monomial_form_basis(plot.domain(), k, max_degree);
  if (std::holds_alternative<Retraction>(plot.witness)) return candidates;

  linalg::ColumnAssembler assembler;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    linalg::ColumnAssembler::SparseColumn column;
    flatten_horizontality_defect(plot, candidates[j], "h", column);
    assembler.add_column(candidates[j].to_string(), std::move(column));
  }
  std::vector<DifferentialForm> basis;
  for (const auto& v : linalg::kernel_basis(assembler.build())) {
    DifferentialForm w(plot.domain(), k);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) w += v[j] * candidates[j];
    basis.push_back(std::move(w));
  }
  return basis;
}

std::string SamplingReport::to_string() const {
  std::ostringstream os;
  os << "sampled " << samples << " point(s) per identity, seed " << seed << '\n';
  if (violations.empty()) {
    os << "no violations found (sampling can only falsify, never certify)\n";
    return os.str();
  }
  for (const auto& v : violations)
    os << "VIOLATION " << v.identity << " at " << v.point << ": " << v.detail << '\n';
  return os.str();
}

SamplingReport falsify_by_sampling(const SpacePresentation& space, std::size_t samples,
                                   std::uint64_t seed) {
  if (samples == 0) throw UsageError("falsify_by_sampling: samples must be positive");
  SamplingReport report{samples, seed, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> numerator(-20, 20);
  std::uniform_int_distribution<std::int64_t> denominator(1, 9);
  auto random_point = [&](std::size_t n) {
    std::vector<Rational> p;
    p.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto num = numerator(rng);
      p.emplace_back(num, denominator(rng));
    }
    return p;
  };
  // Record only the first violation of each identity.
  auto sample_identity = [&](const std::string& identity, const VarContext& vars,
                             auto&& holds_at) {
    for (std::size_t s = 0; s < samples; ++s) {
      const auto point = random_point(vars.size());
      if (auto detail = holds_at(point)) {
        report.violations.push_back({identity, point_to_string(vars, point), *detail});
        return;
      }
    }
  };

  for (const Plot* plot : {&space.alpha(), &space.beta()}) {
    sample_identity("plot " + plot->name + " lands in X", plot->domain(),
                    [&](const std::vector<Rational>& u) -> std::optional<std::string> {
                      const auto x = evaluate(plot->map, u);
                      for (const auto& e : space.equations()) {
                        const Rational value = evaluate(e, x);
                        if (!value.is_zero())
                          return e.to_string() + " = " + value.to_string() + " at " +
                                 values_to_string(x);
                      }
                      return std::nullopt;
                    });
    if (const auto* r = std::get_if<Retraction>(&plot->witness)) {
      sample_identity("retraction of plot " + plot->name, plot->domain(),
                      [&](const std::vector<Rational>& u) -> std::optional<std::string> {
                        const auto back = evaluate(r->map, evaluate(plot->map, u));
                        if (back != u) return "q(" + plot->name + "(u)) = " + values_to_string(back);
                        return std::nullopt;
                      });
    } else {
      const auto& sym = std::get<SymmetryGenerators>(plot->witness);
      for (std::size_t k = 0; k < sym.pairs.size(); ++k) {
        const auto& pair = sym.pairs[k];
        sample_identity("symmetry pair " + std::to_string(k) + " of plot " + plot->name,
                        sym.variables,
                        [&](const std::vector<Rational>& w) -> std::optional<std::string> {
                          const auto lhs = evaluate(plot->map, evaluate(pair.h, w));
                          const auto rhs = evaluate(plot->map, evaluate(pair.h_prime, w));
                          if (lhs != rhs) return values_to_string(lhs) + " != " + values_to_string(rhs);
                          return std::nullopt;
                        });
      }
    }
  }
  for (const auto& chart : space.charts()) {
    sample_identity("pullback chart " + chart.name + " commutes", chart.variables(),
                    [&](const std::vector<Rational>& p) -> std::optional<std::string> {
                      const auto a = evaluate(space.alpha().map, evaluate(chart.to_alpha, p));
                      const auto b = evaluate(space.beta().map, evaluate(chart.to_beta, p));
                      if (a != b)
                        return space.alpha().name + " gives " + values_to_string(a) + ", " +
                               space.beta().name + " gives " + values_to_string(b);
                      return std::nullopt;
                    });
  }
  return report;
}

}  // namespace glueform
