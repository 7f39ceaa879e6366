#include "glueform/commands.hpp"

#include <iomanip>
#include <sstream>

#include "glueform/error.hpp"
#include "glueform/mayer_vietoris.hpp"
#include "glueform/presentation.hpp"

namespace glueform::cli {

namespace {

constexpr const char* kCaveat =
    "caveat: asserted-completeness: the pullback chart list and any symmetry generators are "
    "asserted by the presentation, not derived; all dimensions are for the truncated polynomial "
    "model";

std::string describe_plot(const Plot& plot) {
  return "plot " + plot.name + ": " + plot.domain().to_string() + " -> " + plot.map.to_string() +
         "; horizontality witness: " + witness_regime(plot.witness);
}

void describe_space(std::ostream& os, const SpacePresentation& space) {
  os << "ambient " << space.ambient().to_string() << "; equations:";
  if (space.equations().empty()) os << " (none)";
  for (std::size_t i = 0; i < space.equations().size(); ++i)
    os << (i ? " ; " : " ") << space.equations()[i].to_string();
  os << '\n' << describe_plot(space.alpha()) << '\n' << describe_plot(space.beta()) << '\n';
  os << "pullback charts:";
  if (space.charts().empty()) os << " (none: disjoint images regime, delta vacuous)";
  for (const auto& c : space.charts())
    os << ' ' << c.name << '[' << c.variables().size() << "-dimensional]";
  os << '\n';
}

// Parses and verifies; on failure fills `result` and returns nullopt.
std::optional<PresentationFile> load_verified(std::string_view text, std::ostream& os,
                                              CommandResult& result) {
  std::optional<PresentationFile> file;
  try {
    file.emplace(parse_presentation(text));
  } catch (const ParseError& e) {
    os << "error: " << e.what() << '\n';
    result.exit_code = kExitInputError;
    return std::nullopt;
  }
  const VerificationReport report = verify_presentation(file->space);
  if (!report.passed()) {
    os << "presentation failed verification:\n" << report.to_string();
    result.exit_code = kExitDomainFailure;
    return std::nullopt;
  }
  return file;
}

CommandResult finish(std::ostringstream& os, CommandResult result) {
  result.report = os.str();
  return result;
}

}  // namespace

CommandResult cmd_check(std::string_view presentation_text) {
  std::ostringstream os;
  CommandResult result;
  os << "glueform check\n";
  std::optional<PresentationFile> file;
  try {
    file.emplace(parse_presentation(presentation_text));
  } catch (const ParseError& e) {
    os << "error: " << e.what() << '\n';
    result.exit_code = kExitInputError;
    return finish(os, result);
  }
  describe_space(os, file->space);
  const VerificationReport report = verify_presentation(file->space);
  os << "symbolic checks:\n" << report.to_string();
  const SamplingReport sampling = falsify_by_sampling(file->space, kCheckSamples, kCheckSeed);
  os << "sampling:\n" << sampling.to_string();
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
  const std::size_t total = report.checks.size() + 1;
  failed += sampling.clean() ? 0 : 1;
  if (failed == 0) {
    os << "result: all " << total << " checks passed\n";
  } else {
    os << "result: " << failed << " of " << total << " checks failed\n";
    result.exit_code = kExitDomainFailure;
  }
  os << "chart completeness: asserted by the presentation (not verified)\n";
  return finish(os, result);
}

CommandResult cmd_cohomology(std::string_view presentation_text, std::optional<std::uint32_t> bound,
                             const std::vector<std::size_t>& degrees) {
  std::ostringstream os;
  CommandResult result;
  os << "glueform cohomology\n";
  const auto file = load_verified(presentation_text, os, result);
  if (!file) return finish(os, result);
  const SpacePresentation& space = file->space;
  const std::uint32_t d = bound.value_or(file->compute.bound);
  const std::vector<std::size_t> ks = degrees.empty() ? file->compute.degrees : degrees;

  describe_space(os, space);
  os << "truncation: coefficient degree <= D on each plot domain; exact forms are derivatives of "
        "forms with coefficient degree <= D+1\n";
  os << std::left << std::setw(4) << "k" << std::setw(5) << "D" << std::setw(13) << "dim Omega^k"
     << std::setw(8) << "closed" << std::setw(7) << "exact" << "H^k\n";
  std::vector<CohomologyEntry> entries;
  for (auto k : ks) {
    const CohomologyEntry e = cohomology(space, k, d);
    entries.push_back(e);
    os << std::setw(4) << k << std::setw(5) << d << std::setw(13) << e.omega_dim << std::setw(8)
       << e.closed_dim << std::setw(7) << e.exact_dim << e.betti() << '\n';
  }
  os << "stabilization:\n";
  for (const auto& e : entries) {
    os << "  H^" << e.degree << " = " << e.betti() << " at D = " << d;
    if (d < 2) {
      os << "; fewer than three bounds available, no stabilization claim\n";
      continue;
    }
    const auto h1 = cohomology(space, e.degree, d - 1).betti();
    const auto h2 = cohomology(space, e.degree, d - 2).betti();
    if (h1 == e.betti() && h2 == e.betti())
      os << "; agrees for D = " << d - 2 << ", " << d - 1 << ", " << d << '\n';
    else
      os << "; not stabilized (D = " << d - 2 << ": " << h2 << ", D = " << d - 1 << ": " << h1
         << ")\n";
  }
  os << "exactness audit:\n";
  bool audits_ok = true;
  for (auto k : ks) {
    const AuditReport audit = exactness_audit(space, k, d);
    audits_ok = audits_ok && audit.passed();
    os << audit.to_string();
  }
  os << kCaveat << '\n';
  if (!audits_ok) result.exit_code = kExitDomainFailure;
  return finish(os, result);
}

CommandResult cmd_delta(std::string_view presentation_text, std::string_view mu_text,
                        std::string_view nu_text) {
  std::ostringstream os;
  CommandResult result;
  os << "glueform delta\n";
  const auto file = load_verified(presentation_text, os, result);
  if (!file) return finish(os, result);
  const SpacePresentation& space = file->space;

  std::optional<DifferentialForm> mu;
  std::optional<DifferentialForm> nu;
  try {
    mu.emplace(parse_form_file(mu_text, space.alpha().domain()));
    nu.emplace(parse_form_file(nu_text, space.beta().domain()));
  } catch (const ParseError& e) {
    os << "error: form file: " << e.what() << '\n';
    result.exit_code = kExitInputError;
    return finish(os, result);
  } catch (const UsageError& e) {
    os << "error: form file: " << e.what() << '\n';
    result.exit_code = kExitDomainFailure;
    return finish(os, result);
  }
  if (mu->degree() != nu->degree()) {
    os << "error: mu has degree " << mu->degree() << ", nu has degree " << nu->degree() << '\n';
    result.exit_code = kExitDomainFailure;
    return finish(os, result);
  }
  os << "mu on " << space.alpha().name << ' ' << space.alpha().domain().to_string()
     << ", degree " << mu->degree() << ": " << mu->to_string() << '\n';
  os << "nu on " << space.beta().name << ' ' << space.beta().domain().to_string() << ", degree "
     << nu->degree() << ": " << nu->to_string() << '\n';
  for (const auto& [chart, value] : delta(space, *mu, *nu))
    os << "delta on chart " << chart << ": " << value.to_string() << '\n';
  const GlueOutcome outcome = glue(space, *mu, *nu);
  if (outcome.accepted()) {
    os << "GLUE: accepted\n";
  } else {
    os << "GLUE: rejected (" << outcome.rejection->reason << ")\n";
    result.exit_code = kExitDomainFailure;
  }
  os << kCaveat << '\n';
  return finish(os, result);
}

CommandResult cmd_sample(std::string_view presentation_text, std::size_t samples,
                         std::uint64_t seed) {
  std::ostringstream os;
  CommandResult result;
  os << "glueform sample\n";
  if (samples == 0) {
    os << "error: --samples must be positive\n";
    result.exit_code = kExitInputError;
    return finish(os, result);
  }
  try {
    const PresentationFile file = parse_presentation(presentation_text);
    const SamplingReport report = falsify_by_sampling(file.space, samples, seed);
    os << report.to_string();
    if (!report.clean()) result.exit_code = kExitDomainFailure;
  } catch (const ParseError& e) {
    os << "error: " << e.what() << '\n';
    result.exit_code = kExitInputError;
  }
  return finish(os, result);
}

}  // namespace glueform::cli
