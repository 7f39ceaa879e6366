#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glueform/diffeology.hpp"
#include "glueform/form.hpp"

namespace glueform {

struct ChartValue {
  std::string chart;
  DifferentialForm value;
};

// delta(mu, nu) = p_U^* mu - p_V^* nu on every pullback chart.
std::vector<ChartValue> delta(const SpacePresentation& space, const DifferentialForm& mu,
                              const DifferentialForm& nu);

struct GlueOutcome;

// A form on X, represented by its restrictions to the two generating plots:
// a pair of horizontal forms whose difference vanishes on every chart.
// Only glue() constructs one.
class GluedForm {
 public:
  std::size_t degree() const { return mu_.degree(); }
  const DifferentialForm& mu() const { return mu_; }
  const DifferentialForm& nu() const { return nu_; }

  friend bool operator==(const GluedForm&, const GluedForm&) = default;

  std::string to_string() const;

 private:
  GluedForm(DifferentialForm mu, DifferentialForm nu) : mu_(std::move(mu)), nu_(std::move(nu)) {}
  friend GlueOutcome glue(const SpacePresentation&, const DifferentialForm&,
                                 const DifferentialForm&);

  DifferentialForm mu_;
  DifferentialForm nu_;
};

struct GlueRejection {
  std::string reason;
  std::string location;  // plot or chart that witnessed the failure
  std::optional<DifferentialForm> witness;
};

struct GlueOutcome {
  std::optional<GluedForm> form;
  std::optional<GlueRejection> rejection;

  bool accepted() const { return form.has_value(); }
};

GlueOutcome glue(const SpacePresentation& space, const DifferentialForm& mu,
                 const DifferentialForm& nu);

// (alpha^* w, beta^* w); in this representation, the stored components.
std::pair<DifferentialForm, DifferentialForm> restrict(const GluedForm& g);

// (d mu, d nu). Throws InternalConsistencyError if the result fails to glue.
GluedForm d_glued(const SpacePresentation& space, const GluedForm& g);

// Basis of the degree-k forms on X with coefficient degree <= max_degree on
// both plot domains: the kernel of the stacked horizontality and delta system.
std::vector<GluedForm> omega_basis(const SpacePresentation& space, std::size_t k,
                                   std::uint32_t max_degree);

struct CohomologyEntry {
  std::size_t degree = 0;
  std::uint32_t bound = 0;
  std::size_t omega_dim = 0;
  std::size_t closed_dim = 0;
  std::size_t exact_dim = 0;
  std::size_t betti() const { return closed_dim - exact_dim; }
  friend bool operator==(const CohomologyEntry&, const CohomologyEntry&) = default;
};

// Truncated H^k: closed forms of coefficient degree <= bound modulo the
// derivatives of (k-1)-forms of coefficient degree <= bound + 1.
CohomologyEntry cohomology(const SpacePresentation& space, std::size_t k, std::uint32_t bound);

struct AuditStep {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct AuditReport {
  std::size_t degree = 0;
  std::uint32_t bound = 0;
  std::vector<AuditStep> steps;

  bool passed() const;
  std::string to_string() const;
};

// Machine check of the exactness of 0 -> Omega(X) -> Omega(alpha)+Omega(beta) -> Omega(P)
// on the truncated spaces.
AuditReport exactness_audit(const SpacePresentation& space, std::size_t k, std::uint32_t bound);

}  // namespace glueform
