#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "glueform/form.hpp"
#include "glueform/polynomial.hpp"

namespace glueform {

// Left inverse of a plot: ambient -> plot domain with q ∘ plot = id.
// Makes the plot injective, so every form on its domain is horizontal.
struct Retraction {
  PolyMap map;
  friend bool operator==(const Retraction&, const Retraction&) = default;
};

// Reparametrizations h, h' : W -> U with plot ∘ h = plot ∘ h'.
struct SymmetryPair {
  PolyMap h;
  PolyMap h_prime;
  friend bool operator==(const SymmetryPair&, const SymmetryPair&) = default;
};

// User-asserted finite generating list for the horizontality constraint.
struct SymmetryGenerators {
  VarContext variables;
  std::vector<SymmetryPair> pairs;
  friend bool operator==(const SymmetryGenerators&, const SymmetryGenerators&) = default;
};

using HorizontalityWitness = std::variant<Retraction, SymmetryGenerators>;

std::string witness_regime(const HorizontalityWitness& witness);

struct Plot {
  std::string name;
  PolyMap map;  // domain variables -> ambient coordinates
  HorizontalityWitness witness;

  const VarContext& domain() const { return map.source(); }
  friend bool operator==(const Plot&, const Plot&) = default;
};

// Parametrized piece of the fibered product {(u, v) : alpha(u) = beta(v)}.
struct PullbackChart {
  std::string name;
  PolyMap to_alpha;
  PolyMap to_beta;

  const VarContext& variables() const { return to_alpha.source(); }
  friend bool operator==(const PullbackChart&, const PullbackChart&) = default;
};

enum class PlotSelector { Alpha, Beta };

// Space X = {equations = 0} in the ambient coordinates, with the diffeology
// generated by two plots. Construction checks arities and contexts only;
// the geometric identities are checked by verify_presentation.
class SpacePresentation {
 public:
  SpacePresentation(VarContext ambient, std::vector<Polynomial> equations, Plot alpha, Plot beta,
                    std::vector<PullbackChart> charts);

  const VarContext& ambient() const { return ambient_; }
  const std::vector<Polynomial>& equations() const { return equations_; }
  const Plot& alpha() const { return alpha_; }
  const Plot& beta() const { return beta_; }
  const Plot& plot(PlotSelector which) const { return which == PlotSelector::Alpha ? alpha_ : beta_; }
  const std::vector<PullbackChart>& charts() const { return charts_; }

  friend bool operator==(const SpacePresentation&, const SpacePresentation&) = default;

 private:
  VarContext ambient_;
  std::vector<Polynomial> equations_;
  Plot alpha_;
  Plot beta_;
  std::vector<PullbackChart> charts_;
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<Polynomial> witness;  // offending polynomial on failure
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  void append(const VerificationReport& other);
  std::string to_string() const;
};

VerificationReport verify_plot(const SpacePresentation& space, const Plot& plot);
VerificationReport verify_witness(const Plot& plot);
VerificationReport verify_pullback_chart(const SpacePresentation& space, const PullbackChart& chart);

// Certifies candidate = plot.map ∘ h, i.e. candidate belongs to the
// generated diffeology through a global factorization.
VerificationReport verify_factorization(const PolyMap& candidate, const SpacePresentation& space,
                                        PlotSelector through, const PolyMap& h);

// Every plot, witness and chart of the presentation.
VerificationReport verify_presentation(const SpacePresentation& space);

bool is_horizontal(const Plot& plot, const DifferentialForm& w);

// Adds the coefficients of h^*w - h'^*w for every symmetry pair to `column`.
// Contributes nothing under a retraction witness.
void flatten_horizontality_defect(const Plot& plot, const DifferentialForm& w,
                                  const std::string& prefix,
                                  linalg::ColumnAssembler::SparseColumn& column);

std::vector<DifferentialForm> horizontal_basis(const Plot& plot, std::size_t k,
                                               std::uint32_t max_degree);

struct Violation {
  std::string identity;
  std::string point;
  std::string detail;
};

struct SamplingReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
  std::string to_string() const;
};

// Evaluates every symbolic identity of the presentation at random rational
// points. Can only falsify.
SamplingReport falsify_by_sampling(const SpacePresentation& space, std::size_t samples,
                                   std::uint64_t seed);

}  // namespace glueform
