#include "glueform/mayer_vietoris.hpp"

#include <random>
#include <sstream>

#include "glueform/error.hpp"
#include "glueform/linalg.hpp"

namespace glueform {

namespace {

using linalg::ColumnAssembler;

void require_domain(const Plot& plot, const DifferentialForm& w, const char* what) {
  if (!(w.context() == plot.domain()))
    throw UsageError(std::string(what) + " is over " + w.context().to_string() + ", plot " +
                     plot.name + " has domain " + plot.domain().to_string());
}

void flatten_pair(const DifferentialForm& mu, const DifferentialForm& nu,
                  ColumnAssembler::SparseColumn& column) {
  flatten_into(mu, "a", column);
  flatten_into(nu, "b", column);
}

// Horizontality defect of one side plus its signed delta contribution on
// every chart.
ColumnAssembler::SparseColumn constraint_column(const SpacePresentation& space, PlotSelector side,
                                                const DifferentialForm& w) {
  ColumnAssembler::SparseColumn column;
  const Plot& plot = space.plot(side);
  flatten_horizontality_defect(plot, w, "H:" + plot.name, column);
  for (const auto& chart : space.charts()) {
    const DifferentialForm pulled =
        side == PlotSelector::Alpha ? pullback(chart.to_alpha, w) : -pullback(chart.to_beta, w);
    flatten_into(pulled, "D:" + chart.name, column);
  }
  return column;
}

std::pair<DifferentialForm, DifferentialForm> combine(
    const linalg::Vector& v, const std::vector<DifferentialForm>& alpha_basis,
    const std::vector<DifferentialForm>& beta_basis, const SpacePresentation& space,
    std::size_t k) {
  DifferentialForm mu(space.alpha().domain(), k);
  DifferentialForm nu(space.beta().domain(), k);
  for (std::size_t j = 0; j < alpha_basis.size(); ++j)
    if (!v[j].is_zero()) mu += v[j] * alpha_basis[j];
  for (std::size_t j = 0; j < beta_basis.size(); ++j)
    if (!v[alpha_basis.size() + j].is_zero()) nu += v[alpha_basis.size() + j] * beta_basis[j];
  return {std::move(mu), std::move(nu)};
}

GluedForm glue_or_alarm(const SpacePresentation& space, const DifferentialForm& mu,
                        const DifferentialForm& nu, const char* context) {
  GlueOutcome outcome = glue(space, mu, nu);
  if (!outcome.accepted())
    throw InternalConsistencyError(std::string(context) + ": " + outcome.rejection->reason);
  return std::move(*outcome.form);
}

}  // namespace

std::vector<ChartValue> delta(const SpacePresentation& space, const DifferentialForm& mu,
                              const DifferentialForm& nu) {
  require_domain(space.alpha(), mu, "mu");
  require_domain(space.beta(), nu, "nu");
  if (mu.degree() != nu.degree())
    throw UsageError("delta: mu has degree " + std::to_string(mu.degree()) + ", nu has degree " +
                     std::to_string(nu.degree()));
  std::vector<ChartValue> out;
  out.reserve(space.charts().size());
  for (const auto& chart : space.charts())
    out.push_back({chart.name, pullback(chart.to_alpha, mu) - pullback(chart.to_beta, nu)});
  return out;
}

std::string GluedForm::to_string() const {
  return "(" + mu_.to_string() + ", " + nu_.to_string() + ")";
}

GlueOutcome glue(const SpacePresentation& space, const DifferentialForm& mu,
                 const DifferentialForm& nu) {
  const auto values = delta(space, mu, nu);
  for (const auto& [plot, form] :
       {std::pair{&space.alpha(), &mu}, std::pair{&space.beta(), &nu}}) {
    if (!is_horizontal(*plot, *form))
      return {std::nullopt,
              GlueRejection{"form " + form->to_string() + " is not horizontal for plot " +
                                plot->name + " under " + witness_regime(plot->witness),
                            plot->name, *form}};
  }
  for (const auto& [chart, value] : values) {
    if (!value.is_zero())
      return {std::nullopt, GlueRejection{"delta = " + value.to_string() + " on chart " + chart,
                                          chart, value}};
  }
  return {GluedForm(mu, nu), std::nullopt};
}

std::pair<DifferentialForm, DifferentialForm> restrict(const GluedForm& g) {
  return {g.mu(), g.nu()};
}

GluedForm d_glued(const SpacePresentation& space, const GluedForm& g) {
  return glue_or_alarm(space, exterior_derivative(g.mu()), exterior_derivative(g.nu()),
                       "d_glued produced a pair that does not glue");
}

std::vector<GluedForm> omega_basis(const SpacePresentation& space, std::size_t k,
                                   std::uint32_t max_degree) {
  const auto alpha_basis = monomial_form_basis(space.alpha().domain(), k, max_degree);
  const auto beta_basis = monomial_form_basis(space.beta().domain(), k, max_degree);
  ColumnAssembler assembler;
  for (const auto& w : alpha_basis)
    assembler.add_column(space.alpha().name + ":" + w.to_string(),
                         constraint_column(space, PlotSelector::Alpha, w));
  for (const auto& w : beta_basis)
    assembler.add_column(space.beta().name + ":" + w.to_string(),
                         constraint_column(space, PlotSelector::Beta, w));

  std::vector<GluedForm> basis;
  for (const auto& v : linalg::kernel_basis(assembler.build())) {
    auto [mu, nu] = combine(v, alpha_basis, beta_basis, space, k);
    basis.push_back(glue_or_alarm(space, mu, nu, "omega_basis kernel vector rejected"));
  }
  return basis;
}

CohomologyEntry cohomology(const SpacePresentation& space, std::size_t k, std::uint32_t bound) {
  CohomologyEntry entry;
  entry.degree = k;
  entry.bound = bound;

  const auto forms = omega_basis(space, k, bound);
  entry.omega_dim = forms.size();

  std::vector<ColumnAssembler::SparseColumn> own;
  ColumnAssembler d_assembler;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    own.emplace_back();
    flatten_pair(forms[j].mu(), forms[j].nu(), own.back());
    const GluedForm dg = d_glued(space, forms[j]);
    ColumnAssembler::SparseColumn image;
    flatten_pair(dg.mu(), dg.nu(), image);
    d_assembler.add_column("dw" + std::to_string(j), std::move(image));
  }
  entry.closed_dim = forms.size() - linalg::rank(d_assembler.build());

  if (k == 0) return entry;

  std::vector<ColumnAssembler::SparseColumn> images;
  for (const auto& g : omega_basis(space, k - 1, bound + 1)) {
    const GluedForm dg = d_glued(space, g);
    images.emplace_back();
    flatten_pair(dg.mu(), dg.nu(), images.back());
  }

  // Span of the truncated degree-k space, with rows for every coordinate the
  // images touch.
  ColumnAssembler target;
  for (std::size_t j = 0; j < own.size(); ++j) target.add_column("w" + std::to_string(j), own[j]);
  for (const auto& image : images)
    for (const auto& [label, value] : image) target.declare_row(label);
  const linalg::LabeledMatrix span = target.build();

  ColumnAssembler exact_assembler;
  for (std::size_t j = 0; j < images.size(); ++j) {
    linalg::Vector v(span.rows());
    for (std::size_t r = 0; r < span.rows(); ++r) {
      const auto it = images[j].find(span.row_labels()[r]);
      if (it != images[j].end()) v[r] = it->second;
    }
    if (!linalg::image_membership(span, v))
      throw InternalConsistencyError("derivative of a degree-" + std::to_string(k - 1) +
                                     " form left the truncated degree-" + std::to_string(k) +
                                     " space");
    exact_assembler.add_column("dg" + std::to_string(j), images[j]);
  }
  entry.exact_dim = linalg::rank(exact_assembler.build());
  return entry;
}

bool AuditReport::passed() const {
  for (const auto& s : steps)
    if (!s.passed) return false;
  return true;
}

std::string AuditReport::to_string() const {
  std::ostringstream os;
  for (const auto& s : steps)
    os << "audit k=" << degree << " D=" << bound << " " << s.name << ": "
       << (s.passed ? "pass" : "FAIL") << " (" << s.detail << ")\n";
  return os.str();
}

AuditReport exactness_audit(const SpacePresentation& space, std::size_t k, std::uint32_t bound) {
  AuditReport report;
  report.degree = k;
  report.bound = bound;
  const auto forms = omega_basis(space, k, bound);

  // Step 1: the representation is faithful.
  {
    AuditStep step{"step 1 (r injective)", true, {}};
    ColumnAssembler assembler;
    for (std::size_t j = 0; j < forms.size(); ++j) {
      ColumnAssembler::SparseColumn column;
      flatten_pair(forms[j].mu(), forms[j].nu(), column);
      assembler.add_column("w" + std::to_string(j), std::move(column));
    }
    const std::size_t r = linalg::rank(assembler.build());
    std::size_t round_trips = 0;
    for (const auto& g : forms) {
      const auto [mu, nu] = restrict(g);
      const GlueOutcome again = glue(space, mu, nu);
      if (again.accepted() && *again.form == g) ++round_trips;
    }
    step.passed = r == forms.size() && round_trips == forms.size();
    step.detail = "rank " + std::to_string(r) + " of " + std::to_string(forms.size()) +
                  " basis pairs, glue o restrict = id on " + std::to_string(round_trips);
    report.steps.push_back(std::move(step));
  }

  // Step 2: delta o r = 0.
  {
    AuditStep step{"step 2 (delta o r = 0)", true, {}};
    std::size_t vanishing = 0;
    for (const auto& g : forms) {
      bool zero = true;
      for (const auto& cv : delta(space, g.mu(), g.nu())) zero = zero && cv.value.is_zero();
      if (zero) ++vanishing;
    }
    step.passed = vanishing == forms.size();
    step.detail = std::to_string(vanishing) + " of " + std::to_string(forms.size()) +
                  " basis pairs have vanishing delta on " + std::to_string(space.charts().size()) +
                  " chart(s)";
    report.steps.push_back(std::move(step));
  }

  // Step 3: ker delta is contained in im r. Computed independently from the
  // horizontal bases of each plot, then every kernel vector must glue.
  {
    AuditStep step{"step 3 (ker delta in im r)", true, {}};
    const auto alpha_h = horizontal_basis(space.alpha(), k, bound);
    const auto beta_h = horizontal_basis(space.beta(), k, bound);
    ColumnAssembler assembler;
    for (const auto& w : alpha_h) {
      ColumnAssembler::SparseColumn column;
      for (const auto& chart : space.charts()) flatten_into(pullback(chart.to_alpha, w), chart.name, column);
      assembler.add_column(w.to_string(), std::move(column));
    }
    for (const auto& w : beta_h) {
      ColumnAssembler::SparseColumn column;
      for (const auto& chart : space.charts())
        flatten_into(-pullback(chart.to_beta, w), chart.name, column);
      assembler.add_column(w.to_string(), std::move(column));
    }
    const auto kernel = linalg::kernel_basis(assembler.build());
    std::size_t accepted = 0;
    std::vector<std::pair<DifferentialForm, DifferentialForm>> pairs;
    for (const auto& v : kernel) {
      pairs.push_back(combine(v, alpha_h, beta_h, space, k));
      if (glue(space, pairs.back().first, pairs.back().second).accepted()) ++accepted;
    }
    // A fixed pseudo-random combination of all kernel vectors must glue too.
    bool combination_ok = true;
    if (!pairs.empty()) {
      std::mt19937_64 rng(0x5eed + k * 131 + bound);
      std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
      DifferentialForm mu(space.alpha().domain(), k);
      DifferentialForm nu(space.beta().domain(), k);
      for (const auto& [a, b] : pairs) {
        const Rational c(coeff(rng));
        mu += c * a;
        nu += c * b;
      }
      combination_ok = glue(space, mu, nu).accepted();
    }
    step.passed = accepted == kernel.size() && kernel.size() == forms.size() && combination_ok;
    step.detail = std::to_string(accepted) + " of " + std::to_string(kernel.size()) +
                  " kernel vectors glued, kernel dim " + std::to_string(kernel.size()) +
                  " vs basis dim " + std::to_string(forms.size());
    report.steps.push_back(std::move(step));
  }
  return report;
}

}  // namespace glueform
