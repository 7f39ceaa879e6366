#include <gtest/gtest.h>

#include <array>

#include "glueform/error.hpp"
#include "glueform/linalg.hpp"
#include "glueform/mayer_vietoris.hpp"
#include "spaces.hpp"
#include "support.hpp"

using namespace glueform;
using namespace glueform::testing;

namespace {

const VarContext s = vars({"s"});
const VarContext t = vars({"t"});

DifferentialForm fn(const char* text, const VarContext& ctx) {
  return DifferentialForm::function(P(text, ctx));
}
DifferentialForm one_form(const char* coeff, const VarContext& ctx) {
  return DifferentialForm::monomial(P(coeff, ctx), {0});
}

linalg::ColumnAssembler::SparseColumn flat(const DifferentialForm& mu, const DifferentialForm& nu) {
  linalg::ColumnAssembler::SparseColumn c;
  flatten_into(mu, "a", c);
  flatten_into(nu, "b", c);
  return c;
}

// Rank of a family of pairs.
std::size_t pair_rank(const std::vector<std::pair<DifferentialForm, DifferentialForm>>& pairs) {
  linalg::ColumnAssembler a;
  for (std::size_t i = 0; i < pairs.size(); ++i) a.add_column(std::to_string(i), flat(pairs[i].first, pairs[i].second));
  return linalg::rank(a.build());
}

std::vector<std::pair<DifferentialForm, DifferentialForm>> as_pairs(const std::vector<GluedForm>& gs) {
  std::vector<std::pair<DifferentialForm, DifferentialForm>> out;
  for (const auto& g : gs) out.push_back(restrict(g));
  return out;
}

GluedForm glued(const SpacePresentation& space, const DifferentialForm& mu, const DifferentialForm& nu) {
  auto outcome = glue(space, mu, nu);
  EXPECT_TRUE(outcome.accepted());
  return *outcome.form;
}

// Random element of the truncated Omega^k(X).
GluedForm random_glued(Gen& gen, const SpacePresentation& space, std::size_t k, std::uint32_t d) {
  DifferentialForm mu(space.alpha().domain(), k), nu(space.beta().domain(), k);
  for (const auto& g : omega_basis(space, k, d)) {
    const Rational c = gen.rational();
    mu += c * g.mu();
    nu += c * g.nu();
  }
  return glued(space, mu, nu);
}

}  // namespace

TEST(Delta, Examples) {
  const SpacePresentation space = cross();
  const auto v1 = delta(space, fn("s^2", s), fn("t^2 + 1", t));
  ASSERT_EQ(v1.size(), 1U);
  EXPECT_EQ(v1[0].chart, "origin");
  EXPECT_EQ(v1[0].value, DifferentialForm::function(Polynomial::constant(VarContext(), Rational(-1))));

  EXPECT_TRUE(delta(space, fn("s", s), fn("t", t))[0].value.is_zero());

  Gen gen(4);
  for (int i = 0; i < 20; ++i)
    EXPECT_TRUE(delta(space, gen.form(s, 1, 4), gen.form(t, 1, 4))[0].value.is_zero());
}

TEST(Delta, Errors) {
  const SpacePresentation space = cross();
  EXPECT_THROW(delta(space, fn("s", s), one_form("t", t)), UsageError);
  EXPECT_THROW(delta(space, fn("t", t), fn("t", t)), UsageError);
}

TEST(Restrict, Examples) {
  const SpacePresentation space = cross();
  const auto [c1, c2] = restrict(glued(space, fn("3", s), fn("3", t)));
  EXPECT_EQ(c1, fn("3", s));
  EXPECT_EQ(c2, fn("3", t));
  const auto [a, b] = restrict(glued(space, fn("s", s), fn("t", t)));
  EXPECT_EQ(a, fn("s", s));
  EXPECT_EQ(b, fn("t", t));
  const auto [m, n] = restrict(glued(space, one_form("1", s), one_form("2", t)));
  EXPECT_EQ(m, one_form("1", s));
  EXPECT_EQ(n, one_form("2", t));
}

TEST(Glue, Examples) {
  const SpacePresentation space = cross();
  EXPECT_TRUE(glue(space, fn("s^2", s), fn("t^2", t)).accepted());

  const auto rejected = glue(space, fn("s^2", s), fn("t^2 + 1", t));
  ASSERT_FALSE(rejected.accepted());
  EXPECT_EQ(rejected.rejection->location, "origin");
  EXPECT_EQ(rejected.rejection->reason, "delta = -1 on chart origin");
  EXPECT_EQ(*rejected.rejection->witness,
            DifferentialForm::function(Polynomial::constant(VarContext(), Rational(-1))));

  EXPECT_TRUE(glue(space, one_form("1", s), DifferentialForm(t, 1)).accepted());
}

TEST(Glue, RejectsNonHorizontal) {
  const SpacePresentation space = parabola();
  const auto outcome = glue(space, one_form("1", s), one_form("1", t));
  ASSERT_FALSE(outcome.accepted());
  EXPECT_EQ(outcome.rejection->location, "alpha");
  EXPECT_TRUE(glue(space, one_form("s", s), one_form("t", t)).accepted());
  EXPECT_FALSE(glue(space, one_form("s", s), one_form("2*t", t)).accepted());
}

TEST(DGlued, Examples) {
  const SpacePresentation space = cross();
  const GluedForm d = d_glued(space, glued(space, fn("s^2", s), fn("t^2", t)));
  EXPECT_EQ(d.mu(), one_form("2*s", s));
  EXPECT_EQ(d.nu(), one_form("2*t", t));
  const GluedForm dc = d_glued(space, glued(space, fn("5/2", s), fn("5/2", t)));
  EXPECT_TRUE(dc.mu().is_zero() && dc.nu().is_zero());
  EXPECT_EQ(dc.degree(), 1U);
}

TEST(OmegaBasis, CrossExamples) {
  const SpacePresentation space = cross();
  const auto b0 = omega_basis(space, 0, 1);
  ASSERT_EQ(b0.size(), 3U);
  auto expected = as_pairs(b0);
  const std::size_t r = pair_rank(expected);
  expected.push_back({fn("1", s), fn("1", t)});
  expected.push_back({fn("s", s), fn("0", t)});
  expected.push_back({fn("0", s), fn("t", t)});
  EXPECT_EQ(r, 3U);
  EXPECT_EQ(pair_rank(expected), 3U);

  const auto b1 = omega_basis(space, 1, 0);
  ASSERT_EQ(b1.size(), 2U);
  EXPECT_EQ(restrict(b1[0]), std::make_pair(one_form("1", s), DifferentialForm(t, 1)));
  EXPECT_EQ(restrict(b1[1]), std::make_pair(DifferentialForm(s, 1), one_form("1", t)));

  for (std::uint32_t d = 0; d <= 4; ++d) EXPECT_TRUE(omega_basis(space, 2, d).empty());
}

TEST(OmegaBasis, BruteForceCrossOracle) {
  // Enumerate coefficient vectors in {-1,0,1}^4 for (F, G) of degree <= 1 and
  // keep those with F(0) = G(0); 3^dim survivors.
  std::size_t survivors = 0;
  for (int a0 = -1; a0 <= 1; ++a0)
    for (int a1 = -1; a1 <= 1; ++a1)
      for (int b0 = -1; b0 <= 1; ++b0)
        for (int b1 = -1; b1 <= 1; ++b1)
          if (a0 == b0) ++survivors;
  EXPECT_EQ(survivors, 27U);
  EXPECT_EQ(omega_basis(cross(), 0, 1).size(), 3U);  // 3^3 = 27
}

TEST(OmegaBasis, BruteForceParabolaOracle) {
  // Coefficients of (F, G) on the monomials 1..u^4 in {-1,0,1}; a pair
  // belongs to Omega^0 iff both are even and F(u) = G(u) = G(-u) at six
  // sample points (enough for degree <= 4).
  auto eval = [](const std::array<int, 5>& c, int u) {
    long v = 0, p = 1;
    for (int e = 0; e < 5; ++e, p *= u) v += c[e] * p;
    return v;
  };
  std::size_t survivors = 0;
  std::array<int, 5> f{}, g{};
  for (int code = 0; code < 59049; ++code) {  // 3^10
    int rest = code;
    for (int e = 0; e < 5; ++e, rest /= 3) f[e] = rest % 3 - 1;
    for (int e = 0; e < 5; ++e, rest /= 3) g[e] = rest % 3 - 1;
    bool ok = true;
    for (int u = -3; u <= 3 && ok; ++u)
      ok = eval(f, u) == eval(f, -u) && eval(g, u) == eval(g, -u) && eval(f, u) == eval(g, u);
    if (ok) ++survivors;
  }
  EXPECT_EQ(survivors, 27U);
  EXPECT_EQ(omega_basis(parabola(false), 0, 4).size(), 3U);
  EXPECT_EQ(omega_basis(parabola(true), 0, 4).size(), 3U);
}

TEST(OmegaBasis, NoChartsIsDisjointRegime) {
  const SpacePresentation space = cross({});
  for (std::uint32_t d = 0; d <= 3; ++d) {
    EXPECT_EQ(omega_basis(space, 0, d).size(), 2 * (d + 1));
    EXPECT_EQ(cohomology(space, 0, d).betti(), 2U);
    EXPECT_EQ(cohomology(space, 1, d).betti(), 0U);
  }
}

TEST(Cohomology, CrossExamples) {
  const SpacePresentation space = cross();
  for (std::uint32_t d : {0U, 1U, 3U, 6U}) {
    const auto h0 = cohomology(space, 0, d);
    EXPECT_EQ(h0.omega_dim, 2 * d + 1);
    EXPECT_EQ(h0.closed_dim, 1U);
    EXPECT_EQ(h0.betti(), 1U);
    const auto h1 = cohomology(space, 1, d);
    EXPECT_EQ(h1.omega_dim, 2 * d + 2);
    EXPECT_EQ(h1.closed_dim, 2 * d + 2);
    EXPECT_EQ(h1.exact_dim, 2 * d + 2);
    EXPECT_EQ(h1.betti(), 0U);
    EXPECT_EQ(cohomology(space, 2, d).betti(), 0U);
  }
}

TEST(Cohomology, ParabolaAndPoint) {
  for (std::uint32_t d = 0; d <= 6; ++d) {
    EXPECT_EQ(cohomology(parabola(true), 0, d).betti(), 1U);
    EXPECT_EQ(cohomology(parabola(true), 1, d).betti(), 0U);
    EXPECT_EQ(cohomology(one_point(), 0, d).betti(), 1U);
    EXPECT_EQ(cohomology(one_point(), 1, d).omega_dim, 0U);
  }
}

TEST(ExactnessAudit, Examples) {
  const auto cross_audit = exactness_audit(cross(), 0, 3);
  EXPECT_TRUE(cross_audit.passed()) << cross_audit.to_string();
  EXPECT_EQ(cross_audit.steps.size(), 3U);

  EXPECT_EQ(omega_basis(one_point(), 0, 3).size(), 1U);
  EXPECT_TRUE(exactness_audit(one_point(), 0, 3).passed());
  EXPECT_EQ(omega_basis(one_point(), 1, 3).size(), 0U);
  EXPECT_TRUE(exactness_audit(one_point(), 1, 3).passed());
  EXPECT_TRUE(exactness_audit(parabola(true), 1, 5).passed());
}

TEST(OnePoint, ConstantPlotOnALine) {
  // Constant plot on R with the symmetry pair (w, 0): only constants are
  // horizontal in degree 0, nothing in degree 1.
  const VarContext amb = vars({"x"});
  const VarContext w = vars({"w1"});
  const PolyMap constant(s, {Polynomial(s)});
  const SymmetryGenerators gens{w, {{PolyMap(w, {P("w1", w)}), PolyMap(w, {P("0", w)})}}};
  const Plot a{"alpha", constant, gens};
  Plot b = a;
  b.name = "beta";
  const SpacePresentation space(amb, {P("x", amb)}, a, b, {{"diag", PolyMap::identity(s), PolyMap::identity(s)}});
  ASSERT_TRUE(verify_presentation(space).passed());
  for (std::uint32_t d = 0; d <= 4; ++d) {
    EXPECT_EQ(omega_basis(space, 0, d).size(), 1U);
    EXPECT_EQ(omega_basis(space, 1, d).size(), 0U);
    EXPECT_TRUE(exactness_audit(space, 0, d).passed());
  }
}

// ---------------------------------------------------------------------------
// Properties

TEST(MvProperty, DeltaVanishesOnGluedForms) {
  Gen gen(31);
  for (const SpacePresentation& space : {cross(), parabola(true), one_point()})
    for (std::size_t k = 0; k <= 1; ++k)
      for (int i = 0; i < 10; ++i) {
        const GluedForm g = random_glued(gen, space, k, 4);
        for (const auto& cv : delta(space, g.mu(), g.nu())) ASSERT_TRUE(cv.value.is_zero());
        const auto [mu, nu] = restrict(g);
        const auto again = glue(space, mu, nu);
        ASSERT_TRUE(again.accepted());
        ASSERT_EQ(*again.form, g);
      }
}

TEST(MvProperty, BasisIsIndependent) {
  for (const SpacePresentation& space : {cross(), parabola(true), one_point()})
    for (std::size_t k = 0; k <= 2; ++k)
      for (std::uint32_t d = 0; d <= 5; ++d) {
        const auto basis = omega_basis(space, k, d);
        ASSERT_EQ(pair_rank(as_pairs(basis)), basis.size());
      }
}

TEST(MvProperty, DSquaredOnGluedForms) {
  Gen gen(37);
  for (const SpacePresentation& space : {cross(), parabola(true)})
    for (int i = 0; i < 20; ++i) {
      const GluedForm g = random_glued(gen, space, 0, 5);
      const GluedForm dd = d_glued(space, d_glued(space, g));
      ASSERT_TRUE(dd.mu().is_zero() && dd.nu().is_zero());
    }
}

TEST(MvProperty, DeltaIsCochainMorphism) {
  Gen gen(41);
  for (const SpacePresentation& space : {cross(), parabola(true)})
    for (int i = 0; i < 100; ++i) {
      const auto k = static_cast<std::size_t>(gen.integer(0, 1));
      const auto mu = gen.form(space.alpha().domain(), k, 5);
      const auto nu = gen.form(space.beta().domain(), k, 5);
      const auto lhs = delta(space, exterior_derivative(mu), exterior_derivative(nu));
      const auto rhs = delta(space, mu, nu);
      for (std::size_t c = 0; c < lhs.size(); ++c) ASSERT_EQ(lhs[c].value, exterior_derivative(rhs[c].value));
    }
}

TEST(MvProperty, CrossCohomologyIsStable) {
  const SpacePresentation space = cross();
  for (std::uint32_t d = 0; d <= 10; ++d) {
    EXPECT_EQ(cohomology(space, 0, d).betti(), 1U) << d;
    EXPECT_EQ(cohomology(space, 1, d).betti(), 0U) << d;
    EXPECT_EQ(cohomology(space, 2, d).betti(), 0U) << d;
  }
}

TEST(MvProperty, MonotoneTruncation) {
  for (const SpacePresentation& space : {cross(), parabola(true)})
    for (std::size_t k = 0; k <= 1; ++k)
      for (std::uint32_t d = 0; d <= 4; ++d) {
        const auto small = omega_basis(space, k, d);
        const auto large = omega_basis(space, k, d + 1);
        linalg::ColumnAssembler a;
        for (std::size_t j = 0; j < large.size(); ++j) a.add_column(std::to_string(j), flat(large[j].mu(), large[j].nu()));
        for (const auto& g : small)
          for (const auto& [label, value] : flat(g.mu(), g.nu())) a.declare_row(label);
        const auto span = a.build();
        for (const auto& g : small) {
          const auto col = flat(g.mu(), g.nu());
          linalg::Vector v(span.rows());
          for (std::size_t r = 0; r < span.rows(); ++r)
            if (const auto it = col.find(span.row_labels()[r]); it != col.end()) v[r] = it->second;
          ASSERT_TRUE(linalg::image_membership(span, v));
        }
      }
}
