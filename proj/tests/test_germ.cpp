#include <gtest/gtest.h>

#include "folia/germ.hpp"
#include "folia/trials.hpp"

using namespace folia;

namespace {

using Q = RationalField;
using Fp = PrimeField;

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kX3 = germ_names(3);

Germ1Form<Q> planar(const std::string& s) { return parse_one_form(s, kXY, Q{}); }
Germ1Form<Q> ambient(const std::string& s) { return parse_one_form(s, kX3, Q{}); }

Matrix<Q> plane(std::initializer_list<std::array<int, 2>> rows) {
  Matrix<Q> m(Q{}, rows.size(), 2);
  std::size_t r = 0;
  for (const auto& row : rows) {
    m(r, 0) = row[0];
    m(r, 1) = row[1];
    ++r;
  }
  return m;
}

}  // namespace

TEST(Milnor, Examples) {
  EXPECT_EQ(milnor(planar("x*dx + y*dy")), 1u);
  EXPECT_EQ(milnor(planar("3*x^2*dx + 3*y^2*dy")), 4u);
  EXPECT_EQ(milnor(planar("dx")), 0u);
  // Standard monomials of (x^2, y^2) are 1, x, y, xy.
  auto qb = quotient_basis(Ideal<Q>(Q{}, 2, {parse_poly("x^2", kXY, Q{}), parse_poly("y^2", kXY, Q{})}));
  EXPECT_EQ(qb.monomials.size(), 4u);
  EXPECT_THROW(milnor(ambient("x1*dx2")), InvalidInput);
}

TEST(Milnor, NonIsolatedIsInfinite) {
  GbLimits lim;
  lim.local_cap = 16;
  EXPECT_TRUE(milnor(planar("x*y*dx + x^2*dy"), lim).is_infinite());
}

TEST(DeltaLocal, Examples) {
  EXPECT_EQ(delta_local(planar("x*dy - y*dx")), 0u);
  EXPECT_EQ(delta_local(planar("x*dx + y*dy")), 1u);
  EXPECT_EQ(delta_local(planar("3*x^2*dx + 3*y^2*dy")), 4u);
}

TEST(PersistentIdeal, Examples) {
  Q q;
  auto rot = persistent_ideal(planar("x*dy - y*dx"));
  EXPECT_TRUE(rot.same_as(Ideal<Q>(q, 2, {parse_poly("x", kXY, q), parse_poly("y", kXY, q)})));
  EXPECT_TRUE(persistent_ideal(planar("x*dx + y*dy")).is_unit());
  auto e = planar("(x^2 + y^2)*dx + x*y*dy");
  auto f = parse_poly("-y", kXY, q);  // d(b)/dx - d(a)/dy = y - 2y
  auto i = persistent_ideal(e);
  auto j = Ideal<Q>(q, 2, {e.component(0), e.component(1)});
  for (const auto& g : i.generators()) EXPECT_TRUE(j.contains(g * f));
}

TEST(UnfoldingLength, Examples) {
  EXPECT_EQ(unfolding_length(planar("x*dy - y*dx")), 0u);
  EXPECT_EQ(unfolding_length(planar("x*dx + y*dy")), 1u);
  EXPECT_EQ(unfolding_length(planar("3*x^2*dx + 3*y^2*dy")), 4u);
}

TEST(Kupka, Examples) {
  EXPECT_TRUE(is_kupka(planar("x*dy - y*dx")));
  EXPECT_FALSE(is_kupka(planar("x*dx + y*dy")));
  // f = d(-x)/dx - d(y + x^2)/dy = -2.
  EXPECT_TRUE(is_kupka(planar("(y + x^2)*dx - x*dy")));
  EXPECT_THROW(is_kupka(planar("dx + y*dy")), InvalidInput);
  EXPECT_TRUE(is_kupka(ambient("x1*dx2 - x2*dx1")));
}

TEST(GermInvariants, RegularGerm) {
  auto g = germ_invariants(planar("dx + y*dy"));
  EXPECT_FALSE(g.singular);
  EXPECT_EQ(g.mu, 0u);
  EXPECT_EQ(g.delta, 0u);
}

TEST(IntersectionMultiplicity, Examples) {
  auto s0 = plane({{1, 0}, {0, 1}, {0, 0}});
  auto s1 = plane({{1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(intersection_multiplicity(ambient("x1*dx2 - x2*dx1"), s0), 1u);
  // Restricted coefficients: v(u+v), u(u+v), uv generate (u^2, uv, v^2).
  EXPECT_EQ(intersection_multiplicity(ambient("x2*x3*dx1 + x1*x3*dx2 + x1*x2*dx3"), s1), 3u);
  EXPECT_EQ(colength(Ideal<Q>(Q{}, 2, {parse_poly("x*y", kXY, Q{}), parse_poly("x^2", kXY, Q{}),
                                       parse_poly("y^2", kXY, Q{})})),
            3u);
  EXPECT_EQ(intersection_multiplicity(ambient("x2*dx1 + x1*dx2"), s0), 1u);
  // The singular set of x1*dx2 - x2*dx1 is the x3-axis, which lies in {x1 = 0}.
  auto bad = plane({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_THROW(intersection_multiplicity(ambient("x1*dx2 - x2*dx1"), bad), GenericityError);
  EXPECT_THROW(intersection_multiplicity(ambient("x1*dx2"), plane({{1, 0}, {1, 0}, {0, 0}})), InvalidInput);
}

TEST(KeyLemma, Examples) {
  auto s0 = plane({{1, 0}, {0, 1}, {0, 0}});
  auto s1 = plane({{1, 0}, {0, 1}, {1, 1}});
  auto a = key_lemma_check(ambient("x1*dx2 - x2*dx1"), s0);
  EXPECT_EQ(a.mu, 1u);
  EXPECT_EQ(a.delta, 0u);
  EXPECT_EQ(a.izs, 1u);
  EXPECT_TRUE(a.pass);
  auto b = key_lemma_check(ambient("x2*x3*dx1 + x1*x3*dx2 + x1*x2*dx3"), s1);
  EXPECT_EQ(b.mu, 4u);
  EXPECT_EQ(b.delta, 4u);
  EXPECT_EQ(b.izs, 3u);
  EXPECT_TRUE(b.pass);
  auto c = key_lemma_check(ambient("x2*dx1 + x1*dx2"), s0);
  EXPECT_EQ(c.mu, 1u);
  EXPECT_EQ(c.delta, 1u);
  EXPECT_EQ(c.izs, 1u);
  EXPECT_TRUE(c.pass);
  EXPECT_THROW(key_lemma_check(ambient("x1*dx2 + x3*dx1"), s0), InvalidInput);
}

TEST(GermProperties, LengthIdentitiesOnRandomPlanarGerms) {
  Fp fp;
  Rng rng(31);
  int isolated = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto e = random_planar_germ(fp, rng, 3);
    auto g = germ_invariants(e);
    if (!g.singular || g.mu.is_infinite()) continue;
    ++isolated;
    EXPECT_TRUE(g.delta <= g.mu);
    EXPECT_EQ(g.unfolding_length, g.delta);
    EXPECT_EQ(g.kupka, g.delta == 0u);
    auto f = e.component(1).derivative(0) - e.component(0).derivative(1);
    Ideal<Fp> j(fp, 2, {e.component(0), e.component(1)});
    auto pi = persistent_ideal(e);
    for (const auto& p : pi.generators()) EXPECT_TRUE(j.contains(p * f));
  }
  EXPECT_GT(isolated, 60);
}

TEST(GermProperties, ClosedFormsHaveDeltaEqualMu) {
  Fp fp;
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    auto h = random_polynomial(fp, 2, 2, 4, rng, 50);
    auto e = Germ1Form<Fp>::differential(h);
    auto g = germ_invariants(e);
    if (g.mu.is_infinite()) continue;
    EXPECT_EQ(g.delta, g.mu);
    EXPECT_TRUE(persistent_ideal(e).is_unit());
  }
}

TEST(GermProperties, DeltaInvariantUnderUnitRescaling) {
  Fp fp;
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    auto e = random_planar_germ(fp, rng, 3);
    GbLimits lim;
    lim.local_cap = 32;
    auto g = germ_invariants(e, lim);
    if (!g.singular || g.mu.is_infinite()) continue;
    auto u = random_polynomial(fp, 2, 1, 2, rng, 50) + Polynomial<Fp>::constant(fp, TermOrder::grevlex(2), fp.from_int(rng.uniform(1, 9)));
    auto h = germ_invariants(e.scale(u), lim);
    EXPECT_EQ(h.mu, g.mu);
    EXPECT_EQ(h.delta, g.delta);
    EXPECT_EQ(h.kupka, g.kupka);
  }
}


TEST(GermProperties, KeyLemmaOnIntegrableFamilies) {
  Fp fp;
  Rng rng(34);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto fam = GermFamily(trial % 4);
    std::size_t n = trial % 3 ? 3 : 4;
    auto w = random_integrable_germ(fp, fam, n, rng);
    if (w.is_zero() || !detail::vanishes_at_origin(w)) continue;
    ASSERT_TRUE(is_integrable(w));
    try {
      auto rep = key_lemma_random(w, rng.substream("trial", trial));
      EXPECT_TRUE(rep.pass) << "family " << int(fam) << " mu " << rep.mu.to_string() << " izs "
                            << rep.izs.to_string() << " delta " << rep.delta.to_string();
      if (fam == GermFamily::PlanarPullback) EXPECT_EQ(rep.izs, rep.mu);
      ++checked;
    } catch (const GenericityError&) {
    }
  }
  EXPECT_GT(checked, 40);
}
