#include <gtest/gtest.h>

#include "folia/parser.hpp"
#include "folia/polynomial.hpp"
#include "folia/random.hpp"

using namespace folia;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kX4 = default_names(4);

template <class F>
Polynomial<F> P(const std::string& s, const F& field, const std::vector<std::string>& names = kXY) {
  return parse_poly(s, names, field);
}

}  // namespace

TEST(Arithmetic, DifferenceOfSquares) {
  RationalField q;
  EXPECT_EQ(P("(x+y)*(x-y)", q), P("x^2 - y^2", q));
  EXPECT_EQ((P("x+y", q) * P("x-y", q)).to_string(kXY), "x^2 - y^2");
}

TEST(Arithmetic, AddZeroIsIdentity) {
  RationalField q;
  auto f = P("3*x^2*y - 1/2*y + 7", q);
  EXPECT_EQ(f + Polynomial<RationalField>(q, 2), f);
}

TEST(Arithmetic, PrimeFieldWrapsModulus) {
  PrimeField f7(7);
  EXPECT_EQ(P("3*x", f7) * P("5*x", f7), P("x^2", f7));
}

TEST(Arithmetic, MismatchedFieldsRejected) {
  auto a = P("x", PrimeField(7));
  auto b = P("x", PrimeField(11));
  EXPECT_THROW(a + b, InvalidInput);
  auto c = parse_poly("x0", kX4, PrimeField(7));
  EXPECT_THROW(a * c, InvalidInput);
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(15), InvalidInput);
  EXPECT_NO_THROW(PrimeField());
  PrimeField p;
  EXPECT_EQ(p.modulus(), 2147483629u);
  for (std::uint32_t a : {1u, 2u, 12345u, 2147483628u}) EXPECT_EQ(p.mul(a, p.inv(a)), 1u);
  EXPECT_EQ(p.from_rational(mpq_class(1, 2)), p.inv(2));
}

TEST(Derivative, Examples) {
  RationalField q;
  EXPECT_EQ(P("x^2*y", q).derivative(0), P("2*x*y", q));
  EXPECT_TRUE(P("5", q).derivative(0).is_zero());
  EXPECT_THROW(P("x", q).derivative(2), InvalidInput);
  // Euler: x f_x + y f_y = 3 f for f = x^3 + x*y^2
  auto f = P("x^3 + x*y^2", q);
  auto euler = P("x", q) * f.derivative(0) + P("y", q) * f.derivative(1);
  EXPECT_EQ(euler, f.scale(mpq_class(3)));
}

TEST(LinearSubstitute, Examples) {
  RationalField q;
  auto f = parse_poly("x0*x1", default_names(2), q);
  EXPECT_EQ(f.linear_substitute(Matrix<RationalField>::identity(q, 2)), f);

  auto g = parse_poly("x0^2 + x1^2", default_names(2), q);
  Matrix<RationalField> m(q, 2, 1);
  m(0, 0) = 1;
  m(1, 0) = 1;
  EXPECT_EQ(g.linear_substitute(m), parse_poly("2*x0^2", default_names(1), q));

  Matrix<RationalField> bad(q, 3, 1);
  EXPECT_THROW(g.linear_substitute(bad), InvalidInput);
}

TEST(LinearSubstitute, InverseRoundTrip) {
  PrimeField fp;
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    auto f = random_polynomial(fp, 3, 0, 4, rng);
    auto m = random_full_rank(fp, 3, 3, rng, 20);
    auto inv = m.inverse();
    ASSERT_TRUE(inv.has_value());
    // f(M y) then y = M^{-1} z gives f(z).
    EXPECT_EQ(f.linear_substitute(m).linear_substitute(*inv), f);
    if (f.is_homogeneous()) EXPECT_EQ(f.linear_substitute(m).degree(), f.degree());
  }
}

TEST(Parse, Examples) {
  RationalField q;
  auto f = parse_poly("3*x0^2*x1 - x2", kX4, q);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE(parse_poly("x0 - x0", kX4, q).is_zero());
  EXPECT_EQ(parse_poly("-(x1^2 + x2*x3)", kX4, q), parse_poly("-x1^2 - x2*x3", kX4, q));
  EXPECT_EQ(parse_poly("x0 \xE2\x88\x92 x1", kX4, q), parse_poly("x0 - x1", kX4, q));
  EXPECT_EQ(parse_poly("2/4*x0", kX4, q), parse_poly("1/2*x0", kX4, q));
}

TEST(Parse, Errors) {
  RationalField q;
  EXPECT_THROW(parse_poly("3x0", kX4, q), ParseError);
  EXPECT_THROW(parse_poly("x0 x1", kX4, q), ParseError);
  EXPECT_THROW(parse_poly("x0 + z", kX4, q), ParseError);
  EXPECT_THROW(parse_poly("(x0 + x1", kX4, q), ParseError);
  EXPECT_THROW(parse_poly("", kX4, q), ParseError);
  EXPECT_THROW(parse_poly("x0^", kX4, q), ParseError);
  EXPECT_THROW(parse_poly("1/0", kX4, q), ParseError);
  try {
    parse_poly("x0 + $", kX4, q);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  // Denominator divisible by p has no image in F_p.
  EXPECT_THROW(parse_poly("1/7*x0", kX4, PrimeField(7)), InvalidInput);
}

// Ring axioms, Leibniz, Euler and parse∘print over both fields.
template <class F>
void ring_properties(const F& field, std::uint64_t seed) {
  Rng rng(seed);
  const auto names = default_names(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_polynomial(field, 3, 0, 3, rng);
    auto b = random_polynomial(field, 3, 0, 3, rng);
    auto c = random_polynomial(field, 3, 0, 2, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ((a * b).derivative(i), a.derivative(i) * b + a * b.derivative(i));
      EXPECT_EQ((a + b).derivative(i), a.derivative(i) + b.derivative(i));
    }
    auto h = random_homogeneous(field, 3, unsigned(rng.uniform(1, 5)), rng);
    Polynomial<F> euler(field, 3);
    for (std::size_t i = 0; i < 3; ++i)
      euler += Polynomial<F>::variable(field, TermOrder::grevlex(3), i) * h.derivative(i);
    EXPECT_EQ(euler, h.scale(field.from_int(h.degree())));
    EXPECT_EQ(parse_poly(a.to_string(names), names, field), a);
  }
}

TEST(Properties, RingAxiomsOverQ) { ring_properties(RationalField{}, 1); }
TEST(Properties, RingAxiomsOverFp) { ring_properties(PrimeField{}, 2); }

TEST(Properties, ParsePrintRoundTripRationalCoefficients) {
  RationalField q;
  auto f = parse_poly("-1/3*x0^2*x3 + 5/7*x1 - 2", kX4, q);
  EXPECT_EQ(parse_poly(f.to_string(kX4), kX4, q), f);
  EXPECT_EQ(f.to_string(kX4), "-1/3*x0^2*x3 + 5/7*x1 - 2");
}

TEST(TermOrder, GrevlexAndLex) {
  auto grevlex = TermOrder::grevlex(3);
  auto lex = TermOrder::lex(3);
  auto m = [](unsigned a, unsigned b, unsigned c) { return Monomial(std::vector<unsigned>{a, b, c}); };
  EXPECT_TRUE(grevlex.greater(m(0, 0, 2), m(1, 0, 0)));
  EXPECT_TRUE(grevlex.greater(m(1, 1, 0), m(1, 0, 1)));  // x*y > x*z
  EXPECT_TRUE(grevlex.greater(m(0, 2, 0), m(1, 0, 1)));  // y^2 > x*z
  EXPECT_TRUE(lex.greater(m(1, 0, 0), m(0, 5, 5)));
  auto elim = TermOrder::elimination(3, 1);
  EXPECT_TRUE(elim.greater(m(1, 0, 0), m(0, 9, 9)));
  EXPECT_TRUE(elim.greater(m(0, 2, 0), m(0, 1, 1)));
  // Multiplicative on a sample.
  EXPECT_TRUE(grevlex.greater(m(1, 1, 0) * m(0, 0, 3), m(1, 0, 1) * m(0, 0, 3)));
}

TEST(Rng, DeterministicAndBounded) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    auto v = r.uniform(-50, 50);
    EXPECT_GE(v, -50);
    EXPECT_LE(v, 50);
  }
  EXPECT_NE(r.substream("plane", 0).next(), r.substream("plane", 1).next());
  EXPECT_EQ(r.substream("plane", 3).next(), Rng(7).substream("plane", 3).next());
}
