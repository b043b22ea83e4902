#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "folia/error.hpp"
#include "folia/forms.hpp"
#include "folia/groebner.hpp"
#include "folia/random.hpp"

namespace folia {

// Which foliation invariant a rejected form violates.
enum class ValidationFailure { Shape, Inhomogeneous, Descent, NotIntegrable };

class ValidationError : public InvalidInput {
 public:
  ValidationError(ValidationFailure kind, const std::string& msg) : InvalidInput(msg), kind_(kind) {}
  ValidationFailure kind() const { return kind_; }

 private:
  ValidationFailure kind_;
};

inline const char* to_string(ValidationFailure k) {
  switch (k) {
    case ValidationFailure::Shape: return "shape";
    case ValidationFailure::Inhomogeneous: return "inhomogeneous";
    case ValidationFailure::Descent: return "descent";
    case ValidationFailure::NotIntegrable: return "not_integrable";
  }
  return "unknown";
}

// Degree-d codimension-one foliation on P^n, given by a homogeneous 1-form
// in n+1 variables with coefficients of degree d+1.
template <class F>
struct ProjFoliation {
  std::size_t n = 0;
  unsigned d = 0;
  PolyForm<F> w;

  const F& field() const { return w.field(); }
};

template <class F>
ProjFoliation<F> validate(const PolyForm<F>& w, std::size_t n) {
  using VF = ValidationFailure;
  if (w.degree() != 1) throw ValidationError(VF::Shape, "expected a 1-form");
  if (w.nvars() != n + 1)
    throw ValidationError(VF::Shape, "form on P^" + std::to_string(n) + " needs " + std::to_string(n + 1) +
                                         " variables, got " + std::to_string(w.nvars()));
  if (w.is_zero()) throw ValidationError(VF::Shape, "zero form defines no foliation");
  const int cd = w.coefficient_degree();
  if (cd < 1) throw ValidationError(VF::Inhomogeneous, "coefficients are not homogeneous of one positive degree");
  if (!w.contract(PolyVectorField<F>::radial(w.field(), n + 1)).is_zero())
    throw ValidationError(VF::Descent, "radial contraction is nonzero (Euler relation fails)");
  if (!is_integrable(w)) throw ValidationError(VF::NotIntegrable, "w ∧ dw is nonzero");
  return {n, unsigned(cd - 1), w};
}

template <class F>
struct SingularIdeal {
  Ideal<F> ideal;
  int projective_dimension;  // -1 when empty
};

template <class F>
SingularIdeal<F> singular_ideal(const ProjFoliation<F>& fol, const GbLimits& limits = {}) {
  Ideal<F> i = fol.w.coefficient_ideal();
  int dim = dimension(i, limits);
  // The affine cone over the empty set is the origin (or nothing).
  return {i, dim <= 0 ? -1 : dim - 1};
}

// One random plane attempt inside a two-plane certificate.
template <class F>
struct PlaneTrial {
  Matrix<F> plane;
  std::optional<std::size_t> value;  // empty when the plane was not generic
  unsigned stabilized_at = 0;
};

template <class F>
struct DegreeCertificate {
  std::size_t value = 0;
  std::vector<PlaneTrial<F>> trials;
};

struct PlaneOptions {
  unsigned retries = 8;
  std::int64_t bound = 50;
  GbLimits limits{};
};

namespace detail {

// Evaluates a per-plane quantity on fresh random planes until some value
// has been seen twice. Planes where the quantity is undefined count
// against the retry budget.
template <class F, class Fn>
DegreeCertificate<F> two_plane_certificate(const ProjFoliation<F>& fol, const Rng& rng, std::string_view stream,
                                           const PlaneOptions& opt, Fn&& per_plane) {
  DegreeCertificate<F> cert;
  const unsigned budget = 2 + opt.retries;
  for (unsigned attempt = 0; attempt < budget; ++attempt) {
    Rng r = rng.substream(stream, attempt);
    PlaneTrial<F> t{random_full_rank(fol.field(), fol.n + 1, 3, r, opt.bound), std::nullopt, 0};
    try {
      auto [value, stab] = per_plane(t.plane);
      t.value = value;
      t.stabilized_at = stab;
    } catch (const GenericityError&) {
    }
    cert.trials.push_back(t);
    if (!t.value) continue;
    for (std::size_t k = 0; k + 1 < cert.trials.size(); ++k)
      if (cert.trials[k].value == t.value) {
        cert.value = *t.value;
        return cert;
      }
  }
  throw GenericityError("no two planes agreed within " + std::to_string(budget) + " attempts");
}

// Degree of the saturation of a homogeneous ideal in the plane's three
// variables; a curve in the plane means the plane is special.
template <class F>
std::pair<std::size_t, unsigned> plane_degree(const Ideal<F>& i, const GbLimits& limits) {
  Ideal<F> sat = saturate_maximal(i, limits);
  if (dimension(sat, limits) > 1) throw GenericityError("plane section contains a curve");
  auto h = hilbert_degree(sat, limits);
  return {h.degree, h.stabilized_at};
}

template <class F>
void require_no_divisor(const ProjFoliation<F>& fol, const GbLimits& limits) {
  if (dimension(fol.w.coefficient_ideal(), limits) >= int(fol.n))
    throw InvalidInput("singular set has a codimension-one component (form is not saturated)");
}

template <class F>
void require_threefold(const ProjFoliation<F>& fol) {
  if (fol.n < 3) throw InvalidInput("plane sections need n >= 3");
}

}  // namespace detail

// deg Z_2 as the degree of Z ∩ L for a generic 2-plane L: every
// coefficient restricted to L, saturated, Hilbert degree.
template <class F>
DegreeCertificate<F> deg_z2(const ProjFoliation<F>& fol, const Rng& rng, const PlaneOptions& opt = {}) {
  detail::require_threefold(fol);
  bool divisor_checked = false;
  return detail::two_plane_certificate(fol, rng, "degz2-plane", opt, [&](const Matrix<F>& plane) {
    std::vector<Polynomial<F>> gens;
    for (const auto& c : fol.w.coefficient_list()) gens.push_back(c.linear_substitute(plane));
    try {
      return detail::plane_degree(Ideal<F>(fol.field(), 3, std::move(gens)), opt.limits);
    } catch (const GenericityError&) {
      // Every plane meets a divisor in a curve; rule that out once.
      if (!divisor_checked) {
        detail::require_no_divisor(fol, opt.limits);
        divisor_checked = true;
      }
      throw;
    }
  });
}

template <class F>
struct DeltaCertificate {
  DegreeCertificate<F> delta;
  std::size_t mu_plane = 0;  // total Milnor number of the restriction on the first agreeing plane
};

// delta(F, H): colength of the ideal of coefficients of w|L and d(w|L) on a
// generic plane, summed over all points via the Hilbert degree.
template <class F>
DeltaCertificate<F> delta_global(const ProjFoliation<F>& fol, const Rng& rng, const PlaneOptions& opt = {}) {
  detail::require_threefold(fol);
  std::vector<std::size_t> mus;
  auto cert = detail::two_plane_certificate(fol, rng, "delta-plane", opt, [&](const Matrix<F>& plane) {
    auto wl = fol.w.pullback_linear(plane);
    auto mu = detail::plane_degree(wl.coefficient_ideal(), opt.limits);
    auto gens = wl.coefficient_list();
    for (const auto& c : wl.d().coefficient_list()) gens.push_back(c);
    auto res = detail::plane_degree(Ideal<F>(fol.field(), 3, std::move(gens)), opt.limits);
    mus.push_back(mu.first);
    return res;
  });
  return {cert, mus.back()};
}

struct ChernData {
  std::int64_t c1_tf = 0;
  std::int64_t c2_tf = 0;
  std::int64_t discriminant = 0;
  std::int64_t deg_z2 = 0;
  std::int64_t delta_global = 0;
};

// c1 = n-1-d; c2 = d^2 + (n-3)(n-2d)/2 + 2 - deg Z_2; discriminant of the
// rank n-1 tangent sheaf 2r c2 - (r-1) c1^2.
inline ChernData chern_data(std::int64_t n, std::int64_t d, std::int64_t deg_z2, std::int64_t delta) {
  const std::int64_t twice = (n - 3) * (n - 2 * d);
  if (twice % 2 != 0) throw InvalidInput("non-integral second Chern class");
  ChernData c;
  c.c1_tf = n - 1 - d;
  c.c2_tf = d * d + twice / 2 + 2 - deg_z2;
  c.discriminant = 2 * (n - 1) * c.c2_tf - (n - 2) * c.c1_tf * c.c1_tf;
  c.deg_z2 = deg_z2;
  c.delta_global = delta;
  return c;
}

// (n-2)(n-1-2d)/2, always an integer.
inline std::int64_t c2_floor(std::int64_t n, std::int64_t d) { return (n - 2) * (n - 1 - 2 * d) / 2; }

template <class F>
struct BoundReport {
  std::size_t n = 0;
  unsigned d = 0;
  ChernData chern;
  std::int64_t floor_p = 0;  // (n-2)(n-1-2d)/2
  std::size_t mu_plane = 0;
  bool thmB_lower = false;   // d+1 <= deg Z2
  bool thmB_upper = false;   // deg Z2 <= d^2+d+1
  bool eq5 = false;          // c2 >= floor
  bool eq6 = false;          // discriminant >= -(n-2) d^2
  bool thmA_lower = false;   // c2 >= P
  bool thmA_upper = false;   // delta + P >= c2
  bool delta_bound = false;  // delta <= d^2
  bool sandwich = false;     // d^2+d+1 >= deg Z2 >= d^2+d+1 - delta
  DegreeCertificate<F> degz2_cert;
  DegreeCertificate<F> delta_cert;

  bool pass() const {
    return thmB_lower && thmB_upper && eq5 && eq6 && thmA_lower && thmA_upper && delta_bound && sandwich;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    auto add = [&](bool ok, const char* name) {
      if (!ok) out.push_back(name);
    };
    add(thmB_lower, "thmB_lower");
    add(thmB_upper, "thmB_upper");
    add(eq5, "eq5");
    add(eq6, "eq6");
    add(thmA_lower, "thmA_lower");
    add(thmA_upper, "thmA_upper");
    add(delta_bound, "delta_bound");
    add(sandwich, "sandwich");
    return out;
  }
};

template <class F>
BoundReport<F> evaluate_bounds(const ProjFoliation<F>& fol, DegreeCertificate<F> degz2, DeltaCertificate<F> delta) {
  BoundReport<F> r;
  r.n = fol.n;
  r.d = fol.d;
  const std::int64_t n = std::int64_t(fol.n), d = fol.d;
  const std::int64_t z = std::int64_t(degz2.value), dl = std::int64_t(delta.delta.value);
  r.chern = chern_data(n, d, z, dl);
  r.floor_p = c2_floor(n, d);
  r.mu_plane = delta.mu_plane;
  const std::int64_t top = d * d + d + 1;
  r.thmB_lower = d + 1 <= z;
  r.thmB_upper = z <= top;
  r.eq5 = r.chern.c2_tf >= r.floor_p;
  r.eq6 = r.chern.discriminant >= -(n - 2) * d * d;
  r.thmA_lower = r.chern.c2_tf >= r.floor_p;
  r.thmA_upper = dl + r.floor_p >= r.chern.c2_tf;
  r.delta_bound = dl <= d * d;
  r.sandwich = top >= z && z >= top - dl;
  r.degz2_cert = std::move(degz2);
  r.delta_cert = std::move(delta.delta);
  return r;
}

template <class F>
BoundReport<F> verify_bounds(const ProjFoliation<F>& fol, const Rng& rng, const PlaneOptions& opt = {}) {
  auto z = deg_z2(fol, rng, opt);
  auto dl = delta_global(fol, rng, opt);
  return evaluate_bounds(fol, std::move(z), std::move(dl));
}

template <class F>
struct Witness {
  Matrix<F> plane;
  std::vector<typename F::Elem> coefficients;  // alpha, beta, gamma of E
  Polynomial<F> e;                             // alpha y0 + beta y1 + gamma y2
  bool wedge_certified = false;                // d(w|L) ∧ dE = 0
  bool radial_identity = false;                // (d+2) w|L = rad ⌐ d(w|L)
};

template <class F>
struct WitnessResult {
  Matrix<F> plane;
  bool radial_identity = false;
  std::optional<Witness<F>> witness;
};

// Writes d(w|L) = A dy1∧dy2 + B dy2∧dy0 + C dy0∧dy1 and looks for a linear
// relation alpha A + beta B + gamma C = 0; then E = alpha y0 + beta y1 +
// gamma y2 satisfies d(w|L) ∧ dE = 0.
template <class F>
WitnessResult<F> first_integral_witness(const ProjFoliation<F>& fol, const Rng& rng, const PlaneOptions& opt = {}) {
  detail::require_threefold(fol);
  const F& field = fol.field();
  for (unsigned attempt = 0; attempt <= opt.retries; ++attempt) {
    Rng r = rng.substream("witness-plane", attempt);
    auto plane = random_full_rank(field, fol.n + 1, 3, r, opt.bound);
    auto wl = fol.w.pullback_linear(plane);
    if (wl.is_zero() || dimension(wl.coefficient_ideal(), opt.limits) > 1) continue;
    auto dwl = wl.d();
    WitnessResult<F> out{plane, false, std::nullopt};
    auto rad = PolyVectorField<F>::radial(field, 3);
    out.radial_identity = dwl.contract(rad) == wl.scale(field.from_int(fol.d + 2));

    const std::array<WedgeMask, 3> masks{0b110, 0b101, 0b011};  // dy1∧dy2, dy0∧dy2, dy0∧dy1
    const std::array<int, 3> signs{1, -1, 1};                    // B multiplies dy2∧dy0 = -dy0∧dy2
    std::array<Polynomial<F>, 3> abc{dwl.coefficient(masks[0]), dwl.coefficient(masks[1]),
                                     dwl.coefficient(masks[2])};
    for (int k = 0; k < 3; ++k)
      if (signs[k] < 0) abc[k] = -abc[k];
    const auto monos = monomials_of_degree(3, fol.d);
    Matrix<F> sys(field, monos.size(), 3);
    for (int k = 0; k < 3; ++k)
      for (const auto& t : abc[k].terms())
        for (std::size_t row = 0; row < monos.size(); ++row)
          if (monos[row] == t.mono) sys(row, k) = t.coef;
    auto ker = sys.kernel();
    if (ker.empty()) return out;
    Witness<F> w{plane, ker.front(), Polynomial<F>(field, 3), false, out.radial_identity};
    TermOrder ord = TermOrder::grevlex(3);
    for (std::size_t k = 0; k < 3; ++k) w.e += Polynomial<F>::variable(field, ord, k).scale(w.coefficients[k]);
    w.wedge_certified = dwl.wedge(PolyForm<F>::differential(w.e)).is_zero();
    out.witness = std::move(w);
    return out;
  }
  throw GenericityError("no plane with isolated singularities for the witness");
}

// ---- Generators ----

template <class F>
PolyForm<F> rational_form(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (f.is_zero() || g.is_zero() || !f.is_homogeneous() || !g.is_homogeneous() || f.degree() < 1 || g.degree() < 1)
    throw InvalidInput("rational foliation needs nonzero homogeneous forms of positive degree");
  const F& field = f.field();
  auto a = field.from_int(f.degree()), b = field.from_int(g.degree());
  // First integral F^b / G^a.
  return PolyForm<F>::differential(g).scale(f).scale(a) - PolyForm<F>::differential(f).scale(g).scale(b);
}

template <class F>
ProjFoliation<F> generate_rational(const Polynomial<F>& f, const Polynomial<F>& g) {
  return validate(rational_form(f, g), f.nvars() - 1);
}

template <class F>
ProjFoliation<F> generate_pencil(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (f.degree() != 1 || g.degree() != 1) throw InvalidInput("pencil needs two linear forms");
  return generate_rational(f, g);
}

template <class F>
ProjFoliation<F> generate_logarithmic(const std::vector<Polynomial<F>>& fs, const std::vector<typename F::Elem>& lambdas) {
  if (fs.size() < 2 || fs.size() != lambdas.size())
    throw InvalidInput("logarithmic foliation needs matching forms and residues (at least two)");
  const F& field = fs.front().field();
  auto balance = field.zero();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_zero() || !fs[i].is_homogeneous() || fs[i].degree() < 1)
      throw InvalidInput("logarithmic foliation needs nonzero homogeneous forms of positive degree");
    balance = field.add(balance, field.mul(lambdas[i], field.from_int(fs[i].degree())));
  }
  if (!field.is_zero(balance)) throw InvalidInput("residues violate sum lambda_i deg F_i = 0");
  PolyForm<F> w(field, fs.front().nvars(), 1);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto prod = Polynomial<F>::constant(field, TermOrder::grevlex(fs[i].nvars()), lambdas[i]);
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (j != i) prod *= fs[j];
    w = w + PolyForm<F>::differential(fs[i]).scale(prod);
  }
  return validate(w, w.nvars() - 1);
}

// Pullback of a foliation on P^2 (a 1-form in 3 variables) along the linear
// projection y = P x, P of size 3 x (n+1).
template <class F>
ProjFoliation<F> generate_linear_pullback(const PolyForm<F>& planar, const Matrix<F>& projection) {
  if (planar.nvars() != 3) throw InvalidInput("linear pullback needs a form on P^2 (3 variables)");
  if (projection.rows() != 3 || projection.rank() != 3) throw InvalidInput("projection must be 3 x (n+1) of rank 3");
  validate(planar, 2);
  return validate(planar.pullback_linear(projection), projection.cols() - 1);
}

// Random degree-d foliation on P^2: rad ⌐ eta for a random 2-form eta with
// coefficients of degree d.
template <class F>
PolyForm<F> random_planar_foliation(const F& field, unsigned d, Rng& rng, std::int64_t bound = 9) {
  auto rad = PolyVectorField<F>::radial(field, 3);
  for (;;) {
    PolyForm<F> eta(field, 3, 2);
    for (WedgeMask m : {WedgeMask(0b011), WedgeMask(0b101), WedgeMask(0b110)})
      eta.set(m, random_homogeneous(field, 3, d, rng, 100, bound));
    auto w = eta.contract(rad);
    if (w.coefficient_degree() == int(d) + 1) return w;
  }
}

enum class GeneratorKind { Rational, Logarithmic, LinearPullback, Pencil };

inline const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Rational: return "rational";
    case GeneratorKind::Logarithmic: return "logarithmic";
    case GeneratorKind::LinearPullback: return "linear_pullback";
    case GeneratorKind::Pencil: return "pencil";
  }
  return "unknown";
}

// Random instance of the given kind on P^n with foliation degree d, drawn
// from the "generator" substream. Degrees: rational picks a+b = d+2,
// logarithmic picks residues for up to three forms of total degree d+2.
template <class F>
ProjFoliation<F> generate_random(const F& field, GeneratorKind kind, std::size_t n, unsigned d, const Rng& seed_rng) {
  Rng rng = seed_rng.substream("generator", std::uint64_t(kind) * 1000 + n * 10 + d);
  const std::size_t nv = n + 1;
  switch (kind) {
    case GeneratorKind::Pencil:
      if (d != 0) throw InvalidInput("pencils have degree 0");
      return generate_pencil(random_homogeneous(field, nv, 1, rng), random_homogeneous(field, nv, 1, rng));
    case GeneratorKind::Rational: {
      unsigned a = unsigned(rng.uniform(1, (d + 2) / 2));
      return generate_rational(random_homogeneous(field, nv, a, rng, 70),
                               random_homogeneous(field, nv, d + 2 - a, rng, 70));
    }
    case GeneratorKind::Logarithmic: {
      // Degrees of three forms summing to d+2, each at least 1 (needs d >= 1).
      if (d < 1) throw InvalidInput("three-form logarithmic foliations have degree at least 1");
      std::vector<unsigned> degs{1, 1, d};
      if (d >= 2 && rng.chance(50)) degs = {1, 2, d - 1};
      std::vector<Polynomial<F>> fs;
      for (unsigned k : degs) fs.push_back(random_homogeneous(field, nv, k, rng, 70));
      // lambda_0, lambda_1 random nonzero with lambda_2 fixed by the balance.
      std::int64_t l0 = 0, l1 = 0, l2 = 0;
      do {
        l0 = rng.uniform(-5, 5);
        l1 = rng.uniform(-5, 5);
        std::int64_t s = l0 * degs[0] + l1 * degs[1];
        l0 *= degs[2];
        l1 *= degs[2];
        l2 = -s;
      } while (l0 == 0 || l1 == 0 || l2 == 0 || l0 == l1 || l1 == l2 || l0 == l2);
      return generate_logarithmic(fs, {field.from_int(l0), field.from_int(l1), field.from_int(l2)});
    }
    case GeneratorKind::LinearPullback: {
      auto planar = random_planar_foliation(field, d, rng);
      return generate_linear_pullback(planar, random_full_rank(field, 3, nv, rng, 9));
    }
  }
  throw InvalidInput("unknown generator kind");
}

// ---- Numeric evaluator on a general X ----

struct ThmANumbers {
  std::int64_t n = 0;
  mpq_class hn;     // H^n
  mpq_class kh;     // K_X . H^{n-1}
  mpq_class nh;     // c1(N) . H^{n-1}
  mpq_class c2h;    // c2(T_F) . H^{n-2}
  mpq_class delta;  // delta(F, H)
  // Optional: c1(T_F)^2 H^{n-2} and (K_X + c1(N) + (n-1)H)^2 H^{n-2}, for
  // the discriminant inequality.
  std::optional<mpq_class> c1sq;
  std::optional<mpq_class> kn_square;
};

struct ThmAReport {
  mpq_class p;
  bool degenerate = false;  // n = 2
  bool lower = false;       // c2H >= P
  bool upper = false;       // delta + P >= c2H
  bool squeezed = false;    // delta = 0 forces c2H = P
  std::optional<mpq_class> discriminant;
  std::optional<bool> discriminant_bound;
  bool pass() const { return lower && upper && (!discriminant_bound || *discriminant_bound); }
};

inline ThmAReport theorem_a_report(const ThmANumbers& in) {
  auto integral = [](const mpq_class& q, const char* what) {
    if (q.get_den() != 1) throw InvalidInput(std::string("intersection number ") + what + " is not an integer");
  };
  integral(in.hn, "HN");
  integral(in.kh, "KH");
  integral(in.nh, "NH");
  integral(in.c2h, "c2H");
  integral(in.delta, "delta");
  if (in.n < 2) throw InvalidInput("ambient dimension must be at least 2");
  if (in.delta < 0) throw InvalidInput("delta must be non-negative");
  ThmAReport r;
  const mpq_class n(in.n);
  r.p = -(n - 2) * (in.nh + in.kh + (n - 1) / 2 * in.hn);
  r.degenerate = in.n == 2;
  r.lower = in.c2h >= r.p;
  r.upper = in.delta + r.p >= in.c2h;
  r.squeezed = in.delta == 0;
  if (in.c1sq && in.kn_square) {
    integral(*in.c1sq, "c1sq");
    integral(*in.kn_square, "kn_square");
    r.discriminant = 2 * (n - 1) * in.c2h - (n - 2) * *in.c1sq;
    r.discriminant_bound = *r.discriminant >= -(n - 2) * *in.kn_square;
  }
  return r;
}

// For a degree-l surface X in P^3: the integral of
// c2(Omega_X(kH)) - ((1+k)H + K_X)^2, which is l (k(2-l) + 2l - 3) since H^2 = l.
inline std::int64_t surface_cotangent_gap(std::int64_t l, std::int64_t k) { return l * (k * (2 - l) + 2 * l - 3); }

// The numbers of P^n with N = O(d+2).
inline ThmANumbers projective_space_numbers(std::int64_t n, std::int64_t d, std::int64_t c2h, std::int64_t delta) {
  ThmANumbers in;
  in.n = n;
  in.hn = 1;
  in.kh = -(n + 1);
  in.nh = d + 2;
  in.c2h = c2h;
  in.delta = delta;
  in.c1sq = mpq_class((n - 1 - d) * (n - 1 - d));
  in.kn_square = mpq_class(d * d);
  return in;
}

}  // namespace folia
