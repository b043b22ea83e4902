#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "folia/error.hpp"
#include "folia/groebner.hpp"
#include "folia/linalg.hpp"
#include "folia/parser.hpp"
#include "folia/polynomial.hpp"

namespace folia {

// A multi-index dx_{i1} ∧ ... ∧ dx_{ip} with i1 < ... < ip, stored as a
// bitmask over variable indices.
using WedgeMask = std::uint32_t;

// (-1)^sigma(i, I): the sign of moving dx_i into sorted position inside dx_I,
// i.e. dx_i ∧ dx_I = sign_insert(i, I) dx_{I ∪ {i}}. Every sign in this
// module derives from it.
inline int sign_insert(std::size_t i, WedgeMask mask) {
  return (std::popcount(mask & ((WedgeMask(1) << i) - 1)) % 2) ? -1 : 1;
}

// dx_I ∧ dx_J = wedge_sign(I, J) dx_{I ∪ J} for disjoint I, J.
inline int wedge_sign(WedgeMask a, WedgeMask b) {
  int s = 1;
  // Move each index of a, from the largest down, past the smaller indices of b.
  for (WedgeMask rest = a; rest; rest &= rest - 1) {
    std::size_t i = std::countr_zero(rest);
    if (std::popcount(b & ((WedgeMask(1) << i) - 1)) % 2) s = -s;
  }
  return s;
}

inline std::vector<std::size_t> mask_indices(WedgeMask m) {
  std::vector<std::size_t> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

template <class F>
class PolyVectorField {
 public:
  using Poly = Polynomial<F>;

  explicit PolyVectorField(std::vector<Poly> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw InvalidInput("vector field needs at least one component");
  }

  // rad = sum_j x_j d/dx_j
  static PolyVectorField radial(const F& field, std::size_t nvars) {
    std::vector<Poly> c;
    for (std::size_t j = 0; j < nvars; ++j) c.push_back(Poly::variable(field, TermOrder::grevlex(nvars), j));
    return PolyVectorField(std::move(c));
  }
  // d/dx_i
  static PolyVectorField coordinate(const F& field, std::size_t nvars, std::size_t i) {
    TermOrder ord = TermOrder::grevlex(nvars);
    std::vector<Poly> c(nvars, Poly(field, ord));
    c[i] = Poly::constant(field, ord, field.one());
    return PolyVectorField(std::move(c));
  }

  std::size_t nvars() const { return comps_.size(); }
  const Poly& operator[](std::size_t i) const { return comps_[i]; }

 private:
  std::vector<Poly> comps_;
};

// Differential p-form with polynomial coefficients in n variables:
// sum over |I| = p of A_I dx_I. Zero coefficients are never stored, so the
// zero p-form has an empty coefficient map.
template <class F>
class PolyForm {
 public:
  using Poly = Polynomial<F>;
  using Elem = typename F::Elem;

  PolyForm(F field, std::size_t nvars, unsigned degree)
      : field_(std::move(field)), nvars_(nvars), degree_(degree) {
    // Degrees above nvars are allowed and only ever hold the zero form.
    if (nvars > 31 || degree > 31) throw InvalidInput("too many variables for a differential form");
  }

  static PolyForm function(const Poly& f) {
    PolyForm w(f.field(), f.nvars(), 0);
    w.set(0, f);
    return w;
  }
  // sum_i coeffs[i] dx_i
  static PolyForm one_form(std::span<const Poly> coeffs) {
    if (coeffs.empty()) throw InvalidInput("one-form needs coefficients");
    PolyForm w(coeffs.front().field(), coeffs.size(), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i].nvars() != coeffs.size()) throw InvalidInput("one-form coefficient arity mismatch");
      w.set(WedgeMask(1) << i, coeffs[i]);
    }
    return w;
  }
  static PolyForm dx(const F& field, std::size_t nvars, std::size_t i) {
    PolyForm w(field, nvars, 1);
    w.set(WedgeMask(1) << i, Poly::constant(field, TermOrder::grevlex(nvars), field.one()));
    return w;
  }
  // df
  static PolyForm differential(const Poly& f) { return function(f).d(); }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<WedgeMask, Poly>& coefficients() const { return coeffs_; }

  Poly coefficient(WedgeMask m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? zero_poly() : it->second;
  }
  // Coefficient of dx_i for a one-form.
  Poly component(std::size_t i) const { return coefficient(WedgeMask(1) << i); }

  void set(WedgeMask m, Poly c) {
    if (std::popcount(m) != int(degree_)) throw InvalidInput("multi-index length differs from form degree");
    if (m >> nvars_) throw InvalidInput("multi-index out of range");
    if (c.nvars() != nvars_) throw InvalidInput("coefficient arity mismatch");
    c = c.with_order(TermOrder::grevlex(nvars_));
    if (c.is_zero()) coeffs_.erase(m);
    else coeffs_.insert_or_assign(m, std::move(c));
  }

  PolyForm operator+(const PolyForm& o) const {
    check_same(o, true);
    PolyForm r = *this;
    for (const auto& [m, c] : o.coeffs_) r.set(m, r.coefficient(m) + c);
    return r;
  }
  PolyForm operator-(const PolyForm& o) const {
    check_same(o, true);
    PolyForm r = *this;
    for (const auto& [m, c] : o.coeffs_) r.set(m, r.coefficient(m) - c);
    return r;
  }
  PolyForm operator-() const { return scale(Poly::constant(field_, TermOrder::grevlex(nvars_), field_.neg(field_.one()))); }

  PolyForm scale(const Poly& f) const {
    PolyForm r(field_, nvars_, degree_);
    for (const auto& [m, c] : coeffs_) r.set(m, c * f);
    return r;
  }
  PolyForm scale(const Elem& c) const {
    return scale(Poly::constant(field_, TermOrder::grevlex(nvars_), c));
  }

  bool operator==(const PolyForm& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_ || degree_ != o.degree_) return false;
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (const auto& [m, c] : coeffs_) {
      auto it = o.coeffs_.find(m);
      if (it == o.coeffs_.end() || !(it->second == c)) return false;
    }
    return true;
  }

  PolyForm wedge(const PolyForm& o) const {
    check_same(o, false);
    if (degree_ + o.degree_ > nvars_) return PolyForm(field_, nvars_, degree_ + o.degree_);
    PolyForm r(field_, nvars_, degree_ + o.degree_);
    std::map<WedgeMask, Poly> acc;
    for (const auto& [a, ca] : coeffs_)
      for (const auto& [b, cb] : o.coeffs_) {
        if (a & b) continue;
        Poly term = ca * cb;
        if (wedge_sign(a, b) < 0) term = -term;
        auto it = acc.find(a | b);
        if (it == acc.end()) acc.emplace(a | b, std::move(term));
        else it->second += term;
      }
    for (auto& [m, c] : acc) r.set(m, std::move(c));
    return r;
  }

  // d(A dx_I) = sum_i dA/dx_i dx_i ∧ dx_I
  PolyForm d() const {
    PolyForm r(field_, nvars_, degree_ + 1);
    std::map<WedgeMask, Poly> acc;
    for (const auto& [m, c] : coeffs_)
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m & (WedgeMask(1) << i)) continue;
        Poly di = c.derivative(i);
        if (di.is_zero()) continue;
        if (sign_insert(i, m) < 0) di = -di;
        WedgeMask j = m | (WedgeMask(1) << i);
        auto it = acc.find(j);
        if (it == acc.end()) acc.emplace(j, std::move(di));
        else it->second += di;
      }
    for (auto& [m, c] : acc) r.set(m, std::move(c));
    return r;
  }

  // Interior product v ⌐ (A dx_I) = sum_{i in I} (-1)^{#{j in I : j < i}} v_i A dx_{I - i}
  PolyForm contract(const PolyVectorField<F>& v) const {
    if (v.nvars() != nvars_) throw InvalidInput("contraction with a vector field of different arity");
    if (degree_ == 0) return PolyForm(field_, nvars_, 0);
    PolyForm r(field_, nvars_, degree_ - 1);
    std::map<WedgeMask, Poly> acc;
    for (const auto& [m, c] : coeffs_)
      for (std::size_t i : mask_indices(m)) {
        WedgeMask rest = m & ~(WedgeMask(1) << i);
        Poly t = v[i].with_order(TermOrder::grevlex(nvars_)) * c;
        if (sign_insert(i, rest) < 0) t = -t;
        auto it = acc.find(rest);
        if (it == acc.end()) acc.emplace(rest, std::move(t));
        else it->second += t;
      }
    for (auto& [m, c] : acc) r.set(m, std::move(c));
    return r;
  }

  // Pullback along x = M y: row j of M expresses x_j in the new variables.
  PolyForm pullback_linear(const Matrix<F>& mat) const {
    if (mat.rows() != nvars_) throw InvalidInput("pullback matrix row count must equal variable count");
    const std::size_t m = mat.cols();
    if (degree_ > m) return PolyForm(field_, m, degree_);
    std::vector<PolyForm> dxs;
    for (std::size_t j = 0; j < nvars_; ++j) {
      PolyForm w(field_, m, 1);
      for (std::size_t k = 0; k < m; ++k)
        w.set(WedgeMask(1) << k, Poly::constant(field_, TermOrder::grevlex(m), mat(j, k)));
      dxs.push_back(std::move(w));
    }
    PolyForm r(field_, m, degree_);
    for (const auto& [mask, c] : coeffs_) {
      PolyForm basis = PolyForm::function(Poly::constant(field_, TermOrder::grevlex(m), field_.one()));
      for (std::size_t i : mask_indices(mask)) basis = basis.wedge(dxs[i]);
      r = r + basis.scale(c.linear_substitute(mat));
    }
    return r;
  }

  // Restriction to the affine chart {x_i = 1}: substitute x_i = 1 and drop
  // every term containing dx_i. Remaining variables keep their order.
  PolyForm restrict_chart(std::size_t chart) const {
    if (chart >= nvars_) throw InvalidInput("chart index out of range");
    if (degree_ > nvars_ - 1) return PolyForm(field_, nvars_ - 1, degree_);
    std::vector<std::size_t> map(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) map[j] = j < chart ? j : (j == chart ? Poly::npos : j - 1);
    PolyForm r(field_, nvars_ - 1, degree_);
    for (const auto& [m, c] : coeffs_) {
      if (m & (WedgeMask(1) << chart)) continue;
      WedgeMask low = m & ((WedgeMask(1) << chart) - 1);
      WedgeMask high = (m >> (chart + 1)) << chart;
      r.set(low | high, c.substitute_value(chart, field_.one()).remap(nvars_ - 1, map));
    }
    return r;
  }

  std::vector<Poly> coefficient_list() const {
    std::vector<Poly> out;
    for (const auto& [m, c] : coeffs_) out.push_back(c);
    return out;
  }

  Ideal<F> coefficient_ideal() const { return Ideal<F>(field_, nvars_, coefficient_list()); }

  // Common degree of all coefficients, or -1 if they are not homogeneous of
  // one degree (the zero form reports -1 as well).
  int coefficient_degree() const {
    int deg = -1;
    for (const auto& [m, c] : coeffs_) {
      if (!c.is_homogeneous()) return -1;
      if (deg == -1) deg = c.degree();
      else if (deg != c.degree()) return -1;
    }
    return deg;
  }

  std::string to_string(std::span<const std::string> names) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : coeffs_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string(names) + ")";
      bool first = true;
      for (std::size_t i : mask_indices(m)) {
        out += first ? "*d" : "∧d";
        out += names[i];
        first = false;
      }
    }
    return out;
  }

 private:
  Poly zero_poly() const { return Poly(field_, TermOrder::grevlex(nvars_)); }

  void check_same(const PolyForm& o, bool same_degree) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_) throw InvalidInput("forms live in different contexts");
    if (same_degree && degree_ != o.degree_) throw InvalidInput("adding forms of different degrees");
  }

  F field_;
  std::size_t nvars_;
  unsigned degree_;
  std::map<WedgeMask, Poly> coeffs_;
};

// Parses a one-form written with differentials, e.g. "x*dy - y*dx". Every
// term must carry exactly one differential d<name> to the first power.
template <class F>
PolyForm<F> parse_one_form(std::string_view text, std::span<const std::string> names, const F& field) {
  const std::size_t n = names.size();
  std::vector<std::string> all(names.begin(), names.end());
  for (const auto& v : names) all.push_back("d" + v);
  auto p = parse_poly(text, all, field);
  TermOrder ord = TermOrder::grevlex(n);
  std::vector<std::vector<typename Polynomial<F>::Term>> parts(n);
  for (const auto& t : p.terms()) {
    int which = -1;
    for (std::size_t j = n; j < 2 * n; ++j) {
      if (t.mono[j] == 0) continue;
      if (t.mono[j] > 1 || which != -1) throw InvalidInput("one-form term is not linear in the differentials");
      which = int(j - n);
    }
    if (which < 0) throw InvalidInput("one-form term has no differential");
    Monomial m;
    for (std::size_t j = 0; j < n; ++j) m.set(j, t.mono[j]);
    parts[which].push_back({m, t.coef});
  }
  std::vector<Polynomial<F>> coeffs;
  for (auto& part : parts) coeffs.push_back(Polynomial<F>::from_terms(field, ord, std::move(part)));
  return PolyForm<F>::one_form(coeffs);
}

struct DescentReport {
  bool homogeneous = false;  // all coefficients homogeneous of degree twist - p
  bool contraction = false;  // rad ⌐ w = 0
  bool lie = false;          // L_rad w = twist * w
  bool pass() const { return homogeneous && contraction && lie; }
  std::string diagnostic() const {
    if (pass()) return "ok";
    std::string s;
    if (!homogeneous) s += "coefficients are not homogeneous of degree twist-p; ";
    if (!contraction) s += "radial contraction is nonzero; ";
    if (!lie) s += "Lie derivative along the radial field is not twist*w; ";
    return s;
  }
};

// Checks that w descends to a twisted form on projective space:
// rad ⌐ w = 0 and L_rad w = rad ⌐ dw + d(rad ⌐ w) = k w.
template <class F>
DescentReport descent_check(const PolyForm<F>& w, int twist) {
  DescentReport r;
  const auto rad = PolyVectorField<F>::radial(w.field(), w.nvars());
  int cd = w.coefficient_degree();
  r.homogeneous = w.is_zero() || cd == twist - int(w.degree());
  PolyForm<F> c = w.contract(rad);
  r.contraction = c.is_zero();
  PolyForm<F> lie = w.d().contract(rad);
  if (w.degree() > 0) lie = lie + c.d();
  r.lie = lie == w.scale(w.field().from_int(twist));
  return r;
}

template <class F>
bool is_integrable(const PolyForm<F>& w) {
  if (w.degree() != 1) throw InvalidInput("integrability is defined here for one-forms");
  return w.wedge(w.d()).is_zero();
}

template <class F>
struct ChartCheckReport {
  Ideal<F> derivative_ideal;  // coefficients of dw, dehomogenized
  Ideal<F> chart_ideal;       // coefficients of d(w|chart) and w|chart
  bool forward = false;       // derivative_ideal ⊆ chart_ideal
  bool backward = false;      // chart_ideal ⊆ derivative_ideal
  bool pass() const { return forward && backward; }
};

// On the chart {x_i = 1}, the ideal generated by all coefficients of dw
// equals the ideal generated by the coefficients of w and d(w) computed in
// the chart. Certified by two-sided membership.
template <class F>
ChartCheckReport<F> euler_chart_check(const PolyForm<F>& w, int twist, std::size_t chart = 0,
                                      const GbLimits& limits = {}) {
  auto descent = descent_check(w, twist);
  if (!descent.pass()) throw InvalidInput("euler_chart_check: " + descent.diagnostic());
  const std::size_t n = w.nvars();
  std::vector<std::size_t> map(n);
  for (std::size_t j = 0; j < n; ++j) map[j] = j < chart ? j : (j == chart ? Polynomial<F>::npos : j - 1);
  std::vector<Polynomial<F>> lhs;
  for (const auto& c : w.d().coefficient_list())
    lhs.push_back(c.substitute_value(chart, w.field().one()).remap(n - 1, map));
  PolyForm<F> local = w.restrict_chart(chart);
  std::vector<Polynomial<F>> rhs = local.d().coefficient_list();
  for (const auto& c : local.coefficient_list()) rhs.push_back(c);
  ChartCheckReport<F> r{Ideal<F>(w.field(), n - 1, lhs), Ideal<F>(w.field(), n - 1, rhs)};
  r.forward = r.chart_ideal.contains(r.derivative_ideal, limits);
  r.backward = r.derivative_ideal.contains(r.chart_ideal, limits);
  return r;
}

}  // namespace folia
