#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folia/error.hpp"
#include "folia/polynomial.hpp"

namespace folia {

// Computational budgets. Exceeding one raises BudgetExceeded.
struct GbLimits {
  std::size_t max_pairs = 2'000'000;
  unsigned max_degree = 512;
  // Largest N tried in the I + m^N stabilization for local lengths.
  unsigned local_cap = 64;
};

// A natural number or infinity.
class Length {
 public:
  static Length finite(std::size_t n) { return Length(n); }
  static Length infinite() { return Length(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  std::size_t value() const {
    if (!value_) throw InvalidInput("length is infinite");
    return *value_;
  }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  bool operator==(const Length&) const = default;
  bool operator==(std::size_t n) const { return value_ && *value_ == n; }
  // Total order with infinity on top.
  bool operator<=(const Length& o) const {
    if (o.is_infinite()) return true;
    return is_finite() && *value_ <= *o.value_;
  }
  bool operator>=(const Length& o) const { return o <= *this; }

 private:
  Length() = default;
  explicit Length(std::size_t n) : value_(n) {}
  std::optional<std::size_t> value_;
};

template <class F>
class GroebnerBasis {
 public:
  using Poly = Polynomial<F>;

  GroebnerBasis(TermOrder order, std::vector<Poly> basis) : order_(order), basis_(std::move(basis)) {}

  const TermOrder& order() const { return order_; }
  const std::vector<Poly>& polys() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero(); }
  bool is_zero_ideal() const { return basis_.empty(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(basis_.size());
    for (const auto& g : basis_) out.push_back(g.leading_monomial());
    return out;
  }

  const Poly* find_divisor(const Monomial& m) const {
    for (const auto& g : basis_)
      if (g.leading_monomial().divides(m)) return &g;
    return nullptr;
  }

  // Full reduction: no term of the result is divisible by a leading term.
  Poly normal_form(const Poly& f) const {
    Poly p = f.order() == order_ ? f : f.with_order(order_);
    std::vector<typename Poly::Term> rem;
    while (!p.is_zero()) {
      const Poly* g = find_divisor(p.leading_monomial());
      if (g) {
        auto c = p.field().mul(p.leading_coefficient(), p.field().inv(g->leading_coefficient()));
        p = p.sub_mul_term(p.leading_monomial() / g->leading_monomial(), c, *g);
      } else {
        rem.push_back(p.pop_leading());
      }
    }
    return Poly::from_terms(f.field(), order_, std::move(rem));
  }

  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

  bool operator==(const GroebnerBasis& o) const {
    if (!(order_ == o.order_) || basis_.size() != o.basis_.size()) return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!(basis_[i] == o.basis_[i])) return false;
    return true;
  }

 private:
  TermOrder order_;
  std::vector<Poly> basis_;
};

namespace detail {

template <class F>
struct PairSet {
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
};

// S-polynomial of two monic polynomials.
template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, const Monomial& lcm) {
  const F& k = f.field();
  Polynomial<F> a = f.mul_term(lcm / f.leading_monomial(), k.inv(f.leading_coefficient()));
  return a.sub_mul_term(lcm / g.leading_monomial(), k.inv(g.leading_coefficient()), g);
}

}  // namespace detail

// Buchberger's algorithm with the normal selection strategy and the
// Gebauer-Moeller installation of both criteria. Returns the reduced,
// monic basis sorted by increasing leading monomial.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, TermOrder order,
                            const GbLimits& limits = {}) {
  using Poly = Polynomial<F>;
  using Pair = typename detail::PairSet<F>::Pair;

  std::vector<Poly> g;
  std::vector<bool> alive;
  std::vector<Pair> pairs;

  auto reduce = [&](Poly p) {
    std::vector<typename Poly::Term> rem;
    while (!p.is_zero()) {
      const Monomial& lm = p.leading_monomial();
      const Poly* div = nullptr;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (alive[i] && g[i].leading_monomial().divides(lm)) {
          div = &g[i];
          break;
        }
      if (div) {
        p = p.sub_mul_term(lm / div->leading_monomial(), p.leading_coefficient(), *div);
      } else {
        rem.push_back(p.pop_leading());
      }
    }
    return Poly::from_terms(gens.empty() ? F{} : gens.front().field(), order, std::move(rem));
  };

  auto install = [&](Poly h) {
    h = h.monic();
    if (h.degree() > int(limits.max_degree))
      throw BudgetExceeded("Groebner basis element exceeds degree budget " + std::to_string(limits.max_degree));
    const std::size_t k = g.size();
    const Monomial& hk = h.leading_monomial();

    // New pairs (i, k) surviving the chain criterion among themselves.
    std::vector<Pair> fresh;
    std::vector<bool> coprime;
    for (std::size_t i = 0; i < k; ++i) {
      if (!alive[i]) continue;
      fresh.push_back({i, k, g[i].leading_monomial().lcm(hk)});
      coprime.push_back(g[i].leading_monomial().coprime(hk));
    }
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
          keep[a] = false;
          break;
        }
      }
    // Equal lcms: drop the whole class if any member is coprime, else keep one.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool any_coprime = coprime[a];
      for (std::size_t b = a + 1; b < fresh.size(); ++b)
        if (keep[b] && fresh[b].lcm == fresh[a].lcm) {
          any_coprime = any_coprime || coprime[b];
          keep[b] = false;
        }
      if (any_coprime) keep[a] = false;
    }
    // Old pairs made redundant by the new leading term.
    std::vector<Pair> kept_old;
    kept_old.reserve(pairs.size());
    for (const auto& p : pairs) {
      if (hk.divides(p.lcm)) {
        Monomial li = g[p.i].leading_monomial().lcm(hk);
        Monomial lj = g[p.j].leading_monomial().lcm(hk);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept_old.push_back(p);
    }
    pairs = std::move(kept_old);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) pairs.push_back(fresh[a]);
    for (std::size_t i = 0; i < k; ++i)
      if (alive[i] && hk.divides(g[i].leading_monomial())) alive[i] = false;
    g.push_back(std::move(h));
    alive.push_back(true);
  };

  if (gens.empty()) return GroebnerBasis<F>(order, {});
  for (const auto& f : gens) {
    if (f.nvars() != order.nvars()) throw InvalidInput("generator arity does not match term order");
    Poly r = reduce(f.with_order(order));
    if (!r.is_zero()) install(std::move(r));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs.size(); ++a)
      if (order.greater(pairs[best].lcm, pairs[a].lcm)) best = a;
    Pair p = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    if (++processed > limits.max_pairs)
      throw BudgetExceeded("Groebner basis exceeded S-pair budget " + std::to_string(limits.max_pairs));
    Poly h = reduce(detail::s_polynomial(g[p.i], g[p.j], p.lcm));
    if (!h.is_zero()) install(std::move(h));
  }

  // Alive elements form a minimal basis; interreduce tails.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (alive[i]) minimal.push_back(g[i]);
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return order.greater(b.leading_monomial(), a.leading_monomial());
  });
  GroebnerBasis<F> lead_only(order, minimal);
  std::vector<Poly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Poly tail = minimal[i];
    auto lt = tail.pop_leading();
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly nf = GroebnerBasis<F>(order, std::move(others)).normal_form(tail);
    reduced.push_back(Poly::monomial(tail.field(), order, lt.mono, lt.coef) + nf);
  }
  return GroebnerBasis<F>(order, std::move(reduced));
}

// An ideal given by generators, with lazily computed and shared reduced
// Groebner bases. Generators never change after construction, so cached
// bases stay valid for every copy.
template <class F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  Ideal(F field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars), cache_(std::make_shared<Cache>()) {}
  Ideal(F field, std::size_t nvars, std::vector<Poly> gens) : Ideal(std::move(field), nvars) {
    for (auto& g : gens) add_generator(std::move(g));
  }
  explicit Ideal(std::vector<Poly> gens)
      : Ideal(gens.empty() ? throw InvalidInput("empty generator list needs an explicit ring") : gens.front().field(),
              gens.front().nvars(), std::move(gens)) {}

  static Ideal unit(const F& field, std::size_t nvars) {
    return Ideal(field, nvars, {Poly::constant(field, TermOrder::grevlex(nvars), field.one())});
  }
  // (x_0, ..., x_{n-1})^power
  static Ideal maximal_power(const F& field, std::size_t nvars, unsigned power) {
    std::vector<Poly> gens;
    TermOrder ord = TermOrder::grevlex(nvars);
    std::vector<unsigned> exps(nvars, 0);
    // Enumerate all exponent vectors of total degree `power`.
    auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
      if (var + 1 == nvars) {
        exps[var] = left;
        gens.push_back(Poly::monomial(field, ord, Monomial(exps), field.one()));
        return;
      }
      for (unsigned e = 0; e <= left; ++e) {
        exps[var] = e;
        self(self, var + 1, left - e);
      }
    };
    if (nvars == 0) throw InvalidInput("maximal ideal of a ring with no variables");
    rec(rec, 0, power);
    return Ideal(field, nvars, std::move(gens));
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  const GroebnerBasis<F>& groebner(const GbLimits& limits = {}) const {
    return groebner(TermOrder::grevlex(nvars_), limits);
  }
  const GroebnerBasis<F>& groebner(TermOrder order, const GbLimits& limits = {}) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& [ord, gb] : cache_->bases)
      if (ord == order) return *gb;
    auto gb = std::make_shared<GroebnerBasis<F>>(buchberger(gens_, order, limits));
    cache_->bases.emplace_back(order, gb);
    return *gb;
  }

  bool contains(const Poly& f, const GbLimits& limits = {}) const {
    return groebner(limits).contains(f.with_order(TermOrder::grevlex(nvars_)));
  }
  bool contains(const Ideal& o, const GbLimits& limits = {}) const {
    for (const auto& g : o.gens_)
      if (!contains(g, limits)) return false;
    return true;
  }
  bool same_as(const Ideal& o, const GbLimits& limits = {}) const {
    return groebner(limits) == o.groebner(limits);
  }
  bool is_unit(const GbLimits& limits = {}) const { return groebner(limits).is_unit(); }

  Ideal operator+(const Ideal& o) const {
    if (nvars_ != o.nvars_) throw InvalidInput("ideal sum across different rings");
    std::vector<Poly> all = gens_;
    all.insert(all.end(), o.gens_.begin(), o.gens_.end());
    return Ideal(field_, nvars_, std::move(all));
  }
  Ideal with(const Poly& f) const {
    std::vector<Poly> all = gens_;
    all.push_back(f);
    return Ideal(field_, nvars_, std::move(all));
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<TermOrder, std::shared_ptr<const GroebnerBasis<F>>>> bases;
  };

  void add_generator(Poly g) {
    if (g.nvars() != nvars_) throw InvalidInput("generator arity does not match ideal");
    if (g.is_zero()) return;
    gens_.push_back(g.with_order(TermOrder::grevlex(nvars_)));
  }

  F field_;
  std::size_t nvars_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

// Exact division a / f; throws if f does not divide a.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& a, const Polynomial<F>& f) {
  if (f.is_zero()) throw InvalidInput("division by the zero polynomial");
  TermOrder ord = TermOrder::grevlex(a.nvars());
  Polynomial<F> p = a.with_order(ord);
  Polynomial<F> d = f.with_order(ord);
  const F& k = a.field();
  auto inv_lc = k.inv(d.leading_coefficient());
  std::vector<typename Polynomial<F>::Term> q;
  while (!p.is_zero()) {
    if (!d.leading_monomial().divides(p.leading_monomial()))
      throw InvalidInput("divide_exact: divisor does not divide dividend");
    Monomial m = p.leading_monomial() / d.leading_monomial();
    auto c = k.mul(p.leading_coefficient(), inv_lc);
    q.push_back({m, c});
    p = p.sub_mul_term(m, c, d);
  }
  return Polynomial<F>::from_terms(k, ord, std::move(q));
}

namespace detail {

// Generators of I ∩ J via elimination of a tag variable t from t*I + (1-t)*J.
template <class F>
std::vector<Polynomial<F>> intersection_generators(const Ideal<F>& i, const Ideal<F>& j, const GbLimits& limits) {
  using Poly = Polynomial<F>;
  const F& k = i.field();
  const std::size_t n = i.nvars();
  if (n + 1 > kMaxVars) throw InvalidInput("too many variables for tag-variable elimination");
  TermOrder elim = TermOrder::elimination(n + 1, 1);
  Poly t = Poly::variable(k, elim, 0);
  Poly one_minus_t = Poly::constant(k, elim, k.one()) - t;
  std::vector<Poly> gens;
  for (const auto& g : i.generators()) gens.push_back(t * g.embed(n + 1, 1, elim));
  for (const auto& g : j.generators()) gens.push_back(one_minus_t * g.embed(n + 1, 1, elim));
  auto gb = buchberger(gens, elim, limits);
  std::vector<std::size_t> back(n + 1);
  back[0] = Poly::npos;
  for (std::size_t v = 0; v < n; ++v) back[v + 1] = v;
  std::vector<Poly> out;
  for (const auto& g : gb.polys())
    if (!g.involves(0)) out.push_back(g.remap(n, back).with_order(TermOrder::grevlex(n)));
  return out;
}

}  // namespace detail

template <class F>
Ideal<F> intersect(const Ideal<F>& i, const Ideal<F>& j, const GbLimits& limits = {}) {
  if (i.nvars() != j.nvars()) throw InvalidInput("intersection across different rings");
  if (i.is_zero() || j.is_zero()) return Ideal<F>(i.field(), i.nvars());
  return Ideal<F>(i.field(), i.nvars(), detail::intersection_generators(i, j, limits));
}

// (I : f) = {g : g f in I}, from I ∩ (f) divided by f.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& i, const Polynomial<F>& f, const GbLimits& limits = {}) {
  if (f.is_zero()) throw InvalidInput("ideal quotient by the zero polynomial");
  if (f.nvars() != i.nvars()) throw InvalidInput("ideal quotient across different rings");
  if (f.is_constant()) return i;
  if (i.is_zero()) return i;
  Ideal<F> principal(i.field(), i.nvars(), {f});
  std::vector<Polynomial<F>> gens;
  for (const auto& g : detail::intersection_generators(i, principal, limits)) gens.push_back(divide_exact(g, f));
  return Ideal<F>(i.field(), i.nvars(), std::move(gens));
}

// (I : J) = intersection of (I : g) over generators g of J.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& i, const Ideal<F>& j, const GbLimits& limits = {}) {
  if (j.is_zero()) return Ideal<F>::unit(i.field(), i.nvars());
  std::optional<Ideal<F>> acc;
  for (const auto& g : j.generators()) {
    Ideal<F> q = ideal_quotient(i, g, limits);
    acc = acc ? intersect(*acc, q, limits) : q;
  }
  return *acc;
}

template <class F>
struct Saturation {
  Ideal<F> ideal;
  unsigned steps;  // quotients taken until the chain stabilized
};

// (I : f^inf) by iterating (I : f) until two consecutive ideals agree.
template <class F>
Saturation<F> saturation(const Ideal<F>& i, const Polynomial<F>& f, const GbLimits& limits = {},
                         unsigned max_steps = 64) {
  Ideal<F> cur = i;
  for (unsigned step = 1; step <= max_steps; ++step) {
    Ideal<F> next = ideal_quotient(cur, f, limits);
    if (next.same_as(cur, limits)) return {cur, step - 1};
    cur = std::move(next);
  }
  throw BudgetExceeded("saturation did not stabilize within " + std::to_string(max_steps) + " quotients");
}

// (I : m^inf) for m = (x_0, ..., x_{n-1}), as the intersection of the
// saturations by each variable.
template <class F>
Ideal<F> saturate_maximal(const Ideal<F>& i, const GbLimits& limits = {}) {
  std::optional<Ideal<F>> acc;
  TermOrder ord = TermOrder::grevlex(i.nvars());
  for (std::size_t v = 0; v < i.nvars(); ++v) {
    Ideal<F> s = saturation(i, Polynomial<F>::variable(i.field(), ord, v), limits).ideal;
    acc = acc ? intersect(*acc, s, limits) : s;
  }
  return acc ? *acc : i;
}

template <class F>
struct QuotientBasis {
  bool infinite = false;
  std::vector<Monomial> monomials;  // standard monomials when finite
};

// Standard monomials of R/I under the given order (grevlex by default).
template <class F>
QuotientBasis<F> quotient_basis(const Ideal<F>& i, std::optional<TermOrder> order = std::nullopt,
                                const GbLimits& limits = {}) {
  const auto& gb = i.groebner(order.value_or(TermOrder::grevlex(i.nvars())), limits);
  const auto lms = gb.leading_monomials();
  const std::size_t n = i.nvars();
  QuotientBasis<F> out;
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = false;
    for (const auto& m : lms)
      if (m.support() == (1u << v) || m.is_one()) pure = true;
    if (!pure) {
      out.infinite = true;
      return out;
    }
  }
  auto standard = [&](const Monomial& m) {
    for (const auto& l : lms)
      if (l.divides(m)) return false;
    return true;
  };
  if (!standard(Monomial())) return out;
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial(), 0}};
  out.monomials.push_back(Monomial());
  while (!stack.empty()) {
    auto [m, start] = stack.back();
    stack.pop_back();
    for (std::size_t v = start; v < n; ++v) {
      Monomial next = m * Monomial::variable(v);
      if (standard(next)) {
        out.monomials.push_back(next);
        stack.push_back({next, v});
      }
    }
  }
  return out;
}

// dim_K R/I.
template <class F>
Length colength(const Ideal<F>& i, const GbLimits& limits = {}) {
  return colength(i, TermOrder::grevlex(i.nvars()), limits);
}
template <class F>
Length colength(const Ideal<F>& i, TermOrder order, const GbLimits& limits = {}) {
  auto qb = quotient_basis(i, order, limits);
  return qb.infinite ? Length::infinite() : Length::finite(qb.monomials.size());
}

// Krull dimension of R/I via maximal independent sets of variables modulo
// the leading-term ideal. -1 for the unit ideal (empty scheme).
template <class F>
int dimension(const Ideal<F>& i, const GbLimits& limits = {}) {
  const auto& gb = i.groebner(limits);
  if (gb.is_unit()) return -1;
  const auto lms = gb.leading_monomials();
  const std::size_t n = i.nvars();
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    int size = __builtin_popcount(subset);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lms)
      if ((m.support() & ~subset) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

struct LocalLength {
  Length length;
  unsigned stabilized_at;  // N with colength(I + m^N) == colength(I + m^{N/2}); 0 if infinite
};

// Length of the localization of R/I at the origin, as colength(I + m^N)
// for N = 2, 4, 8, ... until two consecutive values agree. Agreement of
// N and 2N forces agreement of N and N+1, so by Nakayama m^N lies in the
// local ideal and the value is exact.
template <class F>
LocalLength local_colength_origin(const Ideal<F>& i, const GbLimits& limits = {}) {
  const std::size_t n = i.nvars();
  std::optional<Length> prev;
  for (unsigned N = 2; N <= limits.local_cap; N *= 2) {
    Length c = colength(i + Ideal<F>::maximal_power(i.field(), n, N), limits);
    if (prev && c == *prev) return {c, N};
    prev = c;
  }
  // No stabilization: either the origin lies on a positive-dimensional
  // component, or the local length exceeds the cap.
  Ideal<F> away = saturate_maximal(i, limits);
  Ideal<F> at_origin = away + Ideal<F>::maximal_power(i.field(), n, 1);
  if (!at_origin.is_unit(limits)) return {Length::infinite(), 0};
  throw BudgetExceeded("local colength did not stabilize below cap N=" + std::to_string(limits.local_cap));
}

struct HilbertDegree {
  std::size_t degree;
  unsigned stabilized_at;  // first degree D of three consecutive equal values
};

namespace detail {

inline std::size_t count_standard_in_degree(const std::vector<Monomial>& lms, std::size_t nvars, unsigned deg) {
  std::size_t count = 0;
  std::vector<unsigned> exps(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == nvars) {
      exps[var] = left;
      Monomial m(exps);
      for (const auto& l : lms)
        if (l.divides(m)) return;
      ++count;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[var] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, deg);
  return count;
}

}  // namespace detail

// Degree of the projective scheme V(I) for a homogeneous ideal whose zero
// locus is finite: the Hilbert function read off in high degree.
template <class F>
HilbertDegree hilbert_degree(const Ideal<F>& i, const GbLimits& limits = {}) {
  for (const auto& g : i.generators())
    if (!g.is_homogeneous()) throw InvalidInput("hilbert_degree needs a homogeneous ideal");
  const auto& gb = i.groebner(limits);
  if (gb.is_unit()) return {0, 0};
  if (dimension(i, limits) > 1) throw InvalidInput("projective scheme is not zero-dimensional");
  const auto lms = gb.leading_monomials();
  unsigned start = 0;
  for (const auto& m : lms) start = std::max(start, m.degree());
  const unsigned stop = start + limits.max_degree;
  std::vector<std::size_t> hf;
  for (unsigned d = start; d <= stop; ++d) {
    hf.push_back(detail::count_standard_in_degree(lms, i.nvars(), d));
    std::size_t k = hf.size();
    if (k >= 3 && hf[k - 1] == hf[k - 2] && hf[k - 2] == hf[k - 3]) return {hf[k - 1], d - 2};
  }
  throw BudgetExceeded("Hilbert function did not stabilize");
}

}  // namespace folia
