#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "folia/error.hpp"
#include "folia/field.hpp"
#include "folia/linalg.hpp"
#include "folia/monomial.hpp"

namespace folia {

// Sparse multivariate polynomial over F. Terms are kept sorted strictly
// decreasing under the polynomial's term order with no zero coefficients,
// so two polynomials with the same field and order are equal iff their
// term vectors are.
template <class F>
class Polynomial {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  struct Term {
    Monomial mono;
    Elem coef;
  };

  Polynomial(F field, TermOrder order) : field_(std::move(field)), order_(order) {}
  Polynomial(F field, std::size_t nvars) : Polynomial(std::move(field), TermOrder::grevlex(nvars)) {}

  static Polynomial constant(const F& field, TermOrder order, const Elem& c) {
    Polynomial p(field, order);
    if (!field.is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Polynomial variable(const F& field, TermOrder order, std::size_t i) {
    if (i >= order.nvars()) throw InvalidInput("variable index out of range");
    Polynomial p(field, order);
    p.terms_.push_back({Monomial::variable(i), field.one()});
    return p;
  }
  static Polynomial monomial(const F& field, TermOrder order, const Monomial& m, const Elem& c) {
    Polynomial p(field, order);
    if (!field.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(const F& field, TermOrder order, std::vector<Term> terms) {
    Polynomial p(field, order);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const F& field() const { return field_; }
  const TermOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Elem& leading_coefficient() const { return terms_.front().coef; }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(t.mono.degree()));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Elem constant_term() const {
    for (const auto& t : terms_)
      if (t.mono.is_one()) return t.coef;
    return field_.zero();
  }
  bool involves(std::size_t var) const {
    for (const auto& t : terms_)
      if (t.mono[var] != 0) return true;
    return false;
  }

  Polynomial with_order(TermOrder order) const {
    if (order.nvars() != nvars()) throw InvalidInput("order arity mismatch");
    Polynomial p(field_, order);
    p.terms_ = terms_;
    p.sort_terms();
    return p;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = field_.neg(t.coef);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(field_, order_);
    if (is_zero() || o.is_zero()) return r;
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) r.terms_.push_back({a.mono * b.mono, field_.mul(a.coef, b.coef)});
    r.canonicalize();
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const Elem& c) const {
    Polynomial r(field_, order_);
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field_.mul(t.coef, c)});
    return r;
  }

  // c * m * this; ordering is preserved because term orders are multiplicative.
  Polynomial mul_term(const Monomial& m, const Elem& c) const {
    Polynomial r(field_, order_);
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coef, c)});
    return r;
  }

  // this - c*m*g in one merge pass.
  Polynomial sub_mul_term(const Monomial& m, const Elem& c, const Polynomial& g) const {
    Polynomial r(field_, order_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto i = terms_.begin();
    auto j = g.terms_.begin();
    while (i != terms_.end() || j != g.terms_.end()) {
      if (j == g.terms_.end()) {
        r.terms_.push_back(*i++);
        continue;
      }
      Monomial mj = j->mono * m;
      if (i == terms_.end()) {
        r.terms_.push_back({mj, field_.neg(field_.mul(c, j->coef))});
        ++j;
        continue;
      }
      auto cmp = order_.compare(i->mono, mj);
      if (cmp > 0) {
        r.terms_.push_back(*i++);
      } else if (cmp < 0) {
        r.terms_.push_back({mj, field_.neg(field_.mul(c, j->coef))});
        ++j;
      } else {
        Elem v = field_.sub(i->coef, field_.mul(c, j->coef));
        if (!field_.is_zero(v)) r.terms_.push_back({mj, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Term pop_leading() {
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(field_.inv(leading_coefficient()));
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(field_, order_, field_.one());
    Polynomial b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (!(field_ == o.field_) || nvars() != o.nvars()) return false;
    if (order_ == o.order_) return terms_equal(terms_, o.terms_);
    return terms_equal(terms_, o.with_order(order_).terms_);
  }

  Polynomial derivative(std::size_t i) const {
    if (i >= nvars()) throw InvalidInput("derivative index out of range");
    Polynomial r(field_, order_);
    for (const auto& t : terms_) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(i, e - 1);
      Elem c = field_.mul(t.coef, field_.from_int(e));
      if (!field_.is_zero(c)) r.terms_.push_back({m, c});
    }
    r.sort_terms();
    return r;
  }

  // Substitutes x_i = value, keeping the variable count.
  Polynomial substitute_value(std::size_t i, const Elem& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      Elem c = t.coef;
      for (unsigned k = 0; k < t.mono[i]; ++k) c = field_.mul(c, value);
      m.set(i, 0);
      out.push_back({m, c});
    }
    return from_terms(field_, order_, std::move(out));
  }

  // Re-indexes variables: new index of old variable j is map[j]. Old
  // variables mapped to npos must not occur.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  Polynomial remap(std::size_t new_nvars, std::span<const std::size_t> map) const {
    TermOrder ord = same_kind(new_nvars);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t j = 0; j < nvars(); ++j) {
        if (t.mono[j] == 0) continue;
        if (map[j] == npos) throw InvalidInput("remap drops a variable that occurs");
        m.set(map[j], t.mono[j]);
      }
      out.push_back({m, t.coef});
    }
    return from_terms(field_, ord, std::move(out));
  }

  // Shift all variables up by `offset` inside a ring of `new_nvars`.
  Polynomial embed(std::size_t new_nvars, std::size_t offset, TermOrder order) const {
    std::vector<std::size_t> map(nvars());
    for (std::size_t j = 0; j < nvars(); ++j) map[j] = j + offset;
    return remap(new_nvars, map).with_order(order);
  }

  // f(M y): row j of M expresses old variable x_j as a linear form in the
  // new variables y_0..y_{cols-1}.
  Polynomial linear_substitute(const Matrix<F>& m) const {
    if (m.rows() != nvars()) throw InvalidInput("linear_substitute: matrix row count must equal variable count");
    TermOrder ord = same_kind(m.cols());
    std::vector<Polynomial> images;
    images.reserve(nvars());
    for (std::size_t j = 0; j < nvars(); ++j) {
      std::vector<Term> lin;
      for (std::size_t k = 0; k < m.cols(); ++k) lin.push_back({Monomial::variable(k), m(j, k)});
      images.push_back(from_terms(field_, ord, std::move(lin)));
    }
    // powers[j][e] = images[j]^e, filled lazily.
    std::vector<std::vector<Polynomial>> powers(nvars());
    auto power = [&](std::size_t j, unsigned e) -> const Polynomial& {
      auto& pj = powers[j];
      if (pj.empty()) pj.push_back(constant(field_, ord, field_.one()));
      while (pj.size() <= e) pj.push_back(pj.back() * images[j]);
      return pj[e];
    };
    std::vector<Term> acc;
    for (const auto& t : terms_) {
      Polynomial prod = constant(field_, ord, t.coef);
      for (std::size_t j = 0; j < nvars(); ++j)
        if (t.mono[j]) prod *= power(j, t.mono[j]);
      acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
    }
    return from_terms(field_, ord, std::move(acc));
  }

  Elem evaluate(std::span<const Elem> point) const {
    if (point.size() != nvars()) throw InvalidInput("evaluate: point arity mismatch");
    Elem acc = field_.zero();
    for (const auto& t : terms_) {
      Elem v = t.coef;
      for (std::size_t j = 0; j < nvars(); ++j)
        for (unsigned k = 0; k < t.mono[j]; ++k) v = field_.mul(v, point[j]);
      acc = field_.add(acc, v);
    }
    return acc;
  }

  Polynomial homogeneous_part(unsigned deg) const {
    Polynomial r(field_, order_);
    for (const auto& t : terms_)
      if (t.mono.degree() == deg) r.terms_.push_back(t);
    return r;
  }

  std::string to_string(std::span<const std::string> names) const;

 private:
  TermOrder same_kind(std::size_t n) const {
    return order_.kind() == TermOrder::Kind::Lex ? TermOrder::lex(n) : TermOrder::grevlex(n);
  }

  void check_compatible(const Polynomial& o) const {
    if (!(field_ == o.field_)) throw InvalidInput("polynomials over different fields");
    if (nvars() != o.nvars()) throw InvalidInput("polynomials in different variable counts");
    if (!(order_ == o.order_)) throw InvalidInput("polynomials under different term orders");
  }

  bool terms_equal(const std::vector<Term>& a, const std::vector<Term>& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i].mono == b[i].mono) || !field_.equal(a[i].coef, b[i].coef)) return false;
    return true;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
  }

  void canonicalize() {
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coef = field_.add(out.back().coef, t.coef);
      } else {
        if (!out.empty() && field_.is_zero(out.back().coef)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field_.is_zero(out.back().coef)) out.pop_back();
    terms_ = std::move(out);
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_compatible(o);
    Polynomial r(field_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    auto other = [&](const Elem& c) { return subtract ? field_.neg(c) : c; };
    while (i != terms_.end() && j != o.terms_.end()) {
      auto cmp = order_.compare(i->mono, j->mono);
      if (cmp > 0) {
        r.terms_.push_back(*i++);
      } else if (cmp < 0) {
        r.terms_.push_back({j->mono, other(j->coef)});
        ++j;
      } else {
        Elem v = subtract ? field_.sub(i->coef, j->coef) : field_.add(i->coef, j->coef);
        if (!field_.is_zero(v)) r.terms_.push_back({i->mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i != terms_.end(); ++i) r.terms_.push_back(*i);
    for (; j != o.terms_.end(); ++j) r.terms_.push_back({j->mono, other(j->coef)});
    return r;
  }

  F field_;
  TermOrder order_;
  std::vector<Term> terms_;
};

std::vector<std::string> default_names(std::size_t nvars, std::size_t first_index = 0);

template <class F>
std::string Polynomial<F>::to_string(std::span<const std::string> names) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = field_.is_negative(t.coef);
    Elem mag = neg ? field_.neg(t.coef) : t.coef;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    bool unit = field_.is_one(mag);
    bool wrote = false;
    if (!unit || t.mono.is_one()) {
      out += field_.to_string(mag);
      wrote = true;
    }
    for (std::size_t j = 0; j < nvars(); ++j) {
      unsigned e = t.mono[j];
      if (!e) continue;
      if (wrote) out += "*";
      out += names[j];
      if (e > 1) out += "^" + std::to_string(e);
      wrote = true;
    }
  }
  return out;
}

}  // namespace folia
