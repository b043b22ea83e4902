#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>

namespace folia {

// Upper bound on variables in one polynomial ring. Projective forms on P^4
// use 5 variables; elimination adds one tag variable on top.
inline constexpr std::size_t kMaxVars = 12;

// Dense exponent vector. Unused trailing slots stay zero, so equality and
// divisibility never need the variable count.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial variable(std::size_t i, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const;
  // Requires o | *this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  // Bitmask of variables with nonzero exponent.
  std::uint32_t support() const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  std::array<std::uint16_t, kMaxVars> exps_;
  unsigned degree_ = 0;
};

// Monomial orders. Elimination orders compare the first `block` variables
// by grevlex, then break ties by grevlex on the remaining ones.
class TermOrder {
 public:
  enum class Kind { GRevLex, Lex, Elimination };

  static TermOrder grevlex(std::size_t nvars) { return {Kind::GRevLex, nvars, 0}; }
  static TermOrder lex(std::size_t nvars) { return {Kind::Lex, nvars, 0}; }
  static TermOrder elimination(std::size_t nvars, std::size_t block) {
    return {Kind::Elimination, nvars, block};
  }

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t block() const { return block_; }
  bool degree_compatible() const { return kind_ == Kind::GRevLex; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const TermOrder&) const = default;

 private:
  TermOrder(Kind k, std::size_t n, std::size_t b) : kind_(k), nvars_(n), block_(b) {}

  Kind kind_;
  std::size_t nvars_;
  std::size_t block_;
};

}  // namespace folia
