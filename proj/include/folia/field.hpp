#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "folia/error.hpp"

namespace folia {

// Coefficient fields. A field object is a small value carried by every
// polynomial; elements are plain values manipulated through it.
//
// Both fields expose the same surface so the algebra above them is written
// once as templates.

class RationalField {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const;
  Elem from_rational(const mpq_class& q) const { return q; }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;

  // "p/q" or "p"; negative values carry a leading '-'.
  std::string to_string(const Elem& a) const { return a.get_str(); }
  bool is_negative(const Elem& a) const { return sgn(a) < 0; }

  std::string descriptor() const { return "q"; }
  bool operator==(const RationalField&) const { return true; }
};

class PrimeField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 2147483629u;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;
  Elem from_rational(const mpq_class& q) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return Elem(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : Elem(std::uint64_t(a) + p_ - b); }
  Elem mul(Elem a, Elem b) const { return Elem((std::uint64_t(a) * b) % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;

  // Residues print as their least nonnegative representative.
  std::string to_string(Elem a) const { return std::to_string(a); }
  bool is_negative(Elem) const { return false; }

  std::string descriptor() const { return "fp:" + std::to_string(p_); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace folia
