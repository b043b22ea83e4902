#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "folia/linalg.hpp"
#include "folia/polynomial.hpp"

namespace folia {

// Deterministic splitmix64 stream. The output sequence is fixed by the
// seed on every platform; bounded draws use rejection, not the
// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next();
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(unsigned percent) { return uniform(0, 99) < std::int64_t(percent); }

  // Independent stream keyed by a name and an index, derived from the
  // original seed only (not from how far this stream has advanced).
  Rng substream(std::string_view name, std::uint64_t index = 0) const;

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

// All monomials of exactly the given degree in nvars variables, in a fixed
// (lexicographic exponent) enumeration order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

// Random homogeneous polynomial of the given degree with integer
// coefficients in [-bound, bound]; each monomial is kept with probability
// density%. Never returns zero.
template <class F>
Polynomial<F> random_homogeneous(const F& field, std::size_t nvars, unsigned degree, Rng& rng,
                                 unsigned density = 100, std::int64_t bound = 9) {
  const auto monos = monomials_of_degree(nvars, degree);
  TermOrder ord = TermOrder::grevlex(nvars);
  for (;;) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& m : monos) {
      if (!rng.chance(density)) continue;
      std::int64_t c = rng.uniform(-bound, bound);
      if (c != 0) terms.push_back({m, field.from_int(c)});
    }
    auto p = Polynomial<F>::from_terms(field, ord, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

// Random polynomial with terms in degrees [min_degree, max_degree].
template <class F>
Polynomial<F> random_polynomial(const F& field, std::size_t nvars, unsigned min_degree, unsigned max_degree,
                                Rng& rng, unsigned density = 60, std::int64_t bound = 9) {
  TermOrder ord = TermOrder::grevlex(nvars);
  for (;;) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (unsigned d = min_degree; d <= max_degree; ++d)
      for (const auto& m : monomials_of_degree(nvars, d)) {
        if (!rng.chance(density)) continue;
        std::int64_t c = rng.uniform(-bound, bound);
        if (c != 0) terms.push_back({m, field.from_int(c)});
      }
    auto p = Polynomial<F>::from_terms(field, ord, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

template <class F>
Matrix<F> random_matrix(const F& field, std::size_t rows, std::size_t cols, Rng& rng, std::int64_t bound) {
  Matrix<F> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rng.uniform(-bound, bound));
  return m;
}

// Random matrix of full column rank (rows >= cols), by rejection.
template <class F>
Matrix<F> random_full_rank(const F& field, std::size_t rows, std::size_t cols, Rng& rng, std::int64_t bound) {
  for (;;) {
    Matrix<F> m = random_matrix(field, rows, cols, rng, bound);
    if (m.rank() == std::min(rows, cols)) return m;
  }
}

}  // namespace folia
