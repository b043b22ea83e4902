#pragma once

#include "folia/groebner.hpp"
#include "folia/linalg.hpp"
#include "folia/random.hpp"

namespace folia::oracle {

// Independent Hilbert-function oracle: dim of the degree-D piece of R/I by
// linear algebra on the span of {m * g : deg m = D - deg g}. No Groebner
// bases involved.
template <class F>
std::size_t graded_dimension_oracle(const Ideal<F>& i, unsigned deg) {
  const auto monos = monomials_of_degree(i.nvars(), deg);
  std::vector<std::vector<typename F::Elem>> rows;
  for (const auto& g : i.generators()) {
    if (g.degree() > int(deg)) continue;
    for (const auto& m : monomials_of_degree(i.nvars(), deg - g.degree())) {
      auto prod = g.mul_term(m, i.field().one());
      std::vector<typename F::Elem> row(monos.size(), i.field().zero());
      for (const auto& t : prod.terms())
        for (std::size_t k = 0; k < monos.size(); ++k)
          if (monos[k] == t.mono) row[k] = t.coef;
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return monos.size();
  Matrix<F> mat(i.field(), rows.size(), monos.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c) mat(r, c) = rows[r][c];
  return monos.size() - mat.rank();
}

}  // namespace folia::oracle
