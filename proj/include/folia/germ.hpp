#pragma once

#include <string>
#include <vector>

#include "folia/error.hpp"
#include "folia/forms.hpp"
#include "folia/groebner.hpp"
#include "folia/random.hpp"

namespace folia {

// A germ of 1-form at the origin of affine n-space, sum_j a_j dx_j. Germ
// inputs name their variables x1..xn.
template <class F>
using Germ1Form = PolyForm<F>;

inline std::vector<std::string> germ_names(std::size_t n) { return default_names(n, 1); }

struct GermInvariants {
  bool singular = false;
  Length mu = Length::finite(0);
  Length delta = Length::finite(0);
  Length unfolding_length = Length::finite(0);
  bool kupka = false;
};

namespace detail {

template <class F>
void require_planar(const Germ1Form<F>& e, const char* what) {
  if (e.degree() != 1) throw InvalidInput(std::string(what) + ": expected a 1-form");
  if (e.nvars() != 2) throw InvalidInput(std::string(what) + ": planar germ expected (2 variables)");
}

// f with d(a dx + b dy) = f dx∧dy.
template <class F>
Polynomial<F> planar_curl(const Germ1Form<F>& e) {
  return e.component(1).derivative(0) - e.component(0).derivative(1);
}

template <class F>
Ideal<F> jacobian_ideal(const Germ1Form<F>& e) {
  return Ideal<F>(e.field(), 2, {e.component(0), e.component(1)});
}

template <class F>
bool vanishes_at_origin(const Germ1Form<F>& w) {
  for (const auto& c : w.coefficient_list())
    if (!w.field().is_zero(c.constant_term())) return false;
  return true;
}

}  // namespace detail

template <class F>
Length milnor(const Germ1Form<F>& e, const GbLimits& limits = {}) {
  detail::require_planar(e, "milnor");
  return local_colength_origin(detail::jacobian_ideal(e), limits).length;
}

// Length of O/(a, b, f) at the origin.
template <class F>
Length delta_local(const Germ1Form<F>& e, const GbLimits& limits = {}) {
  detail::require_planar(e, "delta_local");
  return local_colength_origin(detail::jacobian_ideal(e).with(detail::planar_curl(e)), limits).length;
}

// (J(e) : f); the whole ring when f = 0.
template <class F>
Ideal<F> persistent_ideal(const Germ1Form<F>& e, const GbLimits& limits = {}) {
  detail::require_planar(e, "persistent_ideal");
  auto f = detail::planar_curl(e);
  if (f.is_zero()) return Ideal<F>::unit(e.field(), 2);
  return ideal_quotient(detail::jacobian_ideal(e), f, limits);
}

// l(I(e)/J(e)) = l(O/J) - l(O/I), both local at the origin.
template <class F>
Length unfolding_length(const Germ1Form<F>& e, const GbLimits& limits = {}) {
  detail::require_planar(e, "unfolding_length");
  Length j = local_colength_origin(detail::jacobian_ideal(e), limits).length;
  if (j.is_infinite()) return j;
  Length i = local_colength_origin(persistent_ideal(e, limits), limits).length;
  return Length::finite(j.value() - i.value());
}

// dw(0) != 0 at a singular point.
template <class F>
bool is_kupka(const Germ1Form<F>& w) {
  if (w.degree() != 1) throw InvalidInput("is_kupka: expected a 1-form");
  if (!detail::vanishes_at_origin(w)) throw InvalidInput("is_kupka: form is regular at the origin");
  for (const auto& c : w.d().coefficient_list())
    if (!w.field().is_zero(c.constant_term())) return true;
  return false;
}

template <class F>
GermInvariants germ_invariants(const Germ1Form<F>& e, const GbLimits& limits = {}) {
  detail::require_planar(e, "germ_invariants");
  GermInvariants g;
  g.singular = detail::vanishes_at_origin(e);
  if (!g.singular) return g;
  g.mu = milnor(e, limits);
  g.delta = delta_local(e, limits);
  g.unfolding_length = unfolding_length(e, limits);
  g.kupka = is_kupka(e);
  return g;
}

namespace detail {

template <class F>
void check_plane(const Germ1Form<F>& w, const Matrix<F>& plane) {
  if (w.degree() != 1) throw InvalidInput("expected a 1-form");
  if (plane.rows() != w.nvars() || plane.cols() != 2)
    throw InvalidInput("plane must be given by an n x 2 parametrization matrix");
  if (plane.rank() != 2) throw InvalidInput("plane parametrization has rank below 2");
  if (!vanishes_at_origin(w)) throw InvalidInput("form is regular at the origin");
}

}  // namespace detail

// (Z.S)_0: local length of all coefficients of w restricted to the plane
// S = image of the n x 2 matrix. The coefficients transform by an invertible
// linear map under a change of coordinates adapted to S, so the restricted
// ideal equals the one in coordinates where S = V(x3, ..., xn).
template <class F>
Length intersection_multiplicity(const Germ1Form<F>& w, const Matrix<F>& plane, const GbLimits& limits = {}) {
  detail::check_plane(w, plane);
  std::vector<Polynomial<F>> gens;
  for (const auto& c : w.coefficient_list()) gens.push_back(c.linear_substitute(plane));
  Length len = local_colength_origin(Ideal<F>(w.field(), 2, std::move(gens)), limits).length;
  if (len.is_infinite()) throw GenericityError("plane meets the singular set in a curve through the origin");
  return len;
}

struct KeyLemmaReport {
  Length mu = Length::finite(0);
  Length delta = Length::finite(0);
  Length izs = Length::finite(0);
  bool pass = false;
};

// mu(w|S) >= (Z.S)_0 >= mu(w|S) - delta(w|S). The hypothesis that the
// singular set of w has pure codimension two is asserted by the caller.
template <class F>
KeyLemmaReport key_lemma_check(const Germ1Form<F>& w, const Matrix<F>& plane, const GbLimits& limits = {}) {
  detail::check_plane(w, plane);
  if (!is_integrable(w)) throw InvalidInput("key_lemma_check: form is not integrable");
  auto restricted = w.pullback_linear(plane);
  KeyLemmaReport r;
  r.mu = milnor(restricted, limits);
  if (r.mu.is_infinite()) throw GenericityError("restriction to the plane has non-isolated singularity at the origin");
  r.delta = delta_local(restricted, limits);
  r.izs = intersection_multiplicity(w, plane, limits);
  const std::size_t mu = r.mu.value(), izs = r.izs.value(), delta = r.delta.value();
  r.pass = mu >= izs && izs + delta >= mu;
  return r;
}

// Random plane through the origin with entries in [-50, 50].
template <class F>
Matrix<F> random_plane(const F& field, std::size_t n, Rng& rng) {
  return random_full_rank(field, n, 2, rng, 50);
}

// key_lemma_check on fresh random planes drawn from the "plane" substream,
// retrying when a plane is not transverse.
template <class F>
KeyLemmaReport key_lemma_random(const Germ1Form<F>& w, const Rng& rng, unsigned retries = 8,
                                const GbLimits& limits = {}) {
  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    Rng stream = rng.substream("plane", attempt);
    auto plane = random_plane(w.field(), w.nvars(), stream);
    try {
      return key_lemma_check(w, plane, limits);
    } catch (const GenericityError&) {
    }
  }
  throw GenericityError("no transverse plane found after " + std::to_string(retries) + " attempts");
}

}  // namespace folia
