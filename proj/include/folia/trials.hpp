#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "folia/field.hpp"
#include "folia/forms.hpp"
#include "folia/germ.hpp"
#include "folia/projective.hpp"
#include "folia/random.hpp"

namespace folia {

// Seeded random families shared by the trial batches and the tests.

// Planar germ a dx + b dy with a, b having terms of degree 1..max_degree.
template <class F>
Germ1Form<F> random_planar_germ(const F& field, Rng& rng, unsigned max_degree = 4, unsigned density = 40) {
  std::vector<Polynomial<F>> c{random_polynomial(field, 2, 1, max_degree, rng, density),
                               random_polynomial(field, 2, 1, max_degree, rng, density)};
  return Germ1Form<F>::one_form(c);
}

enum class GermFamily { Closed, UnitTimesClosed, Rational, PlanarPullback };

const char* to_string(GermFamily f);

// Integrable germ at the origin of n-space from one of the families:
// dF, u dF with u(0) != 0, a F dG - b G dF, or a pulled-back planar germ.
template <class F>
Germ1Form<F> random_integrable_germ(const F& field, GermFamily fam, std::size_t n, Rng& rng) {
  TermOrder ord = TermOrder::grevlex(n);
  switch (fam) {
    case GermFamily::Closed:
      return Germ1Form<F>::differential(random_polynomial(field, n, 2, 3, rng, 30));
    case GermFamily::UnitTimesClosed: {
      auto u = random_polynomial(field, n, 1, 1, rng, 50) + Polynomial<F>::constant(field, ord, field.one());
      return Germ1Form<F>::differential(random_polynomial(field, n, 2, 3, rng, 30)).scale(u);
    }
    case GermFamily::Rational: {
      auto f = random_polynomial(field, n, 1, 2, rng, 50);
      auto g = random_polynomial(field, n, 1, 2, rng, 50);
      auto a = field.from_int(rng.uniform(1, 3)), b = field.from_int(rng.uniform(1, 3));
      return Germ1Form<F>::differential(g).scale(f).scale(a) - Germ1Form<F>::differential(f).scale(g).scale(b);
    }
    case GermFamily::PlanarPullback:
      break;
  }
  auto eta = random_planar_germ(field, rng, 3);
  return eta.pullback_linear(random_full_rank(field, 2, n, rng, 9));
}

// Homogeneous p-form of twist k with rad ⌐ w = 0, as rad ⌐ eta.
template <class F>
PolyForm<F> random_descent_form(const F& field, std::size_t n, unsigned p, int twist, Rng& rng) {
  if (twist < int(p) + 1) throw InvalidInput("descent form needs twist > p");
  auto rad = PolyVectorField<F>::radial(field, n);
  for (;;) {
    PolyForm<F> eta(field, n, p + 1);
    for (WedgeMask m = 0; m < (WedgeMask(1) << n); ++m)
      if (std::popcount(m) == int(p + 1)) eta.set(m, random_homogeneous(field, n, unsigned(twist) - p - 1, rng, 50));
    auto w = eta.contract(rad);
    if (!w.is_zero()) return w;
  }
}

enum class Schedule { Serial, Parallel };

struct BatchOptions {
  std::uint64_t seed = 1;
  Schedule schedule = Schedule::Parallel;
  PlaneOptions planes{};
};

// ---- Projective bound trials ----

struct ProjectiveSpec {
  GeneratorKind kind;
  std::size_t n;
  unsigned d;
};

struct ProjectiveOutcome {
  ProjectiveSpec spec{};
  std::string error;  // nonempty when the trial raised
  std::int64_t deg_z2 = 0;
  std::int64_t delta = 0;
  std::int64_t c2 = 0;
  std::int64_t mu_plane = 0;
  bool bounds_pass = false;
  std::vector<std::string> failures;
  bool witness_needed = false;  // deg Z2 = d+1
  bool witness_ok = false;      // witness found and certified when needed
  bool ok() const { return error.empty() && bounds_pass && (!witness_needed || witness_ok); }
  bool operator==(const ProjectiveOutcome& o) const;
};

// The default mix for n in {3, 4} and d <= 3, cycling generator kinds.
std::vector<ProjectiveSpec> projective_mix(std::size_t count);

std::vector<ProjectiveOutcome> run_projective_trials(const std::vector<ProjectiveSpec>& specs,
                                                     const BatchOptions& opt);

// ---- Planar germ trials ----

struct GermOutcome {
  std::string error;
  bool isolated = false;  // singular at 0 with finite Milnor number
  Length mu = Length::finite(0);
  Length delta = Length::finite(0);
  Length unfolding = Length::finite(0);
  bool kupka = false;
  bool ok() const;  // identities hold (vacuous when not isolated)
  bool operator==(const GermOutcome& o) const = default;
};

std::vector<GermOutcome> run_germ_trials(std::size_t count, unsigned max_degree, const BatchOptions& opt);

// ---- Key lemma trials ----

struct KeyLemmaOutcome {
  GermFamily family{};
  std::size_t n = 0;
  std::string error;
  bool generic = false;  // a transverse plane was found
  Length mu = Length::finite(0);
  Length delta = Length::finite(0);
  Length izs = Length::finite(0);
  bool pass = false;
  bool operator==(const KeyLemmaOutcome& o) const = default;
};

std::vector<KeyLemmaOutcome> run_key_lemma_trials(std::size_t count, const BatchOptions& opt);

// ---- Chart lemma trials ----

struct ChartOutcome {
  std::size_t nvars = 0;
  unsigned p = 0;
  int twist = 0;
  std::size_t chart = 0;
  std::string error;
  bool pass = false;
  bool operator==(const ChartOutcome& o) const = default;
};

std::vector<ChartOutcome> run_chart_trials(std::size_t count, const BatchOptions& opt);

}  // namespace folia
