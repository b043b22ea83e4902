#include "folia/trials.hpp"

namespace folia {

const char* to_string(GermFamily f) {
  switch (f) {
    case GermFamily::Closed: return "closed";
    case GermFamily::UnitTimesClosed: return "unit_times_closed";
    case GermFamily::Rational: return "rational";
    case GermFamily::PlanarPullback: return "planar_pullback";
  }
  return "unknown";
}

namespace {

// Runs body(i) for i in [0, count). Each trial draws from its own substream,
// so the schedule does not change any result. Exceptions are caught inside
// the body; none may escape an OpenMP region.
template <class Out, class Body>
std::vector<Out> run_batch(std::size_t count, Schedule schedule, Body&& body) {
  std::vector<Out> out(count);
  if (schedule == Schedule::Serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = body(i);
    return out;
  }
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) out[std::size_t(i)] = body(std::size_t(i));
  return out;
}

template <class Out>
void record_error(Out& o, const std::exception& e) {
  o.error = e.what();
  if (o.error.empty()) o.error = "error";
}

}  // namespace

bool ProjectiveOutcome::operator==(const ProjectiveOutcome& o) const {
  return spec.kind == o.spec.kind && spec.n == o.spec.n && spec.d == o.spec.d && error == o.error &&
         deg_z2 == o.deg_z2 && delta == o.delta && c2 == o.c2 && mu_plane == o.mu_plane &&
         bounds_pass == o.bounds_pass && failures == o.failures && witness_needed == o.witness_needed &&
         witness_ok == o.witness_ok;
}

std::vector<ProjectiveSpec> projective_mix(std::size_t count) {
  // Every (kind, n, d) combination that the generators support with
  // n in {3, 4}, d <= 3.
  std::vector<ProjectiveSpec> cells;
  for (std::size_t n : {3u, 4u})
    for (unsigned d = 0; d <= 3; ++d) {
      if (d == 0) cells.push_back({GeneratorKind::Pencil, n, d});
      cells.push_back({GeneratorKind::Rational, n, d});
      if (d >= 1) cells.push_back({GeneratorKind::Logarithmic, n, d});
      cells.push_back({GeneratorKind::LinearPullback, n, d});
    }
  std::vector<ProjectiveSpec> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(cells[i % cells.size()]);
  return out;
}

std::vector<ProjectiveOutcome> run_projective_trials(const std::vector<ProjectiveSpec>& specs,
                                                     const BatchOptions& opt) {
  const Rng root(opt.seed);
  return run_batch<ProjectiveOutcome>(specs.size(), opt.schedule, [&](std::size_t i) {
    ProjectiveOutcome o;
    o.spec = specs[i];
    PrimeField fp;
    Rng rng = root.substream("projective-trial", i);
    try {
      auto fol = generate_random(fp, o.spec.kind, o.spec.n, o.spec.d, rng);
      auto rep = verify_bounds(fol, rng, opt.planes);
      o.deg_z2 = rep.chern.deg_z2;
      o.delta = rep.chern.delta_global;
      o.c2 = rep.chern.c2_tf;
      o.mu_plane = std::int64_t(rep.mu_plane);
      o.bounds_pass = rep.pass();
      o.failures = rep.failures();
      o.witness_needed = o.deg_z2 == std::int64_t(o.spec.d) + 1;
      if (o.witness_needed) {
        auto w = first_integral_witness(fol, rng, opt.planes);
        o.witness_ok = w.witness && w.witness->wedge_certified;
      }
    } catch (const std::exception& e) {
      record_error(o, e);
    }
    return o;
  });
}

bool GermOutcome::ok() const {
  if (!error.empty()) return false;
  if (!isolated) return true;
  return delta <= mu && unfolding == delta && kupka == (delta == 0u);
}

std::vector<GermOutcome> run_germ_trials(std::size_t count, unsigned max_degree, const BatchOptions& opt) {
  const Rng root(opt.seed);
  return run_batch<GermOutcome>(count, opt.schedule, [&](std::size_t i) {
    GermOutcome o;
    PrimeField fp;
    Rng rng = root.substream("germ-trial", i);
    try {
      auto e = random_planar_germ(fp, rng, max_degree);
      auto g = germ_invariants(e, opt.planes.limits);
      o.isolated = g.singular && g.mu.is_finite();
      o.mu = g.mu;
      o.delta = g.delta;
      o.unfolding = g.unfolding_length;
      o.kupka = g.kupka;
    } catch (const std::exception& e) {
      record_error(o, e);
    }
    return o;
  });
}

std::vector<KeyLemmaOutcome> run_key_lemma_trials(std::size_t count, const BatchOptions& opt) {
  const Rng root(opt.seed);
  return run_batch<KeyLemmaOutcome>(count, opt.schedule, [&](std::size_t i) {
    KeyLemmaOutcome o;
    o.family = GermFamily(i % 4);
    o.n = (i / 4) % 2 ? 4 : 3;
    PrimeField fp;
    Rng rng = root.substream("key-lemma-trial", i);
    try {
      // Redraw until the germ is singular at 0; a few draws always suffice.
      Germ1Form<PrimeField> w(fp, o.n, 1);
      for (int k = 0;; ++k) {
        w = random_integrable_germ(fp, o.family, o.n, rng);
        if (!w.is_zero() && detail::vanishes_at_origin(w)) break;
        if (k == 16) throw GenericityError("no singular germ drawn");
      }
      auto rep = key_lemma_random(w, rng, opt.planes.retries);
      o.generic = true;
      o.mu = rep.mu;
      o.delta = rep.delta;
      o.izs = rep.izs;
      o.pass = rep.pass;
    } catch (const GenericityError&) {
      o.generic = false;
    } catch (const std::exception& e) {
      record_error(o, e);
    }
    return o;
  });
}

std::vector<ChartOutcome> run_chart_trials(std::size_t count, const BatchOptions& opt) {
  const Rng root(opt.seed);
  return run_batch<ChartOutcome>(count, opt.schedule, [&](std::size_t i) {
    ChartOutcome o;
    Rng rng = root.substream("chart-trial", i);
    o.nvars = rng.chance(50) ? 4 : 5;
    o.p = rng.chance(50) ? 1 : 2;
    o.twist = int(rng.uniform(o.p + 1, 6));
    o.chart = std::size_t(rng.uniform(0, std::int64_t(o.nvars) - 1));
    PrimeField fp;
    try {
      auto w = random_descent_form(fp, o.nvars, o.p, o.twist, rng);
      o.pass = euler_chart_check(w, o.twist, o.chart, opt.planes.limits).pass();
    } catch (const std::exception& e) {
      record_error(o, e);
    }
    return o;
  });
}

}  // namespace folia
