#include <gtest/gtest.h>
#include <omp.h>

#include "folia/trials.hpp"

using namespace folia;

namespace {

BatchOptions opts(std::uint64_t seed, Schedule s) {
  BatchOptions o;
  o.seed = seed;
  o.schedule = s;
  return o;
}

// Forces several threads even on a single core so the dynamic schedule
// actually interleaves trials.
struct Threads {
  int saved;
  explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
};

}  // namespace

TEST(Generators, DescentFormsDescend) {
  PrimeField fp;
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    unsigned p = 1 + t % 2;
    int k = int(p) + 1 + t % 4;
    auto w = random_descent_form(fp, 4 + t % 2, p, k, rng);
    EXPECT_TRUE(descent_check(w, k).pass());
  }
  EXPECT_THROW(random_descent_form(fp, 4, 2, 2, rng), InvalidInput);
}

TEST(Generators, IntegrableGermsAreIntegrable) {
  PrimeField fp;
  Rng rng(6);
  for (int t = 0; t < 24; ++t) {
    auto w = random_integrable_germ(fp, GermFamily(t % 4), 3 + t % 2, rng);
    EXPECT_TRUE(is_integrable(w)) << to_string(GermFamily(t % 4));
  }
}

TEST(ProjectiveMix, CoversEveryCell) {
  auto mix = projective_mix(18);
  EXPECT_EQ(mix.size(), 18u);
  int pencils = 0;
  for (const auto& s : mix) {
    EXPECT_TRUE(s.n == 3 || s.n == 4);
    EXPECT_LE(s.d, 3u);
    if (s.kind == GeneratorKind::Pencil) {
      EXPECT_EQ(s.d, 0u);
      ++pencils;
    }
  }
  EXPECT_EQ(pencils, 2);
}

TEST(Trials, ParallelMatchesSerialProjective) {
  Threads th(4);
  auto specs = projective_mix(12);
  auto a = run_projective_trials(specs, opts(11, Schedule::Serial));
  auto b = run_projective_trials(specs, opts(11, Schedule::Parallel));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(a[i] == b[i]) << "trial " << i;
    EXPECT_TRUE(a[i].ok()) << "trial " << i << " " << a[i].error;
  }
}

TEST(Trials, ParallelMatchesSerialGerms) {
  Threads th(3);
  auto a = run_germ_trials(40, 4, opts(12, Schedule::Serial));
  auto b = run_germ_trials(40, 4, opts(12, Schedule::Parallel));
  EXPECT_EQ(a, b);
  for (const auto& o : a) EXPECT_TRUE(o.ok()) << o.error;
}

TEST(Trials, ParallelMatchesSerialKeyLemma) {
  Threads th(4);
  auto a = run_key_lemma_trials(24, opts(13, Schedule::Serial));
  auto b = run_key_lemma_trials(24, opts(13, Schedule::Parallel));
  EXPECT_EQ(a, b);
  for (const auto& o : a) EXPECT_TRUE(o.error.empty() && (!o.generic || o.pass)) << o.error;
}

TEST(Trials, ParallelMatchesSerialCharts) {
  Threads th(4);
  auto a = run_chart_trials(24, opts(14, Schedule::Serial));
  auto b = run_chart_trials(24, opts(14, Schedule::Parallel));
  EXPECT_EQ(a, b);
  for (const auto& o : a) EXPECT_TRUE(o.error.empty() && o.pass) << o.error;
}

TEST(Trials, SeedChangesDraws) {
  auto a = run_chart_trials(8, opts(1, Schedule::Serial));
  auto b = run_chart_trials(8, opts(2, Schedule::Serial));
  EXPECT_NE(a, b);
}
