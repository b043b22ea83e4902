// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "folia/cli.hpp"
#include "folia/germ.hpp"
#include "folia/projective.hpp"
#include "folia/trials.hpp"
#include "oracle.hpp"

using namespace folia;
using Q = RationalField;
using Fp = PrimeField;

namespace {

int failures = 0;

void line(const char* id, bool pass, const std::string& detail) {
  std::printf("%s  %-22s %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <class... Ts>
std::string cat(const Ts&... xs) {
  std::ostringstream s;
  (s << ... << xs);
  return s.str();
}

const std::vector<std::string> kP3 = default_names(4, 0);

Polynomial<Q> poly(const std::string& s) { return parse_poly(s, kP3, Q{}); }

PolyForm<Q> coeff_form(std::initializer_list<const char*> cs) {
  std::vector<Polynomial<Q>> v;
  for (const char* c : cs) v.push_back(poly(c));
  return PolyForm<Q>::one_form(v);
}

struct CorpusEntry {
  std::string name;
  ProjFoliation<Q> fol;
  std::optional<std::int64_t> want_z;
  std::optional<std::int64_t> want_delta;
};

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> c;
  c.push_back({"pencil", validate(coeff_form({"-x1", "x0", "0", "0"}), 3), 1, 0});
  c.push_back({"rational_1_2", generate_rational(poly("x0"), poly("x1^2 + x2*x3")), 2, 1});
  c.push_back({"rational_1_3", generate_rational(poly("x0"), poly("x1^3 + x2^3 + x3^3 + x0*x1*x2")), 3, 4});
  c.push_back({"diagonal_pullback", validate(coeff_form({"x1*x2", "2*x0*x2", "-3*x0*x1", "0"}), 3), 3, 0});
  Q q;
  c.push_back({"logarithmic_d1",
               generate_logarithmic(std::vector{poly("x0"), poly("x1"), poly("x2")},
                                    std::vector{q.from_int(1), q.from_int(1), q.from_int(-2)}),
               std::nullopt, std::nullopt});
  c.push_back({"logarithmic_d2",
               generate_logarithmic(std::vector{poly("x0"), poly("x1"), poly("x2^2 + x3^2 + x0*x1")},
                                    std::vector{q.from_int(1), q.from_int(1), q.from_int(-1)}),
               std::nullopt, std::nullopt});
  return c;
}

// Degree of a zero-dimensional scheme in P^2 read off graded dimensions in
// two consecutive high degrees; nullopt when they disagree.
template <class F>
std::optional<std::size_t> oracle_degree(const std::vector<Polynomial<F>>& gens, unsigned deg) {
  Ideal<F> i(gens.front().field(), 3, gens);
  auto a = oracle::graded_dimension_oracle(i, deg), b = oracle::graded_dimension_oracle(i, deg + 1);
  if (a != b) return std::nullopt;
  return a;
}

template <class F>
std::vector<Polynomial<F>> restricted(const ProjFoliation<F>& fol, const Matrix<F>& plane) {
  std::vector<Polynomial<F>> out;
  for (const auto& c : fol.w.coefficient_list()) out.push_back(c.linear_substitute(plane));
  return out;
}

template <class F>
std::vector<Polynomial<F>> delta_gens(const ProjFoliation<F>& fol, const Matrix<F>& plane) {
  auto wl = fol.w.pullback_linear(plane);
  auto out = wl.coefficient_list();
  for (const auto& c : wl.d().coefficient_list()) out.push_back(c);
  return out;
}

// Random p-form in n variables with coefficients of degree <= 3.
PolyForm<Fp> random_form(const Fp& fp, std::size_t n, unsigned p, Rng& rng) {
  PolyForm<Fp> w(fp, n, p);
  for (WedgeMask m = 0; m < (WedgeMask(1) << n); ++m)
    if (std::popcount(m) == int(p)) w.set(m, random_polynomial(fp, n, 0, 3, rng, 30));
  return w;
}

PolyForm<Fp> random_homogeneous_form(const Fp& fp, std::size_t n, unsigned p, unsigned deg, Rng& rng) {
  PolyForm<Fp> w(fp, n, p);
  for (WedgeMask m = 0; m < (WedgeMask(1) << n); ++m)
    if (std::popcount(m) == int(p)) w.set(m, random_homogeneous(fp, n, deg, rng, 50));
  return w;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  Fp fp;
  const Rng corpus_rng(2026);

  // ---- Corpus over Q ----
  struct CorpusResult {
    std::string name;
    unsigned d;
    BoundReport<Q> rep;
    bool expected_ok;
  };
  std::vector<CorpusResult> cres;
  std::string corpus_err;
  for (auto& e : corpus()) {
    try {
      auto rep = verify_bounds(e.fol, corpus_rng);
      bool ok = (!e.want_z || rep.chern.deg_z2 == *e.want_z) && (!e.want_delta || rep.chern.delta_global == *e.want_delta);
      cres.push_back({e.name, e.fol.d, std::move(rep), ok});
    } catch (const std::exception& ex) {
      corpus_err += e.name + ": " + ex.what() + "; ";
    }
  }

  // The shipped documents go through the CLI and must agree.
  int cli_ok = 0;
  for (const auto& r : cres) {
    cli::JobSpec job;
    job.mode = "bounds";
    job.input_path = std::string(FOLIA_CORPUS_DIR) + "/" + r.name + ".json";
    job.timing = false;
    auto out = cli::run(job);
    auto doc = nlohmann::json::parse(out.output);
    if (out.exit_code == 0 && doc["result"]["deg_z2"] == r.rep.chern.deg_z2 &&
        doc["result"]["delta"] == r.rep.chern.delta_global)
      ++cli_ok;
  }

  // ---- Random foliations over F_p ----
  BatchOptions popt;
  popt.seed = 101;
  const auto specs = projective_mix(60);
  const auto proj = run_projective_trials(specs, popt);

  // 1. Degree bounds.
  {
    int corpus_pass = 0, rand_pass = 0;
    std::string first_bad;
    for (const auto& r : cres)
      if (r.rep.pass() && r.expected_ok) ++corpus_pass;
    for (std::size_t i = 0; i < proj.size(); ++i) {
      if (proj[i].error.empty() && proj[i].bounds_pass) ++rand_pass;
      else if (first_bad.empty())
        first_bad = cat(" first failure: trial ", i, " ", to_string(specs[i].kind), " n=", specs[i].n,
                        " d=", specs[i].d, " ", proj[i].error);
    }
    const bool pass = corpus_err.empty() && corpus_pass == 6 && cli_ok == 6 && rand_pass == int(proj.size()) &&
                      proj.size() >= 50;
    line("degree-bounds", pass,
         cat("corpus ", corpus_pass, "/6 (CLI documents ", cli_ok, "/6), random ", rand_pass, "/", proj.size(),
             " over F_p, n in {3,4}, d <= 3", corpus_err.empty() ? "" : " errors: " + corpus_err, first_bad));
  }

  // 2. Equality cases certified over Q by the graded-dimension oracle.
  {
    const char* gs[] = {"x1", "x1^2 + x2*x3", "x1^3 + x2^3 + x3^3 + x0*x1*x2"};
    bool pass = true;
    std::string detail;
    for (unsigned d = 0; d <= 2; ++d) {
      auto fol = generate_rational(poly("x0"), poly(gs[d]));
      auto z = deg_z2(fol, corpus_rng);
      auto dl = delta_global(fol, corpus_rng);
      auto oz = oracle_degree(restricted(fol, z.trials.back().plane), 12);
      auto od = oracle_degree(delta_gens(fol, dl.delta.trials.back().plane), 12);
      const bool ok = fol.d == d && z.value == d + 1 && dl.delta.value == d * d && oz == z.value && od == dl.delta.value;
      pass = pass && ok;
      detail += cat("(1,", d + 1, "): deg Z2=", z.value, " delta=", dl.delta.value, " oracle ",
                    oz ? std::to_string(*oz) : "?", "/", od ? std::to_string(*od) : "?", "; ");
    }
    auto diag = validate(coeff_form({"x1*x2", "2*x0*x2", "-3*x0*x1", "0"}), 3);
    auto z = deg_z2(diag, corpus_rng);
    auto oz = oracle_degree(restricted(diag, z.trials.back().plane), 12);
    const bool ok = z.value == 3 && oz == 3u;
    pass = pass && ok;
    detail += cat("diagonal: deg Z2=", z.value, " oracle ", oz ? std::to_string(*oz) : "?");
    line("equality-cases", pass, detail);
  }

  // 3. Unfolding length equals delta on planar germs.
  {
    BatchOptions g;
    g.seed = 303;
    auto out = run_germ_trials(360, 4, g);
    int isolated = 0, ok = 0, errors = 0;
    for (const auto& o : out) {
      if (!o.error.empty()) ++errors;
      if (!o.isolated) continue;
      ++isolated;
      if (o.unfolding == o.delta && o.ok()) ++ok;
    }
    line("unfolding-length", errors == 0 && isolated >= 200 && ok == isolated,
         cat(ok, "/", isolated, " isolated germs with unfolding = delta (", out.size(), " drawn, degree <= 4, ",
             errors, " errors)"));
  }

  // 4. Key lemma sandwich.
  {
    BatchOptions k;
    k.seed = 404;
    auto out = run_key_lemma_trials(160, k);
    int generic = 0, ok = 0, errors = 0, n3 = 0, n4 = 0;
    for (const auto& o : out) {
      if (!o.error.empty()) ++errors;
      if (!o.generic) continue;
      ++generic;
      (o.n == 3 ? n3 : n4)++;
      if (o.pass) ++ok;
    }
    Matrix<Q> s1(Q{}, 3, 2);
    s1(0, 0) = 1;
    s1(1, 1) = 1;
    s1(2, 0) = 1;
    s1(2, 1) = 1;
    auto worked = key_lemma_check(parse_one_form("x2*x3*dx1 + x1*x3*dx2 + x1*x2*dx3", germ_names(3), Q{}), s1);
    const bool wok = worked.mu == 4u && worked.izs == 3u && worked.delta == 4u && worked.pass;
    line("key-lemma-sandwich", errors == 0 && generic >= 100 && ok == generic && n3 > 0 && n4 > 0 && wok,
         cat(ok, "/", generic, " trials (", n3, " in 3 vars, ", n4, " in 4 vars, ", errors,
             " errors); d(x1x2x3) on x3=x1+x2: (mu, izs, delta) = (", worked.mu.to_string(), ", ",
             worked.izs.to_string(), ", ", worked.delta.to_string(), ")"));
  }

  // 5. delta <= d^2.
  {
    int ok = 0, total = 0;
    for (const auto& r : cres) {
      ++total;
      if (r.rep.delta_bound) ++ok;
    }
    for (const auto& o : proj) {
      ++total;
      if (o.error.empty() && std::find(o.failures.begin(), o.failures.end(), "delta_bound") == o.failures.end()) ++ok;
    }
    line("delta-bound", ok == total && total >= 56, cat(ok, "/", total, " instances with delta <= d^2"));
  }

  // 6. Chart lemma.
  {
    BatchOptions c;
    c.seed = 606;
    auto out = run_chart_trials(120, c);
    int ok = 0, p1 = 0, p2 = 0, v4 = 0, v5 = 0, maxtw = 0;
    for (const auto& o : out) {
      if (o.error.empty() && o.pass) ++ok;
      (o.p == 1 ? p1 : p2)++;
      (o.nvars == 4 ? v4 : v5)++;
      maxtw = std::max(maxtw, o.twist);
    }
    line("chart-lemma", ok == int(out.size()) && out.size() >= 100 && maxtw <= 6 && p1 && p2 && v4 && v5,
         cat(ok, "/", out.size(), " descent forms (p=1: ", p1, ", p=2: ", p2, "; 4 vars: ", v4, ", 5 vars: ", v5,
             "; twist <= ", maxtw, ")"));
  }

  // 7. Chern numbers: split-bundle check and floors.
  {
    std::int64_t pencil_c2 = -1;
    int ok = 0, total = 0;
    for (const auto& r : cres) {
      if (r.name == "pencil") pencil_c2 = r.rep.chern.c2_tf;
      ++total;
      if (r.rep.eq5 && r.rep.eq6) ++ok;
    }
    for (const auto& o : proj) {
      ++total;
      auto has = [&](const char* f) { return std::find(o.failures.begin(), o.failures.end(), f) != o.failures.end(); };
      if (o.error.empty() && !has("eq5") && !has("eq6")) ++ok;
    }
    line("chern-consistency", pencil_c2 == 1 && ok == total,
         cat("pencil c2 = ", pencil_c2, " (T = O(1)+O(1) gives 1); floors hold on ", ok, "/", total));
  }

  // 8. Witness on every extremal instance.
  {
    int needed = 0, ok = 0;
    for (auto& e : corpus()) {
      auto z = deg_z2(e.fol, corpus_rng);
      if (z.value != e.fol.d + 1) continue;
      ++needed;
      auto w = first_integral_witness(e.fol, corpus_rng);
      if (w.witness && w.witness->wedge_certified) ++ok;
    }
    int rneeded = 0, rok = 0;
    for (const auto& o : proj) {
      if (!o.witness_needed) continue;
      ++rneeded;
      if (o.witness_ok) ++rok;
    }
    line("witness", needed > 0 && rneeded > 0 && ok == needed && rok == rneeded,
         cat("corpus ", ok, "/", needed, ", random ", rok, "/", rneeded, " extremal instances with d(w|L) ^ dE = 0"));
  }

  // 9. Kernel properties.
  {
    Rng rng(909);
    int dd = 0, leib = 0, cartan = 0, order = 0;
    const int need = 100;
    for (int t = 0; t < need; ++t) {
      std::size_t n = 3 + t % 3;
      auto w = random_form(fp, n, unsigned(t % 3), rng);
      if (w.d().d().is_zero()) ++dd;
    }
    for (int t = 0; t < need; ++t) {
      std::size_t n = 4 + t % 2;
      unsigned p = 1 + t % 2, q = 1;
      auto a = random_form(fp, n, p, rng), b = random_form(fp, n, q, rng);
      auto lhs = a.wedge(b).d();
      auto rhs = a.d().wedge(b);
      auto second = a.wedge(b.d());
      rhs = p % 2 ? rhs - second : rhs + second;
      if (lhs == rhs) ++leib;
    }
    for (int t = 0; t < need; ++t) {
      std::size_t n = 3 + t % 3;
      unsigned p = 1 + t % 2, deg = 1 + t % 3;
      auto w = random_homogeneous_form(fp, n, p, deg, rng);
      auto rad = PolyVectorField<Fp>::radial(fp, n);
      auto lie = w.d().contract(rad) + w.contract(rad).d();
      if (lie == w.scale(fp.from_int(deg + p))) ++cartan;
    }
    int drawn = 0;
    while (order < need && drawn < 600) {
      ++drawn;
      std::size_t n = 2 + drawn % 2;
      std::vector<Polynomial<Fp>> gens;
      for (std::size_t k = 0; k < n; ++k) gens.push_back(random_polynomial(fp, n, 0, 2, rng, 50));
      Ideal<Fp> i(fp, n, gens);
      auto a = colength(i, TermOrder::grevlex(n));
      if (a.is_infinite()) continue;
      if (a == colength(i, TermOrder::lex(n)) && a == colength(i, TermOrder::elimination(n, 1))) ++order;
      else {
        order = -1000;
        break;
      }
    }
    line("kernel-properties", dd == need && leib == need && cartan == need && order >= need,
         cat("d^2 = 0 ", dd, "/", need, ", Leibniz ", leib, "/", need, ", L_rad w = k w ", cartan, "/", need,
             ", colength order-independent ", std::max(order, 0), "/", need));
  }

  // Numeric evaluator on P^n against the closed-form floor.
  {
    int ok = 0, total = 0;
    for (std::int64_t n = 3; n <= 5; ++n)
      for (std::int64_t d = 0; d <= 4; ++d) {
        ++total;
        const std::int64_t floor = c2_floor(n, d);
        auto rep = theorem_a_report(projective_space_numbers(n, d, floor, 0));
        if (rep.p == floor && rep.lower && rep.upper && 2 * floor == (n - 2) * (n - 1 - 2 * d)) ++ok;
      }
    line("evaluator-floor", ok == total, cat(ok, "/", total, " cases n in {3,4,5}, d <= 4 reproduce (n-2)(n-1-2d)/2"));
  }

  const auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  std::printf("%s  %d failing, %.1f s\n", failures ? "FAILED" : "ALL PASSED", failures, secs.count() / 1000.0);
  return failures ? 1 : 0;
}
