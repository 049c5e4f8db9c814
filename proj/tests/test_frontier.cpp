#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/frontier.hpp"
#include "turan/solver.hpp"

using namespace turan;

TEST_CASE("frontier at the pentagon point") {
  FrontierRecord rec = frontier(2, 5, 1);
  CHECK(rec.f == 1);
  CHECK(rec.pool == 3);  // C_5, T_2(5), and the 5-edge bipartite graph
  Graph w = decode_graph6(rec.witness_g6);
  CHECK(oracle::isomorphic_bruteforce(w, oracle::cycle(5)));
}

TEST_CASE("tight budgets leave only partite graphs") {
  FrontierRecord rec = frontier(2, 5, 0);
  CHECK(rec.f == 0);
  CHECK(rec.pool == 1);
  CHECK(decode_graph6(rec.witness_g6) == turan_graph(2, 5));
  FrontierRecord r7 = frontier(2, 7, 1);
  CHECK(r7.f == 0);
}

TEST_CASE("frontier respects the deletion bound") {
  for (int n = 5; n <= 7; ++n)
    for (long long t = 0; t <= 3; ++t) {
      FrontierRecord rec = frontier(2, n, t);
      CHECK(rec.f <= t);
      CHECK(rec.f >= 0);
      Graph w = decode_graph6(rec.witness_g6);
      CHECK(w.n() == n);
      if (rec.f > 0) {
        CHECK(w.edge_count() >= turan_number(2, n) - t);
        CHECK(dr_exact(w, 2).value == rec.f);
      }
    }
  CHECK_THROWS_AS(frontier(2, 5, -1), std::invalid_argument);
}

TEST_CASE("optimizer finds the pentagon") {
  PtgOptimum opt = optimize_ptg(2, 5, 5);
  CHECK(opt.dr == 1);
  CHECK(opt.edges == 5);
  CHECK(opt.spec == PentagonalSpec{2, 1, 1, {1, 1}});
  CHECK(opt.spec.is_pent_turan());
}

TEST_CASE("optimizer falls back to the turan graph at full budget") {
  PtgOptimum opt = optimize_ptg(2, 5, 6);
  CHECK(opt.dr == 0);
  CHECK(opt.edges == 6);
  // same graph as turan_ptg_spec(2, 5), slots in the sweep's own order
  CHECK(opt.spec == PentagonalSpec{2, 0, 0, {2, 3}});
  CHECK(ptg_edge_count(opt.spec) == ptg_edge_count(turan_ptg_spec(2, 5)));
  CHECK_THROWS_AS(optimize_ptg(2, 5, 7), std::invalid_argument);
}

TEST_CASE("optimizer matches brute force over all balanced specs") {
  for (int r : {2, 3}) {
    for (long long n = r == 2 ? 5 : 7; n <= 12; ++n) {
      for (long long m = 0; m <= turan_number(r, n); ++m) {
        long long best_dr = -1, best_e = -1;
        for (const PentagonalSpec& spec : all_pent_r_partite_specs(r, n)) {
          if (spec.total() != n || !spec.is_pent_turan()) continue;
          long long e = ptg_edge_count(spec);
          if (e < m) continue;
          long long dr = spec.x * spec.y;
          if (dr > best_dr || (dr == best_dr && e > best_e)) {
            best_dr = dr;
            best_e = e;
          }
        }
        REQUIRE(best_dr >= 0);  // the turan spec always qualifies
        PtgOptimum opt = optimize_ptg(r, n, m);
        CHECK(opt.dr == best_dr);
        CHECK(opt.edges == best_e);
        CHECK(opt.spec.is_pent_turan());
        CHECK(ptg_edge_count(opt.spec) == opt.edges);
        CHECK(opt.spec.x * opt.spec.y == opt.dr);
        CHECK(opt.spec.total() == n);
      }
    }
  }
}

TEST_CASE("optimizer is worker-count invariant") {
  long long n = 2000;
  long long budget = turan_number(2, n) - 40000;
  PtgOptimum seq = optimize_ptg(2, n, budget, 1);
  PtgOptimum par = optimize_ptg(2, n, budget, 4);
  CHECK(seq.spec == par.spec);
  CHECK(seq.dr == par.dr);
  CHECK(seq.edges == par.edges);
  CHECK(seq.dr > 0);
}

TEST_CASE("frozen optimizer value at n = 32") {
  PtgOptimum opt = optimize_ptg(2, 32, turan_number(2, 32) - 32);
  CHECK(opt.edges >= 224);
  CHECK(opt.dr >= 4);
}

TEST_CASE("asymptotic closed forms") {
  CHECK(asymptotic_dr(2, 1e5, 1e-3) == doctest::Approx(2.434e5).epsilon(0.01));
  CHECK(asymptotic_dr(3, 1e6, 1e-4) == doctest::Approx(1.1547e6).epsilon(0.01));
  CHECK(asymptotic_x(2, 1e5, 1e-3) == doctest::Approx(4.0 / 3 * 100).epsilon(1e-9));
  CHECK(asymptotic_y(1e5, 3e-4) == doctest::Approx(1e5 * std::sqrt(1e-4)).epsilon(1e-9));
}
