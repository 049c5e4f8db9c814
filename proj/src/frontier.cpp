#include "turan/frontier.hpp"

#include <cmath>
#include <stdexcept>

#include "turan/canonical.hpp"
#include "turan/enumeration.hpp"
#include "turan/parallel.hpp"
#include "turan/solver.hpp"

namespace turan {

FrontierRecord frontier(int r, int n, long long t) {
  if (r < 2 || n < 0 || t < 0) throw std::invalid_argument("frontier: bad arguments");
  FrontierRecord rec;
  rec.r = r;
  rec.n = n;
  rec.t = t;
  EnumSpec es;
  es.n = n;
  es.forbidden_clique = r + 1;
  es.min_edges = std::max<long long>(0, turan_number(r, n) - t);
  enumerate_clique_free(es, [&](const Graph& g) {
    rec.pool++;
    long long d = dr_exact(g, r).value;
    if (d > rec.f) {
      rec.f = d;
      rec.witness_g6 = canonical_form(g).certificate;
    }
  });
  if (rec.f == 0) rec.witness_g6 = canonical_form(turan_graph(r, n)).certificate;
  return rec;
}

namespace {

struct SweepBest {
  bool any = false;
  long long dr = -1, edges = -1;
  long long x = 0, y = 0;
  int k12 = 0;

  // higher dr, then more edges, then smaller (x, y), then smaller k12
  bool beats(const SweepBest& o) const {
    if (any != o.any) return any;
    if (dr != o.dr) return dr > o.dr;
    if (edges != o.edges) return edges > o.edges;
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return k12 < o.k12;
  }
};

long long isqrt_floor_ll(long long v) {
  auto k = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (k > 0 && k * k > v) k--;
  while ((k + 1) * (k + 1) <= v) k++;
  return k;
}

// z-values for the pentagon slots under assignment k12 (how many of the
// two pentagon columns take the larger size), normalized to z1 <= z2.
void slot_z(long long q, long long x, long long y, int k12, long long& z1, long long& z2) {
  z1 = q + (k12 == 2 ? 1 : 0) - x - y;
  z2 = q + (k12 >= 1 ? 1 : 0) - x - y;
}

}  // namespace

PtgOptimum optimize_ptg(int r, long long n, long long min_edges, int workers) {
  if (r < 2 || n < 0 || min_edges < 0)
    throw std::invalid_argument("optimize_ptg: bad arguments");
  long long tn = turan_number(r, n);
  if (min_edges > tn) throw std::invalid_argument("optimize_ptg: budget above t_r(n)");
  // any pent spec satisfies e <= t_r(n) - y^2, so y is bounded by the slack
  long long ymax = isqrt_floor_ll(tn - min_edges);

  auto consider = [&](SweepBest& acc, long long x) {
    long long big = n + x;
    long long q = big / r, rho = big % r;
    for (long long y = x; y <= ymax; y++) {
      for (int k12 = 0; k12 <= 2; k12++) {
        if (k12 > rho) break;
        long long tail_big = rho - k12;  // q+1 slots among z_3..z_r
        if (tail_big > r - 2) continue;
        long long z1, z2;
        slot_z(q, x, y, k12, z1, z2);
        if (z1 < y) continue;
        if (r > 2) {
          long long tail_min = (tail_big == r - 2) ? q + 1 : q;
          if (tail_min < y) continue;
        }
        long long e = choose2(n) - choose2(x) - 2 * choose2(y) - choose2(z1) - choose2(z2) -
                      tail_big * choose2(q + 1) - (r - 2 - tail_big) * choose2(q) -
                      x * (z1 + z2) - y * y - y * (z1 + z2);
        if (e < min_edges) continue;
        SweepBest cand{true, x * y, e, x, y, k12};
        if (cand.beats(acc)) acc = cand;
      }
    }
  };

  SweepBest best = parallel_fold<SweepBest>(
      0, ymax + 1, workers, SweepBest{},
      [&](SweepBest& acc, long long x) { consider(acc, x); },
      [](const SweepBest& a, const SweepBest& b) { return b.beats(a) ? b : a; });

  if (!best.any) throw std::logic_error("optimize_ptg: sweep found no spec");

  PtgOptimum out;
  out.spec.r = r;
  out.spec.x = best.x;
  out.spec.y = best.y;
  long long big = n + best.x;
  long long q = big / r, rho = big % r;
  long long z1, z2;
  slot_z(q, best.x, best.y, best.k12, z1, z2);
  out.spec.z.push_back(z1);
  out.spec.z.push_back(z2);
  long long tail_big = rho - best.k12;
  for (long long j = 0; j < tail_big; j++) out.spec.z.push_back(q + 1);
  for (long long j = 0; j < r - 2 - tail_big; j++) out.spec.z.push_back(q);
  out.dr = best.dr;
  out.edges = best.edges;
  double delta = n > 0 ? static_cast<double>(tn - min_edges) / (static_cast<double>(n) * n) : 0;
  out.asymptotic = asymptotic_dr(r, static_cast<double>(n), delta);
  return out;
}

double asymptotic_dr(int r, double n, double delta) {
  return 2.0 * r / (3.0 * std::sqrt(3.0)) * std::pow(delta, 1.5) * n * n;
}

double asymptotic_x(int r, double n, double delta) { return 2.0 * r / 3.0 * delta * n; }

double asymptotic_y(double n, double delta) { return std::sqrt(delta / 3.0) * n; }

}  // namespace turan
