#pragma once
// The exact stability frontier at small n, the integer optimizer for
// pentagonal-Turán parameters under an edge budget, and the matching
// closed-form estimates.

#include <string>

#include "turan/constructions.hpp"

namespace turan {

struct FrontierRecord {
  int r = 0;
  int n = 0;
  long long t = 0;
  long long f = 0;          // max D_r over the pool
  std::string witness_g6;   // canonical graph6 of one maximizer
  long long pool = 0;       // graphs with e >= t_r(n) - t
};

// Maximum of D_r over all K_{r+1}-free graphs on n vertices with at least
// t_r(n) - t edges. The witness is the first maximizer in enumeration
// order, or the Turán graph when everything in the pool is r-partite.
FrontierRecord frontier(int r, int n, long long t);

struct PtgOptimum {
  PentagonalSpec spec;
  long long dr = 0;      // x*y
  long long edges = 0;
  double asymptotic = 0; // closed-form estimate at delta implied by budget
};

// Maximize x*y over pentagonal-Turán specs on n vertices with at least
// min_edges edges. Sweeps (x, y) with the z-parts forced by the balance
// condition; edge counts are closed-form, so large n is fine. Ties prefer
// more edges, then lexicographically smallest (x, y).
PtgOptimum optimize_ptg(int r, long long n, long long min_edges, int workers = 1);

// (2r/(3*sqrt(3))) * delta^(3/2) * n^2 and the companion parameter shapes.
double asymptotic_dr(int r, double n, double delta);
double asymptotic_x(int r, double n, double delta);  // (2r/3) * delta * n
double asymptotic_y(double n, double delta);         // sqrt(delta/3) * n

}  // namespace turan
