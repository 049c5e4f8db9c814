#pragma once
// Graph families: Turán graphs, blowups, the pentagonal base L_r and its
// blowups, and the balanced pentagonal sample construction.

#include <vector>

#include "turan/graph.hpp"

namespace turan {

long long choose2(long long n);

// Part sizes of the equitable partition of n into r parts, non-increasing.
std::vector<long long> equitable_parts(long long n, int r);

long long turan_number(int r, long long n);
Graph turan_graph(int r, int n);

struct BlowupSpec {
  Graph base;
  std::vector<int> sizes;  // one per base vertex, zeros allowed
};

long long blowup_edge_count(const BlowupSpec& spec);
Graph blowup(const BlowupSpec& spec);

// L_r: r+3 vertices, the first five inducing a pentagon, every other pair
// adjacent. Blowing it up with sizes (x, y, y, z_1..z_r) gives the
// pentagonal r-partite graphs.
Graph lr_base(int r);

struct PentagonalSpec {
  int r = 2;
  long long x = 0;
  long long y = 0;
  std::vector<long long> z;  // z_1..z_r

  long long total() const;
  bool is_pent_r_partite() const;  // x <= y <= z_i for all i
  // Pent-r-partite and the r sums x+y+z_1, x+y+z_2, z_3..z_r split
  // total()+x equitably.
  bool is_pent_turan() const;

  bool operator==(const PentagonalSpec&) const = default;
};

// Largest vertex count the materializing builders accept. Defaults to 5000;
// override with TSTAB_BUILD_CAP. Closed forms stay exact far beyond this.
int build_cap();

Graph ptg_build(const PentagonalSpec& spec);
long long ptg_edge_count(const PentagonalSpec& spec);

// The Turán graph T_r(n) written as a degenerate pentagonal spec.
PentagonalSpec turan_ptg_spec(int r, long long n);

// Balanced spec with x = s, y = ceil(sqrt(sn)/r^2) and z chosen so the
// column sums x+y+z_1, x+y+z_2, z_3..z_r are the equitable parts of n in
// non-increasing order. Requires s*r^4 <= n.
PentagonalSpec sample_ptg(int r, long long n, long long s);

// All pent-r-partite specs (x <= y <= z_i for every i) with total vertex
// count at most max_total, in lexicographic (x, y, z) order. Slot-symmetric
// duplicates are kept; callers that need one spec per isomorphism class
// must dedup themselves.
std::vector<PentagonalSpec> all_pent_r_partite_specs(int r, long long max_total);

}  // namespace turan
