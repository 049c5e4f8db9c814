#pragma once
// Minimum internal edges over r-partitions: brute force, branch-and-bound,
// the closed form for pentagonal blowups, the crossing-maximizing local
// search, and blowup symmetrization.

#include <chrono>
#include <optional>

#include "turan/constructions.hpp"
#include "turan/graph.hpp"
#include "turan/partition.hpp"

namespace turan {

struct DrResult {
  long long value = 0;
  Partition partition;
  bool exact = true;  // false only when a time budget cut the search short
};

// Exhaustive r^(n-1) scan, vertex 0 pinned to class 0. Refuses instances
// beyond n = 14 for r = 2 and n = 10 for r = 3, 4.
DrResult dr_bruteforce(const Graph& g, int r);

// Branch and bound. Assigns vertices core-first (reverse degeneracy order),
// opens at most one new class per vertex, and prunes with the sum of each
// unassigned vertex's cheapest class. With a budget, may return exact=false
// and the best partition found.
DrResult dr_exact(const Graph& g, int r,
                  std::optional<std::chrono::milliseconds> budget = std::nullopt);

// The partition of a pentagonal blowup that puts Y1 u Z1 in class 0,
// X u Y2 u Z2 in class 1 and Z_j in class j-1; internal count is exactly xy.
Partition ptg_standard_partition(const PentagonalSpec& spec);

// D_r of a pent-r-partite blowup without building it: xy, with the standard
// partition as witness. Throws if the spec is not pent-r-partite.
DrResult ptg_dr(const PentagonalSpec& spec);

// Completes `fixed` (-1 marks free vertices) to an r-partition and moves
// single vertices until no move reduces internal edges. At the fixpoint
// every free vertex sits in one of its sparsest classes.
Partition max_crossing_extend(const Graph& g, int r, const std::vector<int>& fixed);
Partition max_crossing_extend(const Graph& g, int r);

struct SymmetrizeResult {
  BlowupSpec spec;   // same part sizes, base edges a subset of the input's
  Partition partition;
};

// Erdős–Győri–Simonovits symmetrization: drop the internal edges of p, then
// give every vertex of each block the neighborhood of the block's highest
// degree member. Edge count never drops below p's crossing count and the
// returned partition has no internal edges.
SymmetrizeResult symmetrize(const BlowupSpec& spec, const Partition& p);

}  // namespace turan
