#pragma once
// Reduction of a near-extremal clique-free graph to a candidate pentagonal
// spec: degree peeling, the one-vertex-deletion dense path, the full
// partition/matching pipeline, and the domination check both paths share.

#include <optional>
#include <utility>
#include <vector>

#include "turan/constructions.hpp"
#include "turan/graph.hpp"
#include "turan/partition.hpp"

namespace turan {

struct DominationResult {
  PentagonalSpec spec;
  long long e_g = 0;
  long long e_spec = 0;
  long long dr_g = 0;
  long long dr_spec = 0;
  bool dominates = false;  // e_spec >= e_g and dr_spec >= dr_g
};

// Spec edges and D_r versus the graph's. dr of the spec comes from the
// closed form when the spec is pent-r-partite, otherwise from the solver.
DominationResult check_domination(const Graph& g, const PentagonalSpec& spec, int r);

struct Threshold {
  long long num = 0;
  long long den = 1;
};

struct PeelResult {
  std::vector<int> removed;            // original labels, removal order
  std::vector<int> residual_vertices;  // original labels, ascending
  Graph residual;
};

// Repeatedly delete the lowest-indexed vertex of current degree < theta.
PeelResult weeding_peel(const Graph& g, Threshold theta);

// Lowest-degree vertex (ties by index) whose removal leaves an r-partite
// graph, if any.
std::optional<int> near_partite_witness(const Graph& g, int r);

enum class DenseStatus { ok, inapplicable };

struct DenseReduceResult {
  DenseStatus status = DenseStatus::inapplicable;
  std::optional<int> witness;
  std::vector<long long> part_sizes;  // n_i of G-v, reordered with a
  std::vector<long long> a;           // |Γ(v) ∩ U_i|, ascending
  PentagonalSpec spec;
  std::optional<DominationResult> dom;
};

// r-partite input maps to the Turán spec. Otherwise deletes a witness
// vertex v, colors the rest, and forms L_r[1, a_1, a_1, n_1-a_1, n_2-a_1,
// n_3..n_r] with classes sorted by a_i.
DenseReduceResult dense_reduce(const Graph& g, int r);

enum class GeneralStatus {
  ok,
  residual_not_r_partite,
  p_infeasible,
  no_k_matching,
  negative_part,
};

struct ReductionState {
  std::vector<int> peeled;         // below-threshold removals, in order
  std::vector<int> extra_peeled;   // removals forced to reach r-partiteness
  bool theta_hypothesis_held = true;
  std::vector<std::vector<int>> u_classes;  // coloring of the residual
  std::vector<std::vector<int>> v_classes;  // after max_crossing_extend
  Partition extended;
  long long delta = 0;
  std::optional<int> u_vertex;
  bool u_in_s = false;
  std::vector<std::vector<int>> p_sets;
  std::vector<std::pair<int, int>> matching;
  long long k = 0;
  // per class, after relabeling to kappa_1 <= ... <= kappa_r
  std::vector<long long> a, b, c, kappa;
  std::vector<int> class_order;  // new position -> pre-sort class
  PentagonalSpec spec;
};

struct GeneralReduceResult {
  GeneralStatus status = GeneralStatus::ok;
  ReductionState state;
  std::optional<DominationResult> dom;
};

// Full pipeline: peel below theta, color the residual, extend to a
// crossing-maximal r-partition, take the max-internal-degree vertex u with
// its neighbor sets P_i, match k = ceil(e_internal/Δ) internal edges, split
// the matching per class against P, and assemble the candidate spec
// L_r[k, Δ, Δ, z...]. With strict=false a residual that is not r-partite
// is peeled further (recorded via theta_hypothesis_held = false); with
// strict=true that case is a terminal status instead.
GeneralReduceResult general_reduce(const Graph& g, int r, Threshold theta,
                                   bool strict = false);

}  // namespace turan
