#pragma once
// Vertex partitions into r classes and proper coloring search.

#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct Partition {
  std::vector<int> classes;  // class index per vertex, 0-based
  long long internal = 0;    // edges with both ends in the same class
};

long long internal_edge_count(const Graph& g, const std::vector<int>& classes);

// Number of neighbors of v inside each class. Classes valued outside 0..r-1
// (e.g. -1 for unassigned) are ignored.
std::vector<int> class_degrees(const Graph& g, const std::vector<int>& classes, int r, int v);

// Backtracking proper r-coloring: vertices in degree-ascending order (ties
// by index), each vertex may open at most one previously unused class.
// Returns a partition with zero internal edges, or nullopt if g is not
// r-colorable. The class indexing this order produces is load-bearing for
// the reduction pipeline's worked examples.
std::optional<Partition> proper_r_coloring(const Graph& g, int r);

}  // namespace turan
