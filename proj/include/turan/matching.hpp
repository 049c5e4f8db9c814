#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Maximum matching (blossom contraction). mate[v] is v's partner or -1.
std::vector<int> max_matching(const Graph& g);

int matching_size(const std::vector<int>& mate);

// The k lexicographically smallest edges of one maximum matching, sorted,
// or nullopt when no matching of size k exists.
std::optional<std::vector<std::pair<int, int>>> find_matching(const Graph& g, int k);

}  // namespace turan
