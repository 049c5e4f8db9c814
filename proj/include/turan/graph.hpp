#pragma once
// Dense simple graph with bitset adjacency rows: one 64-bit word per row for
// up to 64 vertices, multiple words beyond that.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace turan {

class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int row_words() const { return words_; }

  bool has_edge(int u, int v) const {
    return (row(u)[static_cast<unsigned>(v) >> 6] >> (v & 63)) & 1ull;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  int min_degree() const;  // 0 for the empty graph
  int max_degree() const;
  long long edge_count() const;

  const std::uint64_t* row(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  // |N(u) ∩ N(v)|
  int common_degree(int u, int v) const;
  std::vector<int> neighbors(int v) const;

  // Subgraph induced by `keep`; vertex keep[i] becomes vertex i.
  Graph induced(const std::vector<int>& keep) const;
  Graph without_vertex(int v) const;
  // Relabeling: vertex v becomes new_label[v] (a bijection on 0..n-1).
  Graph relabeled(const std::vector<int>& new_label) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
  std::uint64_t* wrow(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 1;
  std::vector<std::uint64_t> bits_;
};

// True iff g contains a complete subgraph on q vertices (q >= 1).
bool has_clique(const Graph& g, int q);

// True iff adding the non-edge (u,v) would complete a K_q.
bool edge_completes_clique(const Graph& g, int u, int v, int q);

// Smallest-first elimination order: repeatedly delete a vertex of minimum
// degree in what remains, ties by lowest index. Reverse it to get the
// smallest-last order used by the branch-and-bound solver.
std::vector<int> degeneracy_order(const Graph& g);

// graph6 text format: 6-bit packing of the upper triangle, column by column.
std::string encode_graph6(const Graph& g);
// Throws std::runtime_error on malformed input (bad length, byte out of
// range, nonzero padding). Trailing whitespace is tolerated.
Graph decode_graph6(std::string_view line);

}  // namespace turan
