#include "turan/partition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace turan {

long long internal_edge_count(const Graph& g, const std::vector<int>& classes) {
  if (static_cast<int>(classes.size()) != g.n())
    throw std::invalid_argument("class vector has wrong size");
  long long s = 0;
  for (int u = 0; u < g.n(); u++)
    for (int v = u + 1; v < g.n(); v++)
      if (classes[u] == classes[v] && g.has_edge(u, v)) s++;
  return s;
}

std::vector<int> class_degrees(const Graph& g, const std::vector<int>& classes, int r, int v) {
  std::vector<int> d(r, 0);
  for (int u : g.neighbors(v)) {
    int c = classes[u];
    if (c >= 0 && c < r) d[c]++;
  }
  return d;
}

namespace {

struct ColoringSearch {
  const Graph& g;
  int r, n, w;
  std::vector<int> order;
  std::vector<int> color;
  std::vector<std::uint64_t> class_mask;  // r masks of w words each

  bool rec(int depth, int opened) {
    if (depth == n) return true;
    int v = order[depth];
    const std::uint64_t* rv = g.row(v);
    int limit = std::min(opened + 1, r);
    for (int c = 0; c < limit; c++) {
      std::uint64_t* m = &class_mask[static_cast<std::size_t>(c) * w];
      bool clash = false;
      for (int i = 0; i < w && !clash; i++) clash = (rv[i] & m[i]) != 0;
      if (clash) continue;
      color[v] = c;
      m[v >> 6] |= 1ull << (v & 63);
      if (rec(depth + 1, std::max(opened, c + 1))) return true;
      m[v >> 6] &= ~(1ull << (v & 63));
      color[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Partition> proper_r_coloring(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("class count must be positive");
  int n = g.n();
  if (n == 0) return Partition{{}, 0};

  ColoringSearch s{g, r, n, g.row_words(), {}, {}, {}};
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::vector<int> deg(n);
  for (int v = 0; v < n; v++) deg[v] = g.degree(v);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return deg[a] < deg[b]; });
  s.color.assign(n, -1);
  s.class_mask.assign(static_cast<std::size_t>(r) * s.w, 0);

  if (!s.rec(0, 0)) return std::nullopt;
  return Partition{std::move(s.color), 0};
}

}  // namespace turan
