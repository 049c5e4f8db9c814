#include "turan/matching.hpp"

#include <algorithm>
#include <queue>

namespace turan {
namespace {

// Edmonds' algorithm with blossom shrinking via base[] pointers. Scans are
// in vertex order throughout, so the matching is a deterministic function
// of the graph.
struct BlossomSolver {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> mate, parent, base;
  std::vector<char> used, in_blossom;

  explicit BlossomSolver(const Graph& g) : n(g.n()) {
    adj.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; v++) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
    mate.assign(static_cast<std::size_t>(n), -1);
  }

  int lca(int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (;;) {
      a = base[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = 1;
      if (mate[static_cast<std::size_t>(a)] == -1) break;
      a = parent[static_cast<std::size_t>(mate[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent[static_cast<std::size_t>(mate[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(int v, int stop, int child) {
    while (base[static_cast<std::size_t>(v)] != stop) {
      in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = 1;
      in_blossom[static_cast<std::size_t>(
          base[static_cast<std::size_t>(mate[static_cast<std::size_t>(v)])])] = 1;
      parent[static_cast<std::size_t>(v)] = child;
      child = mate[static_cast<std::size_t>(v)];
      v = parent[static_cast<std::size_t>(mate[static_cast<std::size_t>(v)])];
    }
  }

  int find_augmenting(int root) {
    used.assign(static_cast<std::size_t>(n), 0);
    parent.assign(static_cast<std::size_t>(n), -1);
    base.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; i++) base[static_cast<std::size_t>(i)] = i;
    used[static_cast<std::size_t>(root)] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[static_cast<std::size_t>(v)]) {
        if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
            mate[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root ||
            (mate[static_cast<std::size_t>(to)] != -1 &&
             parent[static_cast<std::size_t>(mate[static_cast<std::size_t>(to)])] != -1)) {
          // odd cycle: shrink the blossom rooted at the lowest common ancestor
          int stop = lca(v, to);
          in_blossom.assign(static_cast<std::size_t>(n), 0);
          mark_path(v, stop, to);
          mark_path(to, stop, v);
          for (int i = 0; i < n; i++)
            if (in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
              base[static_cast<std::size_t>(i)] = stop;
              if (!used[static_cast<std::size_t>(i)]) {
                used[static_cast<std::size_t>(i)] = 1;
                q.push(i);
              }
            }
        } else if (parent[static_cast<std::size_t>(to)] == -1) {
          parent[static_cast<std::size_t>(to)] = v;
          if (mate[static_cast<std::size_t>(to)] == -1) return to;
          used[static_cast<std::size_t>(mate[static_cast<std::size_t>(to)])] = 1;
          q.push(mate[static_cast<std::size_t>(to)]);
        }
      }
    }
    return -1;
  }

  void solve() {
    // cheap seed matching before the augmenting phase
    for (int v = 0; v < n; v++)
      if (mate[static_cast<std::size_t>(v)] == -1)
        for (int to : adj[static_cast<std::size_t>(v)])
          if (mate[static_cast<std::size_t>(to)] == -1) {
            mate[static_cast<std::size_t>(v)] = to;
            mate[static_cast<std::size_t>(to)] = v;
            break;
          }
    for (int v = 0; v < n; v++) {
      if (mate[static_cast<std::size_t>(v)] != -1) continue;
      int end = find_augmenting(v);
      while (end != -1) {
        int pv = parent[static_cast<std::size_t>(end)];
        int next = mate[static_cast<std::size_t>(pv)];
        mate[static_cast<std::size_t>(end)] = pv;
        mate[static_cast<std::size_t>(pv)] = end;
        end = next;
      }
    }
  }
};

}  // namespace

std::vector<int> max_matching(const Graph& g) {
  BlossomSolver solver(g);
  solver.solve();
  return solver.mate;
}

int matching_size(const std::vector<int>& mate) {
  int c = 0;
  for (std::size_t v = 0; v < mate.size(); v++)
    if (mate[v] > static_cast<int>(v)) c++;
  return c;
}

std::optional<std::vector<std::pair<int, int>>> find_matching(const Graph& g, int k) {
  std::vector<int> mate = max_matching(g);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.n(); v++)
    if (mate[static_cast<std::size_t>(v)] > v)
      edges.emplace_back(v, mate[static_cast<std::size_t>(v)]);
  if (static_cast<int>(edges.size()) < k) return std::nullopt;
  std::sort(edges.begin(), edges.end());
  edges.resize(static_cast<std::size_t>(std::max(k, 0)));
  return edges;
}

}  // namespace turan
