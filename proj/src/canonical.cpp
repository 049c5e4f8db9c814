#include "turan/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace turan {
namespace {

// Refinement/individualization search over ordered partitions of V.
// The ordered partition is kept as a permutation `order` plus boolean
// `cell_start` flags; cells are the maximal runs between flags.
struct Searcher {
  const Graph& g;
  int n;
  int cert_words;
  std::array<std::uint64_t, 64> adj{};

  std::vector<int> order;
  std::vector<char> cell_start;
  std::vector<int> path;  // individualized vertices, root to current node

  bool have_first = false;
  std::vector<std::uint64_t> first_cert, best_cert;
  std::vector<int> first_order, best_order;
  std::vector<std::vector<int>> gens;

  long long nodes = 0;
  static constexpr long long kNodeLimit = 8'000'000;

  explicit Searcher(const Graph& graph) : g(graph), n(graph.n()) {
    if (n > 64) throw std::invalid_argument("canonical_analyze: more than 64 vertices");
    cert_words = (n * (n - 1) / 2 + 63) / 64;
    for (int v = 0; v < n; v++) {
      std::uint64_t m = 0;
      for (int u = 0; u < n; u++)
        if (u != v && g.has_edge(u, v)) m |= 1ull << u;
      adj[static_cast<std::size_t>(v)] = m;
    }
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    cell_start.assign(static_cast<std::size_t>(n), 0);
    if (n > 0) cell_start[0] = 1;
  }

  // Split cells by neighbor counts into an equitable partition. A split
  // restarts the scan; counts ascend within each split cell and ties keep
  // their relative order, so the result is canonical for the input partition.
  void refine() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int sb = 0; sb < n && !changed;) {
        int se = sb + 1;
        while (se < n && !cell_start[se]) se++;
        std::uint64_t smask = 0;
        for (int i = sb; i < se; i++) smask |= 1ull << order[i];
        for (int db = 0; db < n && !changed;) {
          int de = db + 1;
          while (de < n && !cell_start[de]) de++;
          if (de - db > 1) changed = split_cell(db, de, smask);
          db = de;
        }
        sb = se;
      }
    }
  }

  bool split_cell(int db, int de, std::uint64_t smask) {
    int len = de - db;
    std::array<std::pair<int, int>, 64> keyed;  // (count, vertex)
    bool uniform = true;
    for (int i = 0; i < len; i++) {
      int c = std::popcount(adj[static_cast<std::size_t>(order[db + i])] & smask);
      keyed[static_cast<std::size_t>(i)] = {c, order[db + i]};
      if (c != keyed[0].first) uniform = false;
    }
    if (uniform) return false;
    std::stable_sort(keyed.begin(), keyed.begin() + len,
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 0; i < len; i++) {
      order[db + i] = keyed[static_cast<std::size_t>(i)].second;
      if (i > 0 && keyed[static_cast<std::size_t>(i)].first !=
                       keyed[static_cast<std::size_t>(i - 1)].first)
        cell_start[db + i] = 1;
    }
    return true;
  }

  // Adjacency bits of the current labeling in the row order p=1..n-1,
  // q=0..p-1, packed most significant bit first so word comparison is
  // lexicographic bit comparison.
  std::vector<std::uint64_t> certificate() const {
    std::vector<std::uint64_t> cert(static_cast<std::size_t>(cert_words), 0);
    int t = 0;
    for (int p = 1; p < n; p++) {
      std::uint64_t rowmask = adj[static_cast<std::size_t>(order[p])];
      for (int q = 0; q < p; q++, t++)
        if ((rowmask >> order[q]) & 1)
          cert[static_cast<std::size_t>(t >> 6)] |= 1ull << (63 - (t & 63));
    }
    return cert;
  }

  void record_aut(const std::vector<int>& ref_order, const std::vector<int>& cur_order) {
    std::vector<int> gamma(static_cast<std::size_t>(n));
    bool identity = true;
    for (int i = 0; i < n; i++) {
      gamma[static_cast<std::size_t>(ref_order[i])] = cur_order[i];
      if (ref_order[i] != cur_order[i]) identity = false;
    }
    if (!identity) gens.push_back(std::move(gamma));
  }

  void leaf() {
    std::vector<std::uint64_t> cert = certificate();
    if (!have_first) {
      have_first = true;
      first_cert = cert;
      first_order = order;
      best_cert = std::move(cert);
      best_order = order;
      return;
    }
    if (cert == first_cert) {
      record_aut(first_order, order);
      return;
    }
    if (cert == best_cert) {
      record_aut(best_order, order);
      return;
    }
    if (cert < best_cert) {
      best_cert = std::move(cert);
      best_order = order;
    }
  }

  // Union-find over vertex orbits of the generators that fix every vertex
  // on the current path. Such generators permute the candidate subtrees
  // of the current node isomorphically, so one candidate per orbit suffices.
  void current_orbits(std::array<int, 64>& parent) const {
    for (int i = 0; i < n; i++) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const std::vector<int>& gamma : gens) {
      bool fixes_path = true;
      for (int p : path)
        if (gamma[static_cast<std::size_t>(p)] != p) {
          fixes_path = false;
          break;
        }
      if (!fixes_path) continue;
      for (int v = 0; v < n; v++) {
        int a = find(v), b = find(gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
  }

  void search() {
    if (++nodes > kNodeLimit)
      throw std::runtime_error("canonical_analyze: search node limit exceeded");
    refine();
    int tb = -1, te = -1;
    for (int i = 0; i < n;) {
      int j = i + 1;
      while (j < n && !cell_start[j]) j++;
      if (j - i > 1) {
        tb = i;
        te = j;
        break;
      }
      i = j;
    }
    if (tb < 0) {
      leaf();
      return;
    }
    std::vector<int> cands(order.begin() + tb, order.begin() + te);
    std::vector<int> saved_order = order;
    std::vector<char> saved_start = cell_start;
    std::vector<int> tried;
    std::array<int, 64> parent{};
    for (int v : cands) {
      if (!tried.empty()) {
        // Generators found deeper in the tree may merge orbits, so the
        // orbit structure is recomputed for every candidate.
        current_orbits(parent);
        auto find = [&](int x) {
          while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)];
          return x;
        };
        int rv = find(v);
        bool skip = false;
        for (int t : tried)
          if (find(t) == rv) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      tried.push_back(v);
      order = saved_order;
      cell_start = saved_start;
      auto it = std::find(order.begin() + tb, order.begin() + te, v);
      std::rotate(order.begin() + tb, it, it + 1);
      cell_start[static_cast<std::size_t>(tb) + 1] = 1;
      path.push_back(v);
      search();
      path.pop_back();
    }
    order = std::move(saved_order);
    cell_start = std::move(saved_start);
  }
};

}  // namespace

CanonicalAnalysis canonical_analyze(const Graph& g) {
  Searcher s(g);
  if (s.n == 0) {
    CanonicalAnalysis out;
    out.form.certificate = encode_graph6(g);
    return out;
  }
  s.search();
  std::vector<int> label(static_cast<std::size_t>(s.n));
  for (int i = 0; i < s.n; i++) label[static_cast<std::size_t>(s.best_order[i])] = i;
  CanonicalAnalysis out;
  out.canonical_label = label;
  out.aut_generators = std::move(s.gens);
  out.form.certificate = encode_graph6(g.relabeled(label));
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_analyze(g).form; }

}  // namespace turan
