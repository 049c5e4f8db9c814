#include "turan/enumeration.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "turan/canonical.hpp"

namespace turan {

int enum_cap_default() {
  if (const char* env = std::getenv("TSTAB_ENUM_CAP")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(v);
  }
  return 10;
}

namespace {

// Orbits of vertex pairs under the group the generators span: union-find
// closure over every generator's action id(u,v) -> id(γu, γv).
struct PairOrbits {
  int n;
  std::vector<int> parent;

  PairOrbits(int n_, const std::vector<std::vector<int>>& gens) : n(n_) {
    parent.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < parent.size(); i++) parent[i] = static_cast<int>(i);
    for (const std::vector<int>& gamma : gens)
      for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
          unite(id(u, v), id(gamma[static_cast<std::size_t>(u)],
                             gamma[static_cast<std::size_t>(v)]));
  }

  int id(int u, int v) const {
    if (u > v) std::swap(u, v);
    return u * n + v;
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(x)] = y;
  }

  bool same(int u1, int v1, int u2, int v2) {
    return find(id(u1, v1)) == find(id(u2, v2));
  }
};

struct Generator {
  int n, q;
  long long min_edges;
  const std::function<void(const Graph&)>& yield;

  void visit(const Graph& g, const CanonicalAnalysis& analysis) {
    std::vector<std::pair<int, int>> addable;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (!g.has_edge(u, v) && !edge_completes_clique(g, u, v, q))
          addable.emplace_back(u, v);
    if (g.edge_count() >= min_edges) yield(g);
    // every edge ever added deeper down is addable here already
    if (g.edge_count() + static_cast<long long>(addable.size()) < min_edges) return;

    PairOrbits orbits(n, analysis.aut_generators);
    std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (auto [u, v] : addable) {
      int root = orbits.find(orbits.id(u, v));
      if (seen[static_cast<std::size_t>(root)]) continue;
      seen[static_cast<std::size_t>(root)] = 1;
      Graph h = g;
      h.add_edge(u, v);
      CanonicalAnalysis ha = canonical_analyze(h);
      if (accepted(h, ha, u, v)) visit(h, ha);
    }
  }

  // The designated edge of h sits at the highest bit of the canonical
  // certificate; h survives iff the edge just added is equivalent to it.
  bool accepted(const Graph& h, const CanonicalAnalysis& ha, int u, int v) {
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int w = 0; w < n; w++) inv[static_cast<std::size_t>(ha.canonical_label[w])] = w;
    for (int p = n - 1; p >= 1; p--)
      for (int qq = p - 1; qq >= 0; qq--)
        if (h.has_edge(inv[static_cast<std::size_t>(p)], inv[static_cast<std::size_t>(qq)])) {
          PairOrbits orbits(n, ha.aut_generators);
          return orbits.same(u, v, inv[static_cast<std::size_t>(p)],
                             inv[static_cast<std::size_t>(qq)]);
        }
    return false;  // unreachable: h has the edge just added
  }
};

}  // namespace

void enumerate_clique_free(const EnumSpec& spec,
                           const std::function<void(const Graph&)>& yield) {
  int cap = spec.cap < 0 ? enum_cap_default() : spec.cap;
  if (spec.n < 0 || spec.n > cap)
    throw std::invalid_argument("enumerate_clique_free: n exceeds the cap (" +
                                std::to_string(cap) + ")");
  if (spec.forbidden_clique < 2)
    throw std::invalid_argument("enumerate_clique_free: forbidden clique must be >= 2");
  Graph empty(spec.n);
  Generator gen{spec.n, spec.forbidden_clique, spec.min_edges, yield};
  gen.visit(empty, canonical_analyze(empty));
}

std::vector<Graph> enumerate_clique_free(const EnumSpec& spec) {
  std::vector<Graph> out;
  enumerate_clique_free(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

IngestStats ingest_graph6(std::istream& in, const IngestOptions& opt,
                          const std::function<void(const Graph&)>& yield) {
  IngestStats stats;
  std::string line;
  long long lineno = 0;
  const std::string header = ">>graph6<<";
  while (std::getline(in, line)) {
    lineno++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(header, 0) == 0) line.erase(0, header.size());
    if (line.empty()) continue;
    Graph g(0);
    try {
      g = decode_graph6(line);
    } catch (const std::exception& e) {
      if (opt.strict)
        throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
      stats.bad_lines++;
      continue;
    }
    if (opt.verify) {
      bool ok = g.edge_count() >= opt.min_edges &&
                (opt.forbidden_clique < 2 || !has_clique(g, opt.forbidden_clique));
      if (!ok) {
        stats.filtered++;
        continue;
      }
    }
    stats.yielded++;
    yield(g);
  }
  return stats;
}

}  // namespace turan
