#include "turan/verifier.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

#include "turan/constructions.hpp"
#include "turan/enumeration.hpp"
#include "turan/matching.hpp"
#include "turan/partition.hpp"
#include "turan/solver.hpp"

namespace turan {
namespace {

std::string join_sizes(const std::vector<int>& sizes) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < sizes.size(); i++) os << (i ? "," : "") << sizes[i];
  os << ")";
  return os.str();
}

}  // namespace

VerificationReport verify_folklore(const std::vector<int>& sizes) {
  int r = static_cast<int>(sizes.size());
  if (r < 2) throw std::invalid_argument("verify_folklore: need at least two parts");
  for (int i = 0; i < r; i++) {
    if (sizes[static_cast<std::size_t>(i)] < 1)
      throw std::invalid_argument("verify_folklore: part sizes must be positive");
    if (i > 0 && sizes[static_cast<std::size_t>(i - 1)] > sizes[static_cast<std::size_t>(i)])
      throw std::invalid_argument("verify_folklore: sizes must be nondecreasing");
  }
  int n = 0;
  std::vector<int> part;
  for (int i = 0; i < r; i++)
    for (int j = 0; j < sizes[static_cast<std::size_t>(i)]; j++) {
      part.push_back(i);
      n++;
    }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)])
        edges.emplace_back(u, v);
  int e = static_cast<int>(edges.size());
  if (e > 20) throw std::invalid_argument("verify_folklore: more than 20 crossing edges");
  std::vector<std::vector<int>> edge_id(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int i = 0; i < e; i++) {
    edge_id[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].first)]
           [static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].second)] = i;
  }

  // a clique meeting every part is the only way to reach r vertices
  std::vector<std::uint32_t> transversal_masks;
  std::vector<int> chosen(static_cast<std::size_t>(r));
  std::vector<int> part_begin(static_cast<std::size_t>(r) + 1, 0);
  for (int i = 0; i < r; i++)
    part_begin[static_cast<std::size_t>(i) + 1] =
        part_begin[static_cast<std::size_t>(i)] + sizes[static_cast<std::size_t>(i)];
  auto collect = [&](auto&& self, int i) -> void {
    if (i == r) {
      std::uint32_t m = 0;
      for (int a = 0; a < r; a++)
        for (int b = a + 1; b < r; b++) {
          int u = chosen[static_cast<std::size_t>(a)], v = chosen[static_cast<std::size_t>(b)];
          m |= 1u << edge_id[static_cast<std::size_t>(std::min(u, v))]
                           [static_cast<std::size_t>(std::max(u, v))];
        }
      transversal_masks.push_back(m);
      return;
    }
    for (int v = part_begin[static_cast<std::size_t>(i)]; v < part_begin[static_cast<std::size_t>(i) + 1]; v++) {
      chosen[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  collect(collect, 0);

  long long bound = e - static_cast<long long>(sizes[0]) * sizes[1];
  VerificationReport rep;
  rep.statement =
      "every K_r-free subgraph of a complete multipartite graph misses at least n1*n2 "
      "crossing edges, and the bound is attained";
  rep.grid = "sizes=" + join_sizes(sizes);
  long long best = -1;
  for (std::uint32_t mask = 0; mask < (1u << e); mask++) {
    rep.instances++;
    bool clique = false;
    for (std::uint32_t t : transversal_masks)
      if ((mask & t) == t) {
        clique = true;
        break;
      }
    if (clique) continue;
    int cnt = std::popcount(mask);
    best = std::max<long long>(best, cnt);
    if (cnt > bound) {
      Graph bad(n);
      for (int i = 0; i < e; i++)
        if (mask >> i & 1)
          bad.add_edge(edges[static_cast<std::size_t>(i)].first,
                       edges[static_cast<std::size_t>(i)].second);
      std::ostringstream os;
      os << "K_" << r << "-free subgraph with " << cnt << " > " << bound << " edges";
      rep.counterexamples.push_back({encode_graph6(bad), os.str()});
    }
  }
  rep.stats["crossing_edges"] = e;
  rep.stats["bound"] = bound;
  rep.stats["max_clique_free_edges"] = best;
  if (rep.counterexamples.empty() && best != bound) {
    std::ostringstream os;
    os << "bound " << bound << " not attained: best clique-free subgraph has " << best;
    rep.counterexamples.push_back({"", os.str()});
  }
  return rep;
}

VerificationReport verify_matching_lemma(int trials, std::uint64_t seed, int max_n, int max_k) {
  if (trials < 1 || max_n < 2 || max_k < 1)
    throw std::invalid_argument("verify_matching_lemma: bad parameters");
  VerificationReport rep;
  rep.statement =
      "a graph with more than (k-1)*max_degree edges and max_degree >= 2k-1 contains a "
      "k-matching";
  {
    std::ostringstream os;
    os << "trials=" << trials << " n<=" << max_n << " k<=" << max_k << " seed=" << seed;
    rep.grid = os.str();
  }
  std::mt19937_64 rng(seed);
  long long max_k_used = 0;
  long long attempts = 0, attempt_cap = static_cast<long long>(trials) * 1000;
  while (rep.instances < trials && attempts < attempt_cap) {
    attempts++;
    int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    std::uint64_t density = 1 + rng() % 100;
    Graph g(n);
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (rng() % 100 < density) g.add_edge(u, v);
    long long e = g.edge_count();
    if (e == 0) continue;
    long long dmax = g.max_degree();
    int k = 0;
    for (int cand = static_cast<int>(std::min<long long>(max_k, (dmax + 1) / 2)); cand >= 1;
         cand--)
      if (e > static_cast<long long>(cand - 1) * dmax) {
        k = cand;
        break;
      }
    if (k == 0) continue;
    rep.instances++;
    max_k_used = std::max<long long>(max_k_used, k);
    auto m = find_matching(g, k);
    bool ok = m.has_value() && static_cast<int>(m->size()) == k;
    if (ok) {
      std::vector<char> used(static_cast<std::size_t>(n), 0);
      for (auto [u, v] : *m) {
        if (!g.has_edge(u, v) || used[static_cast<std::size_t>(u)] ||
            used[static_cast<std::size_t>(v)]) {
          ok = false;
          break;
        }
        used[static_cast<std::size_t>(u)] = 1;
        used[static_cast<std::size_t>(v)] = 1;
      }
    }
    if (!ok) {
      std::ostringstream os;
      os << "n=" << n << " e=" << e << " max_degree=" << dmax << " k=" << k
         << ": no valid k-matching returned";
      rep.counterexamples.push_back({encode_graph6(g), os.str()});
    }
  }
  rep.stats["trials"] = rep.instances;
  rep.stats["max_k_used"] = max_k_used;
  return rep;
}

VerificationReport verify_aes(int r, int n) {
  if (r < 2) throw std::invalid_argument("verify_aes: r must be at least 2");
  VerificationReport rep;
  rep.statement =
      "a K_{r+1}-free graph with min degree strictly above (3r-4)/(3r-1)*n is r-partite";
  {
    std::ostringstream os;
    os << "r=" << r << " n=" << n;
    rep.grid = os.str();
  }
  // any qualifying graph has min degree at least d_min, hence this floor
  long long d_min = static_cast<long long>(3 * r - 4) * n / (3 * r - 1) + 1;
  long long floor_edges = (static_cast<long long>(n) * d_min + 1) / 2;
  long long qualifying = 0;
  EnumSpec es;
  es.n = n;
  es.forbidden_clique = r + 1;
  es.min_edges = floor_edges;
  enumerate_clique_free(es, [&](const Graph& g) {
    rep.instances++;
    long long mind = g.min_degree();
    if (mind * (3 * r - 1) <= static_cast<long long>(3 * r - 4) * n) return;
    qualifying++;
    if (!proper_r_coloring(g, r)) {
      std::ostringstream os;
      os << "min degree " << mind << " > (3r-4)n/(3r-1) yet not " << r << "-partite";
      rep.counterexamples.push_back({encode_graph6(g), os.str()});
    }
  });
  rep.stats["pool"] = rep.instances;
  rep.stats["qualifying"] = qualifying;
  rep.stats["edge_floor"] = floor_edges;
  return rep;
}

VerificationReport verify_brouwer(int r, int n) {
  if (r < 2) throw std::invalid_argument("verify_brouwer: r must be at least 2");
  if (n < 2 * r + 1)
    throw std::invalid_argument("verify_brouwer: requires n >= 2r+1");
  VerificationReport rep;
  rep.statement =
      "a K_{r+1}-free graph with at least t_r(n) - floor(n/r) + 2 edges is r-partite";
  {
    std::ostringstream os;
    os << "r=" << r << " n=" << n;
    rep.grid = os.str();
  }
  long long floor_edges = std::max<long long>(0, turan_number(r, n) - n / r + 2);
  EnumSpec es;
  es.n = n;
  es.forbidden_clique = r + 1;
  es.min_edges = floor_edges;
  enumerate_clique_free(es, [&](const Graph& g) {
    rep.instances++;
    if (!proper_r_coloring(g, r)) {
      std::ostringstream os;
      os << "has " << g.edge_count() << " >= " << floor_edges << " edges yet not " << r
         << "-partite";
      rep.counterexamples.push_back({encode_graph6(g), os.str()});
    }
  });
  rep.stats["edge_floor"] = floor_edges;
  rep.stats["pool"] = rep.instances;
  return rep;
}

VerificationReport verify_turan_identities(int r_lo, int r_hi, long long n_max, int samples) {
  if (r_lo < 1 || r_hi < r_lo || n_max < 1 || samples < 1)
    throw std::invalid_argument("verify_turan_identities: bad parameters");
  VerificationReport rep;
  rep.statement =
      "t_r difference, sandwich and binomial-ratio identities in exact arithmetic";
  {
    std::ostringstream os;
    os << "r=" << r_lo << ".." << r_hi << " n<=" << n_max << " samples=" << samples;
    rep.grid = os.str();
  }
  auto fail = [&](int r, long long n, long long np, const char* what) {
    std::ostringstream os;
    os << "r=" << r << " n=" << n;
    if (np >= 0) os << " n'=" << np;
    os << ": " << what;
    rep.counterexamples.push_back({"", os.str()});
  };
  for (int r = r_lo; r <= r_hi; r++) {
    for (long long n = 1; n <= n_max; n++) {
      rep.instances++;
      long long tn = turan_number(r, n);
      if (tn - turan_number(r, n - 1) != static_cast<long long>(r - 1) * n / r)
        fail(r, n, -1, "difference identity fails");
      if (static_cast<long long>(r - 1) * choose2(n + 1) < r * tn)
        fail(r, n, -1, "upper binomial ratio fails");
      if (r * tn < static_cast<long long>(r - 1) * choose2(n))
        fail(r, n, -1, "lower binomial ratio fails");
      for (int j = 1; j <= samples; j++) {
        long long np = n * j / samples;
        long long tnp = turan_number(r, np);
        if (r * tnp + static_cast<long long>(r - 1) * n * (n - np) < r * tn)
          fail(r, n, np, "sandwich upper bound fails");
        if (r * tn < r * tnp + static_cast<long long>(r - 1) * np * (n - np))
          fail(r, n, np, "sandwich lower bound fails");
      }
    }
  }
  return rep;
}

VerificationReport verify_ptg_dr_closed_form(int r, long long max_total) {
  VerificationReport rep;
  rep.statement = "the minimum internal count of a pentagonal blowup equals x*y";
  {
    std::ostringstream os;
    os << "r=" << r << " total<=" << max_total;
    rep.grid = os.str();
  }
  for (const PentagonalSpec& spec : all_pent_r_partite_specs(r, max_total)) {
    rep.instances++;
    Graph g = ptg_build(spec);
    long long got = dr_exact(g, r).value;
    if (got != spec.x * spec.y) {
      std::ostringstream os;
      os << "spec x=" << spec.x << " y=" << spec.y << " z=(";
      for (std::size_t i = 0; i < spec.z.size(); i++) os << (i ? "," : "") << spec.z[i];
      os << "): solver found " << got << ", closed form says " << spec.x * spec.y;
      rep.counterexamples.push_back({encode_graph6(g), os.str()});
    }
  }
  return rep;
}

}  // namespace turan
