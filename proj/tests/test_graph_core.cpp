#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/graph.hpp"

using namespace turan;

TEST_CASE("graph basics") {
  Graph g(5);
  CHECK(g.n() == 5);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.edge_count() == 2);
  CHECK(g.min_degree() == 0);
  CHECK(g.max_degree() == 2);
  g.remove_edge(0, 1);
  CHECK(!g.has_edge(1, 0));
  CHECK(g.edge_count() == 1);

  CHECK_THROWS(g.add_edge(0, 0));
  CHECK_THROWS(g.add_edge(0, 5));
}

TEST_CASE("neighbors and common degree") {
  Graph g = oracle::petersen();
  CHECK(g.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
  CHECK(g.neighbors(0) == std::vector<int>{1, 4, 5});
  // girth 5: adjacent vertices share no neighbor, non-adjacent share one
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      CHECK(g.common_degree(u, v) == (g.has_edge(u, v) ? 0 : 1));
}

TEST_CASE("induced, without_vertex, relabeled") {
  Graph c5 = oracle::cycle(5);
  Graph p4 = c5.without_vertex(0);
  CHECK(p4.n() == 4);
  CHECK(p4.edge_count() == 3);  // path 1-2-3-4 relabeled to 0..3
  CHECK(p4.has_edge(0, 1));
  CHECK(!p4.has_edge(0, 3));

  Graph sub = c5.induced({0, 1, 2});
  CHECK(sub.n() == 3);
  CHECK(sub.edge_count() == 2);

  std::vector<int> rot = {1, 2, 3, 4, 0};  // v -> v+1
  Graph r = c5.relabeled(rot);
  CHECK(r == c5);  // rotation is an automorphism of the cycle
  Graph p = oracle::path(4);
  std::vector<int> swap01 = {1, 0, 2, 3};
  CHECK(!(p.relabeled(swap01) == p));
}

TEST_CASE("graphs beyond one word") {
  Graph g(100);
  g.add_edge(0, 99);
  g.add_edge(63, 64);
  g.add_edge(64, 65);
  CHECK(g.row_words() > 1);
  CHECK(g.has_edge(99, 0));
  CHECK(g.degree(64) == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.common_degree(63, 65) == 1);
}

TEST_CASE("clique detection matches brute force") {
  for (int n = 3; n <= 5; ++n) {
    int checked = 0;
    for (const Graph& g : oracle::all_graphs(n)) {
      for (int q = 1; q <= n + 1; ++q)
        CHECK(has_clique(g, q) == oracle::contains_clique_bruteforce(g, q));
      ++checked;
    }
    CHECK(checked == 1 << (n * (n - 1) / 2));
  }
  CHECK(has_clique(oracle::petersen(), 2));
  CHECK(!has_clique(oracle::petersen(), 3));
  CHECK(has_clique(oracle::complete(6), 6));
  CHECK(!has_clique(oracle::complete_bipartite(3, 3), 3));
}

namespace {

// does g + uv contain a K_q through the edge uv?
bool completes_bruteforce(const turan::Graph& g, int u, int v, int q) {
  if (q <= 1) return false;
  if (q == 2) return true;
  turan::Graph h = g;
  h.add_edge(u, v);
  int n = h.n();
  std::vector<int> cand;
  for (int w = 0; w < n; ++w)
    if (w != u && w != v && h.has_edge(u, w) && h.has_edge(v, w)) cand.push_back(w);
  int need = q - 2;
  if ((int)cand.size() < need) return false;
  std::vector<int> pick;
  auto rec = [&](auto&& self, size_t idx) -> bool {
    if ((int)pick.size() == need) {
      for (size_t i = 0; i < pick.size(); ++i)
        for (size_t j = i + 1; j < pick.size(); ++j)
          if (!h.has_edge(pick[i], pick[j])) return false;
      return true;
    }
    if (idx == cand.size()) return false;
    pick.push_back(cand[idx]);
    if (self(self, idx + 1)) return true;
    pick.pop_back();
    return self(self, idx + 1);
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("edge_completes_clique agrees with adding the edge") {
  for (int n : {4, 5}) {
    for (const Graph& g : oracle::all_graphs(n)) {
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          for (int q = 1; q <= n + 1; ++q)
            CHECK(edge_completes_clique(g, u, v, q) == completes_bruteforce(g, u, v, q));
        }
    }
  }
}

TEST_CASE("degeneracy order removes a minimum-degree vertex each step") {
  auto check_order = [](const Graph& g) {
    std::vector<int> order = degeneracy_order(g);
    REQUIRE((int)order.size() == g.n());
    std::vector<char> alive(g.n(), 1);
    for (int v : order) {
      REQUIRE(alive[v]);
      int dv = 0;
      for (int u = 0; u < g.n(); ++u)
        if (alive[u] && g.has_edge(u, v)) ++dv;
      for (int u = 0; u < g.n(); ++u) {
        if (!alive[u]) continue;
        int du = 0;
        for (int w = 0; w < g.n(); ++w)
          if (alive[w] && g.has_edge(u, w)) ++du;
        CHECK(du >= dv);
        if (du == dv && u < v) CHECK(false);  // ties must pick lowest index
        if (u >= v) break;
      }
      alive[v] = 0;
    }
  };
  check_order(oracle::petersen());
  check_order(oracle::wheel5());
  check_order(oracle::complete_bipartite(2, 4));
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    Graph g(8);
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    check_order(g);
  }
}

TEST_CASE("graph6 frozen strings") {
  CHECK(encode_graph6(oracle::complete(4)) == "C~");
  CHECK(encode_graph6(oracle::cycle(5)) == "Dhc");
  CHECK(encode_graph6(Graph(5)) == "D??");
  Graph e2(2);
  e2.add_edge(0, 1);
  CHECK(encode_graph6(e2) == "A_");
  CHECK(decode_graph6("C~") == oracle::complete(4));
  CHECK(decode_graph6("Dhc") == oracle::cycle(5));
  CHECK(decode_graph6("Dhc\n") == oracle::cycle(5));
}

TEST_CASE("graph6 round trip") {
  for (int n = 0; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n))
      CHECK(decode_graph6(encode_graph6(g)) == g);
  std::mt19937 rng(11);
  for (int n : {63, 64, 80, 150}) {  // covers the long size encoding
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 5 == 0) g.add_edge(u, v);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(decode_graph6(""), std::runtime_error);
  CHECK_THROWS_AS(decode_graph6("D?"), std::runtime_error);    // truncated
  CHECK_THROWS_AS(decode_graph6("D???"), std::runtime_error);  // too long
  CHECK_THROWS_AS(decode_graph6("C\x1f\x1f"), std::runtime_error);  // byte < 63
  CHECK_THROWS_AS(decode_graph6("A~"), std::runtime_error);    // nonzero padding
}

namespace {

// order of the permutation group generated by `gens`, by closure
long long group_order(int n, const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> seen;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> frontier = {id};
  seen.insert(id);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& gplain : gens) {
        std::vector<int> q(n);
        for (int i = 0; i < n; ++i) q[i] = gplain[p[i]];
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return (long long)seen.size();
}

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  return g.relabeled(perm) == g;
}

}  // namespace

TEST_CASE("canonical certificates split 4-vertex graphs into the 11 classes") {
  std::vector<Graph> gs = oracle::all_graphs(4);
  auto classes = oracle::iso_classes_bruteforce(gs);
  CHECK(classes.size() == 11);
  std::set<std::string> certs;
  for (const auto& cls : classes) {
    std::string c0 = canonical_form(gs[cls[0]]).certificate;
    for (int i : cls) CHECK(canonical_form(gs[i]).certificate == c0);
    CHECK(certs.insert(c0).second);  // distinct classes, distinct certs
  }
  CHECK(certs.size() == 11);
}

TEST_CASE("canonical certificate counts distinct classes at n = 5") {
  std::set<std::string> certs;
  for (const Graph& g : oracle::all_graphs(5))
    certs.insert(canonical_form(g).certificate);
  CHECK(certs.size() == 34);  // unlabeled graphs on 5 vertices
}

TEST_CASE("certificate is relabeling invariant") {
  std::mt19937 rng(23);
  std::vector<Graph> pool = {oracle::petersen(), oracle::wheel5(),
                             oracle::complete_bipartite(3, 4)};
  for (int t = 0; t < 10; ++t) {
    Graph g(8);
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (rng() % 2) g.add_edge(u, v);
    pool.push_back(g);
  }
  for (const Graph& g : pool) {
    std::string cert = canonical_form(g).certificate;
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(g.relabeled(perm)).certificate == cert);
    }
  }
}

TEST_CASE("canonical label realizes the certificate") {
  for (const Graph& g : {oracle::cycle(5), oracle::petersen(), oracle::wheel5(),
                         oracle::path(7), oracle::complete_bipartite(2, 5)}) {
    CanonicalAnalysis a = canonical_analyze(g);
    CHECK(encode_graph6(g.relabeled(a.canonical_label)) == a.form.certificate);
    for (const auto& gen : a.aut_generators) CHECK(is_automorphism(g, gen));
  }
}

TEST_CASE("automorphism generators produce the full group") {
  auto order_of = [](const Graph& g) {
    return group_order(g.n(), canonical_analyze(g).aut_generators);
  };
  CHECK(order_of(oracle::cycle(5)) == 10);
  CHECK(order_of(oracle::path(4)) == 2);
  CHECK(order_of(oracle::complete(4)) == 24);
  CHECK(order_of(oracle::wheel5()) == 10);
  CHECK(order_of(oracle::complete_bipartite(3, 3)) == 72);
  CHECK(order_of(oracle::petersen()) == 120);
  CHECK(order_of(oracle::cycle(5)) == oracle::aut_count_bruteforce(oracle::cycle(5)));
  CHECK(order_of(oracle::wheel5()) == oracle::aut_count_bruteforce(oracle::wheel5()));
}

TEST_CASE("orbit counting: labeled graphs split exactly among classes") {
  // sum over isomorphism classes of n!/|Aut| must recover the labeled count
  for (int n = 4; n <= 5; ++n) {
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    std::map<std::string, long long> aut_by_cert;
    for (const Graph& g : oracle::all_graphs(n)) {
      CanonicalAnalysis a = canonical_analyze(g);
      aut_by_cert.emplace(a.form.certificate, group_order(n, a.aut_generators));
    }
    long long total = 0;
    for (auto& [cert, aut] : aut_by_cert) {
      CHECK(fact % aut == 0);
      total += fact / aut;
    }
    CHECK(total == 1LL << (n * (n - 1) / 2));
  }
}
