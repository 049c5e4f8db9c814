#include "turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace turan {

namespace {

int popcnt_words(const std::uint64_t* a, int w) {
  int s = 0;
  for (int i = 0; i < w; i++) s += std::popcount(a[i]);
  return s;
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  n_ = n;
  words_ = n <= 64 ? 1 : (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops not supported");
  wrow(u)[static_cast<unsigned>(v) >> 6] |= 1ull << (v & 63);
  wrow(v)[static_cast<unsigned>(u) >> 6] |= 1ull << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  wrow(u)[static_cast<unsigned>(v) >> 6] &= ~(1ull << (v & 63));
  wrow(v)[static_cast<unsigned>(u) >> 6] &= ~(1ull << (u & 63));
}

int Graph::degree(int v) const {
  check_vertex(v);
  return popcnt_words(row(v), words_);
}

int Graph::min_degree() const {
  int m = 0;
  for (int v = 0; v < n_; v++) {
    int d = popcnt_words(row(v), words_);
    if (v == 0 || d < m) m = d;
  }
  return m;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; v++) m = std::max(m, popcnt_words(row(v), words_));
  return m;
}

long long Graph::edge_count() const {
  long long s = 0;
  for (int v = 0; v < n_; v++) s += popcnt_words(row(v), words_);
  return s / 2;
}

int Graph::common_degree(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  int s = 0;
  const std::uint64_t* a = row(u);
  const std::uint64_t* b = row(v);
  for (int i = 0; i < words_; i++) s += std::popcount(a[i] & b[i]);
  return s;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; w++) {
    std::uint64_t bits = r[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); i++)
    for (std::size_t j = i + 1; j < keep.size(); j++)
      if (has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  std::vector<int> keep;
  keep.reserve(n_ - 1);
  for (int u = 0; u < n_; u++)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::relabeled(const std::vector<int>& new_label) const {
  if (static_cast<int>(new_label.size()) != n_)
    throw std::invalid_argument("relabeling has wrong size");
  Graph h(n_);
  for (int u = 0; u < n_; u++)
    for (int v = u + 1; v < n_; v++)
      if (has_edge(u, v)) h.add_edge(new_label[u], new_label[v]);
  return h;
}

namespace {

// Clique search over a graph relabeled into degeneracy order. Candidate sets
// are multi-word masks; cliques are extended through ascending labels only,
// so every clique is visited exactly once.
struct CliqueSearch {
  int n = 0, w = 0;
  std::vector<std::uint64_t> rows;
  std::vector<std::uint64_t> arena;

  bool rec(int depth, int need) {
    std::uint64_t* cand = &arena[static_cast<std::size_t>(depth) * w];
    if (need == 0) return true;
    while (true) {
      if (popcnt_words(cand, w) < need) return false;
      int v = -1;
      for (int i = 0; i < w && v < 0; i++)
        if (cand[i]) v = i * 64 + std::countr_zero(cand[i]);
      if (v < 0) return false;
      cand[v >> 6] &= ~(1ull << (v & 63));
      std::uint64_t* next = &arena[static_cast<std::size_t>(depth + 1) * w];
      const std::uint64_t* rv = &rows[static_cast<std::size_t>(v) * w];
      for (int i = 0; i < w; i++) next[i] = cand[i] & rv[i];
      if (rec(depth + 1, need - 1)) return true;
    }
  }
};

}  // namespace

bool has_clique(const Graph& g, int q) {
  if (q <= 0) throw std::invalid_argument("clique size must be positive");
  if (q == 1) return g.n() >= 1;
  if (q > g.n()) return false;
  if (q == 2) return g.edge_count() > 0;

  std::vector<int> elim = degeneracy_order(g);
  std::vector<int> label(g.n());
  for (int i = 0; i < g.n(); i++) label[elim[i]] = i;
  Graph h = g.relabeled(label);

  CliqueSearch cs;
  cs.n = h.n();
  cs.w = h.row_words();
  cs.rows.assign(static_cast<std::size_t>(cs.n) * cs.w, 0);
  for (int v = 0; v < cs.n; v++)
    std::copy(h.row(v), h.row(v) + cs.w, &cs.rows[static_cast<std::size_t>(v) * cs.w]);
  cs.arena.assign(static_cast<std::size_t>(q + 1) * cs.w, 0);
  std::uint64_t* full = cs.arena.data();
  for (int v = 0; v < cs.n; v++) full[v >> 6] |= 1ull << (v & 63);
  return cs.rec(0, q);
}

bool edge_completes_clique(const Graph& g, int u, int v, int q) {
  if (q <= 1) return false;
  if (q == 2) return true;
  std::vector<int> common;
  const std::uint64_t* a = g.row(u);
  const std::uint64_t* b = g.row(v);
  for (int w = 0; w < g.row_words(); w++) {
    std::uint64_t bits = a[w] & b[w];
    while (bits) {
      common.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  if (static_cast<int>(common.size()) < q - 2) return false;
  return has_clique(g.induced(common), q - 2);
}

std::vector<int> degeneracy_order(const Graph& g) {
  int n = g.n();
  std::vector<int> deg(n), order;
  std::vector<char> gone(n, 0);
  for (int v = 0; v < n; v++) deg[v] = g.degree(v);
  order.reserve(n);
  for (int step = 0; step < n; step++) {
    int best = -1;
    for (int v = 0; v < n; v++)
      if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
    gone[best] = 1;
    order.push_back(best);
    for (int u = 0; u < n; u++)
      if (!gone[u] && g.has_edge(best, u)) deg[u]--;
  }
  return order;
}

namespace {

void append_g6_size(std::string& s, long long n) {
  if (n <= 62) {
    s.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    s.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      s.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    s.push_back(126);
    s.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      s.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  std::string s;
  append_g6_size(s, g.n());
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n(); j++)
    for (int i = 0; i < j; i++) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        s.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) s.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return s;
}

Graph decode_graph6(std::string_view line) {
  while (!line.empty() &&
         (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
    line.remove_suffix(1);
  if (line.empty()) throw std::runtime_error("graph6: empty line");

  std::size_t pos = 0;
  auto next6 = [&]() -> int {
    if (pos >= line.size()) throw std::runtime_error("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw std::runtime_error("graph6: byte out of range");
    return c - 63;
  };

  long long n = next6();
  if (n == 63) {
    int b1 = next6();
    if (b1 == 63) {
      n = 0;
      for (int i = 0; i < 6; i++) n = (n << 6) | next6();
    } else {
      n = b1;
      for (int i = 0; i < 2; i++) n = (n << 6) | next6();
    }
  }
  if (n > 1000000) throw std::runtime_error("graph6: vertex count too large");

  long long nbits = n * (n - 1) / 2;
  std::size_t expect = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - pos != expect) throw std::runtime_error("graph6: wrong payload length");

  Graph g(static_cast<int>(n));
  long long t = 0;
  int acc = 0, have = 0;
  for (int j = 1; j < g.n(); j++)
    for (int i = 0; i < j; i++, t++) {
      if (have == 0) {
        acc = next6();
        have = 6;
      }
      if ((acc >> (have - 1)) & 1) g.add_edge(i, j);
      have--;
    }
  if (have > 0 && (acc & ((1 << have) - 1)) != 0)
    throw std::runtime_error("graph6: nonzero padding bits");
  return g;
}

}  // namespace turan
