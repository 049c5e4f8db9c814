#include "turan/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace turan {
namespace {

struct BruteState {
  const Graph& g;
  int n, r;
  std::vector<int> cls;
  std::vector<int> best_cls;
  long long best = -1;

  void rec(int v, long long internal) {
    if (best >= 0 && internal >= best) return;
    if (v == n) {
      best = internal;
      best_cls = cls;
      return;
    }
    for (int c = 0; c < r; c++) {
      long long add = 0;
      for (int u = 0; u < v; u++)
        if (cls[static_cast<std::size_t>(u)] == c && g.has_edge(u, v)) add++;
      cls[static_cast<std::size_t>(v)] = c;
      rec(v + 1, internal + add);
    }
    cls[static_cast<std::size_t>(v)] = -1;
  }
};

}  // namespace

DrResult dr_bruteforce(const Graph& g, int r) {
  int n = g.n();
  if (r < 1) throw std::invalid_argument("dr_bruteforce: r must be positive");
  bool ok;
  if (r == 2) ok = n <= 14;
  else if (r <= 4) ok = n <= 10;
  else {
    // keep the state count under 2^20
    double states = 1;
    for (int i = 1; i < n && states <= 1048576.0; i++) states *= r;
    ok = states <= 1048576.0;
  }
  if (!ok) throw std::invalid_argument("dr_bruteforce: instance beyond the enumeration cap");
  if (n == 0) return {0, Partition{}, true};
  BruteState st{g, n, r, std::vector<int>(static_cast<std::size_t>(n), -1), {}, -1};
  st.cls[0] = 0;  // class labels are interchangeable
  st.rec(1, 0);
  Partition p;
  p.classes = st.best_cls;
  p.internal = st.best;
  return {st.best, p, true};
}

namespace {

struct BranchState {
  const Graph& g;
  int n, r;
  std::vector<int> order;        // assignment order, core first
  std::vector<int> cls;          // by vertex
  std::vector<long long> cnt;    // cnt[v*r+c]: assigned neighbors of v in c
  long long best;
  std::vector<int> best_cls;
  bool timed_out = false;
  long long budget_checks = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  bool out_of_time() {
    if (!deadline) return false;
    if ((++budget_checks & 1023) != 0) return timed_out;
    if (std::chrono::steady_clock::now() >= *deadline) timed_out = true;
    return timed_out;
  }

  long long remaining_floor(int depth) const {
    long long sum = 0;
    for (int i = depth; i < n; i++) {
      const long long* row = &cnt[static_cast<std::size_t>(order[static_cast<std::size_t>(i)]) *
                                  static_cast<std::size_t>(r)];
      long long m = row[0];
      for (int c = 1; c < r; c++) m = std::min(m, row[c]);
      sum += m;
    }
    return sum;
  }

  void rec(int depth, int opened, long long internal) {
    if (out_of_time()) return;
    if (depth == n) {
      if (internal < best) {
        best = internal;
        best_cls = cls;
      }
      return;
    }
    if (internal + remaining_floor(depth) >= best) return;
    int v = order[static_cast<std::size_t>(depth)];
    long long* row = &cnt[static_cast<std::size_t>(v) * static_cast<std::size_t>(r)];
    int limit = std::min(opened + 1, r);
    for (int c = 0; c < limit; c++) {
      cls[static_cast<std::size_t>(v)] = c;
      for (int u : g.neighbors(v))
        if (cls[static_cast<std::size_t>(u)] == -1)
          cnt[static_cast<std::size_t>(u) * static_cast<std::size_t>(r) + c]++;
      rec(depth + 1, std::max(opened, c + 1), internal + row[c]);
      for (int u : g.neighbors(v))
        if (cls[static_cast<std::size_t>(u)] == -1)
          cnt[static_cast<std::size_t>(u) * static_cast<std::size_t>(r) + c]--;
      cls[static_cast<std::size_t>(v)] = -1;
      if (timed_out) return;
    }
  }
};

}  // namespace

DrResult dr_exact(const Graph& g, int r, std::optional<std::chrono::milliseconds> budget) {
  if (r < 1) throw std::invalid_argument("dr_exact: r must be positive");
  int n = g.n();
  if (n == 0) return {0, Partition{}, true};

  Partition seed = max_crossing_extend(g, r);
  BranchState st{g,
                 n,
                 r,
                 degeneracy_order(g),
                 std::vector<int>(static_cast<std::size_t>(n), -1),
                 std::vector<long long>(static_cast<std::size_t>(n) * static_cast<std::size_t>(r), 0),
                 seed.internal,
                 seed.classes,
                 false,
                 0,
                 std::nullopt};
  std::reverse(st.order.begin(), st.order.end());
  if (budget)
    st.deadline = std::chrono::steady_clock::now() + *budget;
  // the bound test is strict, so a matching incumbent must pre-exist
  st.rec(0, 0, 0);
  Partition p;
  p.classes = st.best_cls;
  p.internal = st.best;
  return {st.best, p, !st.timed_out};
}

Partition ptg_standard_partition(const PentagonalSpec& spec) {
  if (spec.r < 2 || static_cast<int>(spec.z.size()) != spec.r)
    throw std::invalid_argument("ptg_standard_partition: malformed spec");
  Partition p;
  auto put = [&](long long count, int c) {
    for (long long i = 0; i < count; i++) p.classes.push_back(c);
  };
  put(spec.x, 1);
  put(spec.y, 0);
  put(spec.y, 1);
  put(spec.z[0], 0);
  put(spec.z[1], 1);
  for (int j = 2; j < spec.r; j++) put(spec.z[static_cast<std::size_t>(j)], j);
  p.internal = spec.x * spec.y;
  return p;
}

DrResult ptg_dr(const PentagonalSpec& spec) {
  if (!spec.is_pent_r_partite())
    throw std::invalid_argument("ptg_dr: spec is not pent-r-partite");
  return {spec.x * spec.y, ptg_standard_partition(spec), true};
}

Partition max_crossing_extend(const Graph& g, int r, const std::vector<int>& fixed) {
  int n = g.n();
  if (r < 1) throw std::invalid_argument("max_crossing_extend: r must be positive");
  if (static_cast<int>(fixed.size()) != n)
    throw std::invalid_argument("max_crossing_extend: fixed must cover all vertices");
  std::vector<int> cls = fixed;
  for (int v = 0; v < n; v++)
    if (cls[static_cast<std::size_t>(v)] < -1 || cls[static_cast<std::size_t>(v)] >= r)
      throw std::invalid_argument("max_crossing_extend: class out of range");

  std::vector<int> free_order;
  for (int v = 0; v < n; v++)
    if (cls[static_cast<std::size_t>(v)] == -1) free_order.push_back(v);
  std::stable_sort(free_order.begin(), free_order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int v : free_order) {
    std::vector<int> deg = class_degrees(g, cls, r, v);
    int bestc = 0;
    for (int c = 1; c < r; c++)
      if (deg[static_cast<std::size_t>(c)] < deg[static_cast<std::size_t>(bestc)]) bestc = c;
    cls[static_cast<std::size_t>(v)] = bestc;
  }

  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < n; v++) {
      if (fixed[static_cast<std::size_t>(v)] != -1) continue;
      std::vector<int> deg = class_degrees(g, cls, r, v);
      int cur = cls[static_cast<std::size_t>(v)];
      int bestc = cur;
      for (int c = 0; c < r; c++)
        if (deg[static_cast<std::size_t>(c)] < deg[static_cast<std::size_t>(bestc)]) bestc = c;
      if (deg[static_cast<std::size_t>(bestc)] < deg[static_cast<std::size_t>(cur)]) {
        cls[static_cast<std::size_t>(v)] = bestc;
        moved = true;
      }
    }
  }

  Partition p;
  p.classes = std::move(cls);
  p.internal = internal_edge_count(g, p.classes);
  return p;
}

Partition max_crossing_extend(const Graph& g, int r) {
  return max_crossing_extend(g, r, std::vector<int>(static_cast<std::size_t>(g.n()), -1));
}

SymmetrizeResult symmetrize(const BlowupSpec& spec, const Partition& p) {
  int k = spec.base.n();
  Graph w = blowup(spec);
  int n = w.n();
  if (static_cast<int>(p.classes.size()) != n)
    throw std::invalid_argument("symmetrize: partition does not fit the blowup");
  std::vector<int> cls = p.classes;

  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (cls[static_cast<std::size_t>(u)] == cls[static_cast<std::size_t>(v)] && w.has_edge(u, v))
        w.remove_edge(u, v);

  std::vector<int> offset(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 0; i < k; i++)
    offset[static_cast<std::size_t>(i) + 1] =
        offset[static_cast<std::size_t>(i)] + spec.sizes[static_cast<std::size_t>(i)];

  for (int i = 0; i < k; i++) {
    int lo = offset[static_cast<std::size_t>(i)], hi = offset[static_cast<std::size_t>(i) + 1];
    if (hi - lo < 2) continue;
    int rep = lo;
    for (int v = lo + 1; v < hi; v++)
      if (w.degree(v) > w.degree(rep)) rep = v;
    std::vector<int> hood = w.neighbors(rep);
    for (int v = lo; v < hi; v++) {
      if (v == rep) continue;
      for (int u : w.neighbors(v)) w.remove_edge(v, u);
      for (int u : hood) w.add_edge(v, u);
      cls[static_cast<std::size_t>(v)] = cls[static_cast<std::size_t>(rep)];
    }
  }

  Graph reduced_base(k);
  for (int i = 0; i < k; i++) {
    if (spec.sizes[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = i + 1; j < k; j++) {
      if (spec.sizes[static_cast<std::size_t>(j)] == 0) continue;
      if (w.has_edge(offset[static_cast<std::size_t>(i)], offset[static_cast<std::size_t>(j)]))
        reduced_base.add_edge(i, j);
    }
  }

  SymmetrizeResult out;
  out.spec = {reduced_base, spec.sizes};
  out.partition.classes = std::move(cls);
  out.partition.internal = internal_edge_count(w, out.partition.classes);
  return out;
}

}  // namespace turan
