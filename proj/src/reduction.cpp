#include "turan/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "turan/matching.hpp"
#include "turan/solver.hpp"

namespace turan {

DominationResult check_domination(const Graph& g, const PentagonalSpec& spec, int r) {
  if (spec.total() != g.n())
    throw std::invalid_argument("check_domination: spec and graph vertex counts differ");
  DominationResult out;
  out.spec = spec;
  out.e_g = g.edge_count();
  out.e_spec = ptg_edge_count(spec);
  out.dr_g = dr_exact(g, r).value;
  out.dr_spec = spec.is_pent_r_partite() ? spec.x * spec.y
                                         : dr_exact(ptg_build(spec), r).value;
  out.dominates = out.e_spec >= out.e_g && out.dr_spec >= out.dr_g;
  return out;
}

PeelResult weeding_peel(const Graph& g, Threshold theta) {
  if (theta.den <= 0) throw std::invalid_argument("weeding_peel: threshold denominator");
  int n = g.n();
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; v++) deg[static_cast<std::size_t>(v)] = g.degree(v);
  PeelResult out;
  for (;;) {
    int pick = -1;
    for (int v = 0; v < n; v++)
      if (alive[static_cast<std::size_t>(v)] &&
          static_cast<long long>(deg[static_cast<std::size_t>(v)]) * theta.den < theta.num) {
        pick = v;
        break;
      }
    if (pick < 0) break;
    alive[static_cast<std::size_t>(pick)] = 0;
    out.removed.push_back(pick);
    for (int u : g.neighbors(pick))
      if (alive[static_cast<std::size_t>(u)]) deg[static_cast<std::size_t>(u)]--;
  }
  for (int v = 0; v < n; v++)
    if (alive[static_cast<std::size_t>(v)]) out.residual_vertices.push_back(v);
  out.residual = g.induced(out.residual_vertices);
  return out;
}

std::optional<int> near_partite_witness(const Graph& g, int r) {
  int n = g.n();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  for (int v : order)
    if (proper_r_coloring(g.without_vertex(v), r)) return v;
  return std::nullopt;
}

DenseReduceResult dense_reduce(const Graph& g, int r) {
  if (r < 2) throw std::invalid_argument("dense_reduce: r must be at least 2");
  int n = g.n();
  DenseReduceResult out;
  if (proper_r_coloring(g, r)) {
    out.status = DenseStatus::ok;
    out.spec = turan_ptg_spec(r, n);
    out.part_sizes = out.spec.z;
    out.dom = check_domination(g, out.spec, r);
    return out;
  }
  std::optional<int> v = near_partite_witness(g, r);
  if (!v) return out;  // inapplicable
  out.witness = v;
  Graph rest = g.without_vertex(*v);
  Partition col = *proper_r_coloring(rest, r);

  std::vector<long long> size(static_cast<std::size_t>(r), 0);
  std::vector<long long> hits(static_cast<std::size_t>(r), 0);
  for (int w = 0; w < rest.n(); w++)
    size[static_cast<std::size_t>(col.classes[static_cast<std::size_t>(w)])]++;
  for (int u : g.neighbors(*v)) {
    int shifted = u > *v ? u - 1 : u;
    hits[static_cast<std::size_t>(col.classes[static_cast<std::size_t>(shifted)])]++;
  }
  std::vector<int> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return hits[static_cast<std::size_t>(i)] < hits[static_cast<std::size_t>(j)];
  });
  for (int i : order) {
    out.a.push_back(hits[static_cast<std::size_t>(i)]);
    out.part_sizes.push_back(size[static_cast<std::size_t>(i)]);
  }

  out.spec.r = r;
  out.spec.x = 1;
  out.spec.y = out.a[0];
  out.spec.z = out.part_sizes;
  out.spec.z[0] -= out.a[0];
  out.spec.z[1] -= out.a[0];
  if (out.spec.total() != n)
    throw std::logic_error("dense_reduce: spec loses vertices");
  out.status = DenseStatus::ok;
  out.dom = check_domination(g, out.spec, r);
  return out;
}

namespace {

long long internal_degree(const Graph& g, const std::vector<int>& cls, int r, int v) {
  return class_degrees(g, cls, r, v)[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])];
}

}  // namespace

GeneralReduceResult general_reduce(const Graph& g, int r, Threshold theta, bool strict) {
  if (r < 2) throw std::invalid_argument("general_reduce: r must be at least 2");
  int n = g.n();
  GeneralReduceResult out;
  ReductionState& st = out.state;

  PeelResult peel = weeding_peel(g, theta);
  st.peeled = peel.removed;

  // keep peeling lowest-degree vertices until the residual takes r colors
  std::vector<int> kept = peel.residual_vertices;
  Graph residual = peel.residual;
  std::optional<Partition> col = proper_r_coloring(residual, r);
  while (!col) {
    if (strict) {
      out.status = GeneralStatus::residual_not_r_partite;
      return out;
    }
    st.theta_hypothesis_held = false;
    int pick = 0;
    for (int v = 1; v < residual.n(); v++)
      if (residual.degree(v) < residual.degree(pick)) pick = v;
    st.extra_peeled.push_back(kept[static_cast<std::size_t>(pick)]);
    kept.erase(kept.begin() + pick);
    residual = residual.without_vertex(pick);
    col = proper_r_coloring(residual, r);
  }

  st.u_classes.assign(static_cast<std::size_t>(r), {});
  std::vector<int> fixed(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < kept.size(); i++) {
    int c = col->classes[i];
    fixed[static_cast<std::size_t>(kept[i])] = c;
    st.u_classes[static_cast<std::size_t>(c)].push_back(kept[i]);
  }

  st.extended = max_crossing_extend(g, r, fixed);
  const std::vector<int>& cls = st.extended.classes;
  st.v_classes.assign(static_cast<std::size_t>(r), {});
  for (int v = 0; v < n; v++)
    st.v_classes[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])].push_back(v);

  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  for (int v : st.peeled) in_s[static_cast<std::size_t>(v)] = 1;
  for (int v : st.extra_peeled) in_s[static_cast<std::size_t>(v)] = 1;

  // max internal degree; ties prefer a peeled vertex, then lowest index
  st.delta = 0;
  int u = -1;
  bool u_from_s = false;
  for (int v = 0; v < n; v++) {
    long long d = internal_degree(g, cls, r, v);
    bool vs = in_s[static_cast<std::size_t>(v)] != 0;
    if (u < 0 || d > st.delta || (d == st.delta && vs && !u_from_s)) {
      st.delta = d;
      u = v;
      u_from_s = vs;
    }
  }
  st.u_vertex = u;
  st.u_in_s = u_from_s;

  if (st.delta == 0) {
    st.spec = turan_ptg_spec(r, n);
    out.dom = check_domination(g, st.spec, r);
    return out;
  }

  st.p_sets.assign(static_cast<std::size_t>(r), {});
  for (int w : g.neighbors(u)) {
    auto& p = st.p_sets[static_cast<std::size_t>(cls[static_cast<std::size_t>(w)])];
    if (static_cast<long long>(p.size()) < st.delta) p.push_back(w);
  }
  for (int i = 0; i < r; i++)
    if (static_cast<long long>(st.p_sets[static_cast<std::size_t>(i)].size()) < st.delta) {
      out.status = GeneralStatus::p_infeasible;
      return out;
    }

  Graph internal(n);
  for (int a = 0; a < n; a++)
    for (int bv : g.neighbors(a))
      if (bv > a && cls[static_cast<std::size_t>(a)] == cls[static_cast<std::size_t>(bv)])
        internal.add_edge(a, bv);
  long long eh = internal.edge_count();
  st.k = (eh + st.delta - 1) / st.delta;

  auto matching = find_matching(internal, static_cast<int>(st.k));
  if (!matching) {
    out.status = GeneralStatus::no_k_matching;
    return out;
  }
  st.matching = *matching;

  std::vector<char> in_p(static_cast<std::size_t>(n), 0);
  for (const auto& p : st.p_sets)
    for (int w : p) in_p[static_cast<std::size_t>(w)] = 1;

  std::vector<long long> ca(static_cast<std::size_t>(r), 0), cb(static_cast<std::size_t>(r), 0),
      cc(static_cast<std::size_t>(r), 0);
  for (auto [p, q] : st.matching) {
    auto ci = static_cast<std::size_t>(cls[static_cast<std::size_t>(p)]);
    int ends = (in_p[static_cast<std::size_t>(p)] ? 1 : 0) + (in_p[static_cast<std::size_t>(q)] ? 1 : 0);
    if (ends == 0) ca[ci]++;
    else if (ends == 1) cb[ci]++;
    else cc[ci]++;
  }

  std::vector<long long> kap(static_cast<std::size_t>(r));
  for (int i = 0; i < r; i++) {
    auto ui = static_cast<std::size_t>(i);
    // |P_i u V_i^M| = delta + 2a_i + b_i: B edges overlap P_i once, C twice
    long long covered = st.delta + 2 * ca[ui] + cb[ui];
    kap[ui] = static_cast<long long>(st.v_classes[ui].size()) - covered;
    if (kap[ui] < 0) throw std::logic_error("general_reduce: negative kappa");
  }

  st.class_order.resize(static_cast<std::size_t>(r));
  std::iota(st.class_order.begin(), st.class_order.end(), 0);
  std::stable_sort(st.class_order.begin(), st.class_order.end(), [&](int i, int j) {
    return kap[static_cast<std::size_t>(i)] < kap[static_cast<std::size_t>(j)];
  });
  for (int i : st.class_order) {
    auto ui = static_cast<std::size_t>(i);
    st.a.push_back(ca[ui]);
    st.b.push_back(cb[ui]);
    st.c.push_back(cc[ui]);
    st.kappa.push_back(kap[ui]);
  }

  st.spec.r = r;
  st.spec.x = st.k;
  st.spec.y = st.delta;
  st.spec.z.assign(static_cast<std::size_t>(r), 0);
  st.spec.z[0] = st.kappa[0] + st.a[0] - st.c[0];
  st.spec.z[1] = st.kappa[1] + st.a[0] + st.b[0] + st.c[0] + 2 * st.a[1] + st.b[1] - st.k;
  for (int j = 2; j < r; j++)
    st.spec.z[static_cast<std::size_t>(j)] =
        st.kappa[static_cast<std::size_t>(j)] + st.delta + 2 * st.a[static_cast<std::size_t>(j)] +
        st.b[static_cast<std::size_t>(j)];
  for (long long zi : st.spec.z)
    if (zi < 0) {
      out.status = GeneralStatus::negative_part;
      return out;
    }
  if (st.spec.total() != n) throw std::logic_error("general_reduce: spec loses vertices");
  out.dom = check_domination(g, st.spec, r);
  return out;
}

}  // namespace turan
