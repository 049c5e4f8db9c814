#include "turan/constructions.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace turan {
namespace {

long long isqrt_floor(long long v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative value");
  auto k = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (k > 0 && k * k > v) k--;
  while ((k + 1) * (k + 1) <= v) k++;
  return k;
}

long long isqrt_ceil(long long v) {
  long long f = isqrt_floor(v);
  return f * f == v ? f : f + 1;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

int checked_int(long long v, const char* what) {
  if (v < 0 || v > std::numeric_limits<int>::max())
    throw std::invalid_argument(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::vector<long long> equitable_parts(long long n, int r) {
  if (r < 1 || n < 0) throw std::invalid_argument("equitable_parts: bad arguments");
  long long q = n / r, rem = n % r;
  std::vector<long long> parts(static_cast<std::size_t>(r), q);
  for (long long i = 0; i < rem; i++) parts[static_cast<std::size_t>(i)] = q + 1;
  return parts;
}

long long turan_number(int r, long long n) {
  if (r < 1 || n < 0) throw std::invalid_argument("turan_number: bad arguments");
  long long e = choose2(n);
  for (long long p : equitable_parts(n, r)) e -= choose2(p);
  return e;
}

Graph turan_graph(int r, int n) {
  if (r < 2) throw std::invalid_argument("turan_graph: r must be at least 2");
  Graph g(n);
  std::vector<long long> parts = equitable_parts(n, r);
  std::vector<int> cls(static_cast<std::size_t>(n));
  int v = 0;
  for (std::size_t i = 0; i < parts.size(); i++)
    for (long long j = 0; j < parts[i]; j++) cls[static_cast<std::size_t>(v++)] = static_cast<int>(i);
  for (int a = 0; a < n; a++)
    for (int b = a + 1; b < n; b++)
      if (cls[static_cast<std::size_t>(a)] != cls[static_cast<std::size_t>(b)]) g.add_edge(a, b);
  return g;
}

long long blowup_edge_count(const BlowupSpec& spec) {
  int k = spec.base.n();
  if (static_cast<int>(spec.sizes.size()) != k)
    throw std::invalid_argument("blowup: sizes length must match base order");
  long long e = 0;
  for (int i = 0; i < k; i++)
    for (int j = i + 1; j < k; j++)
      if (spec.base.has_edge(i, j))
        e += static_cast<long long>(spec.sizes[static_cast<std::size_t>(i)]) *
             spec.sizes[static_cast<std::size_t>(j)];
  return e;
}

int build_cap() {
  if (const char* env = std::getenv("TSTAB_BUILD_CAP")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(v);
  }
  return 5000;
}

Graph blowup(const BlowupSpec& spec) {
  int k = spec.base.n();
  if (static_cast<int>(spec.sizes.size()) != k)
    throw std::invalid_argument("blowup: sizes length must match base order");
  long long total = 0;
  for (int s : spec.sizes) {
    if (s < 0) throw std::invalid_argument("blowup: negative part size");
    total += s;
  }
  if (total > build_cap())
    throw std::runtime_error("blowup: " + std::to_string(total) +
                             " vertices exceeds the build cap (TSTAB_BUILD_CAP)");
  // offset[i] is where block i starts in the result
  std::vector<int> offset(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 0; i < k; i++)
    offset[static_cast<std::size_t>(i) + 1] =
        offset[static_cast<std::size_t>(i)] + spec.sizes[static_cast<std::size_t>(i)];
  Graph g(static_cast<int>(total));
  for (int i = 0; i < k; i++)
    for (int j = i + 1; j < k; j++) {
      if (!spec.base.has_edge(i, j)) continue;
      for (int a = offset[static_cast<std::size_t>(i)]; a < offset[static_cast<std::size_t>(i) + 1]; a++)
        for (int b = offset[static_cast<std::size_t>(j)]; b < offset[static_cast<std::size_t>(j) + 1]; b++)
          g.add_edge(a, b);
    }
  return g;
}

Graph lr_base(int r) {
  if (r < 2) throw std::invalid_argument("lr_base: r must be at least 2");
  int n = r + 3;
  Graph g(n);
  for (int a = 0; a < n; a++)
    for (int b = a + 1; b < n; b++) g.add_edge(a, b);
  // drop the pairs absent from the pentagon on the first five vertices
  g.remove_edge(0, 3);
  g.remove_edge(0, 4);
  g.remove_edge(1, 2);
  g.remove_edge(1, 3);
  g.remove_edge(2, 4);
  return g;
}

long long PentagonalSpec::total() const {
  return x + 2 * y + std::accumulate(z.begin(), z.end(), 0ll);
}

bool PentagonalSpec::is_pent_r_partite() const {
  if (r < 2 || static_cast<int>(z.size()) != r) return false;
  if (x < 0 || x > y) return false;
  for (long long zi : z)
    if (y > zi) return false;
  return true;
}

bool PentagonalSpec::is_pent_turan() const {
  if (!is_pent_r_partite()) return false;
  long long big = total() + x;
  long long lo = big / r, hi = (big + r - 1) / r;
  for (int i = 0; i < r; i++) {
    long long slot = z[static_cast<std::size_t>(i)] + (i < 2 ? x + y : 0);
    if (slot < lo || slot > hi) return false;
  }
  return true;
}

static std::vector<int> spec_sizes(const PentagonalSpec& spec) {
  if (spec.r < 2 || static_cast<int>(spec.z.size()) != spec.r)
    throw std::invalid_argument("pentagonal spec: z must have r entries, r >= 2");
  std::vector<int> sizes;
  sizes.reserve(static_cast<std::size_t>(spec.r) + 3);
  sizes.push_back(checked_int(spec.x, "x"));
  sizes.push_back(checked_int(spec.y, "y"));
  sizes.push_back(checked_int(spec.y, "y"));
  for (long long zi : spec.z) sizes.push_back(checked_int(zi, "z"));
  return sizes;
}

Graph ptg_build(const PentagonalSpec& spec) {
  return blowup({lr_base(spec.r), spec_sizes(spec)});
}

long long ptg_edge_count(const PentagonalSpec& spec) {
  if (spec.r < 2 || static_cast<int>(spec.z.size()) != spec.r)
    throw std::invalid_argument("pentagonal spec: z must have r entries, r >= 2");
  long long n = spec.total();
  long long e = choose2(n) - choose2(spec.x) - 2 * choose2(spec.y);
  for (long long zi : spec.z) e -= choose2(zi);
  // non-adjacent base pairs: X-Z1, X-Z2, Y1-Y2, Y1-Z1, Y2-Z2
  e -= spec.x * (spec.z[0] + spec.z[1]);
  e -= spec.y * spec.y;
  e -= spec.y * (spec.z[0] + spec.z[1]);
  return e;
}

PentagonalSpec turan_ptg_spec(int r, long long n) {
  if (r < 2 || n < 0) throw std::invalid_argument("turan_ptg_spec: bad arguments");
  PentagonalSpec spec;
  spec.r = r;
  spec.z = equitable_parts(n, r);
  return spec;
}

PentagonalSpec sample_ptg(int r, long long n, long long s) {
  if (r < 2 || n < 0 || s < 0) throw std::invalid_argument("sample_ptg: bad arguments");
  long long r2 = static_cast<long long>(r) * r;
  if (s * r2 * r2 > n)
    throw std::invalid_argument("sample_ptg: s exceeds n/r^4");
  if (s == 0) return turan_ptg_spec(r, n);
  long long t = ceil_div(isqrt_ceil(s * n), r2);
  std::vector<long long> target = equitable_parts(n, r);
  PentagonalSpec spec;
  spec.r = r;
  spec.x = s;
  spec.y = t;
  spec.z = target;
  spec.z[0] = target[0] - t - (s + 1) / 2;
  spec.z[1] = target[1] - t - s / 2;
  return spec;
}

namespace {

void fill_z(PentagonalSpec& spec, int pos, long long used, long long max_total,
            std::vector<PentagonalSpec>& out) {
  if (pos == spec.r) {
    out.push_back(spec);
    return;
  }
  for (long long zi = spec.y; used + zi <= max_total; zi++) {
    spec.z[static_cast<std::size_t>(pos)] = zi;
    fill_z(spec, pos + 1, used + zi, max_total, out);
  }
}

}  // namespace

std::vector<PentagonalSpec> all_pent_r_partite_specs(int r, long long max_total) {
  if (r < 2) throw std::invalid_argument("all_pent_r_partite_specs: r must be at least 2");
  std::vector<PentagonalSpec> out;
  PentagonalSpec spec;
  spec.r = r;
  spec.z.assign(static_cast<std::size_t>(r), 0);
  for (long long x = 0; x <= max_total; x++)
    for (long long y = x; x + 2 * y + static_cast<long long>(r) * y <= max_total; y++) {
      spec.x = x;
      spec.y = y;
      fill_z(spec, 0, x + 2 * y, max_total, out);
    }
  return out;
}

}  // namespace turan

