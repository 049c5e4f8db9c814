#pragma once
// Deterministic fork-join fold over an index range. Each worker folds a
// contiguous chunk; chunk results merge left to right, so the outcome does
// not depend on the worker count as long as the merge is associative and
// consistent with the per-index fold.

#include <thread>
#include <vector>

namespace turan {

inline int default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename T, typename Fold, typename Merge>
T parallel_fold(long long lo, long long hi, int workers, T init, Fold fold, Merge merge) {
  if (hi <= lo) return init;
  long long span = hi - lo;
  if (workers < 1) workers = 1;
  if (static_cast<long long>(workers) > span) workers = static_cast<int>(span);
  if (workers == 1) {
    T acc = init;
    for (long long i = lo; i < hi; i++) fold(acc, i);
    return acc;
  }
  std::vector<T> partial(static_cast<std::size_t>(workers), init);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; w++) {
    long long a = lo + span * w / workers;
    long long b = lo + span * (w + 1) / workers;
    pool.emplace_back([&partial, w, a, b, &fold]() {
      T& acc = partial[static_cast<std::size_t>(w)];
      for (long long i = a; i < b; i++) fold(acc, i);
    });
  }
  for (std::thread& t : pool) t.join();
  T acc = partial[0];
  for (int w = 1; w < workers; w++) acc = merge(acc, partial[static_cast<std::size_t>(w)]);
  return acc;
}

}  // namespace turan
