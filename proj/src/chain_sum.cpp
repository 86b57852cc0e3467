#include "baileykit/chain_sum.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace baileykit {

TSeries chain_sum(const ChainSpec& spec, const SumWindow& window, long order, SumStats* stats,
                  bool reverse) {
  if (spec.levels < 1) throw std::invalid_argument("a chain needs at least one level");
  const int levels = spec.levels;
  std::vector<std::map<long, TSeries>> table(static_cast<std::size_t>(levels));
  std::vector<std::map<long, TSeries>> edges(static_cast<std::size_t>(levels));

  auto edge = [&](int i, long d) -> const TSeries& {
    auto& cache = edges[static_cast<std::size_t>(i)];
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, spec.edge(i, d, order)).first;
    return it->second;
  };

  std::function<const TSeries&(int, long)> value = [&](int i, long n) -> const TSeries& {
    auto& cache = table[static_cast<std::size_t>(i)];
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    TSeries w = spec.weight(i, n, order);
    TSeries v;
    if (w.is_zero() && w.is_exact()) {
      v = w;
    } else if (i == levels - 1) {
      v = w;
    } else {
      TSeries inner = TSeries::zero(kExactOrder);
      for (long n2 = spec.lo; n2 <= n; ++n2) {
        const TSeries& below = value(i + 1, n2);
        if (below.is_zero() && below.is_exact()) continue;
        inner += edge(i, n - n2) * below;
      }
      v = w * inner;
    }
    return cache.emplace(n, std::move(v)).first->second;
  };

  SumWindow w = window;
  if (w.lo < spec.lo) w.lo = spec.lo;
  if (w.hi < w.lo) w.hi = w.lo;
  return sum_unilateral([&](long n) { return value(0, n); }, w, order, stats, reverse);
}

}  // namespace baileykit
