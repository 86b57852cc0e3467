#pragma once

#include <functional>

#include "baileykit/qfunctions.hpp"
#include "baileykit/series.hpp"

namespace baileykit {

/// Nested sum over lo <= n_L <= ... <= n_2 <= n_1 of
///   w_1(n_1) E_1(n_1 - n_2) w_2(n_2) E_2(n_2 - n_3) ... w_L(n_L),
/// evaluated level by level from the bottom so that each n_1 term costs O(n_1 - lo)
/// products per level. Levels are numbered 0 (outermost, n_1) to levels-1 (innermost).
struct ChainSpec {
  int levels = 1;
  long lo = 0;
  std::function<TSeries(int level, long n, long order)> weight;
  std::function<TSeries(int edge, long d, long order)> edge;
};

/// Sums the chain over n_1 with the given window (the outermost sum is the only
/// infinite one). Weights and edges must be known up to `order`.
TSeries chain_sum(const ChainSpec& spec, const SumWindow& window, long order,
                  SumStats* stats = nullptr, bool reverse = false);

}  // namespace baileykit
