#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "baileykit/corpus.hpp"
#include "baileykit/qfunctions.hpp"
#include "baileykit/rational.hpp"
#include "baileykit/series.hpp"

namespace baileykit {

/// Which parts may appear, and optionally a minimal gap between consecutive parts.
struct PartitionSpec {
  std::function<bool(long)> allowed;
  std::optional<long> min_difference;
};

/// Number of partitions of n for n = 0..n_max, by dynamic programming over the parts.
std::vector<Integer> count_partitions(const PartitionSpec& spec, long n_max);

/// sum over j of (-1)^j q^{j(3j-1)/2}, built from the pentagonal numbers directly and
/// truncated at t-order `order`.
TSeries pentagonal_expansion(long order);

struct ResummationReport {
  bool identical = true;
  std::string detail;
};

/// Rebuilds both sides with doubled windows and with every sum accumulated in reverse,
/// and checks that no coefficient up to inst.order changes.
ResummationReport resummation_check(const IdentityInstance& inst);

/// The same check for a single unilateral sum.
ResummationReport resummation_check(const TermFn& term, const SumWindow& window, long order);

}  // namespace baileykit
