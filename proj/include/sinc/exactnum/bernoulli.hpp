#pragma once

#include <shared_mutex>
#include <vector>

#include "sinc/exactnum/rational.hpp"

namespace sinc::exactnum {

/// Memoised even-index Bernoulli numbers B_0, B_2, B_4, ...
///
/// Values come from the binomial recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0,
/// evaluated exactly. Concurrent readers share the table; extension takes an
/// exclusive lock, so results never depend on call interleaving.
class BernoulliTable {
 public:
  static constexpr int kDefaultMaxIndex = 512;

  explicit BernoulliTable(int max_index = kDefaultMaxIndex);

  /// B_{two_k}; two_k must be even with 2 <= two_k <= max_index().
  Rational get(int two_k) const;

  int max_index() const { return max_index_; }

 private:
  void extend_to(int two_k) const;

  int max_index_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<Rational> even_;  // even_[i] = B_{2i}
};

/// Process-wide table with the default maximum index.
const BernoulliTable& bernoulli_table();

/// B_{two_k} from the shared table.
Rational bernoulli(int two_k);

}  // namespace sinc::exactnum
