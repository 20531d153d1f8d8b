#include "sinc/exactnum/bernoulli.hpp"

#include <mutex>
#include <string>

#include "sinc/errors.hpp"

namespace sinc::exactnum {

BernoulliTable::BernoulliTable(int max_index) : max_index_(max_index) {
  if (max_index < 2) throw DomainError("Bernoulli table needs max index >= 2");
  even_.emplace_back(1);
}

Rational BernoulliTable::get(int two_k) const {
  if (two_k < 2 || two_k % 2 != 0) {
    throw DomainError("Bernoulli index must be even and >= 2, got " + std::to_string(two_k));
  }
  if (two_k > max_index_) {
    throw DomainError("Bernoulli index " + std::to_string(two_k) + " exceeds configured maximum " +
                      std::to_string(max_index_));
  }
  const auto slot = static_cast<std::size_t>(two_k / 2);
  {
    std::shared_lock lock(mutex_);
    if (slot < even_.size()) return even_[slot];
  }
  extend_to(two_k);
  std::shared_lock lock(mutex_);
  return even_[slot];
}

void BernoulliTable::extend_to(int two_k) const {
  std::unique_lock lock(mutex_);
  const Rational b1(-1, 2);
  while (static_cast<int>(even_.size()) * 2 <= two_k) {
    const auto n = static_cast<unsigned>(even_.size() * 2);
    // sum_{j<n} C(n+1, j) B_j with B_odd = 0 beyond j = 1.
    Rational acc = Rational(mpz_class(binomial(n + 1, 1)), mpz_class(1)) * b1;
    for (unsigned j = 0; j < n; j += 2) {
      acc += Rational(binomial(n + 1, j), mpz_class(1)) * even_[j / 2];
    }
    even_.push_back(-acc / Rational(static_cast<long>(n) + 1));
  }
}

const BernoulliTable& bernoulli_table() {
  static const BernoulliTable table;
  return table;
}

Rational bernoulli(int two_k) { return bernoulli_table().get(two_k); }

}  // namespace sinc::exactnum
