#include "implcount/recurrence.hpp"

#include <string>

#include "implcount/errors.hpp"

namespace implcount {

SequenceTable::SequenceTable(Semantics sem, int n_max) : semantics_(sem) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  const auto values = truth_values(sem);

  std::vector<ValueCounts> tallies(static_cast<std::size_t>(n_max) + 1);
  for (const auto v : values) tallies[1][to_int(v)] = 1;

  for (int n = 2; n <= n_max; ++n) {
    auto& out = tallies[static_cast<std::size_t>(n)];
    for (int k = 1; k < n; ++k) {
      const auto& left = tallies[static_cast<std::size_t>(k)];
      const auto& right = tallies[static_cast<std::size_t>(n - k)];
      for (const auto a : values) {
        for (const auto b : values) {
          mpz_addmul(out[to_int(implies(a, b, sem))].get_mpz_t(),
                     left[to_int(a)].get_mpz_t(), right[to_int(b)].get_mpz_t());
        }
      }
    }
  }

  rows_.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    rows_.push_back(CountVector::from_tallies(
        n, sem, tallies[static_cast<std::size_t>(n)]));
  }
}

const CountVector& SequenceTable::row(int n) const {
  if (n < 1 || n > n_max()) {
    throw RangeError("row " + std::to_string(n) + " outside 1.." +
                     std::to_string(n_max()));
  }
  return rows_[static_cast<std::size_t>(n - 1)];
}

SequenceTable kleene_by_recurrence(int n_max) {
  return SequenceTable(Semantics::Kleene3, n_max);
}

SequenceTable classical_by_recurrence(int n_max) {
  return SequenceTable(Semantics::Classical2, n_max);
}

}  // namespace implcount
