#pragma once

#include <vector>

#include "implcount/counting.hpp"

namespace implcount {

/// Count vectors for n = 1..n_max obtained by splitting every bracketing at
/// its root: a left table on k variables and a right table on n - k
/// variables multiply their row counts, and the root's value for each pair
/// of subformula values is read from the implication table.
class SequenceTable {
 public:
  SequenceTable(Semantics sem, int n_max);

  Semantics semantics() const noexcept { return semantics_; }
  int n_max() const noexcept { return static_cast<int>(rows_.size()); }
  /// Throws RangeError outside 1..n_max().
  const CountVector& row(int n) const;
  const std::vector<CountVector>& rows() const noexcept { return rows_; }

 private:
  Semantics semantics_;
  std::vector<CountVector> rows_;
};

/// Kleene t_n, f_n, u_n for n = 1..n_max. Throws DomainError if n_max < 1.
SequenceTable kleene_by_recurrence(int n_max);
/// Classical r_n, s_n for n = 1..n_max. Throws DomainError if n_max < 1.
SequenceTable classical_by_recurrence(int n_max);

}  // namespace implcount
