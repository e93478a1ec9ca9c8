#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <utility>

#include "implcount/bracketing.hpp"
#include "implcount/logic.hpp"

namespace implcount {

/// Exact tallies indexed by to_int(TruthValue).
using ValueCounts = std::array<mpz_class, 3>;

/// Per-n totals over the whole truth-table array: t, f, u entries and the
/// entry count g = radix^n * C_n. In classical semantics u is 0 and t, f are
/// the r, s counts.
struct CountVector {
  int n = 0;
  Semantics semantics = Semantics::Kleene3;
  mpz_class t, f, u, g;

  const mpz_class& r() const noexcept { return t; }
  const mpz_class& s() const noexcept { return f; }
  const mpz_class& count(TruthValue v) const noexcept;

  /// t + f + u == g == radix^n * C_n.
  bool consistent() const;

  static CountVector from_tallies(int n, Semantics sem, const ValueCounts& c);

  friend bool operator==(const CountVector&, const CountVector&) = default;
};

/// Largest n for which full enumeration is attempted. The defaults keep a
/// complete run to a few million tree-rows.
struct BruteBudget {
  int kleene_max_n = 8;
  int classical_max_n = 10;

  int max_n(Semantics sem) const noexcept {
    return sem == Semantics::Kleene3 ? kleene_max_n : classical_max_n;
  }
  /// Throws ResourceError if n is beyond the budget for `sem`.
  void require(int n, Semantics sem) const;
};

/// Tallies outcome values over every (bracketing, valuation) pair for n
/// variables by direct evaluation. Trees are split across `workers` threads
/// (0 = hardware concurrency); the result does not depend on the split.
CountVector brute_counts(int n, Semantics sem, const BruteBudget& budget = {},
                         unsigned workers = 0);

/// Outcome tallies of a single tree over all radix^n valuations, combining
/// child tallies through the implication table instead of enumerating rows.
ValueCounts tree_counts(const Bracketing& tree, Semantics sem);

/// (value of root's left subformula, value of root's right subformula).
using ColorClass = std::pair<TruthValue, TruthValue>;
using ColorClasses = std::map<ColorClass, mpz_class>;

/// Classifies every (tree, valuation) entry for n variables by the values of
/// the two subformulae at the root split; every one of the radix^2 classes is
/// present in the result (possibly with count 0). Throws DomainError for
/// n < 2.
ColorClasses color_class_counts(int n, Semantics sem,
                                 const BruteBudget& budget = {});

}  // namespace implcount
