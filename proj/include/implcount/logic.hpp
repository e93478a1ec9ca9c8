#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

namespace implcount {

enum class TruthValue : std::uint8_t { False = 0, True = 1, Unknown = 2 };

enum class Semantics { Classical2, Kleene3 };

constexpr int radix(Semantics sem) noexcept {
  return sem == Semantics::Classical2 ? 2 : 3;
}

/// Values legal under `sem`, in digit order 0, 1, 2.
std::span<const TruthValue> truth_values(Semantics sem) noexcept;

constexpr int to_int(TruthValue v) noexcept { return static_cast<int>(v); }

inline std::ostream& operator<<(std::ostream& os, TruthValue v) {
  return os << to_int(v);
}

/// Throws DomainError unless 0 <= digit < radix(sem).
TruthValue truth_value_from_int(int digit, Semantics sem);

bool is_legal(TruthValue v, Semantics sem) noexcept;

std::string_view name(TruthValue v) noexcept;
std::string_view name(Semantics sem) noexcept;

/// Kleene implication indexed [antecedent][consequent]. The classical
/// connective is the restriction of this table to {0, 1}.
inline constexpr std::array<std::array<TruthValue, 3>, 3> kImplicationTable{{
    // antecedent 0: everything follows from false
    {TruthValue::True, TruthValue::True, TruthValue::True},
    // antecedent 1
    {TruthValue::False, TruthValue::True, TruthValue::Unknown},
    // antecedent 2
    {TruthValue::Unknown, TruthValue::True, TruthValue::Unknown},
}};

/// Truth value of `antecedent => consequent`. Throws DomainError if either
/// value is illegal under `sem`.
TruthValue implies(TruthValue antecedent, TruthValue consequent, Semantics sem);

/// An assignment of truth values to p1..pn; position i holds p(i+1).
using Valuation = std::vector<TruthValue>;

/// Number of valuations of n variables, radix^n. Throws RangeError if it
/// does not fit in 64 bits.
std::uint64_t valuation_count(int n, Semantics sem);

/// The `row`-th valuation: a radix counter with p1 as the most significant
/// digit.
Valuation valuation_at(std::uint64_t row, int n, Semantics sem);

/// Advances `v` to the next valuation in row order. Returns false after the
/// last one (and leaves `v` all zeros).
bool next_valuation(Valuation& v, Semantics sem) noexcept;

}  // namespace implcount
