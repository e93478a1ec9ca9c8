#include "implcount/logic.hpp"

#include <limits>
#include <string>

#include "implcount/errors.hpp"

namespace implcount {

namespace {

constexpr std::array<TruthValue, 3> kAllValues{
    TruthValue::False, TruthValue::True, TruthValue::Unknown};

}  // namespace

std::span<const TruthValue> truth_values(Semantics sem) noexcept {
  return std::span<const TruthValue>(kAllValues.data(),
                                     static_cast<std::size_t>(radix(sem)));
}

bool is_legal(TruthValue v, Semantics sem) noexcept {
  return to_int(v) < radix(sem);
}

TruthValue truth_value_from_int(int digit, Semantics sem) {
  if (digit < 0 || digit >= radix(sem)) {
    throw DomainError("truth value " + std::to_string(digit) +
                      " is not legal in " + std::string(name(sem)) +
                      " semantics");
  }
  return static_cast<TruthValue>(digit);
}

std::string_view name(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::False:
      return "false";
    case TruthValue::True:
      return "true";
    case TruthValue::Unknown:
      return "unknown";
  }
  return "?";
}

std::string_view name(Semantics sem) noexcept {
  return sem == Semantics::Classical2 ? "classical" : "kleene";
}

TruthValue implies(TruthValue antecedent, TruthValue consequent,
                   Semantics sem) {
  if (!is_legal(antecedent, sem) || !is_legal(consequent, sem)) {
    throw DomainError("value 'unknown' is not legal in classical semantics");
  }
  return kImplicationTable[to_int(antecedent)][to_int(consequent)];
}

std::uint64_t valuation_count(int n, Semantics sem) {
  if (n < 0) throw DomainError("negative variable count");
  std::uint64_t count = 1;
  const auto r = static_cast<std::uint64_t>(radix(sem));
  for (int i = 0; i < n; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / r) {
      throw RangeError("too many valuations for n = " + std::to_string(n));
    }
    count *= r;
  }
  return count;
}

Valuation valuation_at(std::uint64_t row, int n, Semantics sem) {
  if (row >= valuation_count(n, sem)) {
    throw RangeError("valuation row " + std::to_string(row) +
                     " out of range");
  }
  const auto r = static_cast<std::uint64_t>(radix(sem));
  Valuation v(static_cast<std::size_t>(n), TruthValue::False);
  for (int i = n - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = static_cast<TruthValue>(row % r);
    row /= r;
  }
  return v;
}

bool next_valuation(Valuation& v, Semantics sem) noexcept {
  const int r = radix(sem);
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    const int digit = to_int(*it) + 1;
    if (digit < r) {
      *it = static_cast<TruthValue>(digit);
      return true;
    }
    *it = TruthValue::False;
  }
  return false;
}

}  // namespace implcount
