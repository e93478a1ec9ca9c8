#pragma once

#include <optional>
#include <string_view>

#include "implcount/logic.hpp"
#include "implcount/power_series.hpp"

namespace implcount {

/// Generating functions with known closed forms.
///
/// Kleene counts:    U = (1 - s) / 6
///                   F = (-2 - s + w) / 6
///                   T = (4 - s - w) / 6
///                   G = (1 - s) / 2
///   with s = sqrt(1 - 12x), w = sqrt(5 + 24x + 4s).
/// Classical counts: S = (-1 - q + v) / 4
///                   R = (3 - q - v) / 4
///                   G2 = R + S
///   with q = sqrt(1 - 8x), v = sqrt(2 + 2q + 8x).
/// I is the multiplicative identity 1.
enum class SeriesName { U, F, T, G, S, R, G2, I };

std::string_view name(SeriesName s) noexcept;
/// Case-insensitive: "t", "f", "u", "g", "r", "s", "g2", "i".
std::optional<SeriesName> parse_series_name(std::string_view text) noexcept;

/// Every series except I counts table entries.
constexpr bool is_count_series(SeriesName s) noexcept {
  return s != SeriesName::I;
}

/// Which logic a count series belongs to (I belongs to both; Kleene3 is
/// returned).
Semantics semantics_of(SeriesName s) noexcept;

/// The named closed form expanded exactly through x^order. Count series are
/// checked to have constant term 0 and non-negative integer coefficients;
/// a violation throws ConsistencyError. Throws DomainError for order < 1.
PowerSeries closed_form(SeriesName s, int order);

/// Series of true/false/unknown counts (Kleene: T, F, U; classical: R, S and
/// the zero series) and of the totals (G or G2) for `sem`.
SeriesName true_series(Semantics sem) noexcept;
SeriesName false_series(Semantics sem) noexcept;
SeriesName total_series(Semantics sem) noexcept;

}  // namespace implcount
