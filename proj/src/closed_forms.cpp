#include "implcount/closed_forms.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "implcount/errors.hpp"

namespace implcount {

std::string_view name(SeriesName s) noexcept {
  switch (s) {
    case SeriesName::U: return "U";
    case SeriesName::F: return "F";
    case SeriesName::T: return "T";
    case SeriesName::G: return "G";
    case SeriesName::S: return "S";
    case SeriesName::R: return "R";
    case SeriesName::G2: return "G2";
    case SeriesName::I: return "I";
  }
  return "?";
}

std::optional<SeriesName> parse_series_name(std::string_view text) noexcept {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (const auto s : {SeriesName::U, SeriesName::F, SeriesName::T,
                       SeriesName::G, SeriesName::S, SeriesName::R,
                       SeriesName::G2, SeriesName::I}) {
    std::string n(name(s));
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (n == lower) return s;
  }
  return std::nullopt;
}

Semantics semantics_of(SeriesName s) noexcept {
  switch (s) {
    case SeriesName::S:
    case SeriesName::R:
    case SeriesName::G2:
      return Semantics::Classical2;
    default:
      return Semantics::Kleene3;
  }
}

SeriesName true_series(Semantics sem) noexcept {
  return sem == Semantics::Kleene3 ? SeriesName::T : SeriesName::R;
}
SeriesName false_series(Semantics sem) noexcept {
  return sem == Semantics::Kleene3 ? SeriesName::F : SeriesName::S;
}
SeriesName total_series(Semantics sem) noexcept {
  return sem == Semantics::Kleene3 ? SeriesName::G : SeriesName::G2;
}

namespace {

PowerSeries linear(long c0, long c1, int order) {
  return PowerSeries::constant(c0, order) +
         PowerSeries::monomial(c1, 1, order);
}

// sqrt(1 - 12x)
PowerSeries kleene_inner(int order) { return sqrt(linear(1, -12, order)); }

// sqrt(5 + 24x + 4 sqrt(1 - 12x))
PowerSeries kleene_outer(const PowerSeries& inner) {
  return sqrt(linear(5, 24, inner.order()) + Coefficient(4) * inner);
}

// sqrt(1 - 8x)
PowerSeries classical_inner(int order) { return sqrt(linear(1, -8, order)); }

// sqrt(2 + 2 sqrt(1 - 8x) + 8x)
PowerSeries classical_outer(const PowerSeries& inner) {
  return sqrt(linear(2, 8, inner.order()) + Coefficient(2) * inner);
}

PowerSeries expand(SeriesName s, int order) {
  const auto c = [order](long v) { return PowerSeries::constant(v, order); };
  switch (s) {
    case SeriesName::U:
      return (c(1) - kleene_inner(order)) * Coefficient(1, 6);
    case SeriesName::G:
      return (c(1) - kleene_inner(order)) * Coefficient(1, 2);
    case SeriesName::F: {
      const auto inner = kleene_inner(order);
      return (c(-2) - inner + kleene_outer(inner)) * Coefficient(1, 6);
    }
    case SeriesName::T: {
      const auto inner = kleene_inner(order);
      return (c(4) - inner - kleene_outer(inner)) * Coefficient(1, 6);
    }
    case SeriesName::S: {
      const auto inner = classical_inner(order);
      return (c(-1) - inner + classical_outer(inner)) * Coefficient(1, 4);
    }
    case SeriesName::R: {
      const auto inner = classical_inner(order);
      return (c(3) - inner - classical_outer(inner)) * Coefficient(1, 4);
    }
    case SeriesName::G2:
      return expand(SeriesName::R, order) + expand(SeriesName::S, order);
    case SeriesName::I:
      return c(1);
  }
  throw DomainError("unknown series name");
}

}  // namespace

PowerSeries closed_form(SeriesName s, int order) {
  if (order < 1) throw DomainError("closed-form order must be at least 1");
  PowerSeries out = expand(s, order);
  if (is_count_series(s)) {
    if (sgn(out[0]) != 0 || !out.has_nonnegative_integer_coefficients()) {
      throw ConsistencyError("closed form " + std::string(name(s)) +
                             " is not a count series: " + out.to_string());
    }
  }
  return out;
}

}  // namespace implcount
