#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace implcount {

/// Exact rational coefficient, always in canonical reduced form.
using Coefficient = mpq_class;

/// A formal power series known exactly through x^order.
///
/// The truncation order is part of the value: binary operations produce the
/// smaller of the two orders, and asking for a coefficient beyond the order
/// is an error rather than a silent zero.
class PowerSeries {
 public:
  /// The zero series known through x^order.
  explicit PowerSeries(int order);
  /// Coefficients c[0..], order = c.size() - 1. Throws DomainError if empty.
  explicit PowerSeries(std::vector<Coefficient> coeffs);
  PowerSeries(std::initializer_list<Coefficient> coeffs);

  static PowerSeries constant(const Coefficient& c, int order);
  /// c * x^degree; the zero series if degree > order.
  static PowerSeries monomial(const Coefficient& c, int degree, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// [x^n]. Throws RangeError if n < 0 or n > order().
  const Coefficient& coefficient(int n) const;
  const Coefficient& operator[](int n) const { return coefficient(n); }

  std::span<const Coefficient> coefficients() const noexcept {
    return coeffs_;
  }

  /// The same series known only through x^order (order <= this->order()).
  PowerSeries truncated(int order) const;

  /// Multiplication by x; the order grows by one.
  PowerSeries shifted() const;

  /// True when every coefficient is an integer >= 0.
  bool has_nonnegative_integer_coefficients() const;

  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(const Coefficient& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) {
    return a += b;
  }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) {
    return a -= b;
  }
  friend PowerSeries operator*(PowerSeries a, const Coefficient& c) {
    return a *= c;
  }
  friend PowerSeries operator*(const Coefficient& c, PowerSeries a) {
    return a *= c;
  }
  /// Truncated Cauchy product.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  /// Same order and identical coefficients.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "c0 + c1*x + ..." for diagnostics.
  std::string to_string() const;

 private:
  std::vector<Coefficient> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const PowerSeries& s) {
  return os << s.to_string();
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, const Coefficient& c);
PowerSeries shift(const PowerSeries& a);
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

/// The series y with y*y = a and y[0] >= 0, by solving
/// 2*y0*yn = an - sum_{k=1}^{n-1} yk*y(n-k) for each n in turn.
/// Throws DomainError if a[0] is zero, negative or not a rational square.
PowerSeries sqrt(const PowerSeries& a);

/// Non-negative rational square root of q if it exists.
bool rational_sqrt(const Coefficient& q, Coefficient& root);

}  // namespace implcount
