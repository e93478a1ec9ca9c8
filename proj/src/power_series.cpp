#include "implcount/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "implcount/errors.hpp"

namespace implcount {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw DomainError("truncation order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Coefficient(0));
}

PowerSeries::PowerSeries(std::vector<Coefficient> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw DomainError("a power series needs at least one coefficient");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

PowerSeries::PowerSeries(std::initializer_list<Coefficient> coeffs)
    : PowerSeries(std::vector<Coefficient>(coeffs)) {}

PowerSeries PowerSeries::constant(const Coefficient& c, int order) {
  PowerSeries out(order);
  out.coeffs_[0] = c;
  return out;
}

PowerSeries PowerSeries::monomial(const Coefficient& c, int degree,
                                  int order) {
  PowerSeries out(order);
  if (degree < 0) throw DomainError("negative monomial degree");
  if (degree <= order) out.coeffs_[static_cast<std::size_t>(degree)] = c;
  return out;
}

const Coefficient& PowerSeries::coefficient(int n) const {
  if (n < 0 || n > order()) {
    throw RangeError("coefficient x^" + std::to_string(n) +
                     " requested from a series known through x^" +
                     std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

PowerSeries PowerSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order()) {
    throw RangeError("cannot truncate a series of order " +
                     std::to_string(order()) + " to order " +
                     std::to_string(new_order));
  }
  return PowerSeries(std::vector<Coefficient>(
      coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

PowerSeries PowerSeries::shifted() const {
  std::vector<Coefficient> c;
  c.reserve(coeffs_.size() + 1);
  c.emplace_back(0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return PowerSeries(std::move(c));
}

bool PowerSeries::has_nonnegative_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) {
    return c.get_den() == 1 && sgn(c) >= 0;
  });
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Coefficient& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries out(n);
  // Integer-valued inputs are the common case; keep them on mpz.
  const bool integral =
      std::all_of(a.coeffs_.begin(), a.coeffs_.begin() + n + 1,
                  [](const auto& c) { return c.get_den() == 1; }) &&
      std::all_of(b.coeffs_.begin(), b.coeffs_.begin() + n + 1,
                  [](const auto& c) { return c.get_den() == 1; });
  for (int i = 0; i <= n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (integral) {
      mpz_class acc = 0;
      for (int k = 0; k <= i; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        mpz_addmul(acc.get_mpz_t(), a.coeffs_[uk].get_num_mpz_t(),
                   b.coeffs_[ui - uk].get_num_mpz_t());
      }
      out.coeffs_[ui] = acc;
    } else {
      Coefficient acc = 0;
      for (int k = 0; k <= i; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        acc += a.coeffs_[uk] * b.coeffs_[ui - uk];
      }
      out.coeffs_[ui] = acc;
    }
  }
  return out;
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) os << " + ";
    os << coeffs_[i];
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
  }
  os << " + O(x^" << coeffs_.size() << ")";
  return os.str();
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) { return a + b; }
PowerSeries sub(const PowerSeries& a, const PowerSeries& b) { return a - b; }
PowerSeries scale(const PowerSeries& a, const Coefficient& c) { return a * c; }
PowerSeries shift(const PowerSeries& a) { return a.shifted(); }
PowerSeries mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }

bool rational_sqrt(const Coefficient& q, Coefficient& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  root = Coefficient(num, den);
  root.canonicalize();
  return true;
}

PowerSeries sqrt(const PowerSeries& a) {
  if (sgn(a[0]) == 0) {
    throw DomainError("series square root with zero constant term is not "
                      "supported");
  }
  Coefficient y0;
  if (!rational_sqrt(a[0], y0)) {
    throw DomainError("constant term " + a[0].get_str() +
                      " is not the square of a rational");
  }
  std::vector<Coefficient> y(static_cast<std::size_t>(a.order()) + 1);
  y[0] = y0;
  const Coefficient inv_two_y0 = Coefficient(1) / (2 * y0);
  for (std::size_t n = 1; n < y.size(); ++n) {
    Coefficient rest = a.coefficients()[n];
    for (std::size_t k = 1; k < n; ++k) rest -= y[k] * y[n - k];
    y[n] = rest * inv_two_y0;
  }
  return PowerSeries(std::move(y));
}

}  // namespace implcount
