#pragma once

// Test-only reference computations, independent of the library's own paths.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "implcount/bracketing.hpp"
#include "implcount/logic.hpp"

namespace implcount::oracle {

/// C_1..C_n by the convolution C_n = sum_{k=1}^{n-1} C_k C_{n-k}; index 0
/// unused.
inline std::vector<mpz_class> catalan_by_convolution(int n) {
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1, 0);
  c[1] = 1;
  for (int m = 2; m <= n; ++m) {
    for (int k = 1; k < m; ++k) c[m] += c[k] * c[m - k];
  }
  return c;
}

/// [x^k] (1 + a x)^(1/2) = binom(1/2, k) a^k, from the generalized binomial
/// theorem.
inline std::vector<mpq_class> binomial_sqrt_linear(long a, int order) {
  std::vector<mpq_class> out;
  mpq_class binom = 1;  // binom(1/2, k)
  mpq_class power = 1;  // a^k
  for (int k = 0; k <= order; ++k) {
    out.push_back(binom * power);
    binom *= mpq_class(1, 2) - k;
    binom /= k + 1;
    power *= a;
  }
  return out;
}

/// Kleene (t, f, u) by the explicit convolution sums, with no reference to
/// the implication table. Index 0 unused.
struct KleeneRow {
  mpz_class t, f, u;
};
inline std::vector<KleeneRow> kleene_explicit(int n_max) {
  std::vector<KleeneRow> rows(static_cast<std::size_t>(n_max) + 1);
  rows[1] = {1, 1, 1};
  for (int n = 2; n <= n_max; ++n) {
    auto& r = rows[n];
    r = {0, 0, 0};
    for (int k = 1; k < n; ++k) {
      const auto& a = rows[k];
      const auto& b = rows[n - k];
      const mpz_class gb = b.t + b.f + b.u;
      r.f += a.t * b.f;
      r.u += a.t * b.u + a.u * b.f + a.u * b.u;
      r.t += a.t * b.t + a.f * gb + a.u * b.t;
    }
  }
  return rows;
}

struct ClassicalRow {
  mpz_class r, s;
};
inline std::vector<ClassicalRow> classical_explicit(int n_max) {
  std::vector<ClassicalRow> rows(static_cast<std::size_t>(n_max) + 1);
  rows[1] = {1, 1};
  for (int n = 2; n <= n_max; ++n) {
    auto& out = rows[n];
    out = {0, 0};
    for (int k = 1; k < n; ++k) {
      const auto& a = rows[k];
      const auto& b = rows[n - k];
      out.s += a.r * b.s;
      out.r += a.r * b.r + a.s * (b.r + b.s);
    }
  }
  return rows;
}

/// Tallies by the public evaluate() over valuation_at() rows, optionally
/// skipping rows that contain a value outside `allowed`.
inline std::array<std::uint64_t, 3> tally_by_evaluate(int n, Semantics sem,
                                                      int allowed_radix) {
  std::array<std::uint64_t, 3> out{};
  const auto rows = valuation_count(n, sem);
  for (const auto& tree : enumerate_bracketings(n)) {
    for (std::uint64_t row = 0; row < rows; ++row) {
      const auto v = valuation_at(row, n, sem);
      bool keep = true;
      for (const auto x : v) keep = keep && to_int(x) < allowed_radix;
      if (!keep) continue;
      ++out[to_int(evaluate(tree, v, sem))];
    }
  }
  return out;
}

/// Frozen x^1..x^9 coefficients of the closed forms, cross-checked against
/// an independent symbolic expansion. Index 0 is the constant term.
inline const std::vector<long> kT{0, 1, 5, 30, 229, 1938, 17530, 165852,
                                  1621133, 16242474};
inline const std::vector<long> kF{0, 1, 1, 6, 41, 330, 2882, 26604, 255313,
                                  2521986};
inline const std::vector<long> kU{0, 1, 3, 18, 135, 1134, 10206, 96228,
                                  938223, 9382230};
inline const std::vector<long> kG{0, 3, 9, 54, 405, 3402, 30618, 288684,
                                  2814669, 28146690};
inline const std::vector<long> kS{0, 1, 1, 4, 19, 104, 614, 3816, 24595,
                                  162896};
inline const std::vector<long> kR{0, 1, 3, 12, 61, 344, 2074, 13080, 85229,
                                  569264};

inline mpq_class random_rational(std::mt19937_64& rng, long span = 20) {
  const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
  const long den = static_cast<long>(rng() % 9) + 1;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace implcount::oracle
