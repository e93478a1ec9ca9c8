#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "implcount/closed_forms.hpp"
#include "implcount/counting.hpp"
#include "implcount/power_series.hpp"

namespace implcount {

enum class Generator { T, F, U, R, S };

std::string_view name(Generator g) noexcept;
SeriesName series_of(Generator g) noexcept;
Semantics semantics_of(Generator g) noexcept;
/// {T, F, U} for Kleene3, {R, S} for Classical2.
std::span<const Generator> generators(Semantics sem) noexcept;

/// A finite product of generator powers, stored as an exponent vector. The
/// empty product is the identity I(x) = 1.
class MonoidElement {
 public:
  explicit MonoidElement(Semantics logic) : logic_(logic) {}
  /// Throws DomainError if a generator does not belong to `logic`.
  MonoidElement(Semantics logic, std::map<Generator, unsigned> exponents);

  static MonoidElement identity(Semantics logic) {
    return MonoidElement(logic);
  }
  static MonoidElement power(Generator g, unsigned exponent = 1);

  Semantics logic() const noexcept { return logic_; }
  unsigned exponent(Generator g) const noexcept;
  /// Nonzero exponents only.
  const std::map<Generator, unsigned>& exponents() const noexcept {
    return exponents_;
  }
  unsigned total_degree() const noexcept;
  bool is_identity() const noexcept { return exponents_.empty(); }

  /// Adds exponent vectors. Throws DomainError across logics.
  friend MonoidElement operator*(const MonoidElement& a,
                                 const MonoidElement& b);

  /// "I", "T", "T^2*U", ...
  std::string to_string() const;

  friend bool operator==(const MonoidElement&,
                         const MonoidElement&) = default;
  friend auto operator<=>(const MonoidElement& a, const MonoidElement& b) {
    return std::tie(a.logic_, a.exponents_) <=> std::tie(b.logic_, b.exponents_);
  }

 private:
  Semantics logic_;
  std::map<Generator, unsigned> exponents_;
};

/// Adds `delta` to one coefficient of one generator series before it is used.
/// Exists so that a verification run can be shown to detect corruption.
struct GeneratorTamper {
  Generator generator = Generator::T;
  int index = 1;
  long delta = 1;
};

/// Turns monoid elements into power series known through a fixed order.
/// Generator powers are memoized; concurrent use is serialized internally.
class Realizer {
 public:
  explicit Realizer(int order,
                    std::optional<GeneratorTamper> tamper = std::nullopt);

  int order() const noexcept { return order_; }

  const PowerSeries& generator_series(Generator g);
  /// G for Kleene3, G2 for Classical2. Never tampered.
  const PowerSeries& total_series(Semantics sem);
  /// Any closed form, tampered if it is the tampered generator's series.
  const PowerSeries& series(SeriesName s);
  const PowerSeries& power(Generator g, unsigned exponent);
  PowerSeries identity() const;

  PowerSeries realize(const MonoidElement& e);

 private:
  const PowerSeries& series_locked(SeriesName s);
  const PowerSeries& power_locked(Generator g, unsigned exponent);

  int order_;
  std::optional<GeneratorTamper> tamper_;
  std::mutex mutex_;
  std::map<SeriesName, PowerSeries> series_;
  std::map<std::pair<Generator, unsigned>, PowerSeries> powers_;
};

/// First place a claim failed, with exact values on both sides.
struct Witness {
  int n = 0;
  std::string subject;
  std::string lhs;
  std::string relation;
  std::string rhs;
};

struct VerificationReport {
  std::string claim;
  int order = 0;
  std::size_t cases = 0;
  std::optional<Witness> counterexample;
  std::string note;

  bool verified() const noexcept { return !counterexample.has_value(); }
};

std::ostream& operator<<(std::ostream& os, const VerificationReport& r);

/// Finite slice of the monoid used as the sample: every exponent vector of
/// total degree <= max_total_degree, then `random_count` vectors with
/// exponents drawn uniformly from 0..random_max_exponent.
struct SampleSpec {
  unsigned max_total_degree = 5;
  unsigned random_count = 100;
  unsigned random_max_exponent = 8;
  std::uint64_t seed = 2024;
  /// Random partners per element when forming pairs and triples.
  unsigned partners = 8;
};

/// Deterministic for a given spec; starts with the identity, no duplicates.
std::vector<MonoidElement> sample_elements(Semantics logic,
                                           const SampleSpec& spec);

using ElementPair = std::pair<MonoidElement, MonoidElement>;
using ElementTriple = std::tuple<MonoidElement, MonoidElement, MonoidElement>;

/// Each element with every generator, the identity, and `spec.partners`
/// random elements of the sample.
std::vector<ElementPair> sample_pairs(std::span<const MonoidElement> elements,
                                      const SampleSpec& spec);
/// Each element followed by `spec.partners` random pairs of partners.
std::vector<ElementTriple> sample_triples(
    std::span<const MonoidElement> elements, const SampleSpec& spec);

/// [x^n](A B) == [x^n](B A) for 0 <= n <= order, products formed on series.
VerificationReport verify_commutativity(Realizer& realizer,
                                        std::span<const ElementPair> pairs,
                                        int order);

/// [x^n]((A B) C) == [x^n](A (B C)) for 0 <= n <= order.
VerificationReport verify_associativity(
    Realizer& realizer, std::span<const ElementTriple> triples, int order);

/// realize(a * b) == realize(a) realize(b): exponent addition is
/// multiplication of series.
VerificationReport verify_morphism(Realizer& realizer,
                                   std::span<const ElementPair> pairs,
                                   int order);

/// For 2 <= n <= order, [x^n]realize(e) is a non-negative integer strictly
/// below [x^n]G (G2 for classical elements). Throws DomainError for the
/// identity, which is outside the bound's scope.
VerificationReport verify_bound(Realizer& realizer, const MonoidElement& e,
                                int order);

/// verify_bound over every non-identity element, merged into one report.
VerificationReport verify_bounds(Realizer& realizer,
                                 std::span<const MonoidElement> elements,
                                 int order);

/// For 2 <= k <= k_max, coefficientwise through `order`:
///   3 U^k = U^(k-1) - x U^(k-2)
///   F^k   = 2 F^(k-1) U - F^(k-1) + x F^(k-2)
///   T^k   = 2/3 T^(k-1) G^2 - 2/3 T^(k-1) G F + T^(k-1) F^2
/// plus, as a separate report, the T identity with the extra term
/// x T^(k-1) on the right. Throws DomainError for k_max < 2.
std::vector<VerificationReport> verify_power_identities(Realizer& realizer,
                                                        int k_max, int order);

struct PartitionSpec {
  /// Largest n at which brute-force color classes are compared with series
  /// convolutions; further capped by the budget.
  int classical_color_n_max = 9;
  int kleene_color_n_max = 7;
  BruteBudget budget{};
};

/// T + F + U = G, G = 3U, R + S = G2, RR + RS + SR + SS = G2^2,
/// G2^2 = G2 - 2x and G^2 = G - 3x (the color classes partition every
/// entry for n >= 2), and brute-force color classes equal the matching
/// convolutions for 2 <= n <= min(order, color bound).
std::vector<VerificationReport> verify_partitions(
    Realizer& realizer, int order, const PartitionSpec& spec = {});

/// For each (P, A): [x^n](P A) < [x^n]G (G2 in classical mode) for
/// 2 <= n <= order.
VerificationReport verify_ideal_samples(Realizer& realizer,
                                        std::span<const ElementPair> samples,
                                        int order);

/// Generator powers P^k (k = 1..max_power) against every sampled element.
std::vector<ElementPair> sample_ideal_pairs(
    Semantics logic, std::span<const MonoidElement> elements,
    unsigned max_power);

/// For 1 <= a, k <= max_exponent and 2 <= n <= order:
///   [x^n](U^a (UF)^k) <= [x^n]U^k
///   [x^n](U^a (UT)^k) <= [x^n]T^k
///   [x^n](F^a (FT)^k) <= [x^n]T^k
/// with strict inequality wherever the right side is nonzero.
VerificationReport verify_substitution_chains(Realizer& realizer,
                                              unsigned max_exponent,
                                              int order);

struct MonoidSuiteConfig {
  /// Bound, commutativity, associativity and ideal checks run through
  /// x^order; power identities and partitions through x^identity_order.
  int order = 40;
  int identity_order = 50;
  int k_max = 6;
  SampleSpec sample{};
  PartitionSpec partitions{};
  std::optional<GeneratorTamper> tamper;
};

/// Every suite for both logics.
std::vector<VerificationReport> run_monoid_suite(const MonoidSuiteConfig& cfg);

}  // namespace implcount
