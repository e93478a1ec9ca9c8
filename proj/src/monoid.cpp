#include "implcount/monoid.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "implcount/errors.hpp"

namespace implcount {

std::string_view name(Generator g) noexcept {
  switch (g) {
    case Generator::T: return "T";
    case Generator::F: return "F";
    case Generator::U: return "U";
    case Generator::R: return "R";
    case Generator::S: return "S";
  }
  return "?";
}

SeriesName series_of(Generator g) noexcept {
  switch (g) {
    case Generator::T: return SeriesName::T;
    case Generator::F: return SeriesName::F;
    case Generator::U: return SeriesName::U;
    case Generator::R: return SeriesName::R;
    case Generator::S: return SeriesName::S;
  }
  return SeriesName::I;
}

Semantics semantics_of(Generator g) noexcept {
  return semantics_of(series_of(g));
}

std::span<const Generator> generators(Semantics sem) noexcept {
  static constexpr std::array<Generator, 3> kKleene{Generator::T, Generator::F,
                                                    Generator::U};
  static constexpr std::array<Generator, 2> kClassical{Generator::R,
                                                       Generator::S};
  if (sem == Semantics::Kleene3) return kKleene;
  return kClassical;
}

// ---------------------------------------------------------------------------
// MonoidElement

MonoidElement::MonoidElement(Semantics logic,
                             std::map<Generator, unsigned> exponents)
    : logic_(logic) {
  for (const auto& [g, e] : exponents) {
    if (semantics_of(g) != logic) {
      throw DomainError("generator " + std::string(name(g)) +
                        " does not belong to " + std::string(name(logic)) +
                        " logic");
    }
    if (e > 0) exponents_.emplace(g, e);
  }
}

MonoidElement MonoidElement::power(Generator g, unsigned exponent) {
  return MonoidElement(semantics_of(g), {{g, exponent}});
}

unsigned MonoidElement::exponent(Generator g) const noexcept {
  const auto it = exponents_.find(g);
  return it == exponents_.end() ? 0 : it->second;
}

unsigned MonoidElement::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& [g, e] : exponents_) d += e;
  return d;
}

MonoidElement operator*(const MonoidElement& a, const MonoidElement& b) {
  if (a.logic_ != b.logic_) {
    throw DomainError("cannot multiply elements of different logics");
  }
  MonoidElement out = a;
  for (const auto& [g, e] : b.exponents_) out.exponents_[g] += e;
  return out;
}

std::string MonoidElement::to_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (const auto& [g, e] : exponents_) {
    if (!out.empty()) out += "*";
    out += name(g);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Realizer

Realizer::Realizer(int order, std::optional<GeneratorTamper> tamper)
    : order_(order), tamper_(tamper) {
  if (order < 1) throw DomainError("realizer order must be at least 1");
}

const PowerSeries& Realizer::series_locked(SeriesName s) {
  if (auto it = series_.find(s); it != series_.end()) return it->second;
  PowerSeries p = closed_form(s, order_);
  if (tamper_ && series_of(tamper_->generator) == s &&
      tamper_->index >= 0 && tamper_->index <= order_) {
    std::vector<Coefficient> c(p.coefficients().begin(),
                               p.coefficients().end());
    c[static_cast<std::size_t>(tamper_->index)] += tamper_->delta;
    p = PowerSeries(std::move(c));
  }
  return series_.emplace(s, std::move(p)).first->second;
}

const PowerSeries& Realizer::series(SeriesName s) {
  std::lock_guard lock(mutex_);
  return series_locked(s);
}

const PowerSeries& Realizer::generator_series(Generator g) {
  return series(series_of(g));
}

const PowerSeries& Realizer::total_series(Semantics sem) {
  return series(implcount::total_series(sem));
}

PowerSeries Realizer::identity() const {
  return PowerSeries::constant(1, order_);
}

const PowerSeries& Realizer::power_locked(Generator g, unsigned exponent) {
  const auto key = std::make_pair(g, exponent);
  if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  PowerSeries p = exponent == 0
                      ? identity()
                      : power_locked(g, exponent - 1) * series_locked(series_of(g));
  return powers_.emplace(key, std::move(p)).first->second;
}

const PowerSeries& Realizer::power(Generator g, unsigned exponent) {
  std::lock_guard lock(mutex_);
  return power_locked(g, exponent);
}

PowerSeries Realizer::realize(const MonoidElement& e) {
  PowerSeries out = identity();
  for (const auto& [g, k] : e.exponents()) out = out * power(g, k);
  return out;
}

// ---------------------------------------------------------------------------
// Reports

std::ostream& operator<<(std::ostream& os, const VerificationReport& r) {
  if (r.verified()) {
    os << "VERIFIED        " << r.claim << " (through x^" << r.order << ", "
       << r.cases << " cases)";
  } else {
    const auto& w = *r.counterexample;
    os << "COUNTEREXAMPLE  " << r.claim << " (through x^" << r.order
       << "): n=" << w.n << ", " << w.subject << ": " << w.lhs << ' '
       << w.relation << ' ' << w.rhs;
  }
  if (!r.note.empty()) os << "\n                " << r.note;
  return os;
}

namespace {

void require_order(const Realizer& realizer, int order) {
  if (order < 0 || order > realizer.order()) {
    throw RangeError("check order " + std::to_string(order) +
                     " exceeds the realizer order " +
                     std::to_string(realizer.order()));
  }
}

// First n in [from, order] where lhs and rhs differ.
std::optional<Witness> first_difference(const PowerSeries& lhs,
                                        const PowerSeries& rhs, int from,
                                        int order, const std::string& subject) {
  for (int n = from; n <= order; ++n) {
    if (lhs[n] != rhs[n]) {
      return Witness{n, subject, lhs[n].get_str(), "!=", rhs[n].get_str()};
    }
  }
  return std::nullopt;
}

// First n in [2, order] where value is not a non-negative integer strictly
// below bound.
std::optional<Witness> first_bound_violation(const PowerSeries& value,
                                             const PowerSeries& bound,
                                             int order,
                                             const std::string& subject) {
  for (int n = 2; n <= order; ++n) {
    const auto& c = value[n];
    if (c.get_den() != 1 || sgn(c) < 0) {
      return Witness{n, subject, c.get_str(), "is not a count;",
                     "bound " + bound[n].get_str()};
    }
    if (!(c < bound[n])) {
      return Witness{n, subject, c.get_str(), "!<", bound[n].get_str()};
    }
  }
  return std::nullopt;
}

VerificationReport equality_report(std::string claim, const PowerSeries& lhs,
                                   const PowerSeries& rhs, int order,
                                   const std::string& subject = "series") {
  VerificationReport r{std::move(claim), order, 1, std::nullopt, {}};
  r.counterexample = first_difference(lhs, rhs, 0, order, subject);
  return r;
}

std::string logic_tag(Semantics sem) {
  return "[" + std::string(name(sem)) + "] ";
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace

// ---------------------------------------------------------------------------
// Samples

std::vector<MonoidElement> sample_elements(Semantics logic,
                                           const SampleSpec& spec) {
  const auto gens = generators(logic);
  std::vector<MonoidElement> out;
  std::set<MonoidElement> seen;
  const auto push = [&](MonoidElement e) {
    if (seen.insert(e).second) out.push_back(std::move(e));
  };

  // Exponent vectors by increasing total degree.
  for (unsigned degree = 0; degree <= spec.max_total_degree; ++degree) {
    std::vector<unsigned> exps(gens.size(), 0);
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i,
                                                          unsigned left) {
      if (i + 1 == gens.size()) {
        exps[i] = left;
        std::map<Generator, unsigned> m;
        for (std::size_t j = 0; j < gens.size(); ++j) m[gens[j]] = exps[j];
        push(MonoidElement(logic, m));
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        exps[i] = e;
        fill(i + 1, left - e);
      }
    };
    fill(0, degree);
  }

  std::mt19937_64 rng(spec.seed);
  for (unsigned i = 0; i < spec.random_count; ++i) {
    std::map<Generator, unsigned> m;
    for (const auto g : gens) {
      m[g] = static_cast<unsigned>(draw(rng, spec.random_max_exponent + 1));
    }
    push(MonoidElement(logic, m));
  }
  return out;
}

std::vector<ElementPair> sample_pairs(std::span<const MonoidElement> elements,
                                      const SampleSpec& spec) {
  std::vector<ElementPair> out;
  if (elements.empty()) return out;
  std::mt19937_64 rng(spec.seed + 1);
  for (const auto& e : elements) {
    out.emplace_back(e, MonoidElement::identity(e.logic()));
    for (const auto g : generators(e.logic())) {
      out.emplace_back(e, MonoidElement::power(g));
    }
    for (unsigned p = 0; p < spec.partners; ++p) {
      out.emplace_back(e, elements[draw(rng, elements.size())]);
    }
  }
  return out;
}

std::vector<ElementTriple> sample_triples(
    std::span<const MonoidElement> elements, const SampleSpec& spec) {
  std::vector<ElementTriple> out;
  if (elements.empty()) return out;
  std::mt19937_64 rng(spec.seed + 2);
  for (const auto& e : elements) {
    for (unsigned p = 0; p < spec.partners; ++p) {
      const auto& b = elements[draw(rng, elements.size())];
      const auto& c = elements[draw(rng, elements.size())];
      out.emplace_back(e, b, c);
    }
  }
  return out;
}

std::vector<ElementPair> sample_ideal_pairs(
    Semantics logic, std::span<const MonoidElement> elements,
    unsigned max_power) {
  std::vector<ElementPair> out;
  for (const auto g : generators(logic)) {
    for (unsigned k = 1; k <= max_power; ++k) {
      for (const auto& a : elements) {
        if (a.logic() == logic) out.emplace_back(MonoidElement::power(g, k), a);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verifiers

VerificationReport verify_commutativity(Realizer& realizer,
                                        std::span<const ElementPair> pairs,
                                        int order) {
  require_order(realizer, order);
  VerificationReport r{"commutativity A*B = B*A", order, 0, std::nullopt, {}};
  for (const auto& [a, b] : pairs) {
    const auto sa = realizer.realize(a);
    const auto sb = realizer.realize(b);
    ++r.cases;
    r.counterexample = first_difference(
        sa * sb, sb * sa, 0, order, a.to_string() + " vs " + b.to_string());
    if (r.counterexample) break;
  }
  return r;
}

VerificationReport verify_associativity(
    Realizer& realizer, std::span<const ElementTriple> triples, int order) {
  require_order(realizer, order);
  VerificationReport r{"associativity (A*B)*C = A*(B*C)", order, 0,
                       std::nullopt, {}};
  for (const auto& [a, b, c] : triples) {
    const auto sa = realizer.realize(a);
    const auto sb = realizer.realize(b);
    const auto sc = realizer.realize(c);
    ++r.cases;
    r.counterexample = first_difference(
        (sa * sb) * sc, sa * (sb * sc), 0, order,
        a.to_string() + ", " + b.to_string() + ", " + c.to_string());
    if (r.counterexample) break;
  }
  return r;
}

VerificationReport verify_morphism(Realizer& realizer,
                                   std::span<const ElementPair> pairs,
                                   int order) {
  require_order(realizer, order);
  VerificationReport r{"realize(A*B) = realize(A) realize(B)", order, 0,
                       std::nullopt, {}};
  for (const auto& [a, b] : pairs) {
    ++r.cases;
    r.counterexample = first_difference(
        realizer.realize(a * b), realizer.realize(a) * realizer.realize(b), 0,
        order, a.to_string() + " * " + b.to_string());
    if (r.counterexample) break;
  }
  return r;
}

VerificationReport verify_bound(Realizer& realizer, const MonoidElement& e,
                                int order) {
  if (e.is_identity()) {
    throw DomainError("the coefficient bound does not apply to the identity");
  }
  require_order(realizer, order);
  const std::string total(name(total_series(e.logic())));
  VerificationReport r{"[x^n]A < [x^n]" + total + " for 2 <= n", order, 1,
                       std::nullopt, {}};
  r.counterexample =
      first_bound_violation(realizer.realize(e), realizer.total_series(e.logic()),
                            order, e.to_string());
  return r;
}

VerificationReport verify_bounds(Realizer& realizer,
                                 std::span<const MonoidElement> elements,
                                 int order) {
  require_order(realizer, order);
  const std::string total(
      elements.empty() ? "G" : name(total_series(elements.front().logic())));
  VerificationReport r{"[x^n]A < [x^n]" + total +
                           " for 2 <= n, every sampled A != I",
                       order, 0, std::nullopt, {}};
  for (const auto& e : elements) {
    if (e.is_identity()) continue;
    const auto single = verify_bound(realizer, e, order);
    ++r.cases;
    if (!single.verified()) {
      r.counterexample = single.counterexample;
      break;
    }
  }
  return r;
}

std::vector<VerificationReport> verify_power_identities(Realizer& realizer,
                                                        int k_max, int order) {
  if (k_max < 2) throw DomainError("power identities need k_max >= 2");
  require_order(realizer, order);

  const auto& g = realizer.total_series(Semantics::Kleene3);
  const auto& f = realizer.generator_series(Generator::F);
  const auto& u = realizer.generator_series(Generator::U);
  const auto pow = [&](Generator gen, int k) -> const PowerSeries& {
    return realizer.power(gen, static_cast<unsigned>(k));
  };
  const Coefficient two_thirds(2, 3);

  std::vector<VerificationReport> out{
      {"3U^k = U^(k-1) - x U^(k-2)", order, 0, std::nullopt, {}},
      {"F^k = 2 F^(k-1) U - F^(k-1) + x F^(k-2)", order, 0, std::nullopt, {}},
      {"T^k = 2/3 T^(k-1) G^2 - 2/3 T^(k-1) G F + T^(k-1) F^2", order, 0,
       std::nullopt, {}},
      {"T^k = 2/3 T^(k-1) G^2 - 2/3 T^(k-1) G F + T^(k-1) F^2 + x T^(k-1)",
       order, 0, std::nullopt, {}},
  };

  const auto check = [&](VerificationReport& r, const PowerSeries& lhs,
                         const PowerSeries& rhs, int k) {
    if (r.counterexample) return;
    ++r.cases;
    r.counterexample =
        first_difference(lhs, rhs, 0, order, "k=" + std::to_string(k));
  };

  for (int k = 2; k <= k_max; ++k) {
    check(out[0], Coefficient(3) * pow(Generator::U, k),
          pow(Generator::U, k - 1) - shift(pow(Generator::U, k - 2)), k);

    const auto& fk1 = pow(Generator::F, k - 1);
    check(out[1], pow(Generator::F, k),
          Coefficient(2) * (fk1 * u) - fk1 + shift(pow(Generator::F, k - 2)),
          k);

    const auto& tk1 = pow(Generator::T, k - 1);
    const auto stated = two_thirds * (tk1 * (g * g)) -
                        two_thirds * (tk1 * (g * f)) + tk1 * (f * f);
    check(out[2], pow(Generator::T, k), stated, k);
    check(out[3], pow(Generator::T, k), stated + shift(tk1), k);
  }
  out[2].note =
      "the right side as written omits x T^(k-1); see the following check";
  return out;
}

std::vector<VerificationReport> verify_partitions(Realizer& realizer,
                                                  int order,
                                                  const PartitionSpec& spec) {
  require_order(realizer, order);
  const auto& t = realizer.series(SeriesName::T);
  const auto& f = realizer.series(SeriesName::F);
  const auto& u = realizer.series(SeriesName::U);
  const auto& g = realizer.series(SeriesName::G);
  const auto& r = realizer.series(SeriesName::R);
  const auto& s = realizer.series(SeriesName::S);
  const auto& g2 = realizer.series(SeriesName::G2);
  const auto x = [&](long c) {
    return PowerSeries::monomial(c, 1, realizer.order());
  };

  std::vector<VerificationReport> out;
  out.push_back(equality_report("T + F + U = G", t + f + u, g, order));
  out.push_back(equality_report("G = 3U", g, Coefficient(3) * u, order));
  out.push_back(equality_report("R + S = G2", r + s, g2, order));
  out.push_back(equality_report("RR + RS + SR + SS = G2^2",
                                r * r + r * s + s * r + s * s, g2 * g2,
                                order));
  out.push_back(equality_report("G2^2 = G2 - 2x (classes partition n >= 2)",
                                g2 * g2, g2 - x(2), order));
  out.push_back(equality_report("G^2 = G - 3x (classes partition n >= 2)",
                                g * g, g - x(3), order));

  const auto color_check = [&](Semantics sem, int color_max) {
    const auto value_series = [&](TruthValue v) -> const PowerSeries& {
      switch (v) {
        case TruthValue::True: return sem == Semantics::Kleene3 ? t : r;
        case TruthValue::False: return sem == Semantics::Kleene3 ? f : s;
        case TruthValue::Unknown: break;
      }
      return u;
    };
    const int n_max = std::min({order, color_max, spec.budget.max_n(sem)});
    VerificationReport rep{logic_tag(sem) +
                               "brute-force color classes = convolutions",
                           n_max, 0, std::nullopt, {}};
    for (int n = 2; n <= n_max && !rep.counterexample; ++n) {
      const auto classes = color_class_counts(n, sem, spec.budget);
      for (const auto& [cls, count] : classes) {
        ++rep.cases;
        const auto conv =
            value_series(cls.first) * value_series(cls.second);
        if (Coefficient(count) != conv[n]) {
          rep.counterexample =
              Witness{n,
                      "class (" + std::to_string(to_int(cls.first)) + "," +
                          std::to_string(to_int(cls.second)) + ")",
                      count.get_str(), "!=", conv[n].get_str()};
          break;
        }
      }
    }
    return rep;
  };
  out.push_back(color_check(Semantics::Classical2, spec.classical_color_n_max));
  out.push_back(color_check(Semantics::Kleene3, spec.kleene_color_n_max));
  return out;
}

VerificationReport verify_ideal_samples(Realizer& realizer,
                                        std::span<const ElementPair> samples,
                                        int order) {
  require_order(realizer, order);
  const std::string total(
      samples.empty() ? "G" : name(total_series(samples.front().first.logic())));
  VerificationReport r{"ideal samples [x^n](P*A) < [x^n]" + total +
                           " for 2 <= n",
                       order, 0, std::nullopt, {}};
  for (const auto& [p, a] : samples) {
    ++r.cases;
    r.counterexample = first_bound_violation(
        realizer.realize(p) * realizer.realize(a),
        realizer.total_series(p.logic()), order,
        p.to_string() + " * " + a.to_string());
    if (r.counterexample) break;
  }
  return r;
}

VerificationReport verify_substitution_chains(Realizer& realizer,
                                              unsigned max_exponent,
                                              int order) {
  require_order(realizer, order);
  VerificationReport r{
      "substitution chains U^a(UF)^k <= U^k, U^a(UT)^k <= T^k, "
      "F^a(FT)^k <= T^k",
      order, 0, std::nullopt, {}};
  const auto uf = realizer.realize(MonoidElement(
      Semantics::Kleene3, {{Generator::U, 1}, {Generator::F, 1}}));
  const auto ut = realizer.realize(MonoidElement(
      Semantics::Kleene3, {{Generator::U, 1}, {Generator::T, 1}}));
  const auto ft = realizer.realize(MonoidElement(
      Semantics::Kleene3, {{Generator::F, 1}, {Generator::T, 1}}));

  const auto compare = [&](const PowerSeries& lhs, const PowerSeries& rhs,
                           const std::string& subject) {
    ++r.cases;
    for (int n = 2; n <= order; ++n) {
      const bool ok = sgn(rhs[n]) == 0 ? lhs[n] <= rhs[n] : lhs[n] < rhs[n];
      if (!ok) {
        r.counterexample = Witness{n, subject, lhs[n].get_str(),
                                   sgn(rhs[n]) == 0 ? "!<=" : "!<",
                                   rhs[n].get_str()};
        return;
      }
    }
  };

  for (unsigned k = 1; k <= max_exponent && !r.counterexample; ++k) {
    PowerSeries uf_k = realizer.identity();
    PowerSeries ut_k = realizer.identity();
    PowerSeries ft_k = realizer.identity();
    for (unsigned i = 0; i < k; ++i) {
      uf_k = uf_k * uf;
      ut_k = ut_k * ut;
      ft_k = ft_k * ft;
    }
    const auto& u_k = realizer.power(Generator::U, k);
    const auto& t_k = realizer.power(Generator::T, k);
    for (unsigned a = 1; a <= max_exponent && !r.counterexample; ++a) {
      const auto& u_a = realizer.power(Generator::U, a);
      const auto& f_a = realizer.power(Generator::F, a);
      const auto tag = "a=" + std::to_string(a) + ", k=" + std::to_string(k);
      compare(u_a * uf_k, u_k, "U^a(UF)^k vs U^k, " + tag);
      if (r.counterexample) break;
      compare(u_a * ut_k, t_k, "U^a(UT)^k vs T^k, " + tag);
      if (r.counterexample) break;
      compare(f_a * ft_k, t_k, "F^a(FT)^k vs T^k, " + tag);
    }
  }
  return r;
}

std::vector<VerificationReport> run_monoid_suite(const MonoidSuiteConfig& cfg) {
  Realizer realizer(std::max(cfg.order, cfg.identity_order), cfg.tamper);
  std::vector<VerificationReport> out;

  for (const auto logic : {Semantics::Kleene3, Semantics::Classical2}) {
    const auto elements = sample_elements(logic, cfg.sample);
    const auto pairs = sample_pairs(elements, cfg.sample);
    const auto triples = sample_triples(elements, cfg.sample);
    const auto ideal = sample_ideal_pairs(logic, elements, 3);

    for (auto rep : {verify_commutativity(realizer, pairs, cfg.order),
                     verify_associativity(realizer, triples, cfg.order),
                     verify_morphism(realizer, pairs, cfg.order),
                     verify_bounds(realizer, elements, cfg.order),
                     verify_ideal_samples(realizer, ideal, cfg.order)}) {
      rep.claim = logic_tag(logic) + rep.claim;
      out.push_back(std::move(rep));
    }
  }

  for (auto& rep :
       verify_power_identities(realizer, cfg.k_max, cfg.identity_order)) {
    rep.claim = logic_tag(Semantics::Kleene3) + rep.claim;
    out.push_back(std::move(rep));
  }
  auto chains = verify_substitution_chains(realizer, 5, cfg.order);
  chains.claim = logic_tag(Semantics::Kleene3) + chains.claim;
  out.push_back(std::move(chains));

  for (auto& rep :
       verify_partitions(realizer, cfg.identity_order, cfg.partitions)) {
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace implcount
