#include "implcount/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "implcount/errors.hpp"

namespace implcount {

const mpz_class& CountVector::count(TruthValue v) const noexcept {
  switch (v) {
    case TruthValue::True:
      return t;
    case TruthValue::False:
      return f;
    case TruthValue::Unknown:
      break;
  }
  return u;
}

bool CountVector::consistent() const {
  if (t + f + u != g) return false;
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(radix(semantics)),
                static_cast<unsigned long>(n));
  return g == expected * catalan(n);
}

CountVector CountVector::from_tallies(int n, Semantics sem,
                                      const ValueCounts& c) {
  CountVector out;
  out.n = n;
  out.semantics = sem;
  out.f = c[0];
  out.t = c[1];
  out.u = c[2];
  out.g = c[0] + c[1] + c[2];
  return out;
}

void BruteBudget::require(int n, Semantics sem) const {
  if (n > max_n(sem)) {
    throw ResourceError("n = " + std::to_string(n) +
                        " exceeds the brute-force budget (n <= " +
                        std::to_string(max_n(sem)) + " in " +
                        std::string(name(sem)) +
                        " semantics); use per-tree counting or the "
                        "recurrence instead");
  }
}

namespace {

// Postorder program for one tree: leaf ops push a variable, node ops pop
// two and push their implication.
class CompiledTree {
 public:
  explicit CompiledTree(const Bracketing& tree) {
    offset_ = tree.first_index();
    compile(tree);
    stack_.resize(ops_.size());
  }

  TruthValue operator()(std::span<const TruthValue> v) {
    std::size_t top = 0;
    for (const int op : ops_) {
      if (op >= 0) {
        stack_[top++] = v[static_cast<std::size_t>(op)];
      } else {
        const TruthValue b = stack_[--top];
        const TruthValue a = stack_[--top];
        stack_[top++] = kImplicationTable[to_int(a)][to_int(b)];
      }
    }
    return stack_[0];
  }

 private:
  void compile(const Bracketing& t) {
    if (t.is_leaf()) {
      ops_.push_back(t.first_index() - offset_);
      return;
    }
    compile(t.left());
    compile(t.right());
    ops_.push_back(-1);
  }

  int offset_ = 1;
  std::vector<int> ops_;
  std::vector<TruthValue> stack_;
};

using RawTallies = std::array<std::uint64_t, 3>;

RawTallies tally_range(std::span<const Bracketing> trees, int n,
                       Semantics sem) {
  RawTallies out{};
  Valuation v(static_cast<std::size_t>(n), TruthValue::False);
  for (const auto& tree : trees) {
    CompiledTree eval(tree);
    do {
      ++out[static_cast<std::size_t>(to_int(eval(v)))];
    } while (next_valuation(v, sem));
  }
  return out;
}

}  // namespace

CountVector brute_counts(int n, Semantics sem, const BruteBudget& budget,
                         unsigned workers) {
  if (n < 1) throw DomainError("n must be at least 1");
  budget.require(n, sem);
  const auto trees = enumerate_bracketings(n);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(trees.size()));
  const std::size_t chunk = (trees.size() + workers - 1) / workers;

  std::vector<RawTallies> partial(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(trees.size(), w * chunk);
      const std::size_t end = std::min(trees.size(), begin + chunk);
      const std::span<const Bracketing> slice(trees.data() + begin,
                                              end - begin);
      pool.emplace_back([slice, n, sem, &out = partial[w]] {
        out = tally_range(slice, n, sem);
      });
    }
  }

  ValueCounts total;
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < 3; ++i) {
      total[i] += mpz_class(static_cast<unsigned long>(p[i]));
    }
  }
  return CountVector::from_tallies(n, sem, total);
}

ValueCounts tree_counts(const Bracketing& tree, Semantics sem) {
  ValueCounts out;
  if (tree.is_leaf()) {
    for (const auto v : truth_values(sem)) out[to_int(v)] = 1;
    return out;
  }
  const ValueCounts left = tree_counts(tree.left(), sem);
  const ValueCounts right = tree_counts(tree.right(), sem);
  for (const auto a : truth_values(sem)) {
    for (const auto b : truth_values(sem)) {
      out[to_int(implies(a, b, sem))] += left[to_int(a)] * right[to_int(b)];
    }
  }
  return out;
}

ColorClasses color_class_counts(int n, Semantics sem,
                                const BruteBudget& budget) {
  if (n < 2) {
    throw DomainError("color classes need a root split (n >= 2)");
  }
  budget.require(n, sem);

  std::map<ColorClass, std::uint64_t> raw;
  for (const auto a : truth_values(sem)) {
    for (const auto b : truth_values(sem)) raw[{a, b}] = 0;
  }

  Valuation v(static_cast<std::size_t>(n), TruthValue::False);
  for (const auto& tree : enumerate_bracketings(n)) {
    CompiledTree left(tree.left());
    CompiledTree right(tree.right());
    const auto split = static_cast<std::size_t>(tree.left().leaf_count());
    do {
      const std::span<const TruthValue> all(v);
      ++raw[{left(all.first(split)), right(all.subspan(split))}];
    } while (next_valuation(v, sem));
  }

  ColorClasses out;
  for (const auto& [cls, count] : raw) {
    out[cls] = mpz_class(static_cast<unsigned long>(count));
  }
  return out;
}

}  // namespace implcount
