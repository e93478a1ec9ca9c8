#include "implcount/bracketing.hpp"

#include <map>
#include <utility>

#include "implcount/errors.hpp"

namespace implcount {

Bracketing Bracketing::leaf(int index) {
  if (index < 1) throw DomainError("leaf index must be positive");
  auto n = std::make_shared<Node>();
  n->first = index;
  return Bracketing(std::move(n));
}

Bracketing Bracketing::node(Bracketing left, Bracketing right) {
  if (right.first_index() != left.first_index() + left.leaf_count()) {
    throw DomainError("subtree variable indices are not consecutive");
  }
  auto n = std::make_shared<Node>();
  n->first = left.first_index();
  n->leaves = left.leaf_count() + right.leaf_count();
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return Bracketing(std::move(n));
}

Bracketing Bracketing::left() const {
  if (is_leaf()) throw DomainError("a leaf has no subformulae");
  return Bracketing(node_->left);
}

Bracketing Bracketing::right() const {
  if (is_leaf()) throw DomainError("a leaf has no subformulae");
  return Bracketing(node_->right);
}

std::string Bracketing::to_string() const {
  if (is_leaf()) return "p" + std::to_string(first_index());
  return "(" + left().to_string() + " => " + right().to_string() + ")";
}

bool operator==(const Bracketing& a, const Bracketing& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.first_index() != b.first_index() || a.leaf_count() != b.leaf_count() ||
      a.is_leaf() != b.is_leaf()) {
    return false;
  }
  if (a.is_leaf()) return true;
  return a.left() == b.left() && a.right() == b.right();
}

mpz_class catalan(int n) {
  if (n < 1) throw DomainError("Catalan index must be at least 1");
  mpz_class c;
  const auto m = static_cast<unsigned long>(n - 1);
  mpz_bin_uiui(c.get_mpz_t(), 2 * m, m);
  return c / n;
}

namespace {

// Memoized by (first index, leaf count) so equal subtrees share storage.
class Enumerator {
 public:
  const std::vector<Bracketing>& trees(int first, int size) {
    const auto key = std::make_pair(first, size);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Bracketing> out;
    if (size == 1) {
      out.push_back(Bracketing::leaf(first));
    } else {
      for (int k = 1; k < size; ++k) {
        // std::map references stay valid across the nested insertions.
        const auto& lefts = trees(first, k);
        const auto& rights = trees(first + k, size - k);
        for (const auto& l : lefts) {
          for (const auto& r : rights) out.push_back(Bracketing::node(l, r));
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::map<std::pair<int, int>, std::vector<Bracketing>> memo_;
};

// `v[0]` holds the value of the variable numbered `offset`.
TruthValue eval_unchecked(const Bracketing& tree,
                          std::span<const TruthValue> v, int offset) {
  if (tree.is_leaf()) {
    return v[static_cast<std::size_t>(tree.first_index() - offset)];
  }
  return kImplicationTable[to_int(eval_unchecked(tree.left(), v, offset))]
                          [to_int(eval_unchecked(tree.right(), v, offset))];
}

}  // namespace

std::vector<Bracketing> enumerate_bracketings(int n) {
  if (n < 1) throw DomainError("a bracketing needs at least one variable");
  Enumerator e;
  return e.trees(1, n);
}

TruthValue evaluate(const Bracketing& tree, std::span<const TruthValue> v,
                    Semantics sem) {
  if (static_cast<int>(v.size()) != tree.leaf_count()) {
    throw DomainError("valuation length " + std::to_string(v.size()) +
                      " does not match the formula's variable count");
  }
  for (const auto value : v) {
    if (!is_legal(value, sem)) {
      throw DomainError("valuation holds a value illegal in " +
                        std::string(name(sem)) + " semantics");
    }
  }
  return eval_unchecked(tree, v, tree.first_index());
}

}  // namespace implcount
