#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "implcount/logic.hpp"

namespace implcount {

/// One full parenthesization of p1 => p2 => ... => pn, held as an immutable
/// full binary tree. Leaves carry their 1-based variable index; subtrees are
/// shared between trees produced by the same enumeration.
class Bracketing {
 public:
  static Bracketing leaf(int index);
  static Bracketing node(Bracketing left, Bracketing right);

  bool is_leaf() const noexcept { return node_->left == nullptr; }
  /// Index of the leftmost variable of this subtree.
  int first_index() const noexcept { return node_->first; }
  int leaf_count() const noexcept { return node_->leaves; }

  /// Precondition: !is_leaf().
  Bracketing left() const;
  Bracketing right() const;

  /// Fully parenthesized infix, e.g. "((p1 => p2) => p3)"; a single leaf
  /// renders as "p1".
  std::string to_string() const;

  friend bool operator==(const Bracketing& a, const Bracketing& b) noexcept;

 private:
  struct Node {
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    int first = 1;
    int leaves = 1;
  };

  explicit Bracketing(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// The Catalan number C_n = binom(2n-2, n-1) / n, the number of bracketings
/// of n variables. Throws DomainError for n < 1.
mpz_class catalan(int n);

/// All bracketings of p1..pn, ordered by root split (left leaf count 1 to
/// n-1), then by left subtree, then by right subtree, each recursively in the
/// same order. Throws DomainError for n < 1.
std::vector<Bracketing> enumerate_bracketings(int n);

/// Truth value of `tree` under `v`, where v[0] is the value of the tree's
/// leftmost variable (so a subtree is evaluated against its own slice).
/// Throws DomainError when v.size() differs from the leaf count or v holds
/// values illegal under `sem`.
TruthValue evaluate(const Bracketing& tree, std::span<const TruthValue> v,
                    Semantics sem);

}  // namespace implcount
