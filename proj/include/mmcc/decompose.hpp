#pragma once

#include <cstdint>
#include <vector>

#include "mmcc/forest.hpp"

namespace mmcc {

struct DecomposedForest {
  std::vector<Tree> subtrees;
  double lambda = 0.0;
  std::uint64_t origin = 0;  // candidate id

  std::size_t size() const noexcept { return subtrees.size(); }
};

/// Splits `tree` into edge-disjoint subtrees of weight < 2 * lambda, at most
/// max(floor(w(tree) / lambda), 1) of them. Trees lighter than 2 * lambda are
/// returned unchanged.
///
/// The tree is rooted (at its anchor, else its root, else its smallest vertex)
/// and processed bottom-up. At a vertex v whose child branches are each
/// lighter than lambda on their own subtree, branches are grouped until the
/// group weighs at least lambda and detached as one subtree that keeps v as its
/// anchor. Every detachment removes at least lambda of weight and yields a
/// subtree lighter than 2 * lambda. Detaching stops once the remainder is
/// lighter than 2 * lambda.
///
/// The covered vertex sets of the output partition the covered vertices of
/// the input; each output subtree has at most one anchor.
///
/// Throws PreconditionViolation unless lambda > 0 and lambda >= every edge
/// weight of the tree.
std::vector<Tree> split_tree(const Tree& tree, double lambda);

/// Splits every candidate tree of weight >= 2 * lambda; lighter trees pass
/// through untouched.
DecomposedForest decompose_forest(const ForestCandidate& cand, double lambda);

}  // namespace mmcc
