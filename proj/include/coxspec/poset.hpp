#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "coxspec/coxeter.hpp"

namespace coxspec {

/// A finite poset over labeled Weyl group elements.  leq[i][j] means
/// node i precedes node j; covers are the transitive reduction, stored as
/// (i, j) pairs with j covered by i (matching the emitted edge direction).
struct Poset {
  std::vector<Element> labels;
  std::vector<std::string> eps;  // per-node bitstring labels; empty if unused
  std::vector<std::vector<bool>> leq;
  std::vector<std::pair<int, int>> covers;

  int size() const { return static_cast<int>(labels.size()); }
  bool less_eq(int i, int j) const { return leq[i][j]; }
};

/// Builds the relation from a callback, checks the partial order axioms
/// (InternalCheckFailure on violation) and computes the cover relation.
Poset build_poset(std::vector<Element> labels,
                  const std::function<bool(const Element&, const Element&)>& leq_fn);

/// Cover pairs (i, j) with j covered by i: j < i with nothing in between.
std::vector<std::pair<int, int>> transitive_reduction(const std::vector<std::vector<bool>>& leq);

}  // namespace coxspec
