#include "coxspec/poset.hpp"

namespace coxspec {

std::vector<std::pair<int, int>> transitive_reduction(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq[j][i]) continue;  // candidate: j < i
      bool direct = true;
      for (int k = 0; k < n && direct; ++k)
        if (k != i && k != j && leq[j][k] && leq[k][i]) direct = false;
      if (direct) covers.emplace_back(i, j);
    }
  }
  return covers;
}

Poset build_poset(std::vector<Element> labels,
                  const std::function<bool(const Element&, const Element&)>& leq_fn) {
  const int n = static_cast<int>(labels.size());
  Poset p;
  p.labels = std::move(labels);
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p.leq[i][j] = leq_fn(p.labels[i], p.labels[j]);

  for (int i = 0; i < n; ++i)
    if (!p.leq[i][i]) throw InternalCheckFailure("poset relation is not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.leq[i][j] && p.leq[j][i])
        throw InternalCheckFailure("poset relation is not antisymmetric");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!p.leq[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (p.leq[j][k] && !p.leq[i][k])
          throw InternalCheckFailure("poset relation is not transitive");
    }

  p.covers = transitive_reduction(p.leq);
  return p;
}

}  // namespace coxspec
