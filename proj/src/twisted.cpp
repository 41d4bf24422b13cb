#include "coxspec/twisted.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace coxspec {

TwistedOrder::TwistedOrder(SystemPtr sys, SimpleSubset J, SimpleSubset K, std::vector<int> gen_image)
    : sys_(std::move(sys)), j_(J), k_(K), delta_gen_(std::move(gen_image)) {
  delta_inv_gen_.assign(sys_->rank(), -1);
  for (int s : j_.members()) delta_inv_gen_[delta_gen_[s]] = s;
}

TwistedOrder TwistedOrder::from_frobenius(const SystemPtr& sys, SimpleSubset J) {
  SimpleSubset fj;
  for (int s : J.members()) fj = fj.with(sys->frobenius_map()[s]);
  if (fj != J) throw InvalidArgument("twisted order requires F(J) = J");

  Element w0J = longest_element(sys) * longest_element(sys, J);
  Element w0J_inv = w0J.inverse();
  std::vector<int> image(sys->rank(), -1);
  SimpleSubset K;
  for (int s : J.members()) {
    Element c = w0J * sys->generator(sys->frobenius_map()[s]) * w0J_inv;
    if (c.length() != 1)
      throw InternalCheckFailure("delta image of a generator is not simple");
    int t = c.word().front();
    image[s] = t;
    K = K.with(t);
  }
  if (K != opposite_subset(sys, J))
    throw InternalCheckFailure("delta image set differs from w0 J w0");
  return TwistedOrder(sys, J, K, std::move(image));
}

TwistedOrder TwistedOrder::with_delta(const SystemPtr& sys, SimpleSubset J, SimpleSubset K,
                                      const std::vector<int>& gen_image) {
  if (static_cast<int>(gen_image.size()) != sys->rank())
    throw InvalidArgument("delta generator map must have one entry per generator");
  SimpleSubset image_set;
  for (int s : J.members()) {
    int t = gen_image[s];
    if (t < 0 || t >= sys->rank() || !K.contains(t))
      throw InvalidArgument("delta must map J into K");
    if (image_set.contains(t)) throw InvalidArgument("delta generator map is not injective");
    image_set = image_set.with(t);
  }
  if (image_set != K) throw InvalidArgument("delta must map J onto K");
  for (int s : J.members())
    for (int t : J.members())
      if (sys->coxeter_m(gen_image[s], gen_image[t]) != sys->coxeter_m(s, t))
        throw InvalidArgument("delta does not preserve the Coxeter matrix on J");
  std::vector<int> image(sys->rank(), -1);
  for (int s : J.members()) image[s] = gen_image[s];
  return TwistedOrder(sys, J, K, std::move(image));
}

int TwistedOrder::delta_gen(int s) const {
  if (!j_.contains(s)) throw InvalidArgument("delta is only defined on W_J");
  return delta_gen_[s];
}

int TwistedOrder::delta_inv_gen(int t) const {
  if (!k_.contains(t)) throw InvalidArgument("delta^{-1} is only defined on W_K");
  return delta_inv_gen_[t];
}

Element TwistedOrder::delta(const Element& u) const {
  Element out = sys_->identity();
  for (int s : u.word()) out = out * sys_->generator(delta_gen(s));
  return out;
}

Element TwistedOrder::delta_inverse(const Element& v) const {
  Element out = sys_->identity();
  for (int t : v.word()) out = out * sys_->generator(delta_inv_gen(t));
  return out;
}

// --- specialization order --------------------------------------------------

std::optional<Element> spec_leq_witness(const Element& w, const Element& wp, const TwistedOrder& T) {
  for (const auto& u : *enumerate_subgroup_shared(T.system_ptr(), T.J())) {
    if (bruhat_leq(u.inverse() * w * T.delta(u), wp)) return u;
  }
  return std::nullopt;
}

bool spec_leq_naive(const Element& w, const Element& wp, const TwistedOrder& T) {
  return spec_leq_witness(w, wp, T).has_value();
}

std::vector<Element> twisted_orbit(const Element& w, const TwistedOrder& T) {
  if (!in_quotient(w, T.J(), Side::Left)) throw InvalidArgument("twisted_orbit requires w in ^JW");
  const auto& sys = T.system_ptr();
  std::vector<std::pair<Element, Element>> moves;  // (s, delta(s))
  for (int s : T.J().members()) moves.emplace_back(sys->generator(s), sys->generator(T.delta_gen(s)));

  std::unordered_set<Element, ElementHash, ElementEq> seen;
  std::vector<Element> orbit;
  orbit.push_back(w);
  seen.insert(w);
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    Element x = orbit[k];
    for (const auto& [g, dg] : moves) {
      Element y = g * x * dg;
      if (y.length() != w.length()) continue;
      if (seen.insert(y).second) orbit.push_back(std::move(y));
    }
  }
  return orbit;
}

bool spec_leq_bfs(const Element& w, const Element& wp, const TwistedOrder& T) {
  if (!in_quotient(w, T.J(), Side::Left)) throw InvalidArgument("spec_leq_bfs requires w in ^JW");
  if (w.length() > wp.length()) return false;
  const auto& sys = T.system_ptr();
  std::vector<std::pair<Element, Element>> moves;
  for (int s : T.J().members()) moves.emplace_back(sys->generator(s), sys->generator(T.delta_gen(s)));

  std::unordered_set<Element, ElementHash, ElementEq> seen;
  std::deque<Element> frontier;
  seen.insert(w);
  frontier.push_back(w);
  while (!frontier.empty()) {
    Element x = std::move(frontier.front());
    frontier.pop_front();
    if (bruhat_leq(x, wp)) return true;
    for (const auto& [g, dg] : moves) {
      Element y = g * x * dg;
      if (y.length() != w.length()) continue;
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return false;
}

bool spec_coroll_check(const Element& w, const Element& wp, const Element& u, const Element& v,
                       const TwistedOrder& T) {
  if (!in_quotient(w, T.J(), Side::Left) || !in_quotient(wp, T.J(), Side::Left))
    throw InvalidArgument("spec_coroll_check requires w, w' in ^JW");
  if (!in_parabolic(u, T.J()) || !in_parabolic(v, T.J()))
    throw InvalidArgument("spec_coroll_check requires u, v in W_J");
  if (!bruhat_leq(v, u)) throw InvalidArgument("spec_coroll_check requires v <= u");
  return bruhat_leq(u * wp * T.delta(v).inverse(), w);
}

bool spec_leq_uv(const Element& w, const Element& wp, const TwistedOrder& T) {
  const auto& wj = *enumerate_subgroup_shared(T.system_ptr(), T.J());
  for (const auto& u : wj) {
    Element uw = u * w;
    for (const auto& v : wj) {
      if (!bruhat_leq(v, u)) continue;
      if (bruhat_leq(uw * T.delta(v).inverse(), wp)) return true;
    }
  }
  return false;
}

Poset spec_poset_over(const TwistedOrder& T, std::vector<Element> nodes) {
  // Precompute the twisted orbit of each node; w <= w' iff some orbit member
  // is Bruhat-below w'.
  std::vector<std::vector<Element>> orbits;
  orbits.reserve(nodes.size());
  for (const auto& w : nodes) orbits.push_back(twisted_orbit(w, T));
  std::unordered_map<uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i].hash()] = i;

  return build_poset(std::move(nodes), [&](const Element& a, const Element& b) {
    const auto& orbit = orbits[index.at(a.hash())];
    for (const auto& x : orbit)
      if (bruhat_leq(x, b)) return true;
    return false;
  });
}

Poset spec_poset(const TwistedOrder& T, std::size_t max_nodes) {
  auto nodes = min_coset_reps(T.system_ptr(), T.J(), Side::Left);
  if (nodes.size() > max_nodes)
    throw BoundExceeded("quotient has " + std::to_string(nodes.size()) +
                        " elements, over the poset bound of " + std::to_string(max_nodes));
  return spec_poset_over(T, std::move(nodes));
}

std::vector<Element> closure_set(const Element& w, const TwistedOrder& T) {
  if (!in_quotient(w, T.J(), Side::Left)) throw InvalidArgument("closure_set requires w in ^JW");
  std::vector<Element> out;
  for (auto& wp : min_coset_reps(T.system_ptr(), T.J(), Side::Left))
    if (spec_leq_bfs(wp, w, T)) out.push_back(std::move(wp));
  return out;
}

bool lengthequal_check(const Element& w, const Element& wp, const TwistedOrder& T) {
  if (!in_quotient(w, T.J(), Side::Left) || !in_quotient(wp, T.J(), Side::Left))
    throw InvalidArgument("lengthequal_check requires w, w' in ^JW");
  return w.length() == wp.length() && !(w == wp) && spec_leq_bfs(w, wp, T);
}

// --- (B x B)-orbit combinatorics --------------------------------------------

bool springer_orbit_equal(const OrbitPair& p, const OrbitPair& pp, const TwistedOrder& T) {
  for (const auto& u : *enumerate_subgroup_shared(T.system_ptr(), T.J())) {
    if (pp.x == p.x * apply_frobenius(u).inverse() && pp.w * u == p.w) return true;
  }
  return false;
}

bool springer_orbit_in_closure(const OrbitPair& p, const OrbitPair& pp, const TwistedOrder& T) {
  if (!in_quotient(p.x, T.J(), Side::Right) || !in_quotient(pp.x, T.J(), Side::Right))
    throw InvalidArgument("springer_orbit_in_closure requires the x labels in W^J");
  Element fw = apply_frobenius(p.w);
  Element fwp = apply_frobenius(pp.w);
  for (const auto& u : *enumerate_subgroup_shared(T.system_ptr(), T.J())) {
    if (bruhat_leq(p.x * u.inverse(), pp.x) && bruhat_leq(fwp * u, fw)) return true;
  }
  return false;
}

std::vector<Element> sigma_closure(const Element& w, const TwistedOrder& T) {
  std::vector<Element> out;
  for (const auto& x : *enumerate_subgroup_shared(T.system_ptr(), SimpleSubset::full(T.system().rank())))
    if (bruhat_leq(x, w)) out.push_back(x);
  sort_elements(out);
  return out;
}

// --- Bruhat witness lemmas ---------------------------------------------------

std::pair<Element, Element> ymin_ymax(const Element& w, const Element& x) {
  const auto sys = w.system_ptr();
  std::vector<Element> members;
  for (const auto& y : *enumerate_subgroup_shared(sys, SimpleSubset::full(sys->rank())))
    if (bruhat_leq(w * y, x)) members.push_back(y);
  if (members.empty())
    throw InternalCheckFailure("{y : wy <= x} is empty");  // cannot happen: y = w^{-1} qualifies
  const Element* ymin = &members.front();
  const Element* ymax = &members.front();
  for (const auto& y : members) {
    if (y.length() < ymin->length()) ymin = &y;
    if (y.length() > ymax->length()) ymax = &y;
  }
  for (const auto& y : members) {
    if (!bruhat_leq(*ymin, y) || !bruhat_leq(y, *ymax))
      throw InternalCheckFailure("{y : wy <= x} has no smallest/largest element");
  }
  if (ymin->length() != w.length() - (w * *ymin).length())
    throw InternalCheckFailure("ymin length identity fails");
  if (ymax->length() != w.length() + (w * *ymax).length())
    throw InternalCheckFailure("ymax length identity fails");
  return {*ymin, *ymax};
}

Element bruhat_witness(const Element& xp, const Element& w, const Element& wp, int variant) {
  if (variant != 1 && variant != 2) throw InvalidArgument("variant must be 1 or 2");
  if (!bruhat_leq(w, wp)) throw InvalidArgument("bruhat_witness requires w <= w'");
  const auto sys = w.system_ptr();
  auto cone = *enumerate_subgroup_shared(sys, SimpleSubset::full(sys->rank()));
  sort_elements(cone);
  for (const auto& x : cone) {
    if (!bruhat_leq(x, xp)) continue;
    bool ok = (variant == 1) ? bruhat_leq(x * w, xp * wp) : bruhat_leq(xp * w, x * wp);
    if (ok) return x;
  }
  throw InternalCheckFailure("guaranteed Bruhat witness not found");
}

Element bruhat_lifting_witness(const Element& x, const Element& u, const Element& u1p, SimpleSubset J) {
  if (!in_quotient(x, J, Side::Left)) throw InvalidArgument("bruhat_lifting_witness requires x in ^JW");
  Element xu = x * u;
  if (xu.length() != x.length() + u.length())
    throw InvalidArgument("bruhat_lifting_witness requires l(xu) = l(x) + l(u)");
  auto dec = decompose(xu, J);  // xu = u' x'
  if (!bruhat_leq(u1p, dec.u)) throw InvalidArgument("bruhat_lifting_witness requires u1' <= u'");
  // x u1 = u1' x' pins u1 uniquely; the lemma asserts u1 <= u.
  Element u1 = x.inverse() * u1p * dec.w;
  if (!bruhat_leq(u1, u)) throw InternalCheckFailure("lifting witness violates u1 <= u");
  return u1;
}

std::pair<Element, std::vector<int>> bruhatfour_witness(const Element& w, const Element& u,
                                                        const Element& v, const TwistedOrder& T) {
  if (!in_quotient(w, T.J(), Side::Left)) throw InvalidArgument("bruhatfour_witness requires w in ^JW");
  if (!in_parabolic(u, T.J()) || !in_parabolic(v, T.J()))
    throw InvalidArgument("bruhatfour_witness requires u, v in W_J");
  if (!bruhat_leq(v, u)) throw InvalidArgument("bruhatfour_witness requires v <= u");

  const auto& sys = T.system_ptr();
  Element target = u.inverse() * w * T.delta(v);

  // BFS over conjugators x built letter by letter: the accumulated word must
  // stay reduced and every prefix twist must preserve l(w).
  struct Node {
    Element x;
    Element y;  // x^{-1} w delta(x)
    std::vector<int> word;
  };
  std::unordered_set<Element, ElementHash, ElementEq> seen;
  std::deque<Node> frontier;
  frontier.push_back({sys->identity(), w, {}});
  seen.insert(sys->identity());
  while (!frontier.empty()) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    if (bruhat_leq(node.x, v) && bruhat_leq(node.y, target)) return {node.x, node.word};
    if (node.x.length() >= v.length()) continue;  // x <= v needs l(x) <= l(v)
    for (int s : T.J().members()) {
      Element g = sys->generator(s);
      Element xs = node.x * g;
      if (xs.length() != node.x.length() + 1) continue;
      Element ys = g * node.y * sys->generator(T.delta_gen(s));
      if (ys.length() != w.length()) continue;
      if (!seen.insert(xs).second) continue;
      auto word = node.word;
      word.push_back(s);
      frontier.push_back({std::move(xs), std::move(ys), std::move(word)});
    }
  }
  throw InternalCheckFailure("guaranteed twisted witness not found");
}

}  // namespace coxspec
