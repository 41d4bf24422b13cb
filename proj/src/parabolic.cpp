#include "coxspec/parabolic.hpp"

#include <algorithm>

namespace coxspec {

bool in_quotient(const Element& w, SimpleSubset J, Side side) {
  return (w.descents(side == Side::Left ? Side::Left : Side::Right) & J).empty();
}

std::vector<Element> min_coset_reps(const SystemPtr& sys, SimpleSubset J, Side side) {
  std::vector<Element> out;
  for (const auto& w : *enumerate_subgroup_shared(sys, SimpleSubset::full(sys->rank())))
    if (in_quotient(w, J, side)) out.push_back(w);
  sort_elements(out);
  return out;
}

std::vector<Element> double_reps(const SystemPtr& sys, SimpleSubset J, SimpleSubset K) {
  std::vector<Element> out;
  for (const auto& w : *enumerate_subgroup_shared(sys, SimpleSubset::full(sys->rank())))
    if (in_quotient(w, J, Side::Left) && in_quotient(w, K, Side::Right)) out.push_back(w);
  sort_elements(out);
  return out;
}

ParabolicDecomposition decompose(const Element& x, SimpleSubset J) {
  const auto& sys = x.system_ptr();
  Element w = x;
  std::vector<int> letters;
  for (;;) {
    SimpleSubset d = w.descents(Side::Left) & J;
    if (d.empty()) break;
    int s = d.members().front();
    letters.push_back(s);
    w = sys->generator(s) * w;
  }
  return {product_of_word(sys, letters), std::move(w)};
}

ParabolicDecomposition decompose_right(const Element& x, SimpleSubset J) {
  const auto& sys = x.system_ptr();
  Element w = x;
  std::vector<int> letters;
  for (;;) {
    SimpleSubset d = w.descents(Side::Right) & J;
    if (d.empty()) break;
    int s = d.members().front();
    letters.push_back(s);
    w = w * sys->generator(s);
  }
  std::reverse(letters.begin(), letters.end());
  return {product_of_word(sys, letters), std::move(w)};
}

SimpleSubset opposite_subset(const SystemPtr& sys, SimpleSubset J) {
  return conjugate_subset(longest_element(sys), J);
}

SimpleSubset conjugate_subset(const Element& w, SimpleSubset J) {
  const auto& sys = w.system_ptr();
  Element winv = w.inverse();
  SimpleSubset out;
  for (int s : J.members()) {
    Element c = w * sys->generator(s) * winv;
    if (c.length() != 1)
      throw InternalCheckFailure("conjugate of a simple reflection is not simple");
    out = out.with(c.word().front());
  }
  return out;
}

SimpleSubset refinement_type(SimpleSubset J, SimpleSubset K, const Element& w) {
  if (!in_quotient(w, J, Side::Left) || !in_quotient(w, K, Side::Right))
    throw InvalidArgument("refinement_type requires w in ^JW^K");
  const auto& sys = w.system_ptr();
  Element winv = w.inverse();
  SimpleSubset out;
  for (int s : J.members()) {
    Element c = winv * sys->generator(s) * w;  // w^{-1} s w
    if (c.length() != 1) continue;
    if (K.contains(c.word().front())) out = out.with(s);
  }
  return out;
}

bool refinement_contains_borel(SimpleSubset J, SimpleSubset K, const Element& w) {
  const auto& sys = w.system_ptr();
  Element winv = w.inverse();
  const int n = sys->rank();
  for (std::size_t k = 0; k < sys->positive_roots().size(); ++k) {
    if ((sys->root_support(static_cast<int>(k)) & ~J.bits()) != 0) continue;  // not in Phi_J^+
    RootVec img = winv.apply(sys->positive_roots()[k]);
    bool negative = false;
    for (int i = 0; i < n; ++i)
      if (img[i] < 0) { negative = true; break; }
    if (!negative) continue;  // positive root: fine
    uint32_t support = 0;
    for (int i = 0; i < n; ++i)
      if (img[i] != 0) support |= 1u << i;
    if ((support & ~K.bits()) != 0) return false;  // negative and outside Phi_K
  }
  return true;
}

HowlettDecomposition howlett_decompose(const Element& w, SimpleSubset J, SimpleSubset K) {
  const auto& sys = w.system_ptr();
  // Strip the W_J-part on the left, then the W_K-part on the right.
  auto left = decompose(w, J);
  auto right = decompose_right(left.w, K);
  Element wbar = right.w;        // in ^JW^K
  Element v0 = right.u;          // in W_K
  // Normalize v0 = a*v with a in W_{K'} and v in ^{K'}W cap W_K; fold the
  // conjugate of a into the W_J-part.
  SimpleSubset k_prime = refinement_type(K, J, wbar.inverse());  // K cap ^{wbar^{-1}}J
  auto split = decompose(v0, k_prime);
  Element b = wbar * split.u * wbar.inverse();
  Element u = left.u * b;
  Element v = split.w;
  if (u.length() + wbar.length() + v.length() != w.length() || !(u * wbar * v == w))
    throw InternalCheckFailure("howlett decomposition is not length-additive");
  return {std::move(u), std::move(wbar), std::move(v), k_prime};
}

bool howlett_variant_check(const Element& w, const Element& wbar, SimpleSubset J, SimpleSubset K) {
  if (!in_quotient(wbar, J, Side::Left) || !in_quotient(wbar, K, Side::Right))
    throw InvalidArgument("howlett_variant_check requires wbar in ^JW^K");
  if (!in_parabolic(wbar.inverse() * w, K))
    throw InvalidArgument("howlett_variant_check requires w in wbar*W_K");
  auto dec = howlett_decompose(w, J, K);
  if (!(dec.wbar == wbar))
    throw InternalCheckFailure("double coset representative mismatch");
  SimpleSubset j_prime = refinement_type(J, K, wbar);  // J cap ^{wbar}K
  return in_parabolic(dec.u, j_prime);
}

Element convert(const Element& x, SimpleSubset J, ConvertKind kind) {
  const auto& sys = x.system_ptr();
  switch (kind) {
    case ConvertKind::Inverse:
      if (!in_quotient(x, J, Side::Left)) throw InvalidArgument("convert(inverse) requires x in ^JW");
      return x.inverse();
    case ConvertKind::ConjugateW0: {
      if (!in_quotient(x, J, Side::Right)) throw InvalidArgument("convert(conjugate_w0) requires x in W^J");
      Element w0 = longest_element(sys);
      return w0 * x * w0;
    }
    case ConvertKind::ReverseToWK: {
      if (!in_quotient(x, J, Side::Left)) throw InvalidArgument("convert(reverse_to_WK) requires x in ^JW");
      SimpleSubset K = opposite_subset(sys, J);
      Element w0K = longest_element(sys) * longest_element(sys, K);  // w0^K
      return x.inverse() * w0K;
    }
  }
  throw InvalidArgument("unknown convert kind");
}

std::pair<SimpleSubset, SimpleSubset> j_infinity(const Element& w, SimpleSubset J) {
  if (!in_quotient(w, J, Side::Left)) throw InvalidArgument("j_infinity requires w in ^JW");
  const auto& sys = w.system_ptr();
  Element w0J = longest_element(sys) * longest_element(sys, J);  // w0^J
  Element c = w * w0J;
  Element cinv = c.inverse();

  // Greatest fixed subset of J under s -> c s c^{-1}: shrink until stable.
  SimpleSubset cur = J;
  for (;;) {
    SimpleSubset next;
    for (int s : cur.members()) {
      Element conj = c * sys->generator(s) * cinv;
      if (conj.length() == 1 && cur.contains(conj.word().front())) next = next.with(s);
    }
    if (next == cur) break;
    cur = next;
  }

  SimpleSubset k_inf = cur.empty() ? SimpleSubset() : conjugate_subset(w0J, cur);
  if (!cur.empty()) {
    SimpleSubset cross = conjugate_subset(w.inverse(), cur);  // ^{w^{-1}} J_inf
    if (cross != k_inf)
      throw InternalCheckFailure("K_infinity characterizations disagree");
  }
  return {cur, k_inf};
}

OrbitTypeSequence orbit_type_sequence(const Element& w, SimpleSubset J) {
  if (!in_quotient(w, J, Side::Left)) throw InvalidArgument("orbit_type_sequence requires w in ^JW");
  const auto& sys = w.system_ptr();
  Element w0J = longest_element(sys) * longest_element(sys, J);

  OrbitTypeSequence seq;
  SimpleSubset Jn = J;
  SimpleSubset Kn = opposite_subset(sys, J);
  for (;;) {
    Element yn = howlett_decompose(w, Jn, Kn).wbar;
    if (!seq.trace.empty()) {
      const auto& prev = seq.trace.back();
      if (prev.J == Jn && prev.K == Kn && prev.y == yn) {
        seq.stable_index = static_cast<int>(seq.trace.size()) - 1;
        break;
      }
    }
    seq.trace.push_back({Jn, Kn, yn});
    SimpleSubset Jnext = refinement_type(Jn, Kn, yn);  // J_n cap ^{y_n}K_n
    SimpleSubset Knext = Jnext.empty() ? SimpleSubset() : conjugate_subset(w0J, Jnext);
    Jn = Jnext;
    Kn = Knext;
  }
  return seq;
}

}  // namespace coxspec
