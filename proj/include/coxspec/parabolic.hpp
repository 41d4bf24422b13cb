#pragma once

#include <utility>
#include <vector>

#include "coxspec/coxeter.hpp"

namespace coxspec {

/// x = u * w with u in W_J and w in ^JW, lengths additive.
struct ParabolicDecomposition {
  Element u;
  Element w;
};

/// w = u * wbar * v with u in W_J, wbar in ^JW^K, v in W_K cap ^{K'}W where
/// K' = K cap ^{wbar^{-1}}J, lengths additive.
struct HowlettDecomposition {
  Element u;
  Element wbar;
  Element v;
  SimpleSubset k_prime;
};

/// Types-only trace of the refinement sequence attached to w in ^JW.
struct OrbitTypeStep {
  SimpleSubset J;
  SimpleSubset K;
  Element y;
};
struct OrbitTypeSequence {
  std::vector<OrbitTypeStep> trace;  // entries 0..stable_index, stabilized at the end
  int stable_index = 0;
};

/// True iff w has no left (resp. right) descent inside J, i.e. w lies in
/// ^JW (resp. W^J).
bool in_quotient(const Element& w, SimpleSubset J, Side side);

/// Minimal length coset representatives: side Left gives ^JW (for W_J\W),
/// side Right gives W^J (for W/W_J).  Sorted by (length, word).
std::vector<Element> min_coset_reps(const SystemPtr& sys, SimpleSubset J, Side side);

/// ^JW^K = ^JW cap W^K, a system of representatives for W_J\W/W_K.
std::vector<Element> double_reps(const SystemPtr& sys, SimpleSubset J, SimpleSubset K);

/// Unique factorization x = u*w, u in W_J, w in ^JW.
ParabolicDecomposition decompose(const Element& x, SimpleSubset J);
/// Unique factorization x = w*u, u in W_J, w in W^J.
ParabolicDecomposition decompose_right(const Element& x, SimpleSubset J);

HowlettDecomposition howlett_decompose(const Element& w, SimpleSubset J, SimpleSubset K);

/// Checks the refined Howlett statement: for w in wbar*W_K with wbar in
/// ^JW^K, the W_J-part of w lies in W_{J'} with J' = J cap ^{wbar}K.
bool howlett_variant_check(const Element& w, const Element& wbar, SimpleSubset J, SimpleSubset K);

enum class ConvertKind {
  Inverse,       // ^JW -> W^J, x -> x^{-1} (order- and length-preserving)
  ConjugateW0,   // W^J -> W^K, x -> w0 x w0, K = w0 J w0 (order/length-preserving)
  ReverseToWK,   // ^JW -> W^K, x -> x^{-1} w0^K (order-reversing)
};
Element convert(const Element& x, SimpleSubset J, ConvertKind kind);

/// K = w0 J w0 as a subset of the simple reflections.
SimpleSubset opposite_subset(const SystemPtr& sys, SimpleSubset J);

/// Conjugate {w s w^{-1} : s in J} when every conjugate is again simple;
/// throws InternalCheckFailure otherwise.
SimpleSubset conjugate_subset(const Element& w, SimpleSubset J);

/// J cap ^wK = {s in J : w^{-1} s w in K}, computed by exact conjugation of
/// generator matrices.  Requires w in ^JW^K.
SimpleSubset refinement_type(SimpleSubset J, SimpleSubset K, const Element& w);

/// True iff every root of w^{-1}(Phi_J^+) lies in Phi_K or is positive.
bool refinement_contains_borel(SimpleSubset J, SimpleSubset K, const Element& w);

/// (J_infinity, K_infinity) for w in ^JW: the greatest subset of J fixed by
/// conjugation with w*w0^J, and its w0^J-conjugate.
std::pair<SimpleSubset, SimpleSubset> j_infinity(const Element& w, SimpleSubset J);

OrbitTypeSequence orbit_type_sequence(const Element& w, SimpleSubset J);

}  // namespace coxspec
