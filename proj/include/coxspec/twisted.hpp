#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coxspec/coxeter.hpp"
#include "coxspec/parabolic.hpp"
#include "coxspec/poset.hpp"

namespace coxspec {

/// The data (J, delta) defining the specialization order on ^JW.  delta is
/// an isomorphism W_J -> W_K with delta(J) = K, stored by its generator map
/// and extended letterwise over reduced words.
class TwistedOrder {
 public:
  /// The default construction: delta(u) = w0^J F(u) (w0^J)^{-1}, K = w0 J w0.
  /// Requires F(J) = J.
  static TwistedOrder from_frobenius(const SystemPtr& sys, SimpleSubset J);

  /// Abstract delta given by generator images (gen_image[s] for s in J,
  /// entries outside J ignored); validated to preserve the Coxeter matrix.
  static TwistedOrder with_delta(const SystemPtr& sys, SimpleSubset J, SimpleSubset K,
                                 const std::vector<int>& gen_image);

  const SystemPtr& system_ptr() const { return sys_; }
  const CoxeterSystem& system() const { return *sys_; }
  SimpleSubset J() const { return j_; }
  SimpleSubset K() const { return k_; }
  int delta_gen(int s) const;
  int delta_inv_gen(int t) const;
  Element delta(const Element& u) const;
  Element delta_inverse(const Element& v) const;

 private:
  TwistedOrder(SystemPtr sys, SimpleSubset J, SimpleSubset K, std::vector<int> gen_image);

  SystemPtr sys_;
  SimpleSubset j_, k_;
  std::vector<int> delta_gen_;      // indexed by s in J, -1 elsewhere
  std::vector<int> delta_inv_gen_;  // indexed by t in K, -1 elsewhere
};

/// A (B x B)-orbit label.
struct OrbitPair {
  Element x;
  Element w;
};

// --- the specialization order -------------------------------------------

/// Exhaustive search over W_J for u with u^{-1} w delta(u) <= w'; returns
/// the witness.  w may be arbitrary; quotient membership matters only to
/// the downstream theorems.
std::optional<Element> spec_leq_witness(const Element& w, const Element& wp, const TwistedOrder& T);
bool spec_leq_naive(const Element& w, const Element& wp, const TwistedOrder& T);

/// Breadth-first closure of {w} under x -> s x delta(s), s in J, keeping
/// only images of the same length.  Requires w in ^JW.
std::vector<Element> twisted_orbit(const Element& w, const TwistedOrder& T);
bool spec_leq_bfs(const Element& w, const Element& wp, const TwistedOrder& T);

/// Third characterization: w <= w' iff there are u, v in W_J with v <= u
/// and u w delta(v)^{-1} <= w'.
bool spec_leq_uv(const Element& w, const Element& wp, const TwistedOrder& T);

/// The single implication check behind spec_leq_uv: u w' delta(v)^{-1} <= w
/// (which forces w' <= w).  Requires w, w' in ^JW, u, v in W_J, v <= u.
bool spec_coroll_check(const Element& w, const Element& wp, const Element& u, const Element& v,
                       const TwistedOrder& T);

/// The full specialization poset on ^JW, nodes sorted by (length, word).
Poset spec_poset(const TwistedOrder& T, std::size_t max_nodes = 4096);
/// Poset over a caller-supplied node list (must be exactly ^JW, any order).
Poset spec_poset_over(const TwistedOrder& T, std::vector<Element> nodes);

/// {w' in ^JW : w' <= w}, the labels of the orbits in the closure.
std::vector<Element> closure_set(const Element& w, const TwistedOrder& T);

/// Violation probe for the length lemma: true iff w <= w', l(w) = l(w') and
/// w != w' (never true per the theory).
bool lengthequal_check(const Element& w, const Element& wp, const TwistedOrder& T);

// --- (B x B)-orbit combinatorics ------------------------------------------

/// Sigma^{x,w} = Sigma^{x',w'} iff exists u in W_J with x' = x F(u)^{-1} and
/// w' u = w.
bool springer_orbit_equal(const OrbitPair& p, const OrbitPair& pp, const TwistedOrder& T);

/// Sigma^{x',w'} lies in the closure of Sigma^{x,w} iff exists u in W_J with
/// x u^{-1} <= x' and F(w') u <= F(w).  Requires p.x, pp.x in W^J.
bool springer_orbit_in_closure(const OrbitPair& p, const OrbitPair& pp, const TwistedOrder& T);

/// Labels x with Sigma^{x w0^J, 1} inside the closure of Sigma^{w w0^J, 1}:
/// the Bruhat cone {x : x <= w}.
std::vector<Element> sigma_closure(const Element& w, const TwistedOrder& T);

// --- Bruhat witness lemmas -------------------------------------------------

/// Smallest and largest elements of {y : w y <= x} under Bruhat order.
std::pair<Element, Element> ymin_ymax(const Element& w, const Element& x);

/// Witness x <= x' with x w <= x' w' (variant 1) or x' w <= x w' (variant 2);
/// requires w <= w'.  InternalCheckFailure if the guaranteed search misses.
Element bruhat_witness(const Element& xp, const Element& w, const Element& wp, int variant);

/// Given x in ^JW, l(xu) = l(x)+l(u), xu = u'x' with u' in W_J, x' in ^JW,
/// and u1' <= u': the unique u1 with x u1 = u1' x', checked to satisfy
/// u1 <= u.
Element bruhat_lifting_witness(const Element& x, const Element& u, const Element& u1p, SimpleSubset J);

/// Witness x <= v with a reduced word s_1..s_r whose prefix twists all
/// preserve l(w), and x^{-1} w delta(x) <= u^{-1} w delta(v).  Requires
/// w in ^JW, u, v in W_J, v <= u.
std::pair<Element, std::vector<int>> bruhatfour_witness(const Element& w, const Element& u,
                                                        const Element& v, const TwistedOrder& T);

}  // namespace coxspec
