#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coxspec/coxeter.hpp"
#include "coxspec/poset.hpp"
#include "coxspec/twisted.hpp"

namespace coxspec {

/// An element of W(C_g) as a permutation of {1..2g} with
/// w(i) + w(2g+1-i) = 2g+1.
struct SignedPermView {
  std::vector<int> images;  // images[i-1] = w(i), 1-based values

  int g() const { return static_cast<int>(images.size()) / 2; }
  bool is_valid() const;
};

/// The {0,1}^g encoding of ^JW in the symplectic case.
struct EpsTuple {
  std::vector<uint8_t> eps;  // eps[i-1] = eps_i

  int g() const { return static_cast<int>(eps.size()); }
  std::string to_string() const;  // "eps_1 eps_2 ... eps_g" as a bitstring
  static EpsTuple from_string(const std::string& bits);
  /// Stratum dimension: sum eps_i * (g+1-i).
  int dimension() const;
  friend bool operator==(const EpsTuple& a, const EpsTuple& b) { return a.eps == b.eps; }
};

struct EOStratum {
  EpsTuple eps;
  Element element;
  int dimension;
};

/// Type C_g (A_1 for g = 1) with trivial Frobenius, together with
/// J = {s_1..s_{g-1}}: the Weyl group and parabolic type of the
/// g-dimensional principally polarized case.
std::pair<SystemPtr, SimpleSubset> build_symplectic(int g);

SignedPermView perm_view(const Element& a);
Element element_of_view(const SignedPermView& v, const SystemPtr& sys);

/// ^JW <-> {0,1}^g via w^{-1}(i) = j_i with Sigma = {j_1 < ... < j_g}.
EpsTuple eps_of(const Element& w);
Element element_of_eps(const EpsTuple& e, const SystemPtr& sys);

/// Coordinatewise Bruhat criterion on ^JW: w <= w' iff
/// w^{-1}(i) <= w'^{-1}(i) for i = 1..g.
bool jw_bruhat(const Element& w, const Element& wp);

/// All 2^g strata in lexicographic eps order, with elements and dimensions.
std::vector<EOStratum> eo_strata(int g);

/// The specialization poset of the Ekedahl-Oort strata of A_g; nodes in
/// lexicographic eps order, eps labels attached.
Poset eo_poset(int g, int max_g = 8);

}  // namespace coxspec
