#include "coxspec/symplectic.hpp"

#include <algorithm>

#include "coxspec/parabolic.hpp"

namespace coxspec {

namespace {

int require_g(const Element& a) {
  int g = a.system().rank();
  if (g >= 2 && a.system().family() != Family::C && a.system().family() != Family::B)
    throw InvalidArgument("permutation view requires a type C system");
  return g;
}

// Permutation of the generator s (0-based): tau_{s+1} tau_{2g-s-1} for
// s < g-1, tau_g for s = g-1; tau_j swaps j and j+1 (1-based positions).
void apply_generator_perm(std::vector<int>& images, int s, int g) {
  auto swap_positions = [&](int j) { std::swap(images[j - 1], images[j]); };
  if (s == g - 1) {
    swap_positions(g);
  } else {
    swap_positions(s + 1);
    swap_positions(2 * g - s - 1);
  }
}

}  // namespace

bool SignedPermView::is_valid() const {
  int n = static_cast<int>(images.size());
  if (n == 0 || n % 2 != 0) return false;
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  int g2 = n + 1;
  for (int i = 1; i <= n / 2; ++i)
    if (images[i - 1] + images[n - i] != g2) return false;
  return true;
}

std::string EpsTuple::to_string() const {
  std::string out;
  for (uint8_t b : eps) out.push_back(b ? '1' : '0');
  return out;
}

EpsTuple EpsTuple::from_string(const std::string& bits) {
  EpsTuple e;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("eps tuple must be a bitstring");
    e.eps.push_back(c == '1');
  }
  return e;
}

int EpsTuple::dimension() const {
  int g = static_cast<int>(eps.size());
  int d = 0;
  for (int i = 1; i <= g; ++i)
    if (eps[i - 1]) d += g + 1 - i;
  return d;
}

std::pair<SystemPtr, SimpleSubset> build_symplectic(int g) {
  if (g < 1) throw InvalidArgument("g must be at least 1");
  // C_1 degenerates to A_1; the rank-1 system is the same group.
  SystemPtr sys = (g == 1) ? CoxeterSystem::build(Family::A, 1)
                           : CoxeterSystem::build(Family::C, g);
  SimpleSubset J;
  for (int s = 0; s + 1 < g; ++s) J = J.with(s);
  return {sys, J};
}

SignedPermView perm_view(const Element& a) {
  int g = require_g(a);
  SignedPermView v;
  v.images.resize(2 * g);
  for (int i = 0; i < 2 * g; ++i) v.images[i] = i + 1;
  // w = s_{l1} * ... * s_{lk} composes as functions; appending a letter on
  // the right is a position swap of the images array.
  for (int s : a.word()) apply_generator_perm(v.images, s, g);
  if (!v.is_valid()) throw InternalCheckFailure("permutation view violates the symplectic condition");
  return v;
}

Element element_of_view(const SignedPermView& v, const SystemPtr& sys) {
  if (!v.is_valid()) throw InvalidArgument("not a symplectic permutation");
  int g = v.g();
  if (sys->rank() != g) throw InvalidArgument("system rank does not match the permutation");
  std::vector<int> images = v.images;
  std::vector<int> letters;
  for (;;) {
    int s = -1;
    for (int i = 1; i <= g; ++i) {
      if (images[i - 1] > images[i]) { s = i - 1; break; }  // descent at position i
    }
    if (s < 0) break;
    apply_generator_perm(images, s, g);  // right multiplication
    letters.push_back(s);
  }
  for (int i = 0; i < 2 * g; ++i)
    if (images[i] != i + 1) throw InternalCheckFailure("descent peeling did not reach the identity");
  std::reverse(letters.begin(), letters.end());
  return product_of_word(sys, letters);
}

EpsTuple eps_of(const Element& w) {
  int g = require_g(w);
  SignedPermView v = perm_view(w);
  std::vector<int> winv(2 * g + 1, 0);
  for (int i = 1; i <= 2 * g; ++i) winv[v.images[i - 1]] = i;
  for (int i = 1; i < g; ++i)
    if (winv[i] >= winv[i + 1]) throw InvalidArgument("eps_of requires w in ^JW");
  EpsTuple e;
  e.eps.resize(g);
  std::vector<bool> in_sigma(2 * g + 1, false);
  for (int i = 1; i <= g; ++i) in_sigma[winv[i]] = true;  // Sigma = {w^{-1}(1),..,w^{-1}(g)}
  for (int i = 1; i <= g; ++i) e.eps[i - 1] = in_sigma[i] ? 0 : 1;
  return e;
}

Element element_of_eps(const EpsTuple& e, const SystemPtr& sys) {
  int g = e.g();
  if (sys->rank() != g) throw InvalidArgument("system rank does not match the eps tuple");
  std::vector<int> sigma;
  for (int i = 1; i <= g; ++i) sigma.push_back(e.eps[i - 1] ? 2 * g + 1 - i : i);
  std::sort(sigma.begin(), sigma.end());
  std::vector<int> winv(2 * g + 1, 0);
  for (int i = 1; i <= g; ++i) {
    winv[i] = sigma[i - 1];
    winv[2 * g + 1 - i] = 2 * g + 1 - sigma[i - 1];
  }
  SignedPermView v;
  v.images.resize(2 * g);
  for (int i = 1; i <= 2 * g; ++i) v.images[winv[i] - 1] = i;
  return element_of_view(v, sys);
}

bool jw_bruhat(const Element& w, const Element& wp) {
  int g = require_g(w);
  if (&w.system() != &wp.system()) throw MixedSystem("cannot compare elements of different systems");
  SimpleSubset J;
  for (int s = 0; s + 1 < g; ++s) J = J.with(s);
  if (!in_quotient(w, J, Side::Left) || !in_quotient(wp, J, Side::Left))
    throw InvalidArgument("jw_bruhat requires both elements in ^JW");
  SignedPermView a = perm_view(w), b = perm_view(wp);
  std::vector<int> ainv(2 * g + 1), binv(2 * g + 1);
  for (int i = 1; i <= 2 * g; ++i) ainv[a.images[i - 1]] = i;
  for (int i = 1; i <= 2 * g; ++i) binv[b.images[i - 1]] = i;
  for (int i = 1; i <= g; ++i)
    if (ainv[i] > binv[i]) return false;
  return true;
}

std::vector<EOStratum> eo_strata(int g) {
  auto [sys, J] = build_symplectic(g);
  std::vector<EOStratum> out;
  for (uint32_t bits = 0; bits < (1u << g); ++bits) {
    EpsTuple e;
    e.eps.resize(g);
    for (int i = 0; i < g; ++i) e.eps[i] = (bits >> (g - 1 - i)) & 1;  // eps_1 is the top bit
    Element w = element_of_eps(e, sys);
    int dim = e.dimension();
    if (w.length() != dim)
      throw InternalCheckFailure("stratum dimension disagrees with the element length");
    out.push_back({std::move(e), std::move(w), dim});
  }
  return out;
}

Poset eo_poset(int g, int max_g) {
  if (g < 1) throw InvalidArgument("g must be at least 1");
  if (g > max_g)
    throw BoundExceeded("g = " + std::to_string(g) + " exceeds the bound of " + std::to_string(max_g));
  auto [sys, J] = build_symplectic(g);
  TwistedOrder T = TwistedOrder::from_frobenius(sys, J);
  auto strata = eo_strata(g);
  std::vector<Element> nodes;
  std::vector<std::string> eps;
  for (const auto& s : strata) {
    nodes.push_back(s.element);
    eps.push_back(s.eps.to_string());
  }
  Poset p = spec_poset_over(T, std::move(nodes));
  p.eps = std::move(eps);
  return p;
}

}  // namespace coxspec
