#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxspec/error.hpp"

namespace coxspec {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family family_from_char(char c);

constexpr int kMaxRank = 16;

/// Subset of the simple reflections I = {0, .., rank-1}.  Bitmask semantics;
/// generators are 0-based everywhere in the library (1-based only in I/O).
class SimpleSubset {
 public:
  SimpleSubset() = default;
  explicit SimpleSubset(uint32_t bits) : bits_(bits) {}
  static SimpleSubset full(int rank) { return SimpleSubset((rank >= 32 ? 0u : (1u << rank)) - 1u); }
  static SimpleSubset of(std::initializer_list<int> gens);
  static SimpleSubset of(const std::vector<int>& gens);

  bool contains(int s) const { return (bits_ >> s) & 1u; }
  SimpleSubset with(int s) const { return SimpleSubset(bits_ | (1u << s)); }
  SimpleSubset without(int s) const { return SimpleSubset(bits_ & ~(1u << s)); }
  bool subset_of(SimpleSubset o) const { return (bits_ & ~o.bits_) == 0; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  uint32_t bits() const { return bits_; }
  std::vector<int> members() const;
  std::string to_string() const;  // e.g. "{1,3}" with 1-based indices

  friend SimpleSubset operator&(SimpleSubset a, SimpleSubset b) { return SimpleSubset(a.bits_ & b.bits_); }
  friend SimpleSubset operator|(SimpleSubset a, SimpleSubset b) { return SimpleSubset(a.bits_ | b.bits_); }
  friend bool operator==(SimpleSubset a, SimpleSubset b) { return a.bits_ == b.bits_; }
  friend bool operator!=(SimpleSubset a, SimpleSubset b) { return a.bits_ != b.bits_; }

 private:
  uint32_t bits_ = 0;
};

/// Exact integer coordinates of a root in the simple-root basis.
using RootVec = std::vector<int32_t>;

enum class Side { Left, Right };

class Element;

/// A finite Weyl group of type A/B/C/D together with its root system,
/// Coxeter matrix and a diagram automorphism F.  Immutable after
/// construction; safe to share across threads.  B and C are realized by one
/// root datum (they have the same Weyl group); the family label records
/// which was requested.
class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
 public:
  /// frobenius: images of the 0-based generators; empty means identity.
  /// Throws InvalidArgument for unsupported family/rank or if frobenius is
  /// not a diagram automorphism (a bijection preserving the Coxeter matrix).
  static std::shared_ptr<const CoxeterSystem> build(Family family, int rank,
                                                    const std::vector<int>& frobenius = {},
                                                    std::size_t max_enumeration = 1000000);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int coxeter_m(int s, int t) const { return coxeter_[s * rank_ + t]; }
  int cartan(int s, int t) const { return cartan_[s * rank_ + t]; }
  const std::vector<RootVec>& positive_roots() const { return pos_roots_; }
  /// Bitmask of generators appearing in the support of positive root k.
  uint32_t root_support(int k) const { return root_support_[k]; }
  int num_positive_roots(SimpleSubset J) const;  // |Phi_J^+|
  const std::vector<int>& frobenius_map() const { return frobenius_; }
  bool frobenius_is_identity() const { return frobenius_identity_; }
  std::size_t max_enumeration() const { return max_enumeration_; }

  Element identity() const;
  Element generator(int s) const;

  /// Memoized answer lookup/insert for the recursive Bruhat criterion.
  /// Idempotent inserts; tolerates concurrent use.
  bool bruhat_cache_lookup(uint64_t ha, uint64_t hb, bool* out) const;
  void bruhat_cache_store(uint64_t ha, uint64_t hb, bool value) const;

  std::shared_ptr<const std::vector<Element>> subgroup_cache_lookup(uint32_t bits) const;
  void subgroup_cache_store(uint32_t bits, std::shared_ptr<const std::vector<Element>> v) const;

  const std::vector<int32_t>& generator_matrix(int s) const { return gen_mats_[s]; }

 private:
  CoxeterSystem() = default;

  Family family_ = Family::A;
  int rank_ = 0;
  std::size_t max_enumeration_ = 0;
  std::vector<int> coxeter_;   // rank x rank
  std::vector<int> cartan_;    // rank x rank
  std::vector<int> frobenius_; // permutation of {0..rank-1}
  bool frobenius_identity_ = true;
  std::vector<std::vector<int32_t>> gen_mats_;
  std::vector<RootVec> pos_roots_;
  std::vector<uint32_t> root_support_;

  struct PairHash {
    std::size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
      uint64_t x = p.first ^ (p.second * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL);
      x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
      x ^= x >> 27; x *= 0x94d049bb133111ebULL;
      return static_cast<std::size_t>(x ^ (x >> 31));
    }
  };
  mutable std::mutex bruhat_mutex_;
  mutable std::unordered_map<std::pair<uint64_t, uint64_t>, bool, PairHash> bruhat_cache_;
  mutable std::mutex enum_mutex_;
  mutable std::unordered_map<uint32_t, std::shared_ptr<const std::vector<Element>>> enum_cache_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

/// A group element via its integer matrix in the reflection representation
/// (columns are the images of the simple roots).  Length is computed at
/// construction; the canonical reduced word is computed on demand.
/// Immutable; equality is matrix equality within one system.
class Element {
 public:
  Element(SystemPtr sys, std::vector<int32_t> mat);
  Element(SystemPtr sys, std::vector<int32_t> mat, int known_length);

  const CoxeterSystem& system() const { return *sys_; }
  const SystemPtr& system_ptr() const { return sys_; }
  int length() const { return length_; }
  uint64_t hash() const { return hash_; }
  bool is_identity() const { return length_ == 0; }
  const std::vector<int32_t>& matrix() const { return mat_; }

  /// Canonical reduced word: repeatedly remove the smallest-indexed left
  /// descent.  Letters are 0-based generator indices.
  std::vector<int> word() const;

  Element inverse() const;
  Element operator*(const Element& o) const;

  /// Image of a root vector under this element.
  RootVec apply(const RootVec& v) const;
  /// True iff this element sends alpha_s to a negative root, i.e. s is a
  /// right descent.
  bool takes_simple_negative(int s) const;
  SimpleSubset descents(Side side) const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  std::vector<int32_t> inverse_matrix() const;

  SystemPtr sys_;
  std::vector<int32_t> mat_;
  int length_ = 0;
  uint64_t hash_ = 0;
};

// --- coxeter_core operations -------------------------------------------

inline Element multiply(const Element& a, const Element& b) { return a * b; }
inline Element inverse(const Element& a) { return a.inverse(); }
inline int length(const Element& a) { return a.length(); }
inline std::vector<int> canonical_word(const Element& a) { return a.word(); }
inline SimpleSubset descents(const Element& a, Side side) { return a.descents(side); }

/// Longest element w_{0,J} of the standard parabolic W_J (w_0 for J = I).
Element longest_element(const SystemPtr& sys, SimpleSubset J);
inline Element longest_element(const SystemPtr& sys) { return longest_element(sys, SimpleSubset::full(sys->rank())); }

/// Bruhat order via the recursive lifting criterion, memoized per system.
bool bruhat_leq(const Element& a, const Element& b);

/// Brute-force subword oracle: a <= b iff a is a product of a subword of the
/// canonical reduced word of b.  Independent of bruhat_leq; for testing.
bool bruhat_leq_subwords(const Element& a, const Element& b);
/// All products of subwords of a reduced word of b, i.e. {x : x <= b}.
std::vector<Element> bruhat_lower_cone_subwords(const Element& b);

/// Image of a under the group automorphism extending the system's diagram
/// automorphism F letterwise on any reduced word.
Element apply_frobenius(const Element& a);

/// All elements of W_J, each exactly once, by breadth-first closure under
/// right multiplication by J.  Throws BoundExceeded past max_enumeration.
std::vector<Element> enumerate_subgroup(const SystemPtr& sys, SimpleSubset J);
/// Cached variant shared by the heavier operations.
std::shared_ptr<const std::vector<Element>> enumerate_subgroup_shared(const SystemPtr& sys, SimpleSubset J);

/// Product of generators, left to right.
Element product_of_word(const SystemPtr& sys, const std::vector<int>& letters);

/// True iff a lies in the standard parabolic subgroup W_J.
bool in_parabolic(const Element& a, SimpleSubset J);

/// Deterministic order: by (length, canonical word lexicographically).
bool element_less(const Element& a, const Element& b);
void sort_elements(std::vector<Element>& v);

/// "s2*s1" style rendering of the canonical word, "e" for the identity.
std::string word_to_string(const std::vector<int>& word);
std::string to_string(const Element& a);

struct ElementHash {
  std::size_t operator()(const Element& e) const { return static_cast<std::size_t>(e.hash()); }
};
struct ElementEq {
  bool operator()(const Element& a, const Element& b) const { return a.matrix() == b.matrix(); }
};

}  // namespace coxspec
