#include "coxspec/coxeter.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace coxspec {

namespace {

// FNV-1a over the matrix entries, finalized with a splitmix64 round.
uint64_t hash_matrix(const std::vector<int32_t>& m) {
  uint64_t h = 1469598103934665603ULL;
  for (int32_t v : m) {
    h ^= static_cast<uint32_t>(v);
    h *= 1099511628211ULL;
  }
  h += 0x9e3779b97f4a7c15ULL;
  h ^= h >> 30; h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27; h *= 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

std::vector<int32_t> identity_matrix(int n) {
  std::vector<int32_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

std::vector<int32_t> mat_mul(const std::vector<int32_t>& a, const std::vector<int32_t>& b, int n) {
  std::vector<int32_t> c(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      int32_t aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      const int32_t* brow = &b[static_cast<std::size_t>(k) * n];
      int32_t* crow = &c[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

RootVec mat_vec(const std::vector<int32_t>& a, const RootVec& v, int n) {
  RootVec r(n, 0);
  for (int i = 0; i < n; ++i) {
    int32_t acc = 0;
    const int32_t* row = &a[static_cast<std::size_t>(i) * n];
    for (int j = 0; j < n; ++j) acc += row[j] * v[j];
    r[i] = acc;
  }
  return r;
}

// Roots have all coordinates of one sign; negative iff any coordinate is < 0.
bool is_negative_root(const RootVec& v) {
  for (int32_t x : v)
    if (x < 0) return true;
  return false;
}

// Index j if v == +/- alpha_j (sign reported), -1 otherwise.
int simple_root_index(const RootVec& v, int* sign) {
  int idx = -1;
  for (int j = 0; j < static_cast<int>(v.size()); ++j) {
    if (v[j] == 0) continue;
    if (idx >= 0 || (v[j] != 1 && v[j] != -1)) return -1;
    idx = j;
    *sign = v[j];
  }
  return idx;
}

}  // namespace

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    default: throw InvalidArgument(std::string("unknown family '") + c + "'");
  }
}

SimpleSubset SimpleSubset::of(std::initializer_list<int> gens) {
  SimpleSubset j;
  for (int s : gens) j = j.with(s);
  return j;
}

SimpleSubset SimpleSubset::of(const std::vector<int>& gens) {
  SimpleSubset j;
  for (int s : gens) j = j.with(s);
  return j;
}

std::vector<int> SimpleSubset::members() const {
  std::vector<int> out;
  for (int s = 0; s < 32; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

std::string SimpleSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int s : members()) {
    if (!first) os << ',';
    os << (s + 1);
    first = false;
  }
  os << '}';
  return os.str();
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(Family family, int rank,
                                                          const std::vector<int>& frobenius,
                                                          std::size_t max_enumeration) {
  if (rank < 1 || rank > kMaxRank)
    throw InvalidArgument("rank must be between 1 and " + std::to_string(kMaxRank));
  if ((family == Family::B || family == Family::C) && rank < 2)
    throw InvalidArgument("family B/C requires rank >= 2");
  if (family == Family::D && rank < 4)
    throw InvalidArgument("family D requires rank >= 4");

  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->family_ = family;
  sys->rank_ = rank;
  sys->max_enumeration_ = max_enumeration;
  const int n = rank;

  // Coxeter matrix.
  sys->coxeter_.assign(static_cast<std::size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) sys->coxeter_[static_cast<std::size_t>(i) * n + i] = 1;
  auto set_m = [&](int s, int t, int m) {
    sys->coxeter_[static_cast<std::size_t>(s) * n + t] = m;
    sys->coxeter_[static_cast<std::size_t>(t) * n + s] = m;
  };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) set_m(i, i + 1, 3);
      break;
    case Family::B:
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) set_m(i, i + 1, 3);
      set_m(n - 2, n - 1, 4);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) set_m(i, i + 1, 3);
      set_m(n - 3, n - 1, 3);
      break;
  }

  // Cartan matrix; B and C share one root datum (the C_n convention, last
  // simple root long), which is enough because only W matters here.
  sys->cartan_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      int m = sys->coxeter_m(s, t);
      int32_t a = 0;
      if (s == t) a = 2;
      else if (m == 3) a = -1;
      else if (m == 4) a = (t == n - 1) ? -2 : -1;  // <alpha_{n-1}, alpha_n^vee> = -2
      sys->cartan_[static_cast<std::size_t>(s) * n + t] = a;
    }
  }

  // Frobenius map: must be a bijection preserving the Coxeter matrix.
  std::vector<int> frob = frobenius;
  if (frob.empty()) {
    frob.resize(n);
    for (int i = 0; i < n; ++i) frob[i] = i;
  }
  if (static_cast<int>(frob.size()) != n)
    throw InvalidArgument("frobenius map must list an image for each generator");
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (frob[i] < 0 || frob[i] >= n || seen[frob[i]])
      throw InvalidArgument("frobenius map is not a bijection of the generators");
    seen[frob[i]] = true;
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (sys->coxeter_m(frob[s], frob[t]) != sys->coxeter_m(s, t))
        throw InvalidArgument("frobenius map is not a diagram automorphism");
  sys->frobenius_ = frob;
  sys->frobenius_identity_ = true;
  for (int i = 0; i < n; ++i)
    if (frob[i] != i) sys->frobenius_identity_ = false;

  // Generator matrices: s_i sends alpha_j to alpha_j - cartan(i,j) alpha_i.
  sys->gen_mats_.resize(n);
  for (int s = 0; s < n; ++s) {
    auto m = identity_matrix(n);
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(s) * n + j] -= sys->cartan(s, j);
    sys->gen_mats_[s] = std::move(m);
  }

  // Positive roots by closure under the simple reflections.
  std::map<RootVec, int> index;
  std::vector<RootVec> queue;
  for (int i = 0; i < n; ++i) {
    RootVec alpha(n, 0);
    alpha[i] = 1;
    index.emplace(alpha, static_cast<int>(queue.size()));
    queue.push_back(alpha);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    RootVec r = queue[k];
    for (int s = 0; s < n; ++s) {
      RootVec img = mat_vec(sys->gen_mats_[s], r, n);
      if (is_negative_root(img)) continue;
      if (index.emplace(img, static_cast<int>(queue.size())).second) queue.push_back(img);
    }
  }
  // std::map iteration gives a deterministic (lexicographic) root order.
  sys->pos_roots_.clear();
  for (const auto& [root, _] : index) sys->pos_roots_.push_back(root);
  std::size_t expected = 0;
  switch (family) {
    case Family::A: expected = static_cast<std::size_t>(n) * (n + 1) / 2; break;
    case Family::B:
    case Family::C: expected = static_cast<std::size_t>(n) * n; break;
    case Family::D: expected = static_cast<std::size_t>(n) * (n - 1); break;
  }
  if (sys->pos_roots_.size() != expected)
    throw InternalCheckFailure("positive root closure produced " + std::to_string(sys->pos_roots_.size()) +
                               " roots, expected " + std::to_string(expected));

  sys->root_support_.clear();
  for (const auto& r : sys->pos_roots_) {
    uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (r[i] != 0) mask |= 1u << i;
    sys->root_support_.push_back(mask);
  }

  return sys;
}

int CoxeterSystem::num_positive_roots(SimpleSubset J) const {
  int count = 0;
  for (uint32_t mask : root_support_)
    if ((mask & ~J.bits()) == 0) ++count;
  return count;
}

Element CoxeterSystem::identity() const {
  return Element(shared_from_this(), identity_matrix(rank_), 0);
}

Element CoxeterSystem::generator(int s) const {
  if (s < 0 || s >= rank_) throw InvalidArgument("generator index out of range");
  return Element(shared_from_this(), gen_mats_[s], 1);
}

bool CoxeterSystem::bruhat_cache_lookup(uint64_t ha, uint64_t hb, bool* out) const {
  std::lock_guard<std::mutex> lock(bruhat_mutex_);
  auto it = bruhat_cache_.find({ha, hb});
  if (it == bruhat_cache_.end()) return false;
  *out = it->second;
  return true;
}

void CoxeterSystem::bruhat_cache_store(uint64_t ha, uint64_t hb, bool value) const {
  std::lock_guard<std::mutex> lock(bruhat_mutex_);
  bruhat_cache_.emplace(std::make_pair(ha, hb), value);
}

std::shared_ptr<const std::vector<Element>> CoxeterSystem::subgroup_cache_lookup(uint32_t bits) const {
  std::lock_guard<std::mutex> lock(enum_mutex_);
  auto it = enum_cache_.find(bits);
  return it == enum_cache_.end() ? nullptr : it->second;
}

void CoxeterSystem::subgroup_cache_store(uint32_t bits, std::shared_ptr<const std::vector<Element>> v) const {
  std::lock_guard<std::mutex> lock(enum_mutex_);
  enum_cache_.emplace(bits, std::move(v));
}

// --- Element -------------------------------------------------------------

Element::Element(SystemPtr sys, std::vector<int32_t> mat) : sys_(std::move(sys)), mat_(std::move(mat)) {
  const int n = sys_->rank();
  length_ = 0;
  for (const auto& r : sys_->positive_roots())
    if (is_negative_root(mat_vec(mat_, r, n))) ++length_;
  hash_ = hash_matrix(mat_);
}

Element::Element(SystemPtr sys, std::vector<int32_t> mat, int known_length)
    : sys_(std::move(sys)), mat_(std::move(mat)), length_(known_length) {
  hash_ = hash_matrix(mat_);
}

RootVec Element::apply(const RootVec& v) const { return mat_vec(mat_, v, sys_->rank()); }

bool Element::takes_simple_negative(int s) const {
  const int n = sys_->rank();
  for (int i = 0; i < n; ++i)
    if (mat_[static_cast<std::size_t>(i) * n + s] < 0) return true;
  return false;
}

std::vector<int32_t> Element::inverse_matrix() const {
  const int n = sys_->rank();
  std::vector<int32_t> inv(static_cast<std::size_t>(n) * n, 0);
  int found = 0;
  for (const auto& beta : sys_->positive_roots()) {
    RootVec img = mat_vec(mat_, beta, n);
    int sign = 0;
    int j = simple_root_index(img, &sign);
    if (j < 0) continue;
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + j] = sign * beta[i];
    ++found;
  }
  if (found != n) throw InternalCheckFailure("element does not permute the root set");
  return inv;
}

Element Element::inverse() const {
  return Element(sys_, inverse_matrix(), length_);
}

Element Element::operator*(const Element& o) const {
  if (sys_.get() != o.sys_.get()) throw MixedSystem("cannot multiply elements of different systems");
  return Element(sys_, mat_mul(mat_, o.mat_, sys_->rank()));
}

std::vector<int> Element::word() const {
  // Peel the smallest-indexed left descent; s is a left descent of w exactly
  // when w^{-1}(alpha_s) < 0, i.e. column s of w^{-1} is negative.
  const int n = sys_->rank();
  std::vector<int32_t> v = inverse_matrix();  // w^{-1}, updated as w shrinks
  std::vector<int> letters;
  letters.reserve(length_);
  for (;;) {
    int s = -1;
    for (int cand = 0; cand < n && s < 0; ++cand)
      for (int i = 0; i < n; ++i)
        if (v[static_cast<std::size_t>(i) * n + cand] < 0) { s = cand; break; }
    if (s < 0) break;
    letters.push_back(s);
    v = mat_mul(v, sys_->generator_matrix(s), n);  // (s w)^{-1} = w^{-1} s
  }
  if (static_cast<int>(letters.size()) != length_)
    throw InternalCheckFailure("descent peeling did not terminate at the cached length");
  return letters;
}

SimpleSubset Element::descents(Side side) const {
  const int n = sys_->rank();
  SimpleSubset out;
  if (side == Side::Right) {
    for (int s = 0; s < n; ++s)
      if (takes_simple_negative(s)) out = out.with(s);
  } else {
    std::vector<int32_t> inv = inverse_matrix();
    for (int s = 0; s < n; ++s)
      for (int i = 0; i < n; ++i)
        if (inv[static_cast<std::size_t>(i) * n + s] < 0) { out = out.with(s); break; }
  }
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.sys_.get() != b.sys_.get()) throw MixedSystem("cannot compare elements of different systems");
  return a.mat_ == b.mat_;
}

// --- operations ----------------------------------------------------------

Element longest_element(const SystemPtr& sys, SimpleSubset J) {
  // Greedy ascent in the right weak order of W_J: multiply by any generator
  // of J that is not yet a right descent.
  Element w = sys->identity();
  const int target = sys->num_positive_roots(J);
  for (;;) {
    int s = -1;
    for (int cand : J.members()) {
      if (cand >= sys->rank()) throw InvalidArgument("subset contains an out-of-range generator");
      if (!w.takes_simple_negative(cand)) { s = cand; break; }
    }
    if (s < 0) break;
    w = w * sys->generator(s);
  }
  if (w.length() != target)
    throw InternalCheckFailure("longest element has wrong length");
  return w;
}

bool bruhat_leq(const Element& a, const Element& b) {
  if (&a.system() != &b.system()) throw MixedSystem("cannot compare elements of different systems");
  if (a.length() > b.length()) return false;
  if (a.length() == 0) return true;
  if (a.length() == b.length()) return a == b;

  const CoxeterSystem& sys = a.system();
  bool cached;
  if (sys.bruhat_cache_lookup(a.hash(), b.hash(), &cached)) return cached;

  // Lifting: pick a left descent s of b; then a <= b iff (sa <= sb when
  // l(sa) < l(a), else a <= sb).
  SimpleSubset db = b.descents(Side::Left);
  int s = db.members().front();  // b != e here
  Element g = sys.generator(s);
  Element sb = g * b;
  bool result;
  Element sa = g * a;
  if (sa.length() < a.length())
    result = bruhat_leq(sa, sb);
  else
    result = bruhat_leq(a, sb);
  sys.bruhat_cache_store(a.hash(), b.hash(), result);
  return result;
}

std::vector<Element> bruhat_lower_cone_subwords(const Element& b) {
  std::vector<int> word = b.word();
  std::unordered_set<Element, ElementHash, ElementEq> seen;
  std::vector<Element> cone;
  cone.push_back(b.system().identity());
  seen.insert(cone.front());
  for (int s : word) {
    Element g = b.system().generator(s);
    std::size_t sz = cone.size();
    for (std::size_t i = 0; i < sz; ++i) {
      Element x = cone[i] * g;
      if (seen.insert(x).second) cone.push_back(x);
    }
  }
  return cone;
}

bool bruhat_leq_subwords(const Element& a, const Element& b) {
  if (&a.system() != &b.system()) throw MixedSystem("cannot compare elements of different systems");
  auto cone = bruhat_lower_cone_subwords(b);
  for (const auto& x : cone)
    if (x == a) return true;
  return false;
}

Element apply_frobenius(const Element& a) {
  const auto& frob = a.system().frobenius_map();
  if (a.system().frobenius_is_identity()) return a;
  Element out = a.system().identity();
  for (int s : a.word()) out = out * a.system().generator(frob[s]);
  return out;
}

std::shared_ptr<const std::vector<Element>> enumerate_subgroup_shared(const SystemPtr& sys, SimpleSubset J) {
  if (auto cached = sys->subgroup_cache_lookup(J.bits())) return cached;
  auto computed = std::make_shared<const std::vector<Element>>(enumerate_subgroup(sys, J));
  sys->subgroup_cache_store(J.bits(), computed);
  return computed;
}

std::vector<Element> enumerate_subgroup(const SystemPtr& sys, SimpleSubset J) {
  std::vector<Element> out;
  std::unordered_set<Element, ElementHash, ElementEq> seen;
  out.push_back(sys->identity());
  seen.insert(out.front());
  std::vector<int> gens = J.members();
  for (int s : gens)
    if (s >= sys->rank()) throw InvalidArgument("subset contains an out-of-range generator");
  for (std::size_t k = 0; k < out.size(); ++k) {
    Element w = out[k];  // copy: out may reallocate
    for (int s : gens) {
      Element x = w * sys->generator(s);
      if (seen.insert(x).second) {
        if (out.size() >= sys->max_enumeration())
          throw BoundExceeded("subgroup enumeration exceeds the configured bound of " +
                              std::to_string(sys->max_enumeration()) + " elements");
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

Element product_of_word(const SystemPtr& sys, const std::vector<int>& letters) {
  Element out = sys->identity();
  for (int s : letters) out = out * sys->generator(s);
  return out;
}

bool in_parabolic(const Element& a, SimpleSubset J) {
  for (int s : a.word())
    if (!J.contains(s)) return false;
  return true;
}

bool element_less(const Element& a, const Element& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.word() < b.word();
}

void sort_elements(std::vector<Element>& v) {
  std::vector<std::pair<std::vector<int>, std::size_t>> keys;
  keys.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) keys.emplace_back(v[i].word(), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
    int lx = static_cast<int>(x.first.size()), ly = static_cast<int>(y.first.size());
    if (lx != ly) return lx < ly;
    return x.first < y.first;
  });
  std::vector<Element> sorted;
  sorted.reserve(v.size());
  for (const auto& [_, i] : keys) sorted.push_back(std::move(v[i]));
  v = std::move(sorted);
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << '*';
    os << 's' << (word[i] + 1);
  }
  return os.str();
}

std::string to_string(const Element& a) { return word_to_string(a.word()); }

}  // namespace coxspec
