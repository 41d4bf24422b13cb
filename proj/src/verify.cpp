#include "coxspec/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "coxspec/parabolic.hpp"
#include "coxspec/symplectic.hpp"
#include "coxspec/twisted.hpp"

namespace coxspec {

namespace {

constexpr std::size_t kMaxCounterexamples = 20;

using ElementSet = std::unordered_set<Element, ElementHash, ElementEq>;

std::string subject_of(Family family, int rank) {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::string wstr(const Element& e) { return word_to_string(e.word()); }

ElementSet to_set(const std::vector<Element>& v) { return ElementSet(v.begin(), v.end()); }

bool same_set(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (!b.count(x)) return false;
  return true;
}

}  // namespace

void VerifyReport::fail(const std::string& counterexample) {
  pass = false;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(counterexample);
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["subject"] = subject;
  out["pass"] = pass;
  out["checked"] = checked;
  out["counterexamples"] = counterexamples;
  return out.dump(2) + "\n";
}

// --- bruhat ---------------------------------------------------------------

VerifyReport verify_bruhat(Family family, int rank, const VerifyOptions& opt) {
  VerifyReport r{"bruhat", subject_of(family, rank)};
  auto sys = CoxeterSystem::build(family, rank);
  const auto& W = *enumerate_subgroup_shared(sys, SimpleSubset::full(rank));

  std::unordered_map<uint64_t, ElementSet> cones;
  auto oracle = [&](const Element& a, const Element& b) {
    auto it = cones.find(b.hash());
    if (it == cones.end()) it = cones.emplace(b.hash(), to_set(bruhat_lower_cone_subwords(b))).first;
    return it->second.count(a) > 0;
  };
  auto check = [&](const Element& a, const Element& b) {
    ++r.checked;
    if (bruhat_leq(a, b) != oracle(a, b))
      r.fail("bruhat mismatch at a=" + wstr(a) + " b=" + wstr(b));
  };

  if (W.size() <= 150) {
    for (const auto& a : W)
      for (const auto& b : W) check(a, b);
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
  for (int i = 0; i < opt.samples; ++i) check(W[pick(rng)], W[pick(rng)]);
  return r;
}

// --- quotients --------------------------------------------------------------

VerifyReport verify_quotients(Family family, int rank, const VerifyOptions& opt) {
  (void)opt;
  VerifyReport r{"quotients", subject_of(family, rank)};
  auto sys = CoxeterSystem::build(family, rank);
  const auto& W = *enumerate_subgroup_shared(sys, SimpleSubset::full(rank));
  Element w0 = longest_element(sys);

  for (uint32_t bits = 0; bits < (1u << rank); ++bits) {
    SimpleSubset J(bits);
    const auto& WJ = *enumerate_subgroup_shared(sys, J);

    // Four characterizations of ^JW.
    ElementSet by_descent, by_coset_min, by_additivity, by_roots;
    for (const auto& w : W) {
      if (in_quotient(w, J, Side::Left)) by_descent.insert(w);

      bool minimal = true, additive = true;
      for (const auto& u : WJ) {
        Element uw = u * w;
        if (!bruhat_leq(w, uw)) minimal = false;
        if (uw.length() != u.length() + w.length()) additive = false;
        if (!minimal && !additive) break;
      }
      if (minimal) by_coset_min.insert(w);
      if (additive) by_additivity.insert(w);

      // w^{-1}(Phi_J^+) subset Phi^+.
      Element winv = w.inverse();
      bool roots_ok = true;
      for (std::size_t k = 0; k < sys->positive_roots().size() && roots_ok; ++k) {
        if ((sys->root_support(static_cast<int>(k)) & ~J.bits()) != 0) continue;
        RootVec img = winv.apply(sys->positive_roots()[k]);
        for (int32_t c : img)
          if (c < 0) { roots_ok = false; break; }
      }
      if (roots_ok) by_roots.insert(w);
    }
    r.checked += static_cast<long long>(4 * W.size());
    if (!same_set(by_descent, by_coset_min) || !same_set(by_descent, by_additivity) ||
        !same_set(by_descent, by_roots))
      r.fail("^JW characterizations disagree for J=" + J.to_string());
    if (by_descent.size() * WJ.size() != W.size())
      r.fail("|^JW| * |W_J| != |W| for J=" + J.to_string());

    // Each coset W_J w meets ^JW in exactly one minimal-length element.
    ElementSet seen_cosets;
    for (const auto& w : by_descent) {
      int min_len = w.length();
      for (const auto& u : WJ) {
        Element uw = u * w;
        if (uw.length() < min_len)
          r.fail("coset of " + wstr(w) + " has a shorter element, J=" + J.to_string());
        seen_cosets.insert(uw);
      }
    }
    if (seen_cosets.size() != W.size())
      r.fail("cosets of ^JW do not tile W for J=" + J.to_string());

    // The three bijections out of the quotients.
    std::vector<Element> quotJ(by_descent.begin(), by_descent.end());
    sort_elements(quotJ);
    SimpleSubset K = opposite_subset(sys, J);
    ElementSet WrightJ, WrightK;
    for (const auto& w : W) {
      if (in_quotient(w, J, Side::Right)) WrightJ.insert(w);
      if (in_quotient(w, K, Side::Right)) WrightK.insert(w);
    }
    Element w0K = w0 * longest_element(sys, K);

    ElementSet inv_img, rev_img, conj_img;
    for (const auto& x : quotJ) {
      Element xi = convert(x, J, ConvertKind::Inverse);
      if (xi.length() != x.length()) r.fail("inverse changes length at " + wstr(x));
      inv_img.insert(xi);
      Element xr = convert(x, J, ConvertKind::ReverseToWK);
      if (xr.length() != w0K.length() - x.length())
        r.fail("reverse_to_WK length identity fails at " + wstr(x) + ", J=" + J.to_string());
      rev_img.insert(xr);
    }
    for (const auto& x : WrightJ) {
      Element xc = convert(x, J, ConvertKind::ConjugateW0);
      if (xc.length() != x.length()) r.fail("conjugate_w0 changes length at " + wstr(x));
      conj_img.insert(xc);
    }
    if (!same_set(inv_img, WrightJ)) r.fail("x->x^{-1} does not land onto W^J, J=" + J.to_string());
    if (!same_set(rev_img, WrightK)) r.fail("x->x^{-1}w0^K does not land onto W^K, J=" + J.to_string());
    if (!same_set(conj_img, WrightK)) r.fail("x->w0 x w0 does not land onto W^K, J=" + J.to_string());
    r.checked += static_cast<long long>(quotJ.size() * 2 + WrightJ.size());

    std::vector<Element> rightJ(WrightJ.begin(), WrightJ.end());
    sort_elements(rightJ);
    for (const auto& x : quotJ) {
      for (const auto& y : quotJ) {
        bool lhs = bruhat_leq(x, y);
        if (lhs != bruhat_leq(x.inverse(), y.inverse()))
          r.fail("x->x^{-1} is not order-preserving at (" + wstr(x) + "," + wstr(y) + ")");
        if (lhs != bruhat_leq(convert(y, J, ConvertKind::ReverseToWK), convert(x, J, ConvertKind::ReverseToWK)))
          r.fail("x->x^{-1}w0^K is not order-reversing at (" + wstr(x) + "," + wstr(y) + ")");
        ++r.checked;
      }
    }
    for (const auto& x : rightJ)
      for (const auto& y : rightJ) {
        if (bruhat_leq(x, y) != bruhat_leq(w0 * x * w0, w0 * y * w0))
          r.fail("x->w0 x w0 is not order-preserving at (" + wstr(x) + "," + wstr(y) + ")");
        ++r.checked;
      }

    // The .^JW-part map ^{J'}W -> ^JW is surjective for J' subset J.
    for (uint32_t sub = J.bits(); ; sub = (sub - 1) & J.bits()) {
      SimpleSubset Jp(sub);
      if (Jp != J) {
        ElementSet image;
        for (const auto& w : W)
          if (in_quotient(w, Jp, Side::Left)) image.insert(decompose(w, J).w);
        if (image.size() != by_descent.size())
          r.fail("canonical surjection misses ^JW for J'=" + Jp.to_string() + " inside J=" + J.to_string());
        ++r.checked;
      }
      if (sub == 0) break;
    }
  }
  return r;
}

// --- howlett ----------------------------------------------------------------

namespace {

void check_howlett_case(VerifyReport& r, const SystemPtr& sys, const Element& w, SimpleSubset J,
                        SimpleSubset K) {
  auto dec = howlett_decompose(w, J, K);
  ++r.checked;
  if (!in_parabolic(dec.u, J)) r.fail("howlett u outside W_J at w=" + wstr(w));
  if (!in_quotient(dec.wbar, J, Side::Left) || !in_quotient(dec.wbar, K, Side::Right))
    r.fail("howlett wbar outside ^JW^K at w=" + wstr(w));
  if (!in_parabolic(dec.v, K) || !in_quotient(dec.v, dec.k_prime, Side::Left))
    r.fail("howlett v outside W_K cap ^{K'}W at w=" + wstr(w));
  if (!(dec.u * dec.wbar * dec.v == w)) r.fail("howlett does not recompose at w=" + wstr(w));
  if (dec.u.length() + dec.wbar.length() + dec.v.length() != w.length())
    r.fail("howlett lengths not additive at w=" + wstr(w));
  if (!in_quotient(dec.wbar * dec.v, J, Side::Left))
    r.fail("howlett wbar*v outside ^JW at w=" + wstr(w));

  // Uniqueness: wbar is pinned as the double coset representative, so count
  // the v in W_K cap ^{K'}W for which u = w v^{-1} wbar^{-1} lands in W_J.
  const auto& WK = *enumerate_subgroup_shared(sys, K);
  Element wbar_inv = dec.wbar.inverse();
  int solutions = 0;
  for (const auto& v : WK) {
    if (!in_quotient(v, dec.k_prime, Side::Left)) continue;
    Element u = w * v.inverse() * wbar_inv;
    if (in_parabolic(u, J)) ++solutions;
  }
  if (solutions != 1)
    r.fail("howlett decomposition not unique (found " + std::to_string(solutions) + ") at w=" + wstr(w) +
           " J=" + J.to_string() + " K=" + K.to_string());
}

}  // namespace

VerifyReport verify_howlett(Family family, int rank, const VerifyOptions& opt) {
  VerifyReport r{"howlett", subject_of(family, rank)};
  auto sys = CoxeterSystem::build(family, rank);
  const auto& W = *enumerate_subgroup_shared(sys, SimpleSubset::full(rank));
  const bool exhaustive = W.size() <= 48;

  if (exhaustive) {
    for (uint32_t jb = 0; jb < (1u << rank); ++jb)
      for (uint32_t kb = 0; kb < (1u << rank); ++kb)
        for (const auto& w : W) check_howlett_case(r, sys, w, SimpleSubset(jb), SimpleSubset(kb));
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<uint32_t> pick_bits(0, (1u << rank) - 1);
    std::uniform_int_distribution<std::size_t> pick_w(0, W.size() - 1);
    for (int i = 0; i < opt.samples; ++i)
      check_howlett_case(r, sys, W[pick_w(rng)], SimpleSubset(pick_bits(rng)), SimpleSubset(pick_bits(rng)));
  }

  // Refined statement: for w in wbar*W_K the W_J-part lies in W_{J'}.
  for (uint32_t jb = 0; jb < (1u << rank); ++jb) {
    for (uint32_t kb = 0; kb < (1u << rank); ++kb) {
      SimpleSubset J(jb), K(kb);
      const auto& WK = *enumerate_subgroup_shared(sys, K);
      for (const auto& wbar : double_reps(sys, J, K)) {
        if (!exhaustive && WK.size() > 48) break;
        for (const auto& c : WK) {
          ++r.checked;
          if (!howlett_variant_check(wbar * c, wbar, J, K))
            r.fail("refined howlett fails at wbar=" + wstr(wbar) + " c=" + wstr(c) +
                   " J=" + J.to_string() + " K=" + K.to_string());
        }
      }
    }
  }
  return r;
}

// --- jinfty -----------------------------------------------------------------

VerifyReport verify_jinfty(Family family, int rank, const VerifyOptions& opt) {
  (void)opt;
  VerifyReport r{"jinfty", subject_of(family, rank)};
  auto sys = CoxeterSystem::build(family, rank);
  for (uint32_t jb = 0; jb < (1u << rank); ++jb) {
    SimpleSubset J(jb);
    for (const auto& w : min_coset_reps(sys, J, Side::Left)) {
      ++r.checked;
      auto [jinf, kinf] = j_infinity(w, J);
      auto seq = orbit_type_sequence(w, J);
      const auto& last = seq.trace.back();
      if (last.J != jinf)
        r.fail("J_infinity mismatch at w=" + wstr(w) + " J=" + J.to_string());
      if (!jinf.empty() && last.K != kinf)
        r.fail("K_infinity mismatch at w=" + wstr(w) + " J=" + J.to_string());
      if (!(last.y == w))
        r.fail("y_infinity != w at w=" + wstr(w) + " J=" + J.to_string());
      for (std::size_t i = 1; i < seq.trace.size(); ++i) {
        if (!seq.trace[i].J.subset_of(seq.trace[i - 1].J) || !seq.trace[i].K.subset_of(seq.trace[i - 1].K))
          r.fail("type sequence is not shrinking at w=" + wstr(w) + " J=" + J.to_string());
      }
    }
  }
  return r;
}

// --- springer ---------------------------------------------------------------

VerifyReport verify_springer(Family family, int rank, const VerifyOptions& opt) {
  VerifyReport r{"springer", subject_of(family, rank)};
  auto sys = CoxeterSystem::build(family, rank);
  const auto& W = *enumerate_subgroup_shared(sys, SimpleSubset::full(rank));
  std::mt19937_64 rng(opt.seed);

  for (uint32_t jb = 0; jb < (1u << rank); ++jb) {
    SimpleSubset J(jb);
    TwistedOrder T = TwistedOrder::from_frobenius(sys, J);
    const auto& WJ = *enumerate_subgroup_shared(sys, J);
    Element w0J = longest_element(sys) * longest_element(sys, J);

    // Orbit equality classes partition W x W into |W|^2/|W_J| classes.
    auto class_key = [&](const Element& x, const Element& w) {
      std::pair<Element, Element> best{x, w};
      for (const auto& u : WJ) {
        std::pair<Element, Element> cand{x * apply_frobenius(u).inverse(), w * u.inverse()};
        if (element_less(cand.first, best.first) ||
            (cand.first == best.first && element_less(cand.second, best.second)))
          best = cand;
      }
      return best;
    };
    if (W.size() <= 120) {
      std::unordered_set<uint64_t> classes;
      for (const auto& x : W)
        for (const auto& w : W) {
          auto key = class_key(x, w);
          classes.insert(key.first.hash() * 0x9e3779b97f4a7c15ULL + key.second.hash());
        }
      ++r.checked;
      if (classes.size() * WJ.size() != W.size() * W.size())
        r.fail("orbit class count is not |W|^2/|W_J| for J=" + J.to_string());
    }

    // springer_orbit_equal agrees with the class keys on random pairs.
    std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
    for (int i = 0; i < std::min(opt.samples, 200); ++i) {
      OrbitPair p{W[pick(rng)], W[pick(rng)]};
      OrbitPair q{W[pick(rng)], W[pick(rng)]};
      bool by_def = springer_orbit_equal(p, q, T);
      auto kp = class_key(p.x, p.w), kq = class_key(q.x, q.w);
      bool by_key = kp.first == kq.first && kp.second == kq.second;
      ++r.checked;
      if (by_def != by_key)
        r.fail("orbit equality disagreement at (" + wstr(p.x) + "," + wstr(p.w) + ") vs (" +
               wstr(q.x) + "," + wstr(q.w) + ")");
    }

    // Closure relation: reflexivity on admissible labels, and the cross-check
    // against the Bruhat cone description of closure(Sigma^{w w0^J, 1}).
    Element one = sys->identity();
    for (const auto& x : W) {
      if (!in_quotient(x, J, Side::Right)) continue;
      for (const auto& w : W) {
        OrbitPair p{x, w};
        ++r.checked;
        if (!springer_orbit_in_closure(p, p, T))
          r.fail("closure relation is not reflexive at (" + wstr(x) + "," + wstr(w) + ")");
      }
      break;  // one x suffices for the reflexivity spot check per J
    }
    for (const auto& w : W) {
      Element ww = w * w0J;
      if (!in_quotient(ww, J, Side::Right)) continue;
      auto cone = to_set(sigma_closure(w, T));
      for (const auto& x : W) {
        Element xw = x * w0J;
        if (!in_quotient(xw, J, Side::Right)) continue;
        ++r.checked;
        bool by_springer = springer_orbit_in_closure({ww, one}, {xw, one}, T);
        bool by_cone = cone.count(x) > 0;
        if (by_springer != by_cone)
          r.fail("closure cross-check fails at w=" + wstr(w) + " x=" + wstr(x) + " J=" + J.to_string());
      }
    }

    // Transitivity on admissible class representatives (small J only).
    if (W.size() <= 8) {
      std::vector<OrbitPair> reps;
      std::unordered_set<uint64_t> seen;
      for (const auto& x : W) {
        if (!in_quotient(x, J, Side::Right)) continue;
        for (const auto& w : W) {
          auto key = class_key(x, w);
          if (seen.insert(key.first.hash() * 0x9e3779b97f4a7c15ULL + key.second.hash()).second)
            reps.push_back({x, w});
        }
      }
      for (const auto& a : reps)
        for (const auto& b : reps) {
          if (!springer_orbit_in_closure(a, b, T)) continue;
          for (const auto& c : reps) {
            ++r.checked;
            if (springer_orbit_in_closure(b, c, T) && !springer_orbit_in_closure(a, c, T))
              r.fail("closure relation not transitive at J=" + J.to_string());
          }
        }
    }
  }
  return r;
}

// --- spec-order ---------------------------------------------------------------

VerifyReport verify_spec_order(Family family, int rank, const std::vector<int>& frobenius,
                               const VerifyOptions& opt) {
  VerifyReport r{"spec-order", subject_of(family, rank)};
  auto sys = CoxeterSystem::build(family, rank, frobenius);
  const auto& W = *enumerate_subgroup_shared(sys, SimpleSubset::full(rank));
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pickW(0, W.size() - 1);
  const bool small = W.size() <= 24;

  for (uint32_t jb = 0; jb < (1u << rank); ++jb) {
    SimpleSubset J(jb);
    SimpleSubset FJ;
    for (int s : J.members()) FJ = FJ.with(sys->frobenius_map()[s]);
    if (FJ != J) continue;

    TwistedOrder T = TwistedOrder::from_frobenius(sys, J);
    const auto& WJ = *enumerate_subgroup_shared(sys, J);
    auto nodes = min_coset_reps(sys, J, Side::Left);

    // delta is an order-preserving isomorphism onto W_K.
    for (const auto& u : WJ)
      for (const auto& v : WJ) {
        ++r.checked;
        if (!(T.delta(u * v) == T.delta(u) * T.delta(v)))
          r.fail("delta is not a homomorphism at (" + wstr(u) + "," + wstr(v) + ")");
        if (bruhat_leq(u, v) != bruhat_leq(T.delta(u), T.delta(v)))
          r.fail("delta is not order-preserving at (" + wstr(u) + "," + wstr(v) + ")");
        if (!small) break;
      }

    // Triple oracle agreement on all pairs of ^JW.
    for (const auto& w : nodes) {
      for (const auto& wp : nodes) {
        bool naive = spec_leq_naive(w, wp, T);
        bool bfs = spec_leq_bfs(w, wp, T);
        bool uv = spec_leq_uv(w, wp, T);
        ++r.checked;
        if (naive != bfs || naive != uv)
          r.fail("oracle disagreement at w=" + wstr(w) + " w'=" + wstr(wp) + " J=" + J.to_string() +
                 " naive=" + std::to_string(naive) + " bfs=" + std::to_string(bfs) +
                 " uv=" + std::to_string(uv));
      }
    }

    // Axioms plus compatibility with Bruhat order and length.
    Poset p = spec_poset_over(T, nodes);  // throws on axiom violation
    for (int i = 0; i < p.size(); ++i)
      for (int k = 0; k < p.size(); ++k) {
        ++r.checked;
        if (bruhat_leq(p.labels[i], p.labels[k]) && !p.leq[i][k])
          r.fail("Bruhat pair not in the specialization order at (" + wstr(p.labels[i]) + "," +
                 wstr(p.labels[k]) + ")");
        if (p.leq[i][k] && p.labels[i].length() > p.labels[k].length())
          r.fail("length not monotone at (" + wstr(p.labels[i]) + "," + wstr(p.labels[k]) + ")");
        if (p.leq[i][k] && i != k && p.labels[i].length() == p.labels[k].length())
          r.fail("distinct comparable elements of equal length at (" + wstr(p.labels[i]) + "," +
                 wstr(p.labels[k]) + ")");
        if (lengthequal_check(p.labels[i], p.labels[k], T))
          r.fail("lengthequal violation at (" + wstr(p.labels[i]) + "," + wstr(p.labels[k]) + ")");
      }
    if (J.empty()) {
      for (int i = 0; i < p.size(); ++i)
        for (int k = 0; k < p.size(); ++k) {
          ++r.checked;
          if (p.leq[i][k] != bruhat_leq(p.labels[i], p.labels[k]))
            r.fail("J=0: specialization order differs from Bruhat order");
        }
    }
    if (J == SimpleSubset::full(rank) && p.size() != 1) r.fail("J=I: ^IW is not a single element");

    // closure_set is the downward cone of the poset.
    for (int i = 0; i < p.size(); ++i) {
      auto cs = to_set(closure_set(p.labels[i], T));
      std::size_t expect = 0;
      for (int k = 0; k < p.size(); ++k) {
        if (p.leq[k][i]) {
          ++expect;
          if (!cs.count(p.labels[k])) r.fail("closure_set misses a cone member at " + wstr(p.labels[i]));
        }
      }
      ++r.checked;
      if (cs.size() != expect) r.fail("closure_set has extra members at " + wstr(p.labels[i]));
    }

    // The corollary implication: u w delta(v)^{-1} <= w' forces w <= w'.
    for (const auto& w : nodes)
      for (const auto& wp : nodes)
        for (const auto& u : WJ) {
          for (const auto& v : WJ) {
            if (!bruhat_leq(v, u)) continue;
            ++r.checked;
            if (spec_coroll_check(wp, w, u, v, T) && !spec_leq_bfs(w, wp, T))
              r.fail("corollary implication fails at w=" + wstr(w) + " w'=" + wstr(wp) +
                     " u=" + wstr(u) + " v=" + wstr(v));
            if (!small) break;
          }
          if (!small) break;
        }

    // LemmaSpec1: comparable pairs admit u, u' with uw <= u'w'd(u')^{-1}d(u) in ^JW.
    for (int i = 0; i < p.size(); ++i)
      for (int k = 0; k < p.size(); ++k) {
        if (!p.leq[i][k] || !small) continue;
        const Element& w = p.labels[i];
        const Element& wp = p.labels[k];
        bool found = false;
        for (const auto& u : WJ) {
          for (const auto& up : WJ) {
            Element cand = up * wp * T.delta(up).inverse() * T.delta(u);
            if (in_quotient(cand, J, Side::Left) && bruhat_leq(u * w, cand)) { found = true; break; }
          }
          if (found) break;
        }
        ++r.checked;
        if (!found) r.fail("no LemmaSpec1 witness at w=" + wstr(w) + " w'=" + wstr(wp));
      }

    // Witness lemmas tied to this J.
    auto check_bruhatfour = [&](const Element& w, const Element& u, const Element& v) {
      auto [x, word] = bruhatfour_witness(w, u, v, T);
      ++r.checked;
      if (!bruhat_leq(x, v)) r.fail("bruhatfour witness not below v at w=" + wstr(w));
      if (!(product_of_word(sys, word) == x) || static_cast<int>(word.size()) != x.length())
        r.fail("bruhatfour witness word is not reduced at w=" + wstr(w));
      Element y = w;
      for (int s : word) {
        y = sys->generator(s) * y * sys->generator(T.delta_gen(s));
        if (y.length() != w.length()) r.fail("bruhatfour prefix twist changes length at w=" + wstr(w));
      }
      if (!bruhat_leq(x.inverse() * w * T.delta(x), u.inverse() * w * T.delta(v)))
        r.fail("bruhatfour target inequality fails at w=" + wstr(w));
    };
    if (small) {
      for (const auto& w : nodes)
        for (const auto& u : WJ)
          for (const auto& v : WJ)
            if (bruhat_leq(v, u)) check_bruhatfour(w, u, v);
    } else {
      std::uniform_int_distribution<std::size_t> pickN(0, nodes.size() - 1);
      std::uniform_int_distribution<std::size_t> pickJ(0, WJ.size() - 1);
      for (int i = 0; i < opt.samples / 10 + 1; ++i) {
        const Element& u = WJ[pickJ(rng)];
        const Element& v = WJ[pickJ(rng)];
        if (bruhat_leq(v, u)) check_bruhatfour(nodes[pickN(rng)], u, v);
      }
    }

    // Lifting lemma over this J.
    auto check_lifting = [&](const Element& x, const Element& u) {
      if (!in_quotient(x, J, Side::Left)) return;
      Element xu = x * u;
      if (xu.length() != x.length() + u.length()) return;
      auto dec = decompose(xu, J);
      for (const auto& u1p : bruhat_lower_cone_subwords(dec.u)) {
        Element u1 = bruhat_lifting_witness(x, u, u1p, J);
        ++r.checked;
        if (!(x * u1 == u1p * dec.w)) r.fail("lifting witness equation fails at x=" + wstr(x));
      }
    };
    if (small) {
      for (const auto& x : nodes)
        for (const auto& u : W) check_lifting(x, u);
    } else {
      std::uniform_int_distribution<std::size_t> pickN(0, nodes.size() - 1);
      for (int i = 0; i < opt.samples / 10 + 1; ++i) check_lifting(nodes[pickN(rng)], W[pickW(rng)]);
    }
  }

  // J-independent witness lemmas.
  auto check_ymin = [&](const Element& w, const Element& x) {
    auto [ymin, ymax] = ymin_ymax(w, x);  // asserts the length identities
    ++r.checked;
    if (!bruhat_leq(w * ymin, x) || !bruhat_leq(w * ymax, x)) r.fail("ymin/ymax not members at w=" + wstr(w));
  };
  auto check_witness = [&](const Element& xp, const Element& w, const Element& wp) {
    if (!bruhat_leq(w, wp)) return;
    for (int variant : {1, 2}) {
      Element x = bruhat_witness(xp, w, wp, variant);
      ++r.checked;
      if (!bruhat_leq(x, xp)) r.fail("bruhat witness not below x' at x'=" + wstr(xp));
      bool ok = variant == 1 ? bruhat_leq(x * w, xp * wp) : bruhat_leq(xp * w, x * wp);
      if (!ok) r.fail("bruhat witness inequality fails at x'=" + wstr(xp));
    }
  };
  if (W.size() <= 48) {
    for (const auto& w : W)
      for (const auto& x : W) check_ymin(w, x);
  } else {
    for (int i = 0; i < opt.samples; ++i) check_ymin(W[pickW(rng)], W[pickW(rng)]);
  }
  if (small) {
    for (const auto& xp : W)
      for (const auto& w : W)
        for (const auto& wp : W) check_witness(xp, w, wp);
  } else {
    for (int i = 0; i < opt.samples; ++i) check_witness(W[pickW(rng)], W[pickW(rng)], W[pickW(rng)]);
  }
  return r;
}

// --- eo -----------------------------------------------------------------------

VerifyReport verify_eo(int g, const VerifyOptions& opt) {
  VerifyReport r{"eo", "g=" + std::to_string(g)};
  auto [sys, J] = build_symplectic(g);
  TwistedOrder T = TwistedOrder::from_frobenius(sys, J);

  if (g <= 6) {
    std::size_t expect_w = 1;
    for (int i = 1; i <= g; ++i) expect_w *= 2 * i;  // 2^g g!
    const auto& W = *enumerate_subgroup_shared(sys, SimpleSubset::full(g));
    const auto& WJ = *enumerate_subgroup_shared(sys, J);
    std::size_t fact = 1;
    for (int i = 1; i <= g; ++i) fact *= i;
    ++r.checked;
    if (W.size() != expect_w) r.fail("|W| != 2^g g!");
    if (WJ.size() != fact) r.fail("|W_J| != g!");
    if (min_coset_reps(sys, J, Side::Left).size() != (1u << g)) r.fail("|^JW| != 2^g");

    // w0 is central and acts as i -> 2g+1-i.
    Element w0 = longest_element(sys);
    auto w0v = perm_view(w0);
    for (int i = 1; i <= 2 * g; ++i)
      if (w0v.images[i - 1] != 2 * g + 1 - i) r.fail("w0 is not i -> 2g+1-i");
    for (int s = 0; s < g; ++s)
      if (!(w0 * sys->generator(s) == sys->generator(s) * w0)) r.fail("w0 is not central");

    // delta is conjugation by w_{0,J}.
    Element w0J_par = longest_element(sys, J);
    for (int s : J.members()) {
      ++r.checked;
      if (!(T.delta(sys->generator(s)) == w0J_par * sys->generator(s) * w0J_par))
        r.fail("delta(s) != w_{0,J} s w_{0,J} at s" + std::to_string(s + 1));
    }
  }

  auto strata = eo_strata(g);
  for (const auto& st : strata) {
    ++r.checked;
    if (st.element.length() != st.eps.dimension())
      r.fail("dimension formula fails at eps=" + st.eps.to_string());
    if (!(element_of_eps(eps_of(st.element), sys) == st.element))
      r.fail("eps round trip fails at eps=" + st.eps.to_string());
    auto v = perm_view(st.element);
    if (!v.is_valid()) r.fail("permutation view invalid at eps=" + st.eps.to_string());
    if (!(element_of_view(v, sys) == st.element))
      r.fail("permutation round trip fails at eps=" + st.eps.to_string());
  }

  // Coordinatewise Bruhat criterion against the generic one.
  if (g <= 4) {
    for (const auto& a : strata)
      for (const auto& b : strata) {
        ++r.checked;
        if (jw_bruhat(a.element, b.element) != bruhat_leq(a.element, b.element))
          r.fail("jw_bruhat mismatch at " + a.eps.to_string() + " vs " + b.eps.to_string());
      }
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, strata.size() - 1);
    for (int i = 0; i < opt.samples; ++i) {
      const auto& a = strata[pick(rng)];
      const auto& b = strata[pick(rng)];
      ++r.checked;
      if (jw_bruhat(a.element, b.element) != bruhat_leq(a.element, b.element))
        r.fail("jw_bruhat mismatch at " + a.eps.to_string() + " vs " + b.eps.to_string());
    }
  }

  // Three-way oracle agreement on all pairs of ^JW.
  if (g <= 4) {
    for (const auto& a : strata)
      for (const auto& b : strata) {
        bool naive = spec_leq_naive(a.element, b.element, T);
        bool bfs = spec_leq_bfs(a.element, b.element, T);
        bool uv = spec_leq_uv(a.element, b.element, T);
        ++r.checked;
        if (naive != bfs || naive != uv)
          r.fail("oracle disagreement at " + a.eps.to_string() + " vs " + b.eps.to_string());
      }
  }

  Poset p = eo_poset(g);
  int min_count = 0, max_count = 0, min_idx = -1, max_idx = -1;
  for (int i = 0; i < p.size(); ++i) {
    // leq[i][k]: i below k; the minimum is below everything.
    bool is_min = true, is_max = true;
    for (int k = 0; k < p.size(); ++k) {
      if (!p.leq[i][k]) is_min = false;
      if (!p.leq[k][i]) is_max = false;
    }
    if (is_min) { ++min_count; min_idx = i; }
    if (is_max) { ++max_count; max_idx = i; }
  }
  ++r.checked;
  if (min_count != 1 || p.eps[min_idx] != std::string(g, '0') || p.labels[min_idx].length() != 0)
    r.fail("poset minimum is not the zero stratum");
  if (max_count != 1 || p.eps[max_idx] != std::string(g, '1') ||
      p.labels[max_idx].length() != g * (g + 1) / 2)
    r.fail("poset maximum is not the top stratum");
  for (int i = 0; i < p.size(); ++i)
    for (int k = 0; k < p.size(); ++k) {
      ++r.checked;
      if (p.leq[i][k] && p.labels[i].length() > p.labels[k].length())
        r.fail("poset is not dimension-graded at " + p.eps[i] + " vs " + p.eps[k]);
      if (bruhat_leq(p.labels[i], p.labels[k]) && !p.leq[i][k])
        r.fail("Bruhat order is not a subrelation at " + p.eps[i] + " vs " + p.eps[k]);
    }
  return r;
}

VerifyReport run_verify_suite(const std::string& suite, Family family, int rank, int g,
                              const std::vector<int>& frobenius, const VerifyOptions& opt) {
  if (suite == "bruhat") return verify_bruhat(family, rank, opt);
  if (suite == "quotients") return verify_quotients(family, rank, opt);
  if (suite == "howlett") return verify_howlett(family, rank, opt);
  if (suite == "jinfty") return verify_jinfty(family, rank, opt);
  if (suite == "springer") return verify_springer(family, rank, opt);
  if (suite == "spec-order") return verify_spec_order(family, rank, frobenius, opt);
  if (suite == "eo") return verify_eo(g, opt);
  throw InvalidArgument("unknown verify suite '" + suite + "'");
}

}  // namespace coxspec
