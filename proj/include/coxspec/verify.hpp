#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxspec/coxeter.hpp"

namespace coxspec {

struct VerifyReport {
  std::string suite;
  std::string subject;  // e.g. "C2" or "g=3"
  bool pass = true;
  long long checked = 0;
  std::vector<std::string> counterexamples;  // capped

  void fail(const std::string& counterexample);
  std::string to_json() const;
};

struct VerifyOptions {
  int samples = 1000;
  uint64_t seed = 20240915;
};

/// Recursive-criterion Bruhat order against the brute-force subword oracle:
/// exhaustive on all pairs for small groups, plus `samples` random pairs.
VerifyReport verify_bruhat(Family family, int rank, const VerifyOptions& opt = {});

/// The four characterizations of ^JW select identical sets for every J;
/// minimality per coset; the three quotient bijections with their order
/// behavior and length identity.
VerifyReport verify_quotients(Family family, int rank, const VerifyOptions& opt = {});

/// Existence, uniqueness (full search), length additivity and memberships
/// of the double-coset decomposition, plus the refined W_{J'} statement.
VerifyReport verify_howlett(Family family, int rank, const VerifyOptions& opt = {});

/// Fixed-point characterization of J_infinity against the stabilized type
/// sequence, and y_infinity = w.
VerifyReport verify_jinfty(Family family, int rank, const VerifyOptions& opt = {});

/// Orbit-equality class counting, reflexivity/transitivity of the closure
/// relation, and the cross-check against the Bruhat cone description.
VerifyReport verify_springer(Family family, int rank, const VerifyOptions& opt = {});

/// Everything about the twisted specialization order: three-way oracle
/// agreement, partial-order axioms, compatibility with Bruhat order and
/// length, and the witness lemmas.
VerifyReport verify_spec_order(Family family, int rank, const std::vector<int>& frobenius = {},
                               const VerifyOptions& opt = {});

/// The symplectic application for a given g: cardinalities, dimension
/// formula, coordinatewise Bruhat criterion, the conjugation form of delta,
/// poset extremes, and three-way oracle agreement on ^JW.
VerifyReport verify_eo(int g, const VerifyOptions& opt = {});

/// Dispatch by suite name: bruhat|quotients|howlett|jinfty|springer|
/// spec-order|eo.  Throws InvalidArgument for unknown names.
VerifyReport run_verify_suite(const std::string& suite, Family family, int rank, int g,
                              const std::vector<int>& frobenius, const VerifyOptions& opt);

}  // namespace coxspec
