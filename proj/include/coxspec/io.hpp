#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxspec/coxeter.hpp"
#include "coxspec/poset.hpp"

namespace coxspec {

/// Run parameters echoed into serialized artifacts.
struct PosetMeta {
  std::string family;       // "A".."D" or "EO"
  int rank = 0;             // rank, or g for EO posets
  std::vector<int> j;       // 0-based generator indices
  std::vector<int> frobenius;  // empty means identity
  bool include_leq = false;
};

/// JSON schema:
/// {"family","rank","j":[1-based...],"frobenius":"id"|[1-based...],
///  "nodes":[{"id","word":[1-based...],"eps":str|null,"length"}],
///  "leq":[[0/1...]...] (optional), "covers":[[i,j]...]}
/// covers [i,j]: node j is covered by node i.
std::string poset_to_json(const Poset& p, const PosetMeta& meta);

/// DOT digraph; an edge w -> w' means w' is covered by w, i.e. the stratum
/// of w' lies in the closure of the stratum of w.
std::string poset_to_dot(const Poset& p, const PosetMeta& meta);

/// CSV relation matrix: header row of node ids; entry (row i, col j) is 1
/// iff node i precedes node j.
std::string poset_to_csv(const Poset& p);

/// Node identifier: the eps bitstring when present, else the word string.
std::string node_id(const Poset& p, int i);

std::string quotient_to_text(const std::vector<Element>& reps);
std::string quotient_to_json(const std::vector<Element>& reps, const std::string& family, int rank,
                             const std::vector<int>& j, const std::string& side);

}  // namespace coxspec
