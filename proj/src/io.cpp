#include "coxspec/io.hpp"

#include <sstream>

#include <json.hpp>

namespace coxspec {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json word_json(const Element& e) {
  ordered_json w = ordered_json::array();
  for (int s : e.word()) w.push_back(s + 1);
  return w;
}

ordered_json frobenius_json(const std::vector<int>& frob) {
  bool identity = true;
  for (std::size_t i = 0; i < frob.size(); ++i)
    if (frob[i] != static_cast<int>(i)) identity = false;
  if (frob.empty() || identity) return "id";
  ordered_json out = ordered_json::array();
  for (int v : frob) out.push_back(v + 1);
  return out;
}

}  // namespace

std::string node_id(const Poset& p, int i) {
  if (!p.eps.empty()) return p.eps[i];
  return word_to_string(p.labels[i].word());
}

std::string poset_to_json(const Poset& p, const PosetMeta& meta) {
  ordered_json out;
  out["family"] = meta.family;
  out["rank"] = meta.rank;
  ordered_json j = ordered_json::array();
  for (int s : meta.j) j.push_back(s + 1);
  out["j"] = j;
  out["frobenius"] = frobenius_json(meta.frobenius);
  ordered_json nodes = ordered_json::array();
  for (int i = 0; i < p.size(); ++i) {
    ordered_json node;
    node["id"] = node_id(p, i);
    node["word"] = word_json(p.labels[i]);
    node["eps"] = p.eps.empty() ? ordered_json(nullptr) : ordered_json(p.eps[i]);
    node["length"] = p.labels[i].length();
    nodes.push_back(node);
  }
  out["nodes"] = nodes;
  if (meta.include_leq) {
    ordered_json leq = ordered_json::array();
    for (int i = 0; i < p.size(); ++i) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < p.size(); ++k) row.push_back(p.leq[i][k] ? 1 : 0);
      leq.push_back(row);
    }
    out["leq"] = leq;
  }
  ordered_json covers = ordered_json::array();
  for (auto [i, k] : p.covers) covers.push_back(ordered_json::array({i, k}));
  out["covers"] = covers;
  return out.dump(2) + "\n";
}

std::string poset_to_dot(const Poset& p, const PosetMeta& meta) {
  std::ostringstream os;
  os << "digraph poset {\n";
  os << "  // " << meta.family << (meta.family == "EO" ? " g=" : " rank=") << meta.rank << "\n";
  os << "  rankdir=TB;\n";
  for (int i = 0; i < p.size(); ++i) {
    os << "  n" << i << " [label=\"";
    if (!p.eps.empty())
      os << p.eps[i] << " / " << p.labels[i].length();
    else
      os << node_id(p, i) << " / " << p.labels[i].length();
    os << "\"];\n";
  }
  for (auto [i, k] : p.covers) os << "  n" << i << " -> n" << k << ";\n";
  os << "}\n";
  return os.str();
}

std::string poset_to_csv(const Poset& p) {
  std::ostringstream os;
  for (int i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << node_id(p, i);
  }
  os << '\n';
  for (int i = 0; i < p.size(); ++i) {
    for (int k = 0; k < p.size(); ++k) {
      if (k) os << ',';
      os << (p.leq[i][k] ? '1' : '0');
    }
    os << '\n';
  }
  return os.str();
}

std::string quotient_to_text(const std::vector<Element>& reps) {
  std::ostringstream os;
  for (const auto& e : reps) os << word_to_string(e.word()) << "\tlength " << e.length() << "\n";
  return os.str();
}

std::string quotient_to_json(const std::vector<Element>& reps, const std::string& family, int rank,
                             const std::vector<int>& j, const std::string& side) {
  ordered_json out;
  out["family"] = family;
  out["rank"] = rank;
  ordered_json jj = ordered_json::array();
  for (int s : j) jj.push_back(s + 1);
  out["j"] = jj;
  out["side"] = side;
  out["count"] = reps.size();
  ordered_json el = ordered_json::array();
  for (const auto& e : reps) {
    ordered_json node;
    node["word"] = word_json(e);
    node["length"] = e.length();
    el.push_back(node);
  }
  out["elements"] = el;
  return out.dump(2) + "\n";
}

}  // namespace coxspec
