// export.cpp - JSON and Graphviz emitters.  The only translation unit that
// touches the JSON library.
#include "bruhatkit/export.hpp"

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bruhatkit {

namespace {

using json = nlohmann::ordered_json;

json word_list(const Word& word) {
  json out = json::array();
  for (int t : word) out.push_back(t + 1);
  return out;
}

json subset_list(SimpleSubset s) {
  json out = json::array();
  for (int i = 0; i < 32; ++i)
    if (s.contains(i)) out.push_back(i + 1);
  return out;
}

json perm_list(const Perm& w) {
  json out = json::array();
  for (int v : w) out.push_back(v + 1);
  return out;
}

json coords_list(const Root& r) {
  json out = json::array();
  for (int v : r.c) out.push_back(v);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string word_label(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(word[k] + 1);
  }
  return out;
}

// Hasse edges (lower, upper) of the relation below[i][j] = (j below i).
std::vector<std::pair<int, int>> hasse_edges(const std::vector<std::vector<bool>>& below) {
  const int n = static_cast<int>(below.size());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !below[i][j]) continue;
      bool direct = true;
      for (int k = 0; k < n && direct; ++k)
        if (k != i && k != j && below[i][k] && below[k][j]) direct = false;
      if (direct) out.emplace_back(j, i);
    }
  return out;
}

std::string dot_graph(const std::string& name, const std::vector<std::string>& labels,
                      const std::vector<std::pair<int, int>>& edges) {
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + labels[i] + "\"];\n";
  for (const auto& [a, b] : edges)
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace

std::string roots_json(const RootSystem& rs) {
  auto coords_of = [](const std::vector<Root>& roots) {
    json out = json::array();
    for (const Root& r : roots) out.push_back(coords_list(r));
    return out;
  };
  json j;
  j["type"] = to_string(rs.type);
  j["rank"] = rs.rank;
  j["simple"] = coords_of(rs.simple);
  j["positive"] = coords_of(rs.positive);
  j["nondivisible"] = coords_of(rs.nondivisible);
  json cartan = json::array();
  for (int i = 0; i < rs.rank; ++i) {
    json row = json::array();
    for (int k = 0; k < rs.rank; ++k) row.push_back(rs.cartan[i][k]);
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  json theta = json::array();
  for (int i = 0; i < rs.rank; ++i) theta.push_back(rs.theta_simple[i] + 1);
  j["theta_simple"] = theta;
  json counts;
  counts["all"] = rs.roots.size();
  counts["positive"] = rs.positive.size();
  counts["nondivisible"] = rs.nondivisible.size();
  counts["positive_nondivisible"] = rs.positive_nd.size();
  j["counts"] = counts;
  return dump(j);
}

std::string weyl_json(const WeylGroup& g) {
  json j;
  j["type"] = to_string(g.rs().type);
  j["rank"] = g.rs().rank;
  j["order"] = g.size();
  json elems = json::array();
  for (WeylGroup::Id w = 0; w < g.size(); ++w) {
    json je;
    je["element_id"] = w;
    je["canonical_word"] = word_list(g.word(w));
    je["length"] = g.len(w);
    elems.push_back(je);
  }
  j["elements"] = elems;
  return dump(j);
}

std::string bruhat_matrix_json(const BruhatOrder& order) {
  const WeylGroup& g = order.group();
  json j;
  j["type"] = to_string(g.rs().type);
  j["rank"] = g.rs().rank;
  j["order"] = g.size();
  json words = json::array();
  for (WeylGroup::Id w = 0; w < g.size(); ++w) words.push_back(word_label(g.word(w)));
  j["words"] = words;
  json rows = json::array();
  for (WeylGroup::Id a = 0; a < g.size(); ++a) {
    json row = json::array();
    for (WeylGroup::Id b = 0; b < g.size(); ++b) row.push_back(order.leq(a, b) ? 1 : 0);
    rows.push_back(row);
  }
  j["leq"] = rows;
  return dump(j);
}

std::string dcosets_json(const DoubleCosetTable& table) {
  const WeylGroup& g = *table.group;
  json j;
  j["type"] = to_string(g.rs().type);
  j["rank"] = g.rs().rank;
  j["S"] = subset_list(table.S);
  j["T"] = subset_list(table.T);
  j["theta_T"] = subset_list(table.thetaT);
  j["count"] = table.r();
  json reps = json::array();
  for (int k = 0; k < table.r(); ++k) {
    json jr;
    jr["word"] = word_list(g.word(table.reps[k]));
    jr["length"] = g.len(table.reps[k]);
    jr["omega_word"] = word_list(g.word(table.omega[k]));
    reps.push_back(jr);
  }
  j["reps"] = reps;
  return dump(j);
}

std::string orbit_json(const OrbitPoset& poset) {
  const WeylGroup& g = *poset.table.group;
  json j;
  j["type"] = to_string(g.rs().type);
  j["rank"] = g.rs().rank;
  j["S"] = subset_list(poset.table.S);
  j["T"] = subset_list(poset.table.T);
  j["side"] = to_string(poset.side);
  j["count"] = poset.r();
  json reps = json::array();
  for (int k = 0; k < poset.r(); ++k)
    reps.push_back(word_label(g.word(poset.table.reps[k])));
  j["reps"] = reps;
  json closure = json::array();
  for (int i = 0; i < poset.r(); ++i) {
    json row = json::array();
    for (int k = 0; k < poset.r(); ++k) row.push_back(poset.closure[i][k] ? 1 : 0);
    closure.push_back(row);
  }
  j["closure"] = closure;
  json opens = json::array();
  for (const auto& piece : poset.opens) {
    json p = json::array();
    for (int idx : piece) p.push_back(idx);
    opens.push_back(p);
  }
  j["opens"] = opens;
  return dump(j);
}

namespace {

json match_obj(const MatchReport& rep) {
  json j;
  j["S"] = subset_list(rep.S);
  j["T"] = subset_list(rep.T);
  j["count"] = rep.r;
  j["opens_ok"] = rep.opens_ok;
  j["dual_vs_opposite_ok"] = rep.dual_vs_opposite_ok;
  j["omega_iso_ok"] = rep.omega_iso_ok;
  j["ok"] = rep.ok();
  j["detail"] = rep.detail;
  return j;
}

}  // namespace

std::string match_json(const MatchReport& rep) { return dump(match_obj(rep)); }

std::string match_list_json(const std::vector<MatchReport>& reports) {
  json arr = json::array();
  for (const MatchReport& rep : reports) arr.push_back(match_obj(rep));
  return dump(arr);
}

std::string richardson_json(const RichardsonReport& rep) {
  json j;
  j["n"] = rep.n;
  j["q"] = rep.q;
  j["group_order"] = rep.group_order;
  j["ok"] = rep.ok();
  json borel;
  borel["ok"] = rep.borel_pairs_ok;
  borel["realized_pairs"] = rep.realized_borel_pairs;
  borel["expected_pairs"] = rep.expected_borel_pairs;
  j["borel"] = borel;
  j["partitions_ok"] = rep.partitions_ok;
  json cells = json::array();
  for (const auto& [w, size] : rep.bwb_sizes) {
    json c;
    c["w"] = perm_list(w);
    c["bwb_size"] = size;
    auto it = rep.bwbminus_sizes.find(w);
    c["bwbminus_size"] = it == rep.bwbminus_sizes.end() ? 0 : it->second;
    cells.push_back(c);
  }
  j["cells"] = cells;
  json par = json::array();
  for (const ParabolicCheck& pc : rep.parabolic) {
    json p;
    p["S"] = subset_list(pc.S);
    p["T"] = subset_list(pc.T);
    p["ok"] = pc.pair_set_ok;
    p["realized_pairs"] = pc.realized_pairs;
    p["expected_pairs"] = pc.expected_pairs;
    par.push_back(p);
  }
  j["parabolic"] = par;
  return dump(j);
}

std::string matrix_json(const FqMatrix& g) {
  json j;
  j["n"] = g.n;
  j["q"] = g.q;
  json rows = json::array();
  for (int r = 0; r < g.n; ++r) {
    json row = json::array();
    for (int c = 0; c < g.n; ++c) row.push_back(static_cast<int>(g.at(r, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  j["cell"] = perm_list(cell_BwB(g));
  j["cell_minus"] = perm_list(cell_BwBminus(g));
  return dump(j);
}

std::string bruhat_dot(const BruhatOrder& order) {
  const WeylGroup& g = order.group();
  std::vector<std::string> labels;
  for (WeylGroup::Id w = 0; w < g.size(); ++w) labels.push_back(word_label(g.word(w)));
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : order.cover_edges()) edges.emplace_back(a, b);
  return dot_graph("bruhat", labels, edges);
}

std::string orbit_dot(const OrbitPoset& poset) {
  const WeylGroup& g = *poset.table.group;
  std::vector<std::string> labels;
  for (int k = 0; k < poset.r(); ++k)
    labels.push_back(word_label(g.word(poset.table.reps[k])));
  return dot_graph("orbits", labels, hasse_edges(poset.closure));
}

}  // namespace bruhatkit
