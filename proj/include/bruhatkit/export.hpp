// export.hpp - JSON and Graphviz serializations of the core objects.
// All emitters are deterministic: equal inputs produce byte-equal output.
#pragma once

#include <string>

#include "bruhatkit/flag_oracle.hpp"

namespace bruhatkit {

// JSON documents, two-space indent, trailing newline.  Words, simple-root
// indexes, and permutations are 1-based in the output.
std::string roots_json(const RootSystem& rs);
std::string weyl_json(const WeylGroup& g);
std::string bruhat_matrix_json(const BruhatOrder& order);
std::string dcosets_json(const DoubleCosetTable& table);
std::string orbit_json(const OrbitPoset& poset);
std::string match_json(const MatchReport& rep);
std::string match_list_json(const std::vector<MatchReport>& reports);
std::string richardson_json(const RichardsonReport& rep);
std::string matrix_json(const FqMatrix& g);  // g must be invertible

// Graphviz digraphs of Hasse diagrams, edges pointing up (rankdir=BT),
// transitively reduced.
std::string bruhat_dot(const BruhatOrder& order);
std::string orbit_dot(const OrbitPoset& poset);

}  // namespace bruhatkit
