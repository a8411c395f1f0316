// unit_export.cpp - serialization determinism, JSON round-trips, and the
// shape of the emitted documents and Hasse diagrams.
#include <doctest.h>
#include <json.hpp>

#include <string>
#include <vector>

#include "bruhatkit/export.hpp"

using namespace bruhatkit;

namespace {

int count_edges(const std::string& dot) {
  int edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2))
    ++edges;
  return edges;
}

void check_round_trip(const std::string& doc) {
  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(doc);
  CHECK(parsed.dump(2) + "\n" == doc);
}

}  // namespace

TEST_CASE("emitters are deterministic and parse back verbatim") {
  RootSystem rs = build_root_system(CartanType::B, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);
  SimpleSubset S = SimpleSubset{}.with(0), T;
  DoubleCosetTable table = enumerate_WST(g, S, T);
  OrbitPoset poset = orbit_poset(order, S, T, Side::Qminus);

  std::vector<std::string> docs = {
      roots_json(rs),
      weyl_json(g),
      bruhat_matrix_json(order),
      dcosets_json(table),
      orbit_json(poset),
      match_json(dual_filtration_match(order, S, T)),
      match_list_json({dual_filtration_match(order, S, T), dual_filtration_match(order, T, S)}),
      richardson_json(verify_richardson(2, 3)),
      matrix_json(identity_matrix(3, 2)),
  };
  for (const std::string& doc : docs) {
    check_round_trip(doc);
    CHECK(doc.back() == '\n');
  }
  CHECK(roots_json(rs) == roots_json(build_root_system(CartanType::B, 2)));
  CHECK(bruhat_matrix_json(order) == bruhat_matrix_json(order));
}

TEST_CASE("root document carries the fixed keys in order") {
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(
      roots_json(build_root_system(CartanType::A, 2)));
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys.size() >= 5);
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 5) ==
        std::vector<std::string>{"type", "rank", "simple", "positive", "nondivisible"});
  CHECK(doc["type"] == "A");
  CHECK(doc["rank"] == 2);
  CHECK(doc["positive"].size() == 3);
  CHECK(doc["counts"]["positive_nondivisible"] == 3);
}

TEST_CASE("weyl and coset documents are 1-based") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  nlohmann::ordered_json welems = nlohmann::ordered_json::parse(weyl_json(g));
  CHECK(welems["order"] == 6);
  CHECK(welems["elements"].size() == 6);
  CHECK(welems["elements"][0]["element_id"] == 0);
  CHECK(welems["elements"][0]["canonical_word"].empty());
  CHECK(welems["elements"][0]["length"] == 0);
  Word back;
  for (int letter : welems["elements"][5]["canonical_word"]) back.push_back(letter - 1);
  CHECK(g.id_of(evaluate_word(rs, back)) == g.longest_id());

  DoubleCosetTable table =
      enumerate_WST(g, SimpleSubset{}.with(0), SimpleSubset{}.with(1));
  nlohmann::ordered_json dc = nlohmann::ordered_json::parse(dcosets_json(table));
  CHECK(dc["S"] == std::vector<int>{1});
  CHECK(dc["T"] == std::vector<int>{2});
  CHECK(dc["theta_T"] == std::vector<int>{1});
  CHECK(dc["count"] == 2);
  CHECK(dc["reps"][1]["word"] == std::vector<int>{2, 1});
  CHECK(dc["reps"][0]["omega_word"] == std::vector<int>{2});
}

TEST_CASE("hasse diagrams are transitively reduced") {
  RootSystem a2 = build_root_system(CartanType::A, 2);
  WeylGroup g2 = WeylGroup::enumerate(a2);
  BruhatOrder order2(g2);
  std::string dot = bruhat_dot(order2);
  CHECK(count_edges(dot) == 8);
  CHECK(dot.find("rankdir=BT") != std::string::npos);

  RootSystem a1 = build_root_system(CartanType::A, 1);
  WeylGroup g1 = WeylGroup::enumerate(a1);
  BruhatOrder order1(g1);
  OrbitPoset poset = orbit_poset(order1, SimpleSubset{}, SimpleSubset{}, Side::Qminus);
  std::string odot = orbit_dot(poset);
  CHECK(count_edges(odot) == 1);
  CHECK(odot.find("n1 -> n0") != std::string::npos);
}
