// unit_bruhat.cpp - order matrix against the subword oracle, order
// symmetries, covers, and distinguished subexpressions.
#include <doctest.h>

#include <algorithm>

#include "bruhatkit/errors.hpp"
#include "oracle_helpers.hpp"

using namespace bruhatkit;

namespace {

std::vector<WeylGroup::Id> matrix_downset(const BruhatOrder& o, WeylGroup::Id b) {
  std::vector<WeylGroup::Id> out;
  for (WeylGroup::Id a = 0; a < o.group().size(); ++a)
    if (o.leq(a, b)) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("order matrix equals subword downsets") {
  for (auto [t, r] : std::vector<std::pair<CartanType, int>>{{CartanType::A, 3},
                                                             {CartanType::B, 3},
                                                             {CartanType::C, 3},
                                                             {CartanType::G2, 2},
                                                             {CartanType::BC, 2},
                                                             {CartanType::D, 4}}) {
    RootSystem rs = build_root_system(t, r);
    WeylGroup g = WeylGroup::enumerate(rs);
    BruhatOrder order(g);
    for (WeylGroup::Id b = 0; b < g.size(); ++b)
      CHECK(matrix_downset(order, b) == subexpression_endpoints(g, g.word(b)));
  }
}

TEST_CASE("order axioms and symmetries") {
  RootSystem rs = build_root_system(CartanType::A, 3);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);
  WeylGroup::Id wo = g.longest_id();
  long long comparable = 0;
  for (WeylGroup::Id a = 0; a < g.size(); ++a) {
    CHECK(order.leq(g.identity_id(), a));
    CHECK(order.leq(a, wo));
    for (WeylGroup::Id b = 0; b < g.size(); ++b) {
      if (order.leq(a, b)) ++comparable;
      if (order.leq(a, b) && order.leq(b, a)) CHECK(a == b);
      if (order.leq(a, b)) CHECK(g.len(a) <= g.len(b));
      CHECK(order.leq(a, b) == order.leq(g.inverse(a), g.inverse(b)));
      CHECK(order.leq(a, b) == order.leq(g.mul_ids(wo, b), g.mul_ids(wo, a)));
      for (WeylGroup::Id c = 0; c < g.size(); ++c)
        if (order.leq(a, b) && order.leq(b, c)) CHECK(order.leq(a, c));
    }
  }
  CHECK(comparable > 0);
}

TEST_CASE("S_3 has 19 comparable pairs") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);
  long long pairs = 0;
  for (WeylGroup::Id a = 0; a < g.size(); ++a)
    for (WeylGroup::Id b = 0; b < g.size(); ++b)
      if (order.leq(a, b)) ++pairs;
  CHECK(pairs == 19);
}

TEST_CASE("covers differ by one length step") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);
  auto covers = order.cover_edges();
  CHECK(covers.size() == 8);
  for (const auto& [a, b] : covers) {
    CHECK(order.less(a, b));
    CHECK(g.len(a) + 1 == g.len(b));
  }
}

TEST_CASE("subword endpoints are word independent") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  CHECK(subexpression_endpoints(g, Word{0, 1, 0}) ==
        subexpression_endpoints(g, Word{1, 0, 1}));
  CHECK(subexpression_endpoints(g, Word{}) == std::vector<WeylGroup::Id>{0});
  CHECK_THROWS_AS(subexpression_endpoints(g, Word{0, 0}), DomainError);
}

TEST_CASE("hand checked distinguished subexpression in A_2") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);
  WeylGroup::Id e = g.identity_id();
  WeylGroup::Id s2 = g.id_of(simple_reflection(rs, 1));
  Subexpression sub = find_distinguished(order, Word{0, 1, 0}, s2);
  CHECK(sub.word == Word{0, 1, 0});
  CHECK(sub.stages == std::vector<WeylGroup::Id>{e, e, s2, s2});
  CHECK(is_distinguished(order, sub));
}

TEST_CASE("distinguished endpoints equal subword endpoints") {
  for (auto [t, r] : std::vector<std::pair<CartanType, int>>{{CartanType::A, 3},
                                                             {CartanType::B, 3},
                                                             {CartanType::G2, 2}}) {
    RootSystem rs = build_root_system(t, r);
    WeylGroup g = WeylGroup::enumerate(rs);
    BruhatOrder order(g);
    for (WeylGroup::Id w = 0; w < g.size(); ++w)
      CHECK(distinguished_endpoints(order, g.word(w)) ==
            subexpression_endpoints(g, g.word(w)));
  }
}

TEST_CASE("every distinguished search result is distinguished") {
  RootSystem rs = build_root_system(CartanType::B, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);
  for (WeylGroup::Id w = 0; w < g.size(); ++w)
    for (WeylGroup::Id target : subexpression_endpoints(g, g.word(w))) {
      Subexpression sub = find_distinguished(order, g.word(w), target);
      CHECK(is_distinguished(order, sub));
      CHECK(sub.stages.back() == target);
      CHECK(sub.stages.front() == g.identity_id());
    }
}

TEST_CASE("malformed stage sequences are rejected") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);
  WeylGroup::Id s1 = g.id_of(simple_reflection(rs, 0));
  Subexpression bad;
  bad.word = Word{0, 1, 0};
  bad.stages = {s1, s1, s1, s1};  // does not start at the identity
  CHECK_THROWS_AS(is_distinguished(order, bad), DomainError);
  bad.stages = {g.identity_id(), s1};  // wrong stage count
  CHECK_THROWS_AS(is_distinguished(order, bad), DomainError);
}

TEST_CASE("unreachable targets throw") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);
  CHECK_THROWS_AS(find_distinguished(order, Word{0}, g.longest_id()),
                  NotComparableError);
}
