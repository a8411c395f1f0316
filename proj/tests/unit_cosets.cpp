// unit_cosets.cpp - one-sided and double coset minima against the closure
// oracle, the longest-representative conjugation identity, and omega.
#include <doctest.h>

#include <algorithm>

#include "bruhatkit/errors.hpp"
#include "oracle_helpers.hpp"

using namespace bruhatkit;

TEST_CASE("double coset minima match the closure oracle") {
  for (auto [t, r] : std::vector<std::pair<CartanType, int>>{{CartanType::A, 3},
                                                             {CartanType::B, 3}}) {
    RootSystem rs = build_root_system(t, r);
    WeylGroup g = WeylGroup::enumerate(rs);
    for (std::uint32_t sb = 0; sb < (1u << rs.rank); ++sb)
      for (std::uint32_t tb = 0; tb < (1u << rs.rank); ++tb) {
        SimpleSubset S{sb}, T{tb};
        for (WeylGroup::Id w = 0; w < g.size(); ++w)
          CHECK(min_double_rep(g, w, S, T) ==
                oracle::double_coset_min_by_closure(g, w, S, T));
      }
  }
}

TEST_CASE("one sided minima factor the element") {
  RootSystem rs = build_root_system(CartanType::B, 3);
  WeylGroup g = WeylGroup::enumerate(rs);
  for (std::uint32_t sb = 0; sb < (1u << rs.rank); ++sb) {
    SimpleSubset S{sb};
    std::vector<char> in_S(g.size(), 0);
    for (WeylGroup::Id x : g.subgroup(S)) in_S[x] = 1;
    for (WeylGroup::Id w = 0; w < g.size(); ++w) {
      WeylGroup::Id spr = s_part_right(g, w, S);
      WeylGroup::Id x = g.mul_ids(w, g.inverse(spr));
      CHECK(in_S[x]);
      CHECK(g.len(x) + g.len(spr) == g.len(w));
      for (int i = 0; i < rs.rank; ++i)
        if (S.contains(i)) CHECK(!g.left_descent(spr, i));

      WeylGroup::Id spl = s_part_left(g, w, S);
      WeylGroup::Id y = g.mul_ids(g.inverse(spl), w);
      CHECK(in_S[y]);
      CHECK(g.len(spl) + g.len(y) == g.len(w));
      for (int i = 0; i < rs.rank; ++i)
        if (S.contains(i)) CHECK(!g.right_descent(spl, i));
    }
  }
}

TEST_CASE("frozen A_2 table") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  SimpleSubset S = SimpleSubset{}.with(0), T = SimpleSubset{}.with(1);

  DoubleCosetTable table = enumerate_WST(g, S, T);
  REQUIRE(table.r() == 2);
  CHECK(g.word(table.reps[0]) == Word{});
  CHECK(g.word(table.reps[1]) == Word{1, 0});
  CHECK(table.thetaT == SimpleSubset{}.with(0));
  CHECK(g.word(table.omega[0]) == Word{1});
  CHECK(g.word(table.omega[1]) == Word{});
  CHECK(table.index_of(table.reps[1]) == 1);
  CHECK(table.index_of(g.longest_id()) == -1);

  DoubleCosetTable square = enumerate_WST(g, S, S);
  REQUIRE(square.r() == 2);
  CHECK(g.word(square.reps[1]) == Word{1});

  CHECK(g.word(w_o_T(g, T)) == Word{0, 1});
}

TEST_CASE("longest representative conjugates the parabolic") {
  for (auto [t, r] : std::vector<std::pair<CartanType, int>>{{CartanType::A, 3},
                                                             {CartanType::B, 3},
                                                             {CartanType::G2, 2}}) {
    RootSystem rs = build_root_system(t, r);
    WeylGroup g = WeylGroup::enumerate(rs);
    for (std::uint32_t tb = 0; tb < (1u << rs.rank); ++tb) {
      SimpleSubset T{tb};
      WeylGroup::Id wot = w_o_T(g, T);
      CHECK(g.mul_ids(g.id_of(longest_in(rs, T)), wot) == g.longest_id());
      std::vector<WeylGroup::Id> conj;
      for (WeylGroup::Id x : g.subgroup(T))
        conj.push_back(g.mul_ids(g.mul_ids(g.inverse(wot), x), wot));
      std::sort(conj.begin(), conj.end());
      CHECK(conj == g.subgroup(theta_subset(rs, T)));
    }
  }
  RootSystem a3 = build_root_system(CartanType::A, 3);
  CHECK(theta_subset(a3, SimpleSubset{}.with(0)) == SimpleSubset{}.with(2));
}

TEST_CASE("representative tables are sorted compatibly with the order") {
  RootSystem rs = build_root_system(CartanType::B, 3);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);
  for (std::uint32_t sb = 0; sb < (1u << rs.rank); ++sb)
    for (std::uint32_t tb = 0; tb < (1u << rs.rank); ++tb) {
      DoubleCosetTable table = enumerate_WST(g, SimpleSubset{sb}, SimpleSubset{tb});
      for (int i = 0; i < table.r(); ++i) {
        if (i) CHECK(g.len(table.reps[i - 1]) <= g.len(table.reps[i]));
        for (int k = 0; k < table.r(); ++k)
          if (order.leq(table.reps[i], table.reps[k])) CHECK(i <= k);
        CHECK(min_double_rep(g, table.reps[i], table.S, table.T) == table.reps[i]);
      }
    }
}

TEST_CASE("coset counts at the extremes") {
  RootSystem rs = build_root_system(CartanType::A, 3);
  WeylGroup g = WeylGroup::enumerate(rs);
  CHECK(enumerate_WST(g, SimpleSubset{}, SimpleSubset{}).r() == g.size());
  CHECK(enumerate_WST(g, SimpleSubset::full(3), SimpleSubset{}).r() == 1);
  CHECK(enumerate_WST(g, SimpleSubset::full(3), SimpleSubset::full(3)).r() == 1);
}

TEST_CASE("omega rejects non minimal input") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  SimpleSubset S = SimpleSubset{}.with(0), T = SimpleSubset{}.with(1);
  WeylGroup::Id s1 = g.id_of(simple_reflection(rs, 0));
  CHECK_THROWS_AS(omega(g, s1, S, T), DomainError);
}
