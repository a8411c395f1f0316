// unit_orbits.cpp - orbit closure posets on both sides, the dual filtration
// comparison, and the unipotent fiber root partition.
#include <doctest.h>

#include <algorithm>
#include <set>

#include "bruhatkit/errors.hpp"
#include "oracle_helpers.hpp"

using namespace bruhatkit;

TEST_CASE("rank one posets on both sides") {
  RootSystem rs = build_root_system(CartanType::A, 1);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);

  OrbitPoset qm = orbit_poset(order, SimpleSubset{}, SimpleSubset{}, Side::Qminus);
  REQUIRE(qm.r() == 2);
  CHECK(qm.table.reps[0] == g.identity_id());
  CHECK(qm.closure[0] == std::vector<bool>{true, true});
  CHECK(qm.closure[1] == std::vector<bool>{false, true});
  CHECK(qm.opens[0] == std::vector<int>{0});
  CHECK(qm.opens[1] == std::vector<int>{0, 1});

  OrbitPoset q = orbit_poset(order, SimpleSubset{}, SimpleSubset{}, Side::Q);
  CHECK(q.closure[0] == std::vector<bool>{true, false});
  CHECK(q.closure[1] == std::vector<bool>{true, true});
  CHECK(q.opens[0] == std::vector<int>{0, 1});
  CHECK(q.opens[1] == std::vector<int>{1});
  CHECK(q.is_open({1}));
  CHECK(!q.is_open({0}));
}

TEST_CASE("closure is a partial order and the sides are transposes") {
  RootSystem rs = build_root_system(CartanType::B, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);
  for (std::uint32_t sb = 0; sb < (1u << rs.rank); ++sb)
    for (std::uint32_t tb = 0; tb < (1u << rs.rank); ++tb) {
      SimpleSubset S{sb}, T{tb};
      OrbitPoset q = orbit_poset(order, S, T, Side::Q);
      OrbitPoset qm = orbit_poset(order, S, T, Side::Qminus);
      int r = q.r();
      REQUIRE(qm.r() == r);
      for (int i = 0; i < r; ++i) {
        CHECK(q.closure[i][i]);
        for (int j = 0; j < r; ++j) {
          CHECK(q.closure[i][j] == qm.closure[j][i]);
          if (i != j && q.closure[i][j]) CHECK(!q.closure[j][i]);
          for (int k = 0; k < r; ++k)
            if (q.closure[i][j] && q.closure[j][k]) CHECK(q.closure[i][k]);
        }
      }
      for (const OrbitPoset* p : {&q, &qm})
        for (const auto& member : p->opens) CHECK(p->is_open(member));
    }
}

TEST_CASE("dual filtration matches on small systems") {
  for (auto [t, r] : std::vector<std::pair<CartanType, int>>{{CartanType::A, 2},
                                                             {CartanType::B, 2},
                                                             {CartanType::G2, 2}}) {
    RootSystem rs = build_root_system(t, r);
    WeylGroup g = WeylGroup::enumerate(rs);
    BruhatOrder order(g);
    for (std::uint32_t sb = 0; sb < (1u << rs.rank); ++sb)
      for (std::uint32_t tb = 0; tb < (1u << rs.rank); ++tb) {
        MatchReport rep = dual_filtration_match(order, SimpleSubset{sb}, SimpleSubset{tb});
        CHECK(rep.ok());
        CHECK(rep.detail.find("MISMATCH") == std::string::npos);
      }
  }
}

TEST_CASE("fiber root datum on a frozen example") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  SimpleSubset S{}, T = SimpleSubset{}.with(0);
  WeylGroup::Id s2 = g.id_of(simple_reflection(rs, 1));

  GeomLemmaDatum d = geometric_lemma_datum(g, s2, S, T);
  CHECK(d.roots_UQ == std::vector<Root>{rs.simple[1], rs.simple[0] + rs.simple[1]});
  CHECK(d.roots_Uw == std::vector<Root>{rs.simple[1]});
  CHECK(d.roots_P_cap_wUQw == std::vector<Root>{rs.simple[0]});

  WeylGroup::Id s1 = g.id_of(simple_reflection(rs, 0));
  CHECK_THROWS_AS(geometric_lemma_datum(g, s1, S, T), DomainError);
}

TEST_CASE("fiber roots partition U_Q") {
  RootSystem rs = build_root_system(CartanType::B, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  for (std::uint32_t sb = 0; sb < (1u << rs.rank); ++sb)
    for (std::uint32_t tb = 0; tb < (1u << rs.rank); ++tb) {
      SimpleSubset S{sb}, T{tb};
      DoubleCosetTable table = enumerate_WST(g, S, T);
      for (WeylGroup::Id w : table.reps) {
        GeomLemmaDatum d = geometric_lemma_datum(g, w, S, T);
        CHECK(d.roots_Uw.size() + d.roots_P_cap_wUQw.size() == d.roots_UQ.size());
        std::set<Root> uq(d.roots_UQ.begin(), d.roots_UQ.end());
        WeylElem we = g.elem(w);
        std::set<Root> images;
        for (const Root& a : d.roots_Uw) {
          CHECK(uq.count(a));
          images.insert(act(we, a));
        }
        for (const Root& b : d.roots_P_cap_wUQw) {
          CHECK(rs.is_root(b));
          WeylElem winv = inv(we);
          CHECK(uq.count(act(winv, b)));
          CHECK(!images.count(b));
        }
        if (w == g.identity_id()) CHECK(d.roots_Uw.empty());
      }
      if (S.empty() && T.empty()) {
        GeomLemmaDatum top = geometric_lemma_datum(g, g.longest_id(), S, T);
        CHECK(top.roots_Uw == top.roots_UQ);
      }
    }
}
