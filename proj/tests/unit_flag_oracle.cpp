// unit_flag_oracle.cpp - GL_n(F_q) cell labels against literal triangular
// product sets, the permutation bridge, exhaustive sweeps, and witnesses.
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "bruhatkit/errors.hpp"
#include "oracle_helpers.hpp"

using namespace bruhatkit;

namespace {

std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<FqMatrix> general_linear(int n, int q) {
  std::vector<FqMatrix> out;
  FqMatrix g = make_matrix(n, q);
  const int cells = n * n;
  for (;;) {
    if (fq_invertible(g)) out.push_back(g);
    int k = 0;
    while (k < cells && g.a[k] == g.q - 1) g.a[k++] = 0;
    if (k == cells) break;
    ++g.a[k];
  }
  return out;
}

}  // namespace

TEST_CASE("permutation bridge is a length preserving isomorphism") {
  for (int n : {3, 4}) {
    RootSystem rs = build_root_system(CartanType::A, n - 1);
    WeylGroup g = WeylGroup::enumerate(rs);
    for (const Perm& p : all_perms(n)) {
      WeylElem e = perm_to_elem(rs, p);
      CHECK(elem_to_perm(e) == p);
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (p[i] > p[j]) ++inversions;
      CHECK(g.len(g.id_of(e)) == inversions);
    }
    for (const Perm& p : all_perms(n))
      for (const Perm& r : all_perms(n)) {
        Perm c(n);
        for (int x = 0; x < n; ++x) c[x] = p[r[x]];
        CHECK(perm_to_elem(rs, c) == mul(perm_to_elem(rs, p), perm_to_elem(rs, r)));
      }
    CHECK_THROWS_AS(perm_to_elem(build_root_system(CartanType::B, 2), Perm{0, 1, 2}),
                    DomainError);
  }
}

TEST_CASE("permutation matrices sit in their own cells") {
  CHECK(cell_BwB(identity_matrix(1, 2)) == Perm{0});
  for (int n : {3, 4})
    for (int q : {2, 3})
      for (const Perm& w : all_perms(n)) {
        FqMatrix m = perm_matrix(w, q);
        REQUIRE(fq_invertible(m));
        CHECK(cell_BwB(m) == w);
        CHECK(cell_BwBminus(m) == w);
        Perm winv(n);
        for (int k = 0; k < n; ++k) winv[w[k]] = k;
        CHECK(fq_mul(m, perm_matrix(winv, q)) == identity_matrix(n, q));
      }
}

TEST_CASE("frozen two by two labels") {
  FqMatrix g = make_matrix(2, 2);
  g.at(0, 1) = 1;
  g.at(1, 0) = 1;
  g.at(1, 1) = 1;
  CHECK(cell_BwB(g) == Perm{1, 0});
  CHECK(cell_BwBminus(g) == Perm{0, 1});

  FqMatrix zero = make_matrix(2, 2);
  CHECK_THROWS_AS(cell_BwB(zero), DomainError);
  CHECK_THROWS_AS(cell_BwBminus(zero), DomainError);
  CHECK_THROWS_AS(make_matrix(5, 2), ConfigError);
  CHECK_THROWS_AS(make_matrix(2, 4), ConfigError);
}

TEST_CASE("cells equal literal triangular products") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    std::vector<FqMatrix> upper = oracle::triangular_group(n, q, true);
    std::vector<FqMatrix> lower = oracle::triangular_group(n, q, false);
    std::vector<FqMatrix> gl = general_linear(n, q);
    for (const Perm& w : all_perms(n)) {
      std::set<FqMatrix> bwb, bwbm;
      for (const FqMatrix& g : gl) {
        if (cell_BwB(g) == w) bwb.insert(g);
        if (cell_BwBminus(g) == w) bwbm.insert(g);
      }
      CHECK(bwb == oracle::product_cell(w, q, upper, upper));
      CHECK(bwbm == oracle::product_cell(w, q, upper, lower));
    }
  }
}

TEST_CASE("exhaustive sweep reports") {
  RichardsonReport r22 = verify_richardson(2, 2);
  CHECK(r22.ok());
  CHECK(r22.group_order == 6);
  CHECK(r22.bwbminus_sizes[Perm{0, 1}] == 4);
  CHECK(r22.bwbminus_sizes[Perm{1, 0}] == 2);
  CHECK(r22.bwb_sizes[Perm{0, 1}] == 2);
  CHECK(r22.bwb_sizes[Perm{1, 0}] == 4);
  CHECK(r22.parabolic.size() == 4);

  CHECK(verify_richardson(2, 3).group_order == 48);
  RichardsonReport r32 = verify_richardson(3, 2);
  CHECK(r32.ok());
  CHECK(r32.group_order == 168);
  CHECK(r32.realized_borel_pairs == 19);

  CHECK_THROWS_AS(verify_richardson(3, 5), CapacityError);
  CHECK_THROWS_AS(verify_richardson(4, 2), CapacityError);
}

TEST_CASE("parabolic labels are coset minima of the cell labels") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  SimpleSubset S = SimpleSubset{}.with(0), T = SimpleSubset{}.with(1);
  for (const FqMatrix& m : general_linear(3, 2)) {
    for (Side side : {Side::Q, Side::Qminus}) {
      Perm w = side == Side::Q ? cell_BwB(m) : cell_BwBminus(m);
      WeylGroup::Id rep = min_double_rep(g, g.id_of(perm_to_elem(rs, w)), S, T);
      CHECK(parabolic_label(m, S, T, side) == elem_to_perm(g.elem(rep)));
    }
    CHECK(parabolic_label(m, SimpleSubset{}, SimpleSubset{}, Side::Q) == cell_BwB(m));
  }
}

TEST_CASE("witnesses land in both cells") {
  RootSystem rs = build_root_system(CartanType::A, 2);
  WeylGroup g = WeylGroup::enumerate(rs);
  BruhatOrder order(g);
  std::vector<Perm> perms = all_perms(3);
  int comparable = 0;
  for (const Perm& w : perms)
    for (const Perm& wp : perms) {
      WeylGroup::Id big = g.id_of(perm_to_elem(rs, w));
      WeylGroup::Id small = g.id_of(perm_to_elem(rs, wp));
      if (!order.leq(small, big)) {
        CHECK_THROWS_AS(witness(3, 2, w, wp), NotComparableError);
        continue;
      }
      ++comparable;
      for (int q : {3, 5}) {
        FqMatrix m = witness(3, q, w, wp);
        CHECK(cell_BwB(m) == w);
        CHECK(cell_BwBminus(m) == wp);
      }
    }
  CHECK(comparable == 19);
  FqMatrix top = witness(2, 2, Perm{1, 0}, Perm{1, 0});
  CHECK(cell_BwB(top) == Perm{1, 0});
  CHECK(cell_BwBminus(top) == Perm{1, 0});
}
