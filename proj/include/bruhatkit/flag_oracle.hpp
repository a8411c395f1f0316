// flag_oracle.hpp - concrete GL_n(F_q) oracle: Bruhat cell labels from rank
// criteria, exhaustive cell-intersection verification, and constructive
// witnesses for B w B intersect B w' B^-.
#pragma once

#include <array>
#include <map>
#include <vector>

#include "bruhatkit/orbits.hpp"

namespace bruhatkit {

// Row-major n x n matrix over F_q; n in 1..4, q in {2,3,5}.
struct FqMatrix {
  int n = 0, q = 2;
  std::array<std::uint8_t, 16> a{};

  std::uint8_t at(int r, int c) const { return a[r * n + c]; }
  std::uint8_t& at(int r, int c) { return a[r * n + c]; }
  bool operator==(const FqMatrix& o) const { return n == o.n && q == o.q && a == o.a; }
  bool operator<(const FqMatrix& o) const { return a < o.a; }
};

// One-line notation, 0-based: w[k] is the image of k.
using Perm = std::vector<int>;

std::string to_string(const Perm& w);  // 1-based, e.g. "2,3,1"

FqMatrix make_matrix(int n, int q);                 // zero matrix; ConfigError on bad n or q
FqMatrix identity_matrix(int n, int q);
FqMatrix perm_matrix(const Perm& w, int q);         // column k carries 1 in row w[k]
FqMatrix fq_mul(const FqMatrix& x, const FqMatrix& y);
bool fq_invertible(const FqMatrix& g);

// Bruhat cell of B w B (B upper triangular): w(k) is read off from the ranks
// of the southwest submatrices, rank(g[i.., ..j]) = |{k <= j : w(k) >= i}|.
// DomainError if g is singular.
Perm cell_BwB(const FqMatrix& g);

// Cell of B w B^-: same extraction from the southeast ranks,
// rank(g[i.., j..]) = |{k >= j : w(k) >= i}|.
Perm cell_BwBminus(const FqMatrix& g);

// Minimal (S,T) representative of the cell label on the requested side;
// labels the P\G/Q or P\G/Q^- orbit of g for the standard parabolics.
Perm parabolic_label(const FqMatrix& g, SimpleSubset S, SimpleSubset T, Side side);

// Conversions between permutations and type-A Weyl elements; rs must be the
// A_{n-1} system for w of size n.
WeylElem perm_to_elem(const RootSystem& rs, const Perm& w);
Perm elem_to_perm(const WeylElem& w);

struct ParabolicCheck {
  SimpleSubset S, T;
  bool pair_set_ok = false;
  int realized_pairs = 0, expected_pairs = 0;
};

struct RichardsonReport {
  int n = 0, q = 0;
  long long group_order = 0;
  bool borel_pairs_ok = false;
  int realized_borel_pairs = 0, expected_borel_pairs = 0;
  bool partitions_ok = false;  // both cell labelings partition GL_n(F_q)
  std::map<Perm, long long> bwb_sizes, bwbminus_sizes;
  std::vector<ParabolicCheck> parabolic;  // all (S,T) pairs of subsets

  bool ok() const;
};

// Sweeps every g in GL_n(F_q), labels both cells, and compares the realized
// (w, w') pair sets with { (w, w') : w' <= w } at the Borel level and for
// every parabolic (S,T).  CapacityError unless n=2, q in {2,3,5} or n=3,
// q in {2,3}.
RichardsonReport verify_richardson(int n, int q);

// A matrix in (B w B) intersect (B w' B^-), built stage by stage along a
// distinguished subexpression of w' in the canonical word of w.
// NotComparableError unless w' <= w.
FqMatrix witness(int n, int q, const Perm& w, const Perm& wprime);

}  // namespace bruhatkit
