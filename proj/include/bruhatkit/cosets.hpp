// cosets.hpp - parabolic cosets: S-parts, minimal double-coset
// representatives, and the order-reversing map Omega.
#pragma once

#include <vector>

#include "bruhatkit/bruhat.hpp"

namespace bruhatkit {

// Minimal element of W(S) w: strip left descents lying in S.
WeylGroup::Id s_part_right(const WeylGroup& g, WeylGroup::Id w, SimpleSubset S);

// Minimal element of w W(S): strip right descents lying in S.
WeylGroup::Id s_part_left(const WeylGroup& g, WeylGroup::Id w, SimpleSubset S);

// Minimal element of W(S) w W(T): reduce within w W(T) first, then within
// W(S) of the result.
WeylGroup::Id min_double_rep(const WeylGroup& g, WeylGroup::Id w, SimpleSubset S,
                             SimpleSubset T);

// Minimal element of W(T) w_o; satisfies longest_in(T) * w_o_T = w_o.
WeylGroup::Id w_o_T(const WeylGroup& g, SimpleSubset T);

// Image of T under theta = -w_o; theta permutes the simple roots.
SimpleSubset theta_subset(const RootSystem& rs, SimpleSubset T);

// Omega_{S,T}(u): minimal representative of W(S) u w_o_T W(theta(T)).
// DomainError unless u is the minimal representative of its (S,T) coset.
WeylGroup::Id omega(const WeylGroup& g, WeylGroup::Id u, SimpleSubset S, SimpleSubset T);

// The set W_{S,T} of minimal double-coset representatives, enumerated in
// increasing length with lexicographic canonical-word tie-break, so
// reps[i] <= reps[j] in Bruhat order implies i <= j.
struct DoubleCosetTable {
  const WeylGroup* group = nullptr;
  SimpleSubset S, T, thetaT;
  std::vector<WeylGroup::Id> reps;
  std::vector<WeylGroup::Id> omega;  // omega[k] = Omega_{S,T}(reps[k]), in W_{S,thetaT}
  std::vector<int> pos;              // pos[id] = index in reps, or -1

  int r() const { return static_cast<int>(reps.size()); }
  int index_of(WeylGroup::Id w) const { return pos[w]; }
};

DoubleCosetTable enumerate_WST(const WeylGroup& g, SimpleSubset S, SimpleSubset T);

}  // namespace bruhatkit
