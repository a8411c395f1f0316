// cosets.cpp - parabolic coset reductions and the Omega table.

#include "bruhatkit/cosets.hpp"

#include <algorithm>

namespace bruhatkit {

namespace {

void check_subset(const WeylGroup& g, SimpleSubset S, const char* op) {
  if (!g.rs().subset_valid(S)) throw DomainError(std::string(op) + ": subset out of range");
}

}  // namespace

WeylGroup::Id s_part_right(const WeylGroup& g, WeylGroup::Id w, SimpleSubset S) {
  check_subset(g, S, "s_part_right");
  for (;;) {
    int i = -1;
    for (int k = 0; k < g.rs().rank; ++k)
      if (S.contains(k) && g.left_descent(w, k)) { i = k; break; }
    if (i < 0) return w;
    w = g.left(w, i);
  }
}

WeylGroup::Id s_part_left(const WeylGroup& g, WeylGroup::Id w, SimpleSubset S) {
  check_subset(g, S, "s_part_left");
  for (;;) {
    int i = -1;
    for (int k = 0; k < g.rs().rank; ++k)
      if (S.contains(k) && g.right_descent(w, k)) { i = k; break; }
    if (i < 0) return w;
    w = g.right(w, i);
  }
}

WeylGroup::Id min_double_rep(const WeylGroup& g, WeylGroup::Id w, SimpleSubset S,
                             SimpleSubset T) {
  return s_part_right(g, s_part_left(g, w, T), S);
}

WeylGroup::Id w_o_T(const WeylGroup& g, SimpleSubset T) {
  return s_part_right(g, g.longest_id(), T);
}

SimpleSubset theta_subset(const RootSystem& rs, SimpleSubset T) {
  if (!rs.subset_valid(T)) throw DomainError("theta_subset: subset out of range");
  SimpleSubset out;
  for (int i = 0; i < rs.rank; ++i)
    if (T.contains(i)) out = out.with(rs.theta_simple[i]);
  return out;
}

WeylGroup::Id omega(const WeylGroup& g, WeylGroup::Id u, SimpleSubset S, SimpleSubset T) {
  check_subset(g, S, "omega");
  check_subset(g, T, "omega");
  if (min_double_rep(g, u, S, T) != u)
    throw DomainError("omega: element is not a minimal (S,T) representative");
  const SimpleSubset thetaT = theta_subset(g.rs(), T);
  return min_double_rep(g, g.mul_ids(u, w_o_T(g, T)), S, thetaT);
}

DoubleCosetTable enumerate_WST(const WeylGroup& g, SimpleSubset S, SimpleSubset T) {
  check_subset(g, S, "enumerate_WST");
  check_subset(g, T, "enumerate_WST");
  DoubleCosetTable table;
  table.group = &g;
  table.S = S;
  table.T = T;
  table.thetaT = theta_subset(g.rs(), T);

  std::vector<char> is_rep(g.size(), 0);
  for (WeylGroup::Id w = 0; w < g.size(); ++w) is_rep[min_double_rep(g, w, S, T)] = 1;
  for (WeylGroup::Id w = 0; w < g.size(); ++w)
    if (is_rep[w]) table.reps.push_back(w);
  std::sort(table.reps.begin(), table.reps.end(), [&g](WeylGroup::Id a, WeylGroup::Id b) {
    if (g.len(a) != g.len(b)) return g.len(a) < g.len(b);
    return g.word(a) < g.word(b);
  });

  const WeylGroup::Id woT = w_o_T(g, T);
  for (WeylGroup::Id u : table.reps)
    table.omega.push_back(min_double_rep(g, g.mul_ids(u, woT), S, table.thetaT));

  table.pos.assign(g.size(), -1);
  for (int k = 0; k < table.r(); ++k) table.pos[table.reps[k]] = k;
  return table;
}

}  // namespace bruhatkit
