// orbits.cpp - closure posets, filtration matching, unipotent root data.

#include "bruhatkit/orbits.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bruhatkit {

std::string to_string(Side side) { return side == Side::Q ? "Q" : "Qminus"; }

bool OrbitPoset::is_open(const std::vector<int>& idxs) const {
  std::vector<char> in(r(), 0);
  for (int i : idxs) in[i] = 1;
  for (int i = 0; i < r(); ++i) {
    if (in[i]) continue;
    for (int j = 0; j < r(); ++j)
      if (closure[i][j] && in[j]) return false;
  }
  return true;
}

OrbitPoset orbit_poset(const BruhatOrder& order, SimpleSubset S, SimpleSubset T, Side side) {
  OrbitPoset p;
  p.table = enumerate_WST(order.group(), S, T);
  p.side = side;
  const int r = p.r();
  p.closure.assign(r, std::vector<bool>(r, false));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      p.closure[i][j] = side == Side::Q ? order.leq(p.table.reps[j], p.table.reps[i])
                                        : order.leq(p.table.reps[i], p.table.reps[j]);
  for (int k = 0; k < r; ++k) {
    std::vector<int> idxs;
    if (side == Side::Q)
      for (int i = k; i < r; ++i) idxs.push_back(i);
    else
      for (int i = 0; i <= k; ++i) idxs.push_back(i);
    p.opens.push_back(std::move(idxs));
  }
  return p;
}

MatchReport dual_filtration_match(const BruhatOrder& order, SimpleSubset S, SimpleSubset T) {
  MatchReport rep;
  rep.S = S;
  rep.T = T;

  const OrbitPoset q = orbit_poset(order, S, T, Side::Q);
  const OrbitPoset qm = orbit_poset(order, S, T, Side::Qminus);
  const int r = q.r();
  rep.r = r;

  rep.opens_ok = true;
  for (int k = 0; k < r; ++k)
    if (!q.is_open(q.opens[k]) || !qm.is_open(qm.opens[k])) rep.opens_ok = false;

  // Step k of the dual filtration collects the orbits missing from the open
  // member k+1 on side Q; it must agree with the side-Q^- member k.
  rep.dual_vs_opposite_ok = true;
  for (int k = 0; k < r; ++k) {
    std::vector<char> in_next(r, 0);
    if (k + 1 < r)
      for (int i : q.opens[k + 1]) in_next[i] = 1;
    std::vector<int> dual_step;
    for (int i = 0; i < r; ++i)
      if (!in_next[i]) dual_step.push_back(i);
    if (dual_step != qm.opens[k]) rep.dual_vs_opposite_ok = false;
  }

  // Transport along Omega: the Q^- closure poset of (S,T) must agree with the
  // Q closure poset of (S, theta(T)) under reps[k] -> Omega(reps[k]).
  const OrbitPoset q2 = orbit_poset(order, S, qm.table.thetaT, Side::Q);
  rep.omega_iso_ok = q2.r() == r;
  if (rep.omega_iso_ok) {
    std::vector<int> to2(r, -1);
    std::set<int> seen;
    for (int k = 0; k < r; ++k) {
      const int idx = q2.table.index_of(qm.table.omega[k]);
      if (idx < 0 || !seen.insert(idx).second) { rep.omega_iso_ok = false; break; }
      to2[k] = idx;
    }
    if (rep.omega_iso_ok)
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          if (qm.closure[i][j] != static_cast<bool>(q2.closure[to2[i]][to2[j]]))
            rep.omega_iso_ok = false;
  }

  std::ostringstream os;
  const int rank = order.group().rs().rank;
  os << "S=" << to_string(S, rank) << " T=" << to_string(T, rank) << " r=" << r
     << (rep.ok() ? " match" : " MISMATCH");
  rep.detail = os.str();
  return rep;
}

GeomLemmaDatum geometric_lemma_datum(const WeylGroup& g, WeylGroup::Id w, SimpleSubset S,
                                     SimpleSubset T) {
  const RootSystem& rs = g.rs();
  if (!rs.subset_valid(S) || !rs.subset_valid(T))
    throw DomainError("geometric_lemma_datum: subset out of range");
  if (min_double_rep(g, w, S, T) != w)
    throw DomainError("geometric_lemma_datum: w is not a minimal (S,T) representative");

  GeomLemmaDatum d;
  d.w = w;
  d.S = S;
  d.T = T;

  const std::vector<Root> spanT = span_subsystem(rs, T);
  const std::set<Root> levi_T(spanT.begin(), spanT.end());
  for (const Root& a : rs.positive_nd)
    if (!levi_T.count(a)) d.roots_UQ.push_back(a);

  const WeylElem& we = g.elem(w);
  std::set<Root> image;
  for (const Root& a : d.roots_UQ) {
    const Root im = act(we, a);
    image.insert(im);
    if (root_negative(im)) d.roots_Uw.push_back(a);
  }

  std::set<Root> roots_P(rs.positive_nd.begin(), rs.positive_nd.end());
  for (const Root& a : span_subsystem(rs, S)) roots_P.insert(a);
  for (const Root& b : roots_P)
    if (image.count(b)) d.roots_P_cap_wUQw.push_back(b);
  return d;
}

}  // namespace bruhatkit
