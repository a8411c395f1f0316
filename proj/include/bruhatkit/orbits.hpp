// orbits.hpp - orbit closure posets on P\G/Q and P\G/Q^-, filtration index
// bookkeeping, and root data for the unipotent fibers.
#pragma once

#include <string>
#include <vector>

#include "bruhatkit/cosets.hpp"

namespace bruhatkit {

// Which side the orbits live on: Q uses the Bruhat closure order on the
// minimal representatives, Qminus the opposite order.
enum class Side { Q, Qminus };

std::string to_string(Side side);

// Orbits of P\G/Q^{(-)} labeled by the representative table.  closure[i][j]
// says orbit j lies in the closure of orbit i; opens[k] lists the orbit
// indexes of the k-th member of the open filtration (k = 0..r-1):
// on side Q the tail {k..r-1}, on side Qminus the head {0..k}.
struct OrbitPoset {
  DoubleCosetTable table;
  Side side = Side::Q;
  std::vector<std::vector<bool>> closure;
  std::vector<std::vector<int>> opens;

  int r() const { return table.r(); }
  // True when the complement of the index set is closed under taking closures.
  bool is_open(const std::vector<int>& idxs) const;
};

OrbitPoset orbit_poset(const BruhatOrder& order, SimpleSubset S, SimpleSubset T, Side side);

// Comparison of the dual filtration of the side-Q stack with the side-Qminus
// filtration, and the Omega transport onto the (S, theta(T)) side-Q poset.
struct MatchReport {
  SimpleSubset S, T;
  int r = 0;
  bool opens_ok = false;             // every filtration member is genuinely open
  bool dual_vs_opposite_ok = false;  // dual step k and opposite step k index {0..k}
  bool omega_iso_ok = false;         // Omega carries the Q^- poset to the Q poset of (S, theta(T))
  std::string detail;

  bool ok() const { return opens_ok && dual_vs_opposite_ok && omega_iso_ok; }
};

MatchReport dual_filtration_match(const BruhatOrder& order, SimpleSubset S, SimpleSubset T);

// Root data underlying the fiber U^w = U_Q intersect w^{-1} U^- w for a
// minimal representative w of W_{S,T}.
struct GeomLemmaDatum {
  WeylGroup::Id w = -1;
  SimpleSubset S, T;
  std::vector<Root> roots_UQ;            // R+_nd minus R_{nd,T}
  std::vector<Root> roots_Uw;            // members of roots_UQ sent negative by w
  std::vector<Root> roots_P_cap_wUQw;    // (R+_nd union R_{nd,S}) intersect w(roots_UQ)
};

// DomainError unless w is the minimal representative of its (S,T) coset.
GeomLemmaDatum geometric_lemma_datum(const WeylGroup& g, WeylGroup::Id w, SimpleSubset S,
                                     SimpleSubset T);

}  // namespace bruhatkit
