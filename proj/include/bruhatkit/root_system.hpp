// root_system.hpp - finite root systems of types A-D, G2, F4 and the
// non-reduced type BC, stored in simple-root coordinates.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bruhatkit/errors.hpp"

namespace bruhatkit {

enum class CartanType { A, B, C, D, G2, F4, BC };

std::string to_string(CartanType type);
// Accepts "A".."D", "G2"/"G", "F4"/"F", "BC" (case-insensitive); throws ConfigError.
CartanType parse_cartan_type(const std::string& text);

// A root as its integer coordinate vector in the simple-root basis.
// Every root has all coordinates of one sign; positive means all >= 0.
struct Root {
  std::vector<int> c;
  auto operator<=>(const Root&) const = default;
};

Root operator-(const Root& r);
Root operator+(const Root& a, const Root& b);
Root operator*(int k, const Root& r);
bool root_negative(const Root& r);  // any coordinate < 0
int height(const Root& r);          // coordinate sum
std::string to_string(const Root& r);

// Subset of the simple roots as a bitmask over 0-based simple indices.
struct SimpleSubset {
  std::uint32_t bits = 0;
  auto operator<=>(const SimpleSubset&) const = default;

  bool contains(int i) const { return (bits >> i) & 1u; }
  SimpleSubset with(int i) const { return {bits | (1u << i)}; }
  int count() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }
  static SimpleSubset full(int rank) { return {(1u << rank) - 1u}; }
};

std::string to_string(SimpleSubset s, int rank);  // 1-based, e.g. "{1,3}"

// Immutable root-system data; build once, share read-only.  WeylElem values
// keep a pointer into the RootSystem that built them, so it must outlive them.
struct RootSystem {
  CartanType type = CartanType::A;
  int rank = 0;

  std::vector<Root> simple;       // simple[i] = e_i
  std::vector<Root> roots;        // all of R, sorted by (height, lex)
  std::vector<Root> positive;     // R+
  std::vector<Root> nondivisible; // R_nd = { a in R : a/2 not in R }
  std::vector<Root> positive_nd;  // R+ intersect R_nd

  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<int>> cartan;
  // theta(alpha_i) = alpha_{theta_simple[i]} where theta = -w_o
  std::vector<int> theta_simple;
  // w_o(alpha_i), used to evaluate theta on arbitrary roots
  std::vector<Root> wo_image;

  bool is_root(const Root& r) const { return index_of.count(r) != 0; }
  bool is_positive(const Root& r) const;       // DomainError if not a root
  int pairing(const Root& v, int i) const;     // <v, alpha_i^vee>
  Root reflect(int i, const Root& v) const;    // s_i(v)
  bool subset_valid(SimpleSubset s) const { return s.bits < (1u << rank); }

  std::map<Root, int> index_of;  // position in roots
};

// Supported: A 1..5, B 2..4, C 2..4, D 4, G2 (rank 2), F4 (rank 4), BC 1..3.
// Throws ConfigError otherwise.
RootSystem build_root_system(CartanType type, int rank);

// theta(a) = -w_o(a); permutes R and fixes R+ setwise.
Root theta(const RootSystem& rs, const Root& r);

// R_nd intersect Z-span(S): the roots supported on S, sorted.
// Throws DomainError if S is not a subset of the simple roots.
std::vector<Root> span_subsystem(const RootSystem& rs, SimpleSubset S);

}  // namespace bruhatkit
