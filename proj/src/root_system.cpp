// root_system.cpp - construction of the supported root systems.
//
// Each type is realized first in its classical coordinate model (F4 scaled by
// 2 to stay integral), then every root is re-expressed in the simple-root
// basis by exact rational elimination.  All stored data is integral.

#include "bruhatkit/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bruhatkit {

namespace {

using EVec = std::vector<int>;

struct EModel {
  int amb = 0;
  std::vector<EVec> simple;
  std::vector<EVec> positive;
};

EVec unit(int amb, int i, int v = 1) {
  EVec e(amb, 0);
  e[i] = v;
  return e;
}

EVec combine(int amb, int i, int vi, int j, int vj) {
  EVec e(amb, 0);
  e[i] = vi;
  e[j] = vj;
  return e;
}

void check_rank(CartanType type, int rank, int lo, int hi) {
  if (rank < lo || rank > hi) {
    throw ConfigError("unsupported rank " + std::to_string(rank) + " for type " +
                      to_string(type));
  }
}

EModel chain_model(int rank, int amb) {
  EModel m;
  m.amb = amb;
  for (int i = 0; i + 1 < rank; ++i) m.simple.push_back(combine(amb, i, 1, i + 1, -1));
  return m;
}

EModel make_emodel(CartanType type, int rank) {
  switch (type) {
    case CartanType::A: {
      check_rank(type, rank, 1, 5);
      EModel m = chain_model(rank, rank + 1);
      m.simple.push_back(combine(rank + 1, rank - 1, 1, rank, -1));
      for (int i = 0; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j) m.positive.push_back(combine(rank + 1, i, 1, j, -1));
      return m;
    }
    case CartanType::B:
    case CartanType::BC: {
      check_rank(type, rank, type == CartanType::B ? 2 : 1, type == CartanType::B ? 4 : 3);
      EModel m = chain_model(rank, rank);
      m.simple.push_back(unit(rank, rank - 1));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          m.positive.push_back(combine(rank, i, 1, j, -1));
          m.positive.push_back(combine(rank, i, 1, j, 1));
        }
      for (int i = 0; i < rank; ++i) m.positive.push_back(unit(rank, i));
      if (type == CartanType::BC)
        for (int i = 0; i < rank; ++i) m.positive.push_back(unit(rank, i, 2));
      return m;
    }
    case CartanType::C: {
      check_rank(type, rank, 2, 4);
      EModel m = chain_model(rank, rank);
      m.simple.push_back(unit(rank, rank - 1, 2));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          m.positive.push_back(combine(rank, i, 1, j, -1));
          m.positive.push_back(combine(rank, i, 1, j, 1));
        }
      for (int i = 0; i < rank; ++i) m.positive.push_back(unit(rank, i, 2));
      return m;
    }
    case CartanType::D: {
      check_rank(type, rank, 4, 4);
      EModel m = chain_model(rank, rank);
      m.simple.push_back(combine(rank, rank - 2, 1, rank - 1, 1));
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          m.positive.push_back(combine(rank, i, 1, j, -1));
          m.positive.push_back(combine(rank, i, 1, j, 1));
        }
      return m;
    }
    case CartanType::G2: {
      check_rank(type, rank, 2, 2);
      EModel m;
      m.amb = 3;
      m.simple = {{1, -1, 0}, {-2, 1, 1}};
      m.positive = {{1, -1, 0}, {-2, 1, 1}, {-1, 0, 1},
                    {0, -1, 1}, {1, -2, 1}, {-1, -1, 2}};
      return m;
    }
    case CartanType::F4: {
      check_rank(type, rank, 4, 4);
      // Coordinates scaled by 2: the short roots (e1 +- e2 +- e3 +- e4)/2
      // become integral.
      EModel m;
      m.amb = 4;
      m.simple = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      for (int i = 0; i < 4; ++i) m.positive.push_back(unit(4, i, 2));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          m.positive.push_back(combine(4, i, 2, j, -2));
          m.positive.push_back(combine(4, i, 2, j, 2));
        }
      for (int s2 = -1; s2 <= 1; s2 += 2)
        for (int s3 = -1; s3 <= 1; s3 += 2)
          for (int s4 = -1; s4 <= 1; s4 += 2) m.positive.push_back({1, s2, s3, s4});
      return m;
    }
  }
  throw ConfigError("unknown Cartan type");
}

long long igcd(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

struct Frac {
  long long n = 0, d = 1;
  void normalize() {
    if (d < 0) { n = -n; d = -d; }
    long long g = igcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
  }
};

Frac frac(long long n, long long d = 1) {
  Frac f{n, d};
  f.normalize();
  return f;
}

Frac operator*(Frac a, Frac b) { return frac(a.n * b.n, a.d * b.d); }
Frac operator-(Frac a, Frac b) { return frac(a.n * b.d - b.n * a.d, a.d * b.d); }
Frac operator/(Frac a, Frac b) { return frac(a.n * b.d, a.d * b.n); }

// Solve sum_j c_j * simple[j] = v exactly; the simple roots are linearly
// independent and v lies in their integral span.
std::vector<int> solve_coords(const std::vector<EVec>& simple, const EVec& v) {
  const int amb = static_cast<int>(v.size());
  const int rank = static_cast<int>(simple.size());
  std::vector<std::vector<Frac>> a(amb, std::vector<Frac>(rank + 1));
  for (int r = 0; r < amb; ++r) {
    for (int c = 0; c < rank; ++c) a[r][c] = frac(simple[c][r]);
    a[r][rank] = frac(v[r]);
  }
  for (int col = 0; col < rank; ++col) {
    int piv = col;
    while (piv < amb && a[piv][col].n == 0) ++piv;
    assert(piv < amb);
    std::swap(a[col], a[piv]);
    for (int r = 0; r < amb; ++r) {
      if (r == col || a[r][col].n == 0) continue;
      Frac f = a[r][col] / a[col][col];
      for (int c = col; c <= rank; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  for (int r = rank; r < amb; ++r) assert(a[r][rank].n == 0);
  std::vector<int> out(rank);
  for (int col = 0; col < rank; ++col) {
    Frac f = a[col][rank] / a[col][col];
    assert(f.d == 1);
    out[col] = static_cast<int>(f.n);
  }
  return out;
}

long long edot(const EVec& a, const EVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

bool root_less(const Root& a, const Root& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a.c < b.c;
}

}  // namespace

std::string to_string(CartanType type) {
  switch (type) {
    case CartanType::A: return "A";
    case CartanType::B: return "B";
    case CartanType::C: return "C";
    case CartanType::D: return "D";
    case CartanType::G2: return "G2";
    case CartanType::F4: return "F4";
    case CartanType::BC: return "BC";
  }
  return "?";
}

CartanType parse_cartan_type(const std::string& text) {
  std::string t;
  for (char ch : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (t == "A") return CartanType::A;
  if (t == "B") return CartanType::B;
  if (t == "C") return CartanType::C;
  if (t == "D") return CartanType::D;
  if (t == "G" || t == "G2") return CartanType::G2;
  if (t == "F" || t == "F4") return CartanType::F4;
  if (t == "BC") return CartanType::BC;
  throw ConfigError("unknown Cartan type '" + text + "'");
}

Root operator-(const Root& r) {
  Root out = r;
  for (int& x : out.c) x = -x;
  return out;
}

Root operator+(const Root& a, const Root& b) {
  Root out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

Root operator*(int k, const Root& r) {
  Root out = r;
  for (int& x : out.c) x *= k;
  return out;
}

bool root_negative(const Root& r) {
  for (int x : r.c)
    if (x < 0) return true;
  return false;
}

int height(const Root& r) { return std::accumulate(r.c.begin(), r.c.end(), 0); }

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (i) os << ',';
    os << r.c[i];
  }
  os << ']';
  return os.str();
}

std::string to_string(SimpleSubset s, int rank) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < rank; ++i) {
    if (!s.contains(i)) continue;
    if (!first) os << ',';
    os << (i + 1);
    first = false;
  }
  os << '}';
  return os.str();
}

bool RootSystem::is_positive(const Root& r) const {
  if (!is_root(r)) throw DomainError("is_positive: not a root: " + to_string(r));
  return !root_negative(r);
}

int RootSystem::pairing(const Root& v, int i) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += cartan[i][j] * v.c[j];
  return s;
}

Root RootSystem::reflect(int i, const Root& v) const {
  Root out = v;
  out.c[i] -= pairing(v, i);
  return out;
}

RootSystem build_root_system(CartanType type, int rank) {
  const EModel em = make_emodel(type, rank);
  assert(static_cast<int>(em.simple.size()) == rank);

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  for (int i = 0; i < rank; ++i) {
    Root e;
    e.c.assign(rank, 0);
    e.c[i] = 1;
    rs.simple.push_back(e);
  }

  rs.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    long long nii = edot(em.simple[i], em.simple[i]);
    for (int j = 0; j < rank; ++j) {
      long long num = 2 * edot(em.simple[j], em.simple[i]);
      assert(num % nii == 0);
      rs.cartan[i][j] = static_cast<int>(num / nii);
    }
  }

  for (const EVec& p : em.positive) {
    Root r{solve_coords(em.simple, p)};
    assert(!root_negative(r));  // the classical positive lists match the basis
    rs.positive.push_back(r);
  }
  std::sort(rs.positive.begin(), rs.positive.end(), root_less);

  rs.roots = rs.positive;
  for (const Root& r : rs.positive) rs.roots.push_back(-r);
  std::sort(rs.roots.begin(), rs.roots.end(), root_less);
  for (std::size_t i = 0; i < rs.roots.size(); ++i) rs.index_of[rs.roots[i]] = static_cast<int>(i);
  assert(rs.index_of.size() == rs.roots.size());

  auto divisible = [&rs](const Root& r) {
    Root half = r;
    for (int& x : half.c) {
      if (x % 2 != 0) return false;
      x /= 2;
    }
    return rs.is_root(half);
  };
  for (const Root& r : rs.roots)
    if (!divisible(r)) rs.nondivisible.push_back(r);
  for (const Root& r : rs.positive)
    if (!divisible(r)) rs.positive_nd.push_back(r);

  // Longest element by the greedy ascent: while some w(alpha_i) stays
  // positive, replace w by w*s_i.  Terminates at length |R+_nd|.
  std::vector<Root> img = rs.simple;
  std::size_t steps = 0;
  for (;;) {
    int i = -1;
    for (int k = 0; k < rank; ++k)
      if (!root_negative(img[k])) { i = k; break; }
    if (i < 0) break;
    const Root wi = img[i];
    for (int j = 0; j < rank; ++j) {
      for (int k = 0; k < rank; ++k) img[j].c[k] -= rs.cartan[i][j] * wi.c[k];
    }
    assert(++steps <= rs.positive_nd.size());
  }
  rs.wo_image = img;

  rs.theta_simple.assign(rank, -1);
  for (int i = 0; i < rank; ++i) {
    Root ti = -img[i];
    for (int j = 0; j < rank; ++j)
      if (rs.simple[j] == ti) rs.theta_simple[i] = j;
    assert(rs.theta_simple[i] >= 0);
  }
  return rs;
}

Root theta(const RootSystem& rs, const Root& r) {
  if (!rs.is_root(r)) throw DomainError("theta: not a root: " + to_string(r));
  Root out;
  out.c.assign(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int k = 0; k < rs.rank; ++k) out.c[k] -= r.c[i] * rs.wo_image[i].c[k];
  return out;
}

std::vector<Root> span_subsystem(const RootSystem& rs, SimpleSubset S) {
  if (!rs.subset_valid(S)) throw DomainError("span_subsystem: subset out of range");
  std::vector<Root> out;
  for (const Root& r : rs.nondivisible) {
    bool inside = true;
    for (int i = 0; i < rs.rank; ++i)
      if (r.c[i] != 0 && !S.contains(i)) inside = false;
    if (inside) out.push_back(r);
  }
  return out;
}

}  // namespace bruhatkit
