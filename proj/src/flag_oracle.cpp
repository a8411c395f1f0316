// flag_oracle.cpp - GL_n(F_q) Bruhat cells, exhaustive sweeps, witnesses.
#include "bruhatkit/flag_oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "bruhatkit/errors.hpp"

namespace bruhatkit {

namespace {

int inv_mod(int v, int q) {
  for (int u = 1; u < q; ++u)
    if (u * v % q == 1) return u;
  assert(false);
  return 0;
}

void check_perm(const Perm& w, int n) {
  if (static_cast<int>(w.size()) != n)
    throw DomainError("permutation has size " + std::to_string(w.size()) +
                      ", expected " + std::to_string(n));
  Perm sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k)
    if (sorted[k] != k) throw DomainError("not a permutation: " + to_string(w));
}

void check_compatible(const FqMatrix& x, const FqMatrix& y) {
  if (x.n != y.n || x.q != y.q)
    throw DomainError("matrix size or field mismatch");
}

// Rank of the block rows r0..n-1, cols c0..c1-1.
int rank_block(const FqMatrix& g, int r0, int c0, int c1) {
  const int q = g.q;
  int rows = g.n - r0, cols = c1 - c0;
  int m[4][4];
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m[r][c] = g.at(r0 + r, c0 + c);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) { p = r; break; }
    if (p < 0) continue;
    for (int cc = 0; cc < cols; ++cc) std::swap(m[rank][cc], m[p][cc]);
    int piv = inv_mod(m[rank][c], q);
    for (int r = rank + 1; r < rows; ++r) {
      int f = m[r][c] * piv % q;
      if (f == 0) continue;
      for (int cc = c; cc < cols; ++cc)
        m[r][cc] = (m[r][cc] + (q - f) * m[rank][cc]) % q;
    }
    ++rank;
  }
  return rank;
}

void check_invertible(const FqMatrix& g) {
  if (rank_block(g, 0, 0, g.n) != g.n)
    throw DomainError("singular matrix lies in no Bruhat cell");
}

// Shared type A_{n-1} context: root system, group table, Bruhat matrix, and
// the id <-> permutation dictionary.  Built once per n and kept alive.
struct ACtx {
  RootSystem rs;
  std::optional<WeylGroup> group;
  std::optional<BruhatOrder> order;
  std::vector<Perm> perm_of;
  std::map<Perm, WeylGroup::Id> id_of;
};

const ACtx& a_ctx(int n) {
  static std::map<int, std::unique_ptr<ACtx>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto ctx = std::make_unique<ACtx>();
    ctx->rs = build_root_system(CartanType::A, n - 1);
    ctx->group.emplace(WeylGroup::enumerate(ctx->rs));
    ctx->order.emplace(*ctx->group);
    for (WeylGroup::Id w = 0; w < ctx->group->size(); ++w) {
      Perm p = elem_to_perm(ctx->group->elem(w));
      ctx->id_of.emplace(p, w);
      ctx->perm_of.push_back(std::move(p));
    }
    it = cache.emplace(n, std::move(ctx)).first;
  }
  return *it->second;
}

// Strips the upper triangular left factor: returns h with g = b h, h = P(z) l,
// l lower triangular.  z must be the B w B^- label of g.
FqMatrix normalize_left(FqMatrix m, const Perm& z) {
  const int n = m.n, q = m.q;
  bool pivoted[4] = {false, false, false, false};
  for (int k = n - 1; k >= 0; --k) {
    int pivot = -1;
    for (int r = n - 1; r >= 0; --r)
      if (!pivoted[r] && m.at(r, k) != 0) { pivot = r; break; }
    assert(pivot == z[k]);
    pivoted[pivot] = true;
    int piv = inv_mod(m.at(pivot, k), q);
    for (int r = 0; r < pivot; ++r) {
      int f = m.at(r, k) * piv % q;
      if (f == 0) continue;
      for (int c = 0; c < n; ++c)
        m.at(r, c) =
            static_cast<std::uint8_t>((m.at(r, c) + (q - f) * m.at(pivot, c)) % q);
    }
  }
  return m;
}

}  // namespace

std::string to_string(const Perm& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w[k] + 1);
  }
  return out;
}

FqMatrix make_matrix(int n, int q) {
  if (n < 1 || n > 4)
    throw ConfigError("matrix size must be 1..4, got " + std::to_string(n));
  if (q != 2 && q != 3 && q != 5)
    throw ConfigError("field size must be 2, 3, or 5, got " + std::to_string(q));
  FqMatrix g;
  g.n = n;
  g.q = q;
  return g;
}

FqMatrix identity_matrix(int n, int q) {
  FqMatrix g = make_matrix(n, q);
  for (int k = 0; k < n; ++k) g.at(k, k) = 1;
  return g;
}

FqMatrix perm_matrix(const Perm& w, int q) {
  FqMatrix g = make_matrix(static_cast<int>(w.size()), q);
  check_perm(w, g.n);
  for (int k = 0; k < g.n; ++k) g.at(w[k], k) = 1;
  return g;
}

FqMatrix fq_mul(const FqMatrix& x, const FqMatrix& y) {
  check_compatible(x, y);
  FqMatrix out = make_matrix(x.n, x.q);
  for (int r = 0; r < x.n; ++r)
    for (int c = 0; c < x.n; ++c) {
      int acc = 0;
      for (int k = 0; k < x.n; ++k) acc += x.at(r, k) * y.at(k, c);
      out.at(r, c) = static_cast<std::uint8_t>(acc % x.q);
    }
  return out;
}

bool fq_invertible(const FqMatrix& g) { return rank_block(g, 0, 0, g.n) == g.n; }

Perm cell_BwB(const FqMatrix& g) {
  check_invertible(g);
  const int n = g.n;
  // sw[i][j] = rank of rows i..n-1, cols 0..j-1.
  int sw[5][5];
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) sw[i][j] = rank_block(g, i, 0, j);
  Perm w(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (sw[i][k + 1] - sw[i][k] == 1) w[k] = i;
  return w;
}

Perm cell_BwBminus(const FqMatrix& g) {
  check_invertible(g);
  const int n = g.n;
  // se[i][j] = rank of rows i..n-1, cols j..n-1.
  int se[5][5];
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) se[i][j] = rank_block(g, i, j, n);
  Perm w(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (se[i][j] - se[i][j + 1] == 1) w[j] = i;
  return w;
}

Perm parabolic_label(const FqMatrix& g, SimpleSubset S, SimpleSubset T, Side side) {
  if (g.n == 1) {
    if (S.bits != 0 || T.bits != 0) throw DomainError("subset out of range");
    check_invertible(g);
    return Perm{0};
  }
  const ACtx& ctx = a_ctx(g.n);
  if (!ctx.rs.subset_valid(S) || !ctx.rs.subset_valid(T))
    throw DomainError("subset out of range");
  Perm borel = side == Side::Q ? cell_BwB(g) : cell_BwBminus(g);
  WeylGroup::Id id = ctx.id_of.at(borel);
  return ctx.perm_of[min_double_rep(*ctx.group, id, S, T)];
}

WeylElem perm_to_elem(const RootSystem& rs, const Perm& w) {
  if (rs.type != CartanType::A)
    throw DomainError("permutations correspond to type A only");
  const int n = rs.rank + 1;
  check_perm(w, n);
  WeylElem out;
  out.rs = &rs;
  for (int i = 0; i < rs.rank; ++i) {
    Root r;
    r.c.assign(rs.rank, 0);
    if (w[i] < w[i + 1]) {
      for (int k = w[i]; k < w[i + 1]; ++k) r.c[k] = 1;
    } else {
      for (int k = w[i + 1]; k < w[i]; ++k) r.c[k] = -1;
    }
    assert(rs.is_root(r));
    out.img.push_back(std::move(r));
  }
  return out;
}

Perm elem_to_perm(const WeylElem& w) {
  const RootSystem& rs = *w.rs;
  if (rs.type != CartanType::A)
    throw DomainError("permutations correspond to type A only");
  Perm p(rs.rank + 1);
  std::iota(p.begin(), p.end(), 0);
  for (int t : canonical_reduced_word(w)) std::swap(p[t], p[t + 1]);
  return p;
}

bool RichardsonReport::ok() const {
  if (!borel_pairs_ok || !partitions_ok) return false;
  for (const ParabolicCheck& pc : parabolic)
    if (!pc.pair_set_ok) return false;
  return true;
}

RichardsonReport verify_richardson(int n, int q) {
  make_matrix(n, q);
  const bool feasible =
      (n == 2 && (q == 2 || q == 3 || q == 5)) || (n == 3 && (q == 2 || q == 3));
  if (!feasible)
    throw CapacityError("exhaustive sweep of GL_" + std::to_string(n) + "(F_" +
                        std::to_string(q) + ") is out of budget");

  const ACtx& ctx = a_ctx(n);
  const WeylGroup& W = *ctx.group;
  const BruhatOrder& order = *ctx.order;
  const int rank = n - 1;

  RichardsonReport rep;
  rep.n = n;
  rep.q = q;

  using Pair = std::pair<WeylGroup::Id, WeylGroup::Id>;
  std::set<Pair> expected_borel, realized_borel;
  for (WeylGroup::Id a = 0; a < W.size(); ++a)
    for (WeylGroup::Id b = 0; b < W.size(); ++b)
      if (order.leq(b, a)) expected_borel.insert({a, b});

  struct ParWork {
    SimpleSubset S, T;
    std::vector<WeylGroup::Id> minrep;
    std::set<Pair> expected, realized;
  };
  std::vector<ParWork> works;
  for (std::uint32_t sb = 0; sb < (1u << rank); ++sb)
    for (std::uint32_t tb = 0; tb < (1u << rank); ++tb) {
      ParWork pw;
      pw.S = SimpleSubset{sb};
      pw.T = SimpleSubset{tb};
      pw.minrep.resize(W.size());
      for (WeylGroup::Id w = 0; w < W.size(); ++w)
        pw.minrep[w] = min_double_rep(W, w, pw.S, pw.T);
      for (WeylGroup::Id a = 0; a < W.size(); ++a)
        for (WeylGroup::Id b = 0; b < W.size(); ++b)
          if (pw.minrep[a] == a && pw.minrep[b] == b && order.leq(b, a))
            pw.expected.insert({a, b});
      works.push_back(std::move(pw));
    }

  FqMatrix g = make_matrix(n, q);
  const int cells = n * n;
  for (;;) {
    if (fq_invertible(g)) {
      ++rep.group_order;
      WeylGroup::Id aq = ctx.id_of.at(cell_BwB(g));
      WeylGroup::Id am = ctx.id_of.at(cell_BwBminus(g));
      ++rep.bwb_sizes[ctx.perm_of[aq]];
      ++rep.bwbminus_sizes[ctx.perm_of[am]];
      realized_borel.insert({aq, am});
      for (ParWork& pw : works)
        pw.realized.insert({pw.minrep[aq], pw.minrep[am]});
    }
    int k = 0;
    while (k < cells && g.a[k] == g.q - 1) g.a[k++] = 0;
    if (k == cells) break;
    ++g.a[k];
  }

  rep.borel_pairs_ok = realized_borel == expected_borel;
  rep.realized_borel_pairs = static_cast<int>(realized_borel.size());
  rep.expected_borel_pairs = static_cast<int>(expected_borel.size());

  long long formula = 1;
  long long qn = 1;
  for (int k = 0; k < n; ++k) qn *= q;
  long long qk = 1;
  for (int k = 0; k < n; ++k) {
    formula *= qn - qk;
    qk *= q;
  }
  long long sum_q = 0, sum_m = 0;
  for (const auto& [p, c] : rep.bwb_sizes) sum_q += c;
  for (const auto& [p, c] : rep.bwbminus_sizes) sum_m += c;
  rep.partitions_ok = rep.group_order == formula && sum_q == rep.group_order &&
                      sum_m == rep.group_order &&
                      static_cast<int>(rep.bwb_sizes.size()) == W.size() &&
                      static_cast<int>(rep.bwbminus_sizes.size()) == W.size();

  for (const ParWork& pw : works) {
    ParabolicCheck pc;
    pc.S = pw.S;
    pc.T = pw.T;
    pc.pair_set_ok = pw.realized == pw.expected;
    pc.realized_pairs = static_cast<int>(pw.realized.size());
    pc.expected_pairs = static_cast<int>(pw.expected.size());
    rep.parabolic.push_back(pc);
  }
  return rep;
}

FqMatrix witness(int n, int q, const Perm& w, const Perm& wprime) {
  make_matrix(n, q);
  check_perm(w, n);
  check_perm(wprime, n);
  if (n == 1) return identity_matrix(1, q);

  const ACtx& ctx = a_ctx(n);
  WeylGroup::Id wid = ctx.id_of.at(w);
  WeylGroup::Id wpid = ctx.id_of.at(wprime);
  if (!ctx.order->leq(wpid, wid))
    throw NotComparableError("no witness: " + to_string(wprime) +
                             " is not below " + to_string(w));

  const Word& word = ctx.group->word(wid);
  Subexpression sub = find_distinguished(*ctx.order, word, wpid);
  const int r = static_cast<int>(word.size());

  FqMatrix g = identity_matrix(n, q);
  for (int k = 1; k <= r; ++k) {
    const int t = word[r - k];
    FqMatrix h = normalize_left(std::move(g), ctx.perm_of[sub.stages[k - 1]]);
    if (sub.stages[k] != sub.stages[k - 1]) {
      Perm tau(n);
      std::iota(tau.begin(), tau.end(), 0);
      std::swap(tau[t], tau[t + 1]);
      g = fq_mul(perm_matrix(tau, q), h);
    } else {
      FqMatrix low = identity_matrix(n, q);
      low.at(t + 1, t) = 1;
      g = fq_mul(low, h);
    }
  }
  assert(cell_BwB(g) == w);
  assert(cell_BwBminus(g) == wprime);
  return g;
}

}  // namespace bruhatkit
