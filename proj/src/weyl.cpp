// weyl.cpp - Weyl group element operations and BFS enumeration.

#include "bruhatkit/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>

namespace bruhatkit {

namespace {

void check_same_system(const WeylElem& a, const WeylElem& b, const char* op) {
  if (a.rs == nullptr || b.rs == nullptr)
    throw DomainError(std::string(op) + ": uninitialized element");
  if (a.rs->type != b.rs->type || a.rs->rank != b.rs->rank)
    throw DomainError(std::string(op) + ": mixed root systems");
}

// w * s_i in place: (w s_i)(alpha_j) = w(alpha_j) - cartan[i][j] w(alpha_i).
void right_mul_simple(const RootSystem& rs, std::vector<Root>& img, int i) {
  const Root wi = img[i];
  for (int j = 0; j < rs.rank; ++j)
    for (int k = 0; k < rs.rank; ++k) img[j].c[k] -= rs.cartan[i][j] * wi.c[k];
}

}  // namespace

WeylElem identity_elem(const RootSystem& rs) { return WeylElem{&rs, rs.simple}; }

WeylElem simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank) throw DomainError("simple_reflection: index out of range");
  WeylElem w = identity_elem(rs);
  right_mul_simple(rs, w.img, i);
  return w;
}

WeylElem mul(const WeylElem& a, const WeylElem& b) {
  check_same_system(a, b, "mul");
  WeylElem out{a.rs, {}};
  out.img.reserve(a.rs->rank);
  for (const Root& bi : b.img) {
    Root r;
    r.c.assign(a.rs->rank, 0);
    for (int i = 0; i < a.rs->rank; ++i)
      for (int k = 0; k < a.rs->rank; ++k) r.c[k] += bi.c[i] * a.img[i].c[k];
    out.img.push_back(std::move(r));
  }
  return out;
}

WeylElem inv(const WeylElem& a) {
  if (a.rs == nullptr) throw DomainError("inv: uninitialized element");
  const RootSystem& rs = *a.rs;
  // Strip right descents of a; the recorded word evaluates to a^{-1}.
  WeylElem u = a;
  WeylElem out = identity_elem(rs);
  for (;;) {
    int i = -1;
    for (int k = 0; k < rs.rank; ++k)
      if (root_negative(u.img[k])) { i = k; break; }
    if (i < 0) break;
    right_mul_simple(rs, u.img, i);
    right_mul_simple(rs, out.img, i);
  }
  return out;
}

Root act(const WeylElem& a, const Root& r) {
  if (a.rs == nullptr) throw DomainError("act: uninitialized element");
  if (!a.rs->is_root(r)) throw DomainError("act: not a root: " + to_string(r));
  Root out;
  out.c.assign(a.rs->rank, 0);
  for (int i = 0; i < a.rs->rank; ++i)
    for (int k = 0; k < a.rs->rank; ++k) out.c[k] += r.c[i] * a.img[i].c[k];
  return out;
}

int length(const WeylElem& w) {
  if (w.rs == nullptr) throw DomainError("length: uninitialized element");
  int n = 0;
  for (const Root& a : w.rs->positive_nd) {
    Root im;
    im.c.assign(w.rs->rank, 0);
    for (int i = 0; i < w.rs->rank; ++i)
      for (int k = 0; k < w.rs->rank; ++k) im.c[k] += a.c[i] * w.img[i].c[k];
    if (root_negative(im)) ++n;
  }
  return n;
}

Word canonical_reduced_word(const WeylElem& w) {
  if (w.rs == nullptr) throw DomainError("canonical_reduced_word: uninitialized element");
  const RootSystem& rs = *w.rs;
  // i is a left descent of w iff w^{-1}(alpha_i) < 0; track the inverse and
  // peel the smallest such i from the left.
  WeylElem winv = inv(w);
  Word out;
  for (;;) {
    int i = -1;
    for (int k = 0; k < rs.rank; ++k)
      if (root_negative(winv.img[k])) { i = k; break; }
    if (i < 0) break;
    out.push_back(i);
    right_mul_simple(rs, winv.img, i);  // (s_i w)^{-1} = w^{-1} s_i
  }
  return out;
}

WeylElem evaluate_word(const RootSystem& rs, const Word& word) {
  WeylElem w = identity_elem(rs);
  for (int i : word) {
    if (i < 0 || i >= rs.rank) throw DomainError("evaluate_word: letter out of range");
    right_mul_simple(rs, w.img, i);
  }
  return w;
}

WeylElem longest_element(const RootSystem& rs) {
  return longest_in(rs, SimpleSubset::full(rs.rank));
}

WeylElem longest_in(const RootSystem& rs, SimpleSubset S) {
  if (!rs.subset_valid(S)) throw DomainError("longest_in: subset out of range");
  WeylElem w = identity_elem(rs);
  for (;;) {
    int i = -1;
    for (int k = 0; k < rs.rank; ++k)
      if (S.contains(k) && !root_negative(w.img[k])) { i = k; break; }
    if (i < 0) break;
    right_mul_simple(rs, w.img, i);  // w(alpha_i) > 0, so length grows
  }
  return w;
}

std::vector<int> WeylGroup::flatten(const WeylElem& w) {
  std::vector<int> key;
  for (const Root& r : w.img) key.insert(key.end(), r.c.begin(), r.c.end());
  return key;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t cap) {
  WeylGroup g;
  g.rs_ = &rs;
  g.elems_.push_back(identity_elem(rs));
  g.index_[flatten(g.elems_[0])] = 0;
  g.len_.push_back(0);
  g.right_.emplace_back(rs.rank, -1);

  std::deque<Id> queue{0};
  while (!queue.empty()) {
    const Id w = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      WeylElem child{&rs, g.elems_[w].img};
      right_mul_simple(rs, child.img, i);
      auto key = flatten(child);
      auto it = g.index_.find(key);
      if (it == g.index_.end()) {
        if (g.elems_.size() >= cap)
          throw CapacityError("weyl enumeration exceeds cap " + std::to_string(cap));
        const Id c = static_cast<Id>(g.elems_.size());
        assert(!root_negative(g.elems_[w].img[i]));  // new children go up in length
        g.elems_.push_back(std::move(child));
        g.index_.emplace(std::move(key), c);
        g.len_.push_back(g.len_[w] + 1);
        g.right_.emplace_back(rs.rank, -1);
        g.right_[w][i] = c;
        queue.push_back(c);
      } else {
        g.right_[w][i] = it->second;
      }
    }
  }

  const int n = g.size();
  g.inv_.resize(n);
  for (Id w = 0; w < n; ++w) g.inv_[w] = g.index_.at(flatten(inv(g.elems_[w])));

  g.left_.assign(n, std::vector<Id>(rs.rank, -1));
  for (Id w = 0; w < n; ++w)
    for (int i = 0; i < rs.rank; ++i)
      g.left_[w][i] = g.inv_[g.right_[g.inv_[w]][i]];  // s_i w = (w^{-1} s_i)^{-1}

  // Canonical words in id order; left_[w][i*] is shorter, hence already done.
  g.word_.resize(n);
  for (Id w = 1; w < n; ++w) {
    int i = 0;
    while (!(g.len_[g.left_[w][i]] < g.len_[w])) ++i;
    g.word_[w].push_back(i);
    const Word& rest = g.word_[g.left_[w][i]];
    g.word_[w].insert(g.word_[w].end(), rest.begin(), rest.end());
  }
  return g;
}

WeylGroup::Id WeylGroup::id_of(const WeylElem& w) const {
  if (w.rs == nullptr || w.rs->type != rs_->type || w.rs->rank != rs_->rank)
    throw DomainError("id_of: element from a different root system");
  auto it = index_.find(flatten(w));
  if (it == index_.end()) throw DomainError("id_of: element not in the table");
  return it->second;
}

WeylGroup::Id WeylGroup::mul_ids(Id a, Id b) const {
  Id out = a;
  for (int i : word_[b]) out = right_[out][i];
  return out;
}

std::vector<WeylGroup::Id> WeylGroup::subgroup(SimpleSubset S) const {
  if (!rs_->subset_valid(S)) throw DomainError("subgroup: subset out of range");
  std::vector<char> seen(size(), 0);
  seen[0] = 1;
  std::deque<Id> queue{0};
  std::vector<Id> out{0};
  while (!queue.empty()) {
    const Id w = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs_->rank; ++i) {
      if (!S.contains(i)) continue;
      const Id c = right_[w][i];
      if (!seen[c]) {
        seen[c] = 1;
        out.push_back(c);
        queue.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bruhatkit
