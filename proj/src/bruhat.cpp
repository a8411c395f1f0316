// bruhat.cpp - order matrix construction and subexpression search.

#include "bruhatkit/bruhat.hpp"

#include <algorithm>
#include <cassert>

namespace bruhatkit {

namespace {

// Evaluates and length-checks a word; DomainError when not reduced.
WeylGroup::Id checked_evaluation(const WeylGroup& g, const Word& word) {
  WeylGroup::Id w = g.identity_id();
  for (int i : word) {
    if (i < 0 || i >= g.rs().rank) throw DomainError("word letter out of range");
    w = g.right(w, i);
  }
  if (g.len(w) != static_cast<int>(word.size()))
    throw DomainError("word is not reduced");
  return w;
}

}  // namespace

BruhatOrder::BruhatOrder(const WeylGroup& g) : g_(&g) {
  const int n = g.size();
  leq_.assign(n, std::vector<bool>(n, false));
  leq_[0][0] = true;
  for (WeylGroup::Id b = 1; b < n; ++b) {
    int s = 0;
    while (!g.left_descent(b, s)) ++s;
    const WeylGroup::Id sb = g.left(b, s);
    assert(sb < b);
    for (WeylGroup::Id a = 0; a < n; ++a) {
      const WeylGroup::Id sa = g.left(a, s);
      leq_[b][a] = leq_[sb][g.len(sa) < g.len(a) ? sa : a];
    }
  }
}

std::vector<std::pair<WeylGroup::Id, WeylGroup::Id>> BruhatOrder::cover_edges() const {
  std::vector<std::pair<WeylGroup::Id, WeylGroup::Id>> out;
  const int n = g_->size();
  for (WeylGroup::Id b = 0; b < n; ++b)
    for (WeylGroup::Id a = 0; a < n; ++a)
      if (leq_[b][a] && g_->len(a) + 1 == g_->len(b)) out.emplace_back(a, b);
  return out;
}

std::vector<WeylGroup::Id> subexpression_endpoints(const WeylGroup& g, const Word& word) {
  checked_evaluation(g, word);
  std::vector<char> cur(g.size(), 0);
  cur[g.identity_id()] = 1;
  for (int k = static_cast<int>(word.size()) - 1; k >= 0; --k) {
    std::vector<char> nxt = cur;
    for (WeylGroup::Id w = 0; w < g.size(); ++w)
      if (cur[w]) nxt[g.left(w, word[k])] = 1;
    cur.swap(nxt);
  }
  std::vector<WeylGroup::Id> out;
  for (WeylGroup::Id w = 0; w < g.size(); ++w)
    if (cur[w]) out.push_back(w);
  return out;
}

bool is_distinguished(const BruhatOrder& order, const Subexpression& sub) {
  const WeylGroup& g = order.group();
  checked_evaluation(g, sub.word);
  const int r = static_cast<int>(sub.word.size());
  if (static_cast<int>(sub.stages.size()) != r + 1 ||
      sub.stages[0] != g.identity_id())
    throw DomainError("subexpression stages inconsistent with word");
  bool ok = true;
  for (int k = 1; k <= r; ++k) {
    const WeylGroup::Id prev = sub.stages[k - 1];
    if (prev < 0 || prev >= g.size() || sub.stages[k] < 0 || sub.stages[k] >= g.size())
      throw DomainError("subexpression stage out of range");
    const WeylGroup::Id applied = g.left(prev, sub.word[r - k]);
    if (sub.stages[k] != prev && sub.stages[k] != applied)
      throw DomainError("subexpression stages inconsistent with word");
    if (!order.leq(sub.stages[k], applied)) ok = false;
  }
  return ok;
}

std::vector<WeylGroup::Id> distinguished_endpoints(const BruhatOrder& order, const Word& word) {
  const WeylGroup& g = order.group();
  checked_evaluation(g, word);
  const int r = static_cast<int>(word.size());
  std::vector<char> seen(static_cast<std::size_t>(r + 1) * g.size(), 0);
  std::vector<char> hit(g.size(), 0);

  // Iterative DFS; a (stage, element) pair contributes the same endpoints on
  // every visit, so each is expanded once.
  std::vector<std::pair<int, WeylGroup::Id>> stack{{0, g.identity_id()}};
  while (!stack.empty()) {
    auto [k, cur] = stack.back();
    stack.pop_back();
    char& mark = seen[static_cast<std::size_t>(k) * g.size() + cur];
    if (mark) continue;
    mark = 1;
    if (k == r) {
      hit[cur] = 1;
      continue;
    }
    const WeylGroup::Id applied = g.left(cur, word[r - 1 - k]);
    stack.emplace_back(k + 1, applied);                       // apply branch
    if (order.leq(cur, applied)) stack.emplace_back(k + 1, cur);  // stay branch
  }
  std::vector<WeylGroup::Id> out;
  for (WeylGroup::Id w = 0; w < g.size(); ++w)
    if (hit[w]) out.push_back(w);
  return out;
}

namespace {

bool dfs_distinguished(const BruhatOrder& order, const Word& word, WeylGroup::Id target,
                       int k, std::vector<WeylGroup::Id>& stages, std::vector<char>& dead) {
  const WeylGroup& g = order.group();
  const int r = static_cast<int>(word.size());
  const WeylGroup::Id cur = stages.back();
  if (k == r) return cur == target;
  char& mark = dead[static_cast<std::size_t>(k) * g.size() + cur];
  if (mark) return false;
  const WeylGroup::Id applied = g.left(cur, word[r - 1 - k]);
  stages.push_back(applied);
  if (dfs_distinguished(order, word, target, k + 1, stages, dead)) return true;
  stages.pop_back();
  if (order.leq(cur, applied)) {
    stages.push_back(cur);
    if (dfs_distinguished(order, word, target, k + 1, stages, dead)) return true;
    stages.pop_back();
  }
  mark = 1;
  return false;
}

}  // namespace

Subexpression find_distinguished(const BruhatOrder& order, const Word& word,
                                 WeylGroup::Id target) {
  const WeylGroup& g = order.group();
  const WeylGroup::Id full = checked_evaluation(g, word);
  if (target < 0 || target >= g.size())
    throw DomainError("find_distinguished: target id out of range");
  if (!order.leq(target, full))
    throw NotComparableError("find_distinguished: target is not below the word");
  Subexpression sub;
  sub.word = word;
  sub.stages.push_back(g.identity_id());
  std::vector<char> dead(static_cast<std::size_t>(word.size() + 1) * g.size(), 0);
  const bool found = dfs_distinguished(order, word, target, 0, sub.stages, dead);
  assert(found);  // every w' <= w admits a distinguished subexpression
  (void)found;
  return sub;
}

}  // namespace bruhatkit
