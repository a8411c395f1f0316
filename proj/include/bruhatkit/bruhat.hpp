// bruhat.hpp - Bruhat order on a frozen Weyl group table, subexpressions,
// and distinguished subexpressions.
#pragma once

#include <utility>
#include <vector>

#include "bruhatkit/weyl.hpp"

namespace bruhatkit {

// Full order relation, built once from the descent recursion
//   a <= b  iff  min(a, s a) <= s b   for any left descent s of b,
// evaluated bottom-up over the id-indexed table.
class BruhatOrder {
 public:
  explicit BruhatOrder(const WeylGroup& g);

  const WeylGroup& group() const { return *g_; }
  bool leq(WeylGroup::Id a, WeylGroup::Id b) const { return leq_[b][a]; }
  bool less(WeylGroup::Id a, WeylGroup::Id b) const { return a != b && leq_[b][a]; }

  // Hasse edges (a, b) with a covered by b; Bruhat order is graded by length.
  std::vector<std::pair<WeylGroup::Id, WeylGroup::Id>> cover_edges() const;

 private:
  const WeylGroup* g_;
  std::vector<std::vector<bool>> leq_;  // leq_[b][a] = (a <= b)
};

// A subexpression of a reduced word (i1,...,ir): stage k = 1..r consumes the
// letter word[r-k] by optional left multiplication, so
//   stages[0] = e,   stages[k] in { s_{word[r-k]} * stages[k-1], stages[k-1] },
// and consuming every letter yields evaluate_word(word).
struct Subexpression {
  Word word;
  std::vector<WeylGroup::Id> stages;  // size word.size() + 1
};

// Endpoints of all subexpressions of a reduced word; sorted ids.
// DomainError if the word is not reduced.
std::vector<WeylGroup::Id> subexpression_endpoints(const WeylGroup& g, const Word& word);

// Distinguished: stages[k] <= s_{word[r-k]} * stages[k-1] at every stage.
// DomainError if the stages are inconsistent with the word.
bool is_distinguished(const BruhatOrder& order, const Subexpression& sub);

// Endpoints of all distinguished subexpressions; sorted ids.
std::vector<WeylGroup::Id> distinguished_endpoints(const BruhatOrder& order, const Word& word);

// First distinguished subexpression ending at target, in depth-first order
// with the "apply" branch explored before "stay".  NotComparableError if
// target is not below the word's evaluation.
Subexpression find_distinguished(const BruhatOrder& order, const Word& word,
                                 WeylGroup::Id target);

}  // namespace bruhatkit
