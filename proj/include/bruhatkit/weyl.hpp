// weyl.hpp - Weyl group elements, word evaluation, and the frozen
// enumeration table used by everything downstream.
#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "bruhatkit/root_system.hpp"

namespace bruhatkit {

// A word in the simple reflections, 0-based indices, evaluated left to right:
// (i1,...,ir) denotes the product s_{i1} * s_{i2} * ... * s_{ir}.
using Word = std::vector<int>;

// An element stored by the images of the simple roots: img[i] = w(alpha_i).
// Equality and hashing are O(rank); the originating RootSystem must outlive
// every element built from it.
struct WeylElem {
  const RootSystem* rs = nullptr;
  std::vector<Root> img;

  bool operator==(const WeylElem& o) const { return img == o.img; }
  bool operator!=(const WeylElem& o) const { return img != o.img; }
};

WeylElem identity_elem(const RootSystem& rs);
WeylElem simple_reflection(const RootSystem& rs, int i);  // DomainError if i out of range

// Group operations.  Operands must come from the same root system
// (same type and rank), otherwise DomainError.
WeylElem mul(const WeylElem& a, const WeylElem& b);
WeylElem inv(const WeylElem& a);
Root act(const WeylElem& a, const Root& r);  // DomainError if r is not a root

// Coxeter length: |{ a in R+_nd : w(a) < 0 }|.
int length(const WeylElem& w);

// Lexicographically least reduced word, obtained by repeatedly splitting off
// the smallest left descent.
Word canonical_reduced_word(const WeylElem& w);

WeylElem evaluate_word(const RootSystem& rs, const Word& word);

WeylElem longest_element(const RootSystem& rs);
// Longest element of the standard parabolic subgroup W(S).
WeylElem longest_in(const RootSystem& rs, SimpleSubset S);

// Frozen full enumeration of W: elements indexed by id in BFS order (length
// nondecreasing, deterministic), with multiplication tables by simple
// reflections on both sides.  Shared read-only after construction.
class WeylGroup {
 public:
  using Id = int;
  static constexpr std::size_t kDefaultCap = 2000;

  // BFS from the identity; throws CapacityError when |W| would exceed cap.
  static WeylGroup enumerate(const RootSystem& rs, std::size_t cap = kDefaultCap);

  int size() const { return static_cast<int>(elems_.size()); }
  const RootSystem& rs() const { return *rs_; }
  const WeylElem& elem(Id w) const { return elems_[w]; }
  Id id_of(const WeylElem& w) const;  // DomainError if not in the table

  Id right(Id w, int i) const { return right_[w][i]; }  // w * s_i
  Id left(Id w, int i) const { return left_[w][i]; }    // s_i * w
  int len(Id w) const { return len_[w]; }
  const Word& word(Id w) const { return word_[w]; }     // canonical reduced word
  Id inverse(Id w) const { return inv_[w]; }
  Id mul_ids(Id a, Id b) const;

  Id identity_id() const { return 0; }
  Id longest_id() const { return size() - 1; }

  bool left_descent(Id w, int i) const { return len_[left_[w][i]] < len_[w]; }
  bool right_descent(Id w, int i) const { return len_[right_[w][i]] < len_[w]; }

  // Ids of W(S) in ascending order.  DomainError if S is out of range.
  std::vector<Id> subgroup(SimpleSubset S) const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<WeylElem> elems_;
  std::map<std::vector<int>, Id> index_;  // flattened images -> id
  std::vector<std::vector<Id>> right_, left_;
  std::vector<int> len_;
  std::vector<Word> word_;
  std::vector<Id> inv_;

  static std::vector<int> flatten(const WeylElem& w);
};

}  // namespace bruhatkit
