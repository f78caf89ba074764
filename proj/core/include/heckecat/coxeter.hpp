/*
  coxeter.hpp — finite Weyl group arithmetic.

  A CoxeterGroup is built once by breadth-first enumeration over the integer
  reflection representation on simple-root coordinates and is immutable
  afterwards.  Elements are handles (indices into the group's tables) ordered
  by length, then ShortLex on the canonical reduced word; the identity is
  index 0 and the longest element w0 is the last index.  Every element's
  canonical word is the ShortLex-least reduced word, fixed at enumeration
  time, so all rendered output is deterministic.

  Generator indices are 1-based (s_1 .. s_rank) throughout, matching the
  textual element syntax "121".
*/
#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heckecat/errors.hpp"

namespace heckecat {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

enum class Side { Left, Right };

// A finite crystallographic Cartan type, e.g. A3, B2, G2.  Type C_n is
// accepted as an alias of B_n: the two share a Weyl group, which is all this
// library models.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  // Parses "A2", "b3", "G2" (case-insensitive).  Throws UnsupportedType.
  static CartanType parse(std::string_view text);
  std::string str() const;

  // Order of the Weyl group, by the classical product formulas.
  std::uint64_t weyl_order() const;
  // Number of positive roots = length of the longest element.
  int positive_roots() const;
  // Cartan matrix a[i][j] = <alpha_j, alpha_i^vee>, 0-indexed.
  std::vector<std::vector<int>> cartan_matrix() const;

  bool operator==(const CartanType& o) const {
    return family == o.family && rank == o.rank;
  }
  bool operator!=(const CartanType& o) const { return !(*this == o); }
};

// A lightweight handle to a group element: an index into the owning group's
// element table.  Handles from different groups must not be mixed; the
// algebra layers above check this where it matters.
struct Element {
  std::uint32_t id = 0;

  friend bool operator==(Element a, Element b) { return a.id == b.id; }
  friend bool operator!=(Element a, Element b) { return a.id != b.id; }
  friend bool operator<(Element a, Element b) { return a.id < b.id; }
};

class CoxeterGroup {
 public:
  static constexpr std::uint64_t kDefaultElementCap = 50000;

  // Enumerates the full group.  Throws UnsupportedType for invalid (family,
  // rank) pairs and GroupTooLarge when the order exceeds element_cap.
  explicit CoxeterGroup(CartanType type,
                        std::uint64_t element_cap = kDefaultElementCap);

  CoxeterGroup(const CoxeterGroup&) = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(words_.size()); }

  Element identity() const { return Element{0}; }
  Element longest() const { return Element{size() - 1}; }
  // Bounds-checked handle construction.
  Element element(std::uint32_t id) const;

  unsigned length(Element a) const { return static_cast<unsigned>(words_[check(a)].size()); }
  // Canonical ShortLex-least reduced word, 1-based generator indices.
  const std::vector<std::uint8_t>& word(Element a) const { return words_[check(a)]; }

  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const { return Element{inverse_[check(a)]}; }
  // Products with a single generator: right(a,s) = a*s, left(s,a) = s*a.
  Element right(Element a, int s) const;
  Element left(int s, Element a) const;

  bool is_right_descent(Element a, int s) const {
    return length(right(a, s)) < length(a);
  }
  bool is_left_descent(int s, Element a) const {
    return length(left(s, a)) < length(a);
  }
  // Descent set as sorted 1-based generator indices.
  std::vector<int> descents(Element a, Side side) const;

  // Bruhat order via the standard recursive criterion; rows of the relation
  // are memoized lazily (thread-safe) and can be prefilled eagerly.
  bool bruhat_leq(Element a, Element b) const;
  void prefill_bruhat() const;

  // Folds the word from the identity: from_word({1,2,1}) = s1 s2 s1.  Indices
  // outside 1..rank throw BadGeneratorIndex.
  Element from_word(std::span<const int> word) const;
  const std::vector<std::uint8_t>& reduced_word(Element a) const { return word(a); }

  // Textual element form: "121", or "e" for the identity.
  std::string element_str(Element a) const;
  // Parses "e", "w0", or a generator-index word such as "121".  Throws
  // BadElement on anything else.
  Element parse_element(std::string_view text) const;

 private:
  std::uint32_t check(Element a) const;
  const std::vector<std::uint64_t>& bruhat_row_locked(std::uint32_t b) const;

  CartanType type_;
  std::vector<std::vector<std::uint8_t>> words_;
  std::vector<std::uint32_t> right_;    // size * rank: right_[id*rank + (s-1)]
  std::vector<std::uint32_t> left_;     // same layout for s*a
  std::vector<std::uint32_t> inverse_;  // a -> a^{-1}

  mutable std::mutex bruhat_mutex_;
  mutable std::vector<std::vector<std::uint64_t>> bruhat_rows_;  // lazy bitsets
};

}  // namespace heckecat
