#pragma once

// The modular group PSL2(Z) as the free product <S> * <U> with
// S = [[0,-1],[1,0]] (order 2) and U = [[0,-1],[1,1]] (order 3).
// Elements are stored as sign-normalized integer matrices (c > 0, or
// c = 0 and d > 0) and can be translated to and from reduced words
// over {S, U, U2}.

#include "hurwitz/rational.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

enum class Letter { S, U, U2 };

Letter letter_inverse(Letter l);
// both letters in <S>, or both in <U> = {U, U2}
bool same_factor(Letter a, Letter b);
std::string to_string(Letter l);

struct Word {
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  // no two consecutive letters from the same free factor
  bool reduced() const;
  bool operator==(const Word&) const = default;
};

// letters joined by a middle dot, e.g. "U·S·U2"; empty word -> ""
std::string to_string(const Word& w);

class GroupElement {
 public:
  GroupElement();  // identity
  GroupElement(Int a, Int b, Int c, Int d);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  bool is_identity() const;
  // the stabilizer of infinity: c == 0, i.e. a power of T = SU
  bool in_gamma_infinity() const { return c_ == 0; }
  // n with *this == T^n; requires c == 0
  Int translation_offset() const;

  GroupElement inverse() const;

  bool operator==(const GroupElement&) const = default;

  static GroupElement identity();
  static GroupElement S();
  static GroupElement U();
  static GroupElement U2();
  static GroupElement T();
  static GroupElement translation(const Int& n);  // T^n = [[1,n],[0,1]]

 private:
  void normalize();
  Int a_, b_, c_, d_;
};

GroupElement operator*(const GroupElement& g, const GroupElement& h);
GroupElement compose(const GroupElement& g, const GroupElement& h);
// entry-wise lexicographic order, for deterministic containers
bool operator<(const GroupElement& lhs, const GroupElement& rhs);
// "[[a,b],[c,d]]"
std::string to_string(const GroupElement& g);
std::ostream& operator<<(std::ostream& os, const GroupElement& g);

GroupElement letter_element(Letter l);

// product of the letter matrices; throws std::invalid_argument unless
// the word is reduced
GroupElement matrix_from_word(const Word& w);

// the unique reduced word of g, recovered by greedy right-stripping:
// among the three candidates g*S, g*U, g*U2 pick the one of minimal
// Frobenius norm (it undoes the final letter), until a generator or the
// identity remains
Word word_from_matrix(const GroupElement& g);

// partition of Gamma by word shape:
//   GammaInfty    powers of T
//   TPlus         starting with U, ending in U or U2
//   TMinus        starting with U, ending in S
//   TPrime        starting with U2 (and not a power of T)
//   TDoublePrime  starting with S (and not a power of T)
enum class GammaClass { GammaInfty, TPlus, TMinus, TPrime, TDoublePrime };
std::string to_string(GammaClass c);
GammaClass classify(const GroupElement& g);

// the two successors (g*S*U, g*S*U2) = ([[a,a+b],[c,c+d]], [[a+b,b],[c+d,d]])
// in the recursive enumeration of TPlus; throws std::domain_error unless
// g is in TPlus
std::pair<GroupElement, GroupElement> tree_children(const GroupElement& g);

// visits all reduced words of length <= max_len exactly once, in
// breadth-first order with letters ordered S < U < U2
void enumerate_words(
    int max_len,
    const std::function<void(const Word&, const GroupElement&)>& visit);

std::vector<GroupElement> enumerate_elements(
    int max_len, std::optional<GammaClass> cls = std::nullopt);

// orders elements by (word length, letters); used for stable output
bool word_order_less(const GroupElement& lhs, const GroupElement& rhs);

}  // namespace hurwitz
