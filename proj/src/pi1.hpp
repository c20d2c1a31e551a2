#pragma once

#include <string>
#include <vector>

namespace flopkit::pi1 {

// Letters of the free group on { a, b_0 .. b_{n-1}, c }: the loops around
// the two poles (a, c) and the n equator punctures of the sphere the
// one-parameter walk lives on.
struct Generator {
  enum Kind { A, B, C } kind = A;
  int index = 0;  // meaningful for B only
  auto operator<=>(const Generator&) const = default;
};

struct Letter {
  Generator gen;
  int exponent = 1;  // +1 or -1
  auto operator<=>(const Letter&) const = default;
};

struct GroupWord {
  std::vector<Letter> letters;
  bool operator==(const GroupWord&) const = default;
};

// Generators plus the single relation c b_0 ... b_{n-1} a = 1, so the group
// is free of rank n + 1 after eliminating c.
struct Presentation {
  int hole_count = 0;
  std::vector<std::string> generator_names;
  GroupWord relation;
};

Presentation presentation(int hole_count);

// Whitespace-separated tokens: a, c, b0 .. b<n-1>, each optionally suffixed
// by ^-1.  Anything else is a DomainError.
GroupWord parse_word(const std::string& text, int hole_count);
std::string word_text(const GroupWord& w);  // empty word -> ""

// Eliminates c via the relation and freely reduces; two words are equal in
// the group iff their normal forms coincide letter for letter.
GroupWord normal_form(const GroupWord& w, int hole_count);
bool words_equal(const GroupWord& lhs, const GroupWord& rhs, int hole_count);

std::string presentation_json(const Presentation& p);

// The image of a loop under the monodromy action on the derived category,
// written as a composition of the three primitive operations.
struct FunctorAtom {
  enum Kind { TensorO, Twist, Flop } kind = TensorO;
  long long amount = 0;  // TensorO: the twist; Twist: which simple
  int exponent = 1;      // Twist / Flop only
  bool operator==(const FunctorAtom&) const = default;
};

struct FunctorExpr {
  std::vector<FunctorAtom> atoms;  // leftmost acts last
  bool operator==(const FunctorExpr&) const = default;
};

FunctorExpr reduce(FunctorExpr e);
FunctorExpr compose(const FunctorExpr& f, const FunctorExpr& g);
FunctorExpr monodromy(const GroupWord& w, int ell);
std::string functor_text(const FunctorExpr& e);  // identity -> "id"

}  // namespace flopkit::pi1
