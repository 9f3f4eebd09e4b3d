#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcs/error.hpp"

namespace fcs {

using Exp = std::uint32_t;

// Element of the free commutative semigroup on k generators, stored as its
// exponent vector. The all-zero vector (the empty word) is not a Word; see
// AugmentedWord below for the monoid variant.
struct Word {
  std::vector<Exp> e;

  Word() = default;
  explicit Word(std::vector<Exp> exps);

  std::size_t k() const { return e.size(); }
  // Total degree: number of letters counted with multiplicity.
  std::uint64_t length() const;
  bool operator==(const Word& o) const { return e == o.e; }
  bool operator!=(const Word& o) const { return e != o.e; }
};

// Free commutative monoid element: like Word but the identity (all exponents
// zero) is allowed.
struct AugmentedWord {
  std::vector<Exp> e;

  AugmentedWord() = default;
  explicit AugmentedWord(std::vector<Exp> exps) : e(std::move(exps)) {}
  explicit AugmentedWord(const Word& w) : e(w.e) {}

  std::size_t k() const { return e.size(); }
  bool is_identity() const;
  // Throws DomainError on the identity.
  Word to_word() const;
  bool operator==(const AugmentedWord& o) const { return e == o.e; }
};

Word mul(const Word& v, const Word& w);
bool divides(const Word& v, const Word& w);
Word lcm(const Word& v, const Word& w);
// Requires divides(v, w); componentwise difference, may be the identity.
AugmentedWord quotient(const Word& w, const Word& v);
Word mul(const Word& v, const AugmentedWord& w);

// Military (graded lexicographic) order: shorter total length first; at equal
// length, the word whose first differing exponent is larger comes first, so
// a^3 < a^2 b < a b^2 < b^3.
// Returns <0, 0, >0 like strcmp.
int military_cmp(const Word& v, const Word& w);
bool military_less(const Word& v, const Word& w);

// Number of words of total length n over k generators: binom(n+k-1, n).
// Throws OverflowError if the count exceeds uint64.
std::uint64_t count_words_of_length(std::uint64_t n, std::uint32_t k);

// Axis-aligned box of exponent vectors: the product of per-coordinate closed
// ranges [lo..hi]. Finite by construction.
struct Box {
  std::vector<Exp> lo;
  std::vector<Exp> hi; // inclusive

  std::size_t k() const { return lo.size(); }
  bool contains(const std::vector<Exp>& v) const;
  std::uint64_t volume() const; // number of lattice points, overflow-checked
};

// Disjoint union of boxes describing a finite downward-closed-complement
// region of the word lattice; never contains the all-zero vector.
struct BoxCover {
  std::uint32_t k = 0;
  std::vector<Box> boxes;

  std::uint64_t cardinality() const;
  bool contains(const Word& w) const;
  // All member words, military-sorted.
  std::vector<Word> expand() const;
};

// Complement of the ideal generated by `generators` inside the free
// commutative semigroup on k generators. The complement is finite exactly
// when every coordinate has a pure power among the generators; an infinite
// complement is reported through the flag, not an exception.
struct IdealComplement {
  bool finite = false;
  BoxCover cover;                  // meaningful only when finite
  std::uint64_t cardinality = 0;   // meaningful only when finite
};

IdealComplement ideal_complement(const std::vector<Word>& generators, std::uint32_t k);

// Text form: generators named by `names`, exponent 1 omitted, factors joined
// by spaces, e.g. "a^2 b c^3". Parse accepts the same syntax.
std::string format_word(const Word& w, const std::vector<std::string>& names);
std::string format_word(const AugmentedWord& w, const std::vector<std::string>& names);
Word parse_word(const std::string& text, const std::vector<std::string>& names);

// Space-free identifier form, e.g. "a^2b". Used to label table elements so
// that names survive whitespace-delimited file formats.
std::string word_name(const Word& w, const std::vector<std::string>& names);

} // namespace fcs
