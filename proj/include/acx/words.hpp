// Associative word combinatorics: alphabets, words, the two word orderings,
// Lyndon-Shirshov word recognition, factorization and generation.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acx {

// Index into an Alphabet. Index 0 is the *greatest* letter: "a>b>c"
// declares a first, so a gets index 0 and a > b > c.
using Letter = std::uint32_t;

enum class Ordering : int { less = -1, equal = 0, greater = 1 };

inline Ordering reversed(Ordering o) {
  return static_cast<Ordering>(-static_cast<int>(o));
}

// Smaller index means greater letter.
inline Ordering compare_letters(Letter x, Letter y) {
  if (x == y) return Ordering::equal;
  return x < y ? Ordering::greater : Ordering::less;
}

/// A finite totally ordered symbol set, declared greatest first.
/// Immutable and cheaply copyable; equality compares the letter lists.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);

  /// Parses "a>b>c". A single letter needs no '>'. Bare multi-letter
  /// strings like "abc" are rejected so the order is always explicit.
  static Alphabet parse(std::string_view spec);

  std::size_t size() const { return data_->names.size(); }
  const std::string& name(Letter i) const { return data_->names.at(i); }
  std::optional<Letter> find(std::string_view name) const;
  /// True if any letter name has more than one character; such alphabets
  /// serialize words with '.' between letters.
  bool has_multichar_names() const { return data_->multichar; }
  std::string spec() const;  // "a>b>c" form

  friend bool operator==(const Alphabet& x, const Alphabet& y) {
    return x.data_ == y.data_ || x.data_->names == y.data_->names;
  }
  friend bool operator!=(const Alphabet& x, const Alphabet& y) { return !(x == y); }

 private:
  struct Data {
    std::vector<std::string> names;
    bool multichar = false;
  };
  std::shared_ptr<const Data> data_;
};

/// A non-empty associative word over an Alphabet. Degree = length.
class Word {
 public:
  Word(Alphabet alphabet, std::vector<Letter> letters);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t degree() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Letters concatenated; joined with '.' when the alphabet has
  /// multi-character letter names.
  std::string str() const;

  Word subword(std::size_t pos, std::size_t len) const;
  Word concat(const Word& other) const;
  Word power(int n) const;  // n >= 1

  friend bool operator==(const Word& u, const Word& v) {
    return u.alphabet_ == v.alphabet_ && u.letters_ == v.letters_;
  }
  friend bool operator!=(const Word& u, const Word& v) { return !(u == v); }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Lexicographic comparison with the prefix convention used throughout:
/// at the first differing position the greater letter wins, and a proper
/// prefix is strictly GREATER than any of its extensions (a > ab).
/// This prefix rule is the single most error-prone convention in the
/// codebase; see the tests that pin a > ab and [a] > [ab].
Ordering lex_compare(const Word& u, const Word& v);

/// Degree first (longer word is greater), then lex_compare on equal
/// lengths, where the prefix clause is unreachable.
Ordering deg_lex_compare(const Word& u, const Word& v);

/// True iff u is strictly greater than every proper rotation wv of
/// u = vw. Reference O(n^2) rotation test.
bool is_alsw(const Word& u);

/// The unique factorization u = u1 u2 ... un into ALSWs with
/// u1 <=lex u2 <=lex ... <=lex un. Greedy longest-ALSW-prefix.
std::vector<Word> lyndon_factorize(const Word& u);

/// All ALSWs of degree <= max_deg, in degree-graded order: ascending
/// degree, descending lex within a degree.
std::vector<Word> generate_alsws(const Alphabet& alphabet, int max_deg);

/// The shortest w and largest n with u = w^n; n = 1 iff u is primitive.
std::pair<Word, int> primitive_root(const Word& u);

void require_same_alphabet(const Alphabet& x, const Alphabet& y);

}  // namespace acx
