#pragma once

// Exact arithmetic in the free associative algebra Q<x_1, ..., x_n>.
//
// Monomials are words over variable indices; polynomials are sparse maps from words to
// nonzero rationals. Words are ordered graded-lexicographically (shorter first, then by
// variable index left to right), and that order is used for printing and for pivots in
// row reduction.

#include <climits>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unitri/errors.hpp"
#include "unitri/rational.hpp"

namespace unitri {

/// Polynomial degree with a sentinel for the zero polynomial that compares below every
/// integer, so "deg f <= s" holds for f = 0 at every s.
class Degree {
 public:
  constexpr Degree(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_infinity() { return Degree(kNegInf); }

  constexpr bool is_finite() const { return value_ != kNegInf; }
  int value() const;

  friend constexpr auto operator<=>(Degree, Degree) = default;
  friend constexpr bool operator==(Degree, Degree) = default;

  std::string to_string() const;

 private:
  static constexpr int kNegInf = INT_MIN;
  int value_;
};

/// A monomial of the free algebra: a finite sequence of variable indices (1-based).
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::span<const int> letters);

  static Word letter(int var);
  static Word power(int var, int exponent);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }

  /// Occurrences of x_var.
  int count(int var) const;
  /// Largest/smallest index present; 0 for the empty word.
  int max_letter() const;
  int min_letter() const;

  Word operator*(const Word& rhs) const { return Word(letters_ + rhs.letters_); }
  Word& operator*=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }

  std::vector<int> letters() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  explicit Word(std::string packed) : letters_(std::move(packed)) {}
  std::string letters_;
};

/// Sparse noncommutative polynomial over Q. No stored coefficient is zero.
class NcPoly {
 public:
  using Terms = std::map<Word, Rational>;

  explicit NcPoly(int rank);

  static NcPoly constant(int rank, const Rational& c);
  static NcPoly var(int rank, int index);
  static NcPoly monomial(int rank, const Word& word, const Rational& coeff = 1);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True when deg <= 0, i.e. the polynomial lies in Q.
  bool is_constant() const;
  Rational coeff(const Word& word) const;
  Rational constant_term() const { return coeff(Word{}); }

  /// Largest word in graded-lex order. Precondition: nonzero.
  const Word& leading_word() const;

  /// Adds coeff * word in place, dropping the term if it cancels.
  void add_term(const Word& word, const Rational& coeff);

  /// Smallest and largest variable index used (0 if constant).
  int min_var() const;
  int max_var() const;
  /// True iff every variable that occurs has index in [lo, hi].
  bool uses_only(int lo, int hi) const;

  /// Same terms, viewed in an algebra of larger rank.
  NcPoly with_rank(int rank) const;

  NcPoly& operator+=(const NcPoly& rhs);
  NcPoly& operator-=(const NcPoly& rhs);
  NcPoly& operator*=(const Rational& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }
  friend NcPoly operator-(NcPoly a);

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  int rank_;
  Terms terms_;
};

/// Commutative polynomial over Q; exponent vectors have length = rank.
class CommPoly {
 public:
  using Exponents = std::vector<int>;
  struct GradedOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Rational, GradedOrder>;

  explicit CommPoly(int rank);
  static CommPoly constant(int rank, const Rational& c);
  static CommPoly monomial(int rank, Exponents exps, const Rational& coeff = 1);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& coeff);

  Degree degree() const;
  Degree degree_in_var(int index) const;

  CommPoly& operator+=(const CommPoly& rhs);
  CommPoly& operator*=(const Rational& c);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b);
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend bool operator==(const CommPoly&, const CommPoly&) = default;

 private:
  int rank_;
  Terms terms_;
};

// Ring structure. All binary operations throw RankMismatch on unequal ranks.
NcPoly poly_add(const NcPoly& a, const NcPoly& b);
NcPoly poly_mul(const NcPoly& a, const NcPoly& b);
NcPoly poly_pow(const NcPoly& a, int exponent);
NcPoly ring_commutator(const NcPoly& a, const NcPoly& b);

/// Ring homomorphism determined by x_i -> images[i-1]; constants are fixed.
/// images.size() must equal p.rank(); the result has the images' common rank.
NcPoly substitute(const NcPoly& p, std::span<const NcPoly> images);

Degree degree(const NcPoly& p);
Degree degree_in_var(const NcPoly& p, int index);

/// Image in Q[x_1, ..., x_n].
CommPoly abelianize(const NcPoly& p);

/// c_1 = [x_i, x_j], c_{k+1} = [c_k, x_j], inside an algebra of the given rank.
NcPoly c_generator(int k, int i, int j, int rank);

/// Grammar:
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   coeff  := uint | uint '/' uint
///   factor := var ('^' uint)?
///   var    := 'x' uint | 'x' | 'y' | 'z'
/// The bare letters x, y, z name x1, x2, x3. Whitespace is ignored.
NcPoly poly_parse(std::string_view text, int rank);

/// Largest variable index mentioned in text (at least 1). Throws ParseError on bad input.
int infer_rank(std::string_view text);

/// Terms in ascending graded-lex order, runs of a repeated letter written as powers.
std::string poly_format(const NcPoly& p);
std::string poly_format(const CommPoly& p);

/// Formats a single word, e.g. "x2*x3^2"; the empty word prints as "1".
std::string word_format(const Word& w);

}  // namespace unitri
