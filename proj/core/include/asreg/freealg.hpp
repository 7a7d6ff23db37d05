#pragma once

#include "asreg/scalar.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace asreg {

using Letter = std::uint32_t;

/// A monomial of the free algebra: generator indices plus the cached sum
/// of their internal degrees.
class Word {
public:
  Word() = default;
  Word(std::vector<Letter> letters, int internal_degree)
      : letters_(std::move(letters)), degree_(internal_degree) {}

  /// Builds a word and computes its degree from the generator degrees.
  static Word from_letters(std::vector<Letter> letters,
                           std::span<const int> generator_degrees);

  const std::vector<Letter>& letters() const { return letters_; }
  int degree() const { return degree_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word concat(const Word& rhs) const;
  /// letters [pos, pos + len); the degree is recomputed from `degrees`.
  Word subword(std::size_t pos, std::size_t len,
               std::span<const int> degrees) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }

private:
  std::vector<Letter> letters_;
  int degree_ = 0;
};

/// Degree-lexicographic order: internal degree, then length, then
/// lexicographic by generator index.
std::strong_ordering deglex_compare(const Word& u, const Word& v);

struct DeglexLess {
  bool operator()(const Word& u, const Word& v) const {
    return deglex_compare(u, v) < 0;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Element of k<x_1..x_g>. Zero coefficients are never stored.
class NcPoly {
public:
  using TermMap = std::map<Word, Scalar, DeglexLess>;

  NcPoly() = default;
  explicit NcPoly(Field f) : field_(f) {}

  static NcPoly constant(Field f, const Scalar& c);
  static NcPoly monomial(const Scalar& c, Word w);

  Field field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of `w`, zero when absent.
  Scalar coefficient(const Word& w) const;
  /// Largest word under deglex. Precondition: nonzero.
  const std::pair<const Word, Scalar>& leading_term() const {
    return *terms_.rbegin();
  }

  /// The common internal degree if every term has it; nullopt for the zero
  /// polynomial or mixed degrees.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;

  void add_term(const Word& w, const Scalar& c);

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& rhs);
  NcPoly& operator-=(const NcPoly& rhs);
  NcPoly& operator*=(const Scalar& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  /// u * p * v for words u, v.
  NcPoly sandwich(const Word& left, const Word& right) const;

  friend bool operator==(const NcPoly& a, const NcPoly& b);

  /// Terms in descending deglex order, e.g. "y*x - 2*x*y". Words are
  /// spelled with `names`; the empty word prints as its coefficient.
  std::string to_string(std::span<const std::string> names) const;

private:
  void check_same_field(const NcPoly& other) const;

  Field field_;
  TermMap terms_;
};

/// Coefficientwise sum, errors on field mismatch.
NcPoly poly_add(const NcPoly& p, const NcPoly& q);
/// Concatenation product, errors on field mismatch.
NcPoly poly_mul(const NcPoly& p, const NcPoly& q);

/// All words of internal degree `n` in the free algebra, deglex ascending.
std::vector<Word> free_words_of_degree(int n, std::span<const int> degrees);

} // namespace asreg
