#pragma once

#include "asreg/freealg.hpp"
#include "asreg/linalg.hpp"
#include "asreg/presentation.hpp"

#include <mutex>
#include <unordered_map>
#include <vector>

namespace asreg {

/// A monic rewrite rule lead -> lead - poly.
struct RewriteRule {
  Word lead;
  NcPoly poly;
};

/// Two-sided deglex Groebner basis of the relation ideal, complete through
/// `complete_to_degree`: every overlap of internal degree at most that
/// bound reduces to zero.
struct GroebnerData {
  Field field;
  std::vector<int> degrees;
  std::vector<RewriteRule> rules;
  int complete_to_degree = 0;
  /// normal_words[n] = irreducible words of degree n, deglex ascending.
  std::vector<std::vector<Word>> normal_words;
};

/// Truncated Buchberger-Mora completion, processing overlaps degree by
/// degree up to `cap`.
GroebnerData compute_gb(const AlgebraPresentation& presentation, int cap);

/// Unique irreducible representative modulo the relation ideal.
NcPoly normal_form(const NcPoly& p, const GroebnerData& gb);

/// dim A_n for 0 <= n <= cap.
std::vector<std::size_t> hilbert_dims(const GroebnerData& gb, int cap);

/// Normal words of degree n, a basis of A_n.
const std::vector<Word>& basis_of_degree(const GroebnerData& gb, int n);

/// The quotient A = k<x>/(relations) truncated at the Groebner cap, with
/// memoized word normal forms and per-degree coordinates in the normal-word
/// basis. Safe to share between threads.
class QuotientAlgebra {
public:
  QuotientAlgebra(AlgebraPresentation presentation, int cap);

  const AlgebraPresentation& presentation() const { return presentation_; }
  const GroebnerData& groebner() const { return gb_; }
  Field field() const { return gb_.field; }
  int cap() const { return gb_.complete_to_degree; }
  std::span<const int> degrees() const { return gb_.degrees; }
  std::size_t num_generators() const { return gb_.degrees.size(); }

  /// Basis of A_n; empty for n < 0, CapExceeded for n > cap.
  const std::vector<Word>& basis(int n) const;
  std::size_t dim(int n) const { return basis(n).size(); }
  std::size_t index_of(const Word& normal_word) const;

  NcPoly reduce(const NcPoly& p) const;
  NcPoly multiply(const NcPoly& a, const NcPoly& b) const;
  NcPoly generator(Letter g) const;
  NcPoly one() const;

  /// Coordinates of a degree-n element (reduced first).
  Vec coordinates(const NcPoly& p, int n) const;
  NcPoly from_coordinates(const Vec& v, int n) const;

  /// Matrix of the graded endomorphism sigma on A_n: column c holds the
  /// coordinates of sigma(basis_n[c]).
  Matrix automorphism_matrix(const AutomorphismSpec& sigma, int n) const;

private:
  const NcPoly& word_nf(const Word& w) const; // caller holds mutex_

  AlgebraPresentation presentation_;
  GroebnerData gb_;
  std::vector<std::unordered_map<Word, std::size_t, WordHash>> index_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, NcPoly, WordHash> nf_cache_;
};

} // namespace asreg
