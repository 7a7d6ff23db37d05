#include "asreg/groebner.hpp"

#include "asreg/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace asreg {

namespace {

struct LettersHash {
  std::size_t operator()(const std::vector<Letter>& v) const noexcept {
    return WordHash{}(Word(v, 0));
  }
};

/// Lead-word lookup for finding the first rule occurrence in a word.
class LeadIndex {
public:
  void add(const Word& lead, std::size_t rule) {
    map_.emplace(lead.letters(), rule);
    lengths_.insert(lead.size());
  }

  struct Hit {
    std::size_t rule;
    std::size_t pos;
  };

  /// Leftmost, then shortest occurrence.
  std::optional<Hit> find(const Word& w) const {
    const auto& letters = w.letters();
    std::vector<Letter> probe;
    for (std::size_t pos = 0; pos < letters.size(); ++pos)
      for (std::size_t len : lengths_) {
        if (pos + len > letters.size())
          break;
        probe.assign(letters.begin() + static_cast<std::ptrdiff_t>(pos),
                     letters.begin() + static_cast<std::ptrdiff_t>(pos + len));
        if (auto it = map_.find(probe); it != map_.end())
          return Hit{it->second, pos};
      }
    return std::nullopt;
  }

  /// True when some lead is a suffix of w.
  bool has_suffix_lead(const Word& w) const {
    const auto& letters = w.letters();
    std::vector<Letter> probe;
    for (std::size_t len : lengths_) {
      if (len > letters.size())
        break;
      probe.assign(letters.end() - static_cast<std::ptrdiff_t>(len),
                   letters.end());
      if (map_.count(probe))
        return true;
    }
    return false;
  }

private:
  std::unordered_map<std::vector<Letter>, std::size_t, LettersHash> map_;
  std::set<std::size_t> lengths_;
};

NcPoly reduce_with(const NcPoly& p, const std::vector<RewriteRule>& rules,
                   const LeadIndex& index, std::span<const int> degrees) {
  NcPoly work = p;
  NcPoly out(p.field());
  while (!work.is_zero()) {
    auto [w, c] = work.leading_term();
    auto hit = index.find(w);
    if (!hit) {
      out.add_term(w, c);
      work.add_term(w, -c);
      continue;
    }
    const auto& rule = rules[hit->rule];
    Word left = w.subword(0, hit->pos, degrees);
    std::size_t after = hit->pos + rule.lead.size();
    Word right = w.subword(after, w.size() - after, degrees);
    work -= rule.poly.sandwich(left, right) * c;
  }
  return out;
}

NcPoly make_monic(NcPoly p) {
  Scalar inv = p.leading_term().second.inverse();
  return p * inv;
}

std::vector<std::vector<Word>> enumerate_normal_words(
    const LeadIndex& index, std::span<const int> degrees, int cap) {
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(cap) + 1);
  out[0].push_back(Word());
  for (int n = 1; n <= cap; ++n) {
    auto& bucket = out[static_cast<std::size_t>(n)];
    for (Letter g = 0; g < degrees.size(); ++g) {
      if (degrees[g] > n)
        continue;
      for (const Word& u : out[static_cast<std::size_t>(n - degrees[g])]) {
        auto letters = u.letters();
        letters.push_back(g);
        Word w(std::move(letters), n);
        if (!index.has_suffix_lead(w))
          bucket.push_back(std::move(w));
      }
    }
    std::sort(bucket.begin(), bucket.end(), DeglexLess{});
  }
  return out;
}

} // namespace

GroebnerData compute_gb(const AlgebraPresentation& presentation, int cap) {
  GroebnerData gb;
  gb.field = presentation.field;
  gb.degrees = presentation.generator_degrees();
  gb.complete_to_degree = cap;
  std::span<const int> degrees = gb.degrees;

  std::map<int, std::vector<NcPoly>> pending;
  for (const auto& r : presentation.relations)
    if (auto d = r.homogeneous_degree(); d && *d <= cap)
      pending[*d].push_back(r);

  LeadIndex index;
  auto add_overlaps = [&](std::size_t k) {
    const RewriteRule& r = gb.rules[k];
    for (std::size_t q = 0; q <= k; ++q) {
      const RewriteRule& s = gb.rules[q];
      // lead(f) = a b, lead(g) = b c, with b a proper nonempty overlap
      auto try_pair = [&](const RewriteRule& f, const RewriteRule& g) {
        std::size_t lf = f.lead.size(), lg = g.lead.size();
        for (std::size_t k2 = 1; k2 < std::min(lf, lg); ++k2) {
          if (!std::equal(f.lead.letters().end() -
                              static_cast<std::ptrdiff_t>(k2),
                          f.lead.letters().end(), g.lead.letters().begin()))
            continue;
          Word a = f.lead.subword(0, lf - k2, degrees);
          Word c = g.lead.subword(k2, lg - k2, degrees);
          int deg = f.lead.degree() + c.degree();
          if (deg > cap)
            continue;
          NcPoly spoly =
              f.poly.sandwich(Word(), c) - g.poly.sandwich(a, Word());
          pending[deg].push_back(std::move(spoly));
        }
      };
      try_pair(r, s);
      if (q != k)
        try_pair(s, r);
    }
  };

  for (int n = 1; n <= cap; ++n) {
    auto it = pending.find(n);
    if (it == pending.end())
      continue;
    auto candidates = std::move(it->second);
    pending.erase(it);
    for (const auto& cand : candidates) {
      NcPoly r = reduce_with(cand, gb.rules, index, degrees);
      if (r.is_zero())
        continue;
      r = make_monic(std::move(r));
      Word lead = r.leading_term().first;
      gb.rules.push_back({lead, std::move(r)});
      index.add(lead, gb.rules.size() - 1);
      add_overlaps(gb.rules.size() - 1);
    }
  }

  // interreduce tails; leads are already mutually irreducible
  for (std::size_t k = 0; k < gb.rules.size(); ++k) {
    auto& rule = gb.rules[k];
    NcPoly tail = rule.poly;
    tail.add_term(rule.lead, -Scalar::one(gb.field));
    NcPoly reduced = reduce_with(tail, gb.rules, index, degrees);
    reduced.add_term(rule.lead, Scalar::one(gb.field));
    rule.poly = std::move(reduced);
  }
  std::sort(gb.rules.begin(), gb.rules.end(),
            [](const RewriteRule& a, const RewriteRule& b) {
              return deglex_compare(a.lead, b.lead) < 0;
            });

  LeadIndex final_index;
  for (std::size_t k = 0; k < gb.rules.size(); ++k)
    final_index.add(gb.rules[k].lead, k);
  gb.normal_words = enumerate_normal_words(final_index, degrees, cap);
  return gb;
}

NcPoly normal_form(const NcPoly& p, const GroebnerData& gb) {
  for (const auto& [w, c] : p.terms())
    if (w.degree() > gb.complete_to_degree)
      throw CapExceeded("groebner",
                        "normal form requested in degree " +
                            std::to_string(w.degree()) +
                            " beyond completion degree " +
                            std::to_string(gb.complete_to_degree));
  LeadIndex index;
  for (std::size_t k = 0; k < gb.rules.size(); ++k)
    index.add(gb.rules[k].lead, k);
  return reduce_with(p, gb.rules, index, gb.degrees);
}

std::vector<std::size_t> hilbert_dims(const GroebnerData& gb, int cap) {
  if (cap > gb.complete_to_degree)
    throw CapExceeded("groebner", "hilbert_dims cap " + std::to_string(cap) +
                                      " exceeds completion degree " +
                                      std::to_string(gb.complete_to_degree));
  std::vector<std::size_t> out;
  for (int n = 0; n <= cap; ++n)
    out.push_back(gb.normal_words[static_cast<std::size_t>(n)].size());
  return out;
}

const std::vector<Word>& basis_of_degree(const GroebnerData& gb, int n) {
  static const std::vector<Word> empty;
  if (n < 0)
    return empty;
  if (n > gb.complete_to_degree)
    throw CapExceeded("groebner", "basis requested in degree " +
                                      std::to_string(n) +
                                      " beyond completion degree " +
                                      std::to_string(gb.complete_to_degree));
  return gb.normal_words[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------

QuotientAlgebra::QuotientAlgebra(AlgebraPresentation presentation, int cap)
    : presentation_(std::move(presentation)),
      gb_(compute_gb(presentation_, cap)) {
  index_.resize(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    const auto& words = gb_.normal_words[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < words.size(); ++i)
      index_[static_cast<std::size_t>(n)].emplace(words[i], i);
  }
}

const std::vector<Word>& QuotientAlgebra::basis(int n) const {
  return basis_of_degree(gb_, n);
}

std::size_t QuotientAlgebra::index_of(const Word& w) const {
  const auto& idx = index_.at(static_cast<std::size_t>(w.degree()));
  auto it = idx.find(w);
  if (it == idx.end())
    throw std::logic_error("index_of: word is not normal");
  return it->second;
}

const NcPoly& QuotientAlgebra::word_nf(const Word& w) const {
  if (auto it = nf_cache_.find(w); it != nf_cache_.end())
    return it->second;
  if (w.degree() > cap())
    throw CapExceeded("groebner", "normal form requested in degree " +
                                      std::to_string(w.degree()) +
                                      " beyond completion degree " +
                                      std::to_string(cap()));
  NcPoly result(field());
  if (w.degree() >= 0 &&
      index_[static_cast<std::size_t>(w.degree())].count(w)) {
    result.add_term(w, Scalar::one(field()));
  } else {
    // leftmost rule occurrence
    std::optional<std::pair<std::size_t, std::size_t>> hit;
    for (std::size_t pos = 0; pos < w.size() && !hit; ++pos)
      for (std::size_t k = 0; k < gb_.rules.size(); ++k) {
        const auto& lead = gb_.rules[k].lead.letters();
        if (pos + lead.size() <= w.size() &&
            std::equal(lead.begin(), lead.end(),
                       w.letters().begin() + static_cast<std::ptrdiff_t>(pos))) {
          hit = {k, pos};
          break;
        }
      }
    if (!hit)
      throw std::logic_error("word is neither normal nor reducible");
    const auto& rule = gb_.rules[hit->first];
    Word left = w.subword(0, hit->second, gb_.degrees);
    std::size_t after = hit->second + rule.lead.size();
    Word right = w.subword(after, w.size() - after, gb_.degrees);
    for (const auto& [t, c] : rule.poly.terms()) {
      if (t == rule.lead)
        continue;
      Word replaced = left.concat(t).concat(right);
      NcPoly part = word_nf(replaced); // copy: cache may rehash
      result -= part * c;
    }
  }
  return nf_cache_.emplace(w, std::move(result)).first->second;
}

NcPoly QuotientAlgebra::reduce(const NcPoly& p) const {
  std::lock_guard lock(mutex_);
  NcPoly out(field());
  for (const auto& [w, c] : p.terms()) {
    NcPoly part = word_nf(w);
    out += part * c;
  }
  return out;
}

NcPoly QuotientAlgebra::multiply(const NcPoly& a, const NcPoly& b) const {
  return reduce(a * b);
}

NcPoly QuotientAlgebra::generator(Letter g) const {
  return reduce(NcPoly::monomial(Scalar::one(field()),
                                 Word({g}, gb_.degrees.at(g))));
}

NcPoly QuotientAlgebra::one() const {
  return NcPoly::constant(field(), Scalar::one(field()));
}

Vec QuotientAlgebra::coordinates(const NcPoly& p, int n) const {
  const auto& words = basis(n);
  Vec v = zero_vec(field(), words.size());
  NcPoly r = reduce(p);
  for (const auto& [w, c] : r.terms()) {
    if (w.degree() != n)
      throw std::logic_error("coordinates: element not of degree " +
                             std::to_string(n));
    v[index_of(w)] = c;
  }
  return v;
}

NcPoly QuotientAlgebra::from_coordinates(const Vec& v, int n) const {
  const auto& words = basis(n);
  NcPoly out(field());
  for (std::size_t i = 0; i < words.size(); ++i)
    out.add_term(words[i], v[i]);
  return out;
}

Matrix QuotientAlgebra::automorphism_matrix(const AutomorphismSpec& sigma,
                                            int n) const {
  const auto& words = basis(n);
  std::vector<Vec> cols;
  for (const auto& w : words)
    cols.push_back(coordinates(
        apply_automorphism(sigma, NcPoly::monomial(Scalar::one(field()), w)),
        n));
  return Matrix::from_columns(field(), words.size(), cols);
}

bool check_is_automorphism(const AutomorphismSpec& sigma,
                           const AlgebraPresentation& presentation,
                           const QuotientAlgebra& algebra) {
  if (presentation.max_relation_degree() > algebra.cap())
    throw CapExceeded("presentation",
                      "automorphism check needs Groebner data through degree " +
                          std::to_string(presentation.max_relation_degree()));
  if (sigma.images.size() != presentation.generators.size())
    return false;
  for (std::size_t g = 0; g < sigma.images.size(); ++g) {
    auto d = sigma.images[g].homogeneous_degree();
    if (!d || *d != presentation.generators[g].degree)
      return false;
  }
  for (const auto& r : presentation.relations)
    if (!algebra.reduce(apply_automorphism(sigma, r)).is_zero())
      return false;
  std::set<int> gen_degrees;
  for (const auto& g : presentation.generators)
    gen_degrees.insert(g.degree);
  for (int n : gen_degrees) {
    if (n > algebra.cap())
      throw CapExceeded("presentation", "generator degree beyond cap");
    Matrix m = algebra.automorphism_matrix(sigma, n);
    if (m.rank() != m.rows())
      return false;
  }
  return true;
}

} // namespace asreg
