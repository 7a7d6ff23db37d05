#include "asreg/freealg.hpp"

#include "asreg/errors.hpp"

#include <algorithm>

namespace asreg {

Word Word::from_letters(std::vector<Letter> letters,
                        std::span<const int> generator_degrees) {
  int deg = 0;
  for (Letter l : letters)
    deg += generator_degrees[l];
  return Word(std::move(letters), deg);
}

Word Word::concat(const Word& rhs) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + rhs.letters_.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out), degree_ + rhs.degree_);
}

Word Word::subword(std::size_t pos, std::size_t len,
                   std::span<const int> degrees) const {
  std::vector<Letter> out(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                          letters_.begin() +
                              static_cast<std::ptrdiff_t>(pos + len));
  return from_letters(std::move(out), degrees);
}

std::strong_ordering deglex_compare(const Word& u, const Word& v) {
  if (auto c = u.degree() <=> v.degree(); c != 0)
    return c;
  if (auto c = u.size() <=> v.size(); c != 0)
    return c;
  return u.letters() <=> v.letters();
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w.letters()) {
    h ^= l + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

NcPoly NcPoly::constant(Field f, const Scalar& c) {
  NcPoly p(f);
  p.add_term(Word(), c);
  return p;
}

NcPoly NcPoly::monomial(const Scalar& c, Word w) {
  NcPoly p(c.field());
  p.add_term(w, c);
  return p;
}

Scalar NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<int> NcPoly::homogeneous_degree() const {
  if (terms_.empty())
    return std::nullopt;
  int d = terms_.begin()->first.degree();
  if (terms_.rbegin()->first.degree() != d)
    return std::nullopt;
  return d;
}

bool NcPoly::is_homogeneous() const {
  return terms_.empty() || homogeneous_degree().has_value();
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (!(c.field() == field_))
    throw FieldMismatch("term coefficient field differs from polynomial");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly out(field_);
  for (const auto& [w, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), w, -c);
  return out;
}

void NcPoly::check_same_field(const NcPoly& other) const {
  if (!(field_ == other.field_))
    throw FieldMismatch("polynomial fields differ: " + field_.to_string() +
                        " vs " + other.field_.to_string());
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
  check_same_field(rhs);
  for (const auto& [w, c] : rhs.terms_)
    add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
  check_same_field(rhs);
  for (const auto& [w, c] : rhs.terms_)
    add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
  if (!(c.field() == field_))
    throw FieldMismatch("scalar field differs from polynomial");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_)
    coeff *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.check_same_field(b);
  NcPoly out(a.field_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_)
      out.add_term(u.concat(v), cu * cv);
  return out;
}

NcPoly NcPoly::sandwich(const Word& left, const Word& right) const {
  NcPoly out(field_);
  for (const auto& [w, c] : terms_)
    out.terms_.emplace(left.concat(w).concat(right), c);
  return out;
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  return a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string NcPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    bool negative = field_.is_rational() && sgn(c.value()) < 0;
    Scalar mag = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string word;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i)
        word += "*";
      word += names[w[i]];
    }
    if (w.empty())
      out += mag.to_string();
    else if (mag.is_one())
      out += word;
    else
      out += mag.to_string() + "*" + word;
  }
  return out;
}

NcPoly poly_add(const NcPoly& p, const NcPoly& q) { return p + q; }

NcPoly poly_mul(const NcPoly& p, const NcPoly& q) { return p * q; }

std::vector<Word> free_words_of_degree(int n, std::span<const int> degrees) {
  // by_degree[m] = all words of degree m
  std::vector<std::vector<Word>> by_degree(static_cast<std::size_t>(n) + 1);
  if (n < 0)
    return {};
  by_degree[0].push_back(Word());
  for (int m = 1; m <= n; ++m) {
    auto& bucket = by_degree[static_cast<std::size_t>(m)];
    for (Letter g = 0; g < degrees.size(); ++g) {
      int dg = degrees[g];
      if (dg > m)
        continue;
      for (const Word& prefix : by_degree[static_cast<std::size_t>(m - dg)]) {
        auto letters = prefix.letters();
        letters.push_back(g);
        bucket.emplace_back(std::move(letters), m);
      }
    }
  }
  auto out = std::move(by_degree[static_cast<std::size_t>(n)]);
  std::sort(out.begin(), out.end(), DeglexLess{});
  return out;
}

} // namespace asreg
