#include "asreg/presentation.hpp"

#include "asreg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <set>
#include <sstream>

namespace asreg {

std::vector<int> AlgebraPresentation::generator_degrees() const {
  std::vector<int> out;
  out.reserve(generators.size());
  for (const auto& g : generators)
    out.push_back(g.degree);
  return out;
}

std::vector<std::string> AlgebraPresentation::generator_names() const {
  std::vector<std::string> out;
  out.reserve(generators.size());
  for (const auto& g : generators)
    out.push_back(g.name);
  return out;
}

const AutomorphismSpec*
AlgebraPresentation::find_automorphism(std::string_view name) const {
  for (const auto& a : declared_autos)
    if (a.name == name)
      return &a;
  return nullptr;
}

bool AlgebraPresentation::generated_in_degree_one() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Generator& g) { return g.degree == 1; });
}

int AlgebraPresentation::max_relation_degree() const {
  int out = 0;
  for (const auto& r : relations)
    if (auto d = r.homogeneous_degree())
      out = std::max(out, *d);
  return out;
}

namespace {

std::string relation_problem(const NcPoly& r) {
  if (r.is_zero())
    return "relation is zero";
  auto d = r.homogeneous_degree();
  if (!d)
    return "inhomogeneous relation";
  if (*d < 2)
    return "relation of degree " + std::to_string(*d) +
           " (relations must have degree >= 2)";
  return {};
}

std::string automorphism_problem(const AutomorphismSpec& a,
                                 const std::vector<Generator>& gens) {
  if (a.images.size() != gens.size())
    return "automorphism '" + a.name + "' has " +
           std::to_string(a.images.size()) + " images for " +
           std::to_string(gens.size()) + " generators";
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto d = a.images[g].homogeneous_degree();
    if (!d || *d != gens[g].degree)
      return "automorphism '" + a.name + "' image of " + gens[g].name +
             " is not homogeneous of degree " +
             std::to_string(gens[g].degree);
  }
  return {};
}

} // namespace

void AlgebraPresentation::validate() const {
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.degree < 1)
      throw InvalidPresentation("generator " + g.name +
                                " has degree < 1 (A must be connected)");
    if (!names.insert(g.name).second)
      throw InvalidPresentation("duplicate generator " + g.name);
  }
  for (const auto& r : relations) {
    if (!(r.field() == field))
      throw InvalidPresentation("relation over the wrong field");
    if (auto msg = relation_problem(r); !msg.empty())
      throw InvalidPresentation(msg);
  }
  for (const auto& a : declared_autos)
    if (auto msg = automorphism_problem(a, generators); !msg.empty())
      throw InvalidPresentation(msg);
  if (caps.internal < 1 || caps.homological < 1)
    throw InvalidPresentation("caps must be >= 1");
}

AutomorphismSpec AutomorphismSpec::xi(const Scalar& c,
                                      std::span<const int> degrees) {
  AutomorphismSpec out;
  out.name = "xi_" + c.to_string();
  for (Letter g = 0; g < degrees.size(); ++g)
    out.images.push_back(NcPoly::monomial(c.pow(degrees[g]),
                                          Word({g}, degrees[g])));
  return out;
}

AutomorphismSpec AutomorphismSpec::identity(Field f,
                                            std::span<const int> degrees) {
  auto out = xi(Scalar::one(f), degrees);
  out.name = "id";
  return out;
}

AutomorphismSpec AutomorphismSpec::diagonal(std::span<const Scalar> factors,
                                            std::span<const int> degrees) {
  AutomorphismSpec out;
  out.name = "diag(";
  for (Letter g = 0; g < degrees.size(); ++g) {
    out.images.push_back(NcPoly::monomial(factors[g], Word({g}, degrees[g])));
    out.name += (g ? "," : "") + factors[g].to_string();
  }
  out.name += ")";
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial expression parser

namespace {

class ExprParser {
public:
  ExprParser(std::string_view text, int line, int col0, Field field,
             const std::vector<Generator>& gens)
      : text_(text), line_(line), col0_(col0), field_(field), gens_(gens) {
    for (const auto& g : gens)
      degrees_.push_back(g.degree);
  }

  NcPoly parse() {
    NcPoly p = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col0_ + static_cast<int>(pos_), msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NcPoly expr() {
    skip_ws();
    NcPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  NcPoly term() {
    NcPoly acc = factor();
    while (accept('*'))
      acc = acc * factor();
    return acc;
  }

  NcPoly factor() {
    if (accept('-'))
      return -factor();
    if (accept('+'))
      return factor();
    NcPoly base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_)
        fail("expected exponent after '^'");
      int e = 0;
      std::from_chars(text_.data() + start, text_.data() + pos_, e);
      NcPoly out = NcPoly::constant(field_, Scalar::one(field_));
      for (int i = 0; i < e; ++i)
        out = out * base;
      return out;
    }
    return base;
  }

  NcPoly primary() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NcPoly inner = expr();
      if (!accept(')'))
        fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
        if (dstart == pos_)
          fail("expected denominator");
      }
      Scalar value = Scalar::zero(field_);
      try {
        value = Scalar::parse(field_, text_.substr(start, pos_ - start));
      } catch (const InvalidPresentation& e) {
        pos_ = start;
        fail(e.what());
      }
      return NcPoly::constant(field_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (Letter g = 0; g < gens_.size(); ++g)
        if (gens_[g].name == name)
          return NcPoly::monomial(Scalar::one(field_),
                                  Word({g}, gens_[g].degree));
      pos_ = start;
      fail("unknown generator '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int line_;
  int col0_;
  Field field_;
  const std::vector<Generator>& gens_;
  std::vector<int> degrees_;
  std::size_t pos_ = 0;
};

struct Segment {
  std::string_view text;
  int column; // 1-based column of text[0]
};

std::string_view trim(std::string_view s, int& column) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++column;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view s, int line, int column, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, column,
                     std::string("expected integer ") + what + ", got '" +
                         std::string(s) + "'");
  return v;
}

class PresentationParser {
public:
  AlgebraPresentation run(std::string_view text) {
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos)
        end = text.size();
      ++line_no;
      parse_line(text.substr(start, end - start), line_no);
      start = end + 1;
    }
    finish_aut();
    return std::move(out_);
  }

private:
  void parse_line(std::string_view line, int line_no) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<Segment> segments;
    std::size_t s = 0;
    while (s <= line.size()) {
      std::size_t e = line.find(';', s);
      if (e == std::string_view::npos)
        e = line.size();
      segments.push_back({line.substr(s, e - s), static_cast<int>(s) + 1});
      s = e + 1;
    }
    for (auto seg : segments) {
      int col = seg.column;
      auto body = trim(seg.text, col);
      if (body.empty())
        continue;
      if (aut_open_ && body.find("->") != std::string_view::npos) {
        parse_mapping(body, line_no, col);
        continue;
      }
      finish_aut();
      parse_statement(body, line_no, col);
    }
    finish_aut();
  }

  void parse_statement(std::string_view body, int line_no, int col) {
    auto words = split_ws(body);
    std::string_view kw = words.front();
    auto word_col = [&](std::size_t i) {
      return col + static_cast<int>(words[i].data() - body.data());
    };
    if (kw == "field") {
      if (seen_content_)
        throw ParseError(line_no, col,
                         "field must be declared before gen/rel/aut");
      if (words.size() == 2 && words[1] == "Q") {
        out_.field = Field::rationals();
      } else if (words.size() == 3 && words[1] == "F") {
        int p = parse_int(words[2], line_no, word_col(2), "characteristic");
        try {
          out_.field = Field::prime(static_cast<std::uint32_t>(p));
        } catch (const InvalidPresentation& e) {
          throw ParseError(line_no, word_col(2), e.what());
        }
      } else {
        throw ParseError(line_no, col, "expected 'field Q' or 'field F <p>'");
      }
    } else if (kw == "gen") {
      seen_content_ = true;
      if (words.size() != 3)
        throw ParseError(line_no, col, "expected 'gen <name> <degree>'");
      std::string name(words[1]);
      if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
        throw ParseError(line_no, word_col(1), "bad generator name");
      for (const auto& g : out_.generators)
        if (g.name == name)
          throw ParseError(line_no, word_col(1),
                           "duplicate generator '" + name + "'");
      int degree = parse_int(words[2], line_no, word_col(2), "degree");
      if (degree < 1)
        throw ParseError(line_no, word_col(2),
                         "generator degree must be >= 1 (A must be "
                         "connected)");
      if (!out_.relations.empty() || !out_.declared_autos.empty())
        throw ParseError(line_no, col, "gen must precede rel and aut");
      out_.generators.push_back({name, degree});
    } else if (kw == "rel") {
      seen_content_ = true;
      std::string_view expr = body.substr(3);
      int ecol = col + 3;
      NcPoly r = ExprParser(expr, line_no, ecol, out_.field, out_.generators)
                     .parse();
      if (auto msg = relation_problem(r); !msg.empty())
        throw ParseError(line_no, col, msg);
      out_.relations.push_back(std::move(r));
    } else if (kw == "aut") {
      seen_content_ = true;
      auto colon = body.find(':');
      if (colon == std::string_view::npos)
        throw ParseError(line_no, col, "expected 'aut <name> : ...'");
      auto head = split_ws(body.substr(3, colon - 3));
      if (head.size() != 1)
        throw ParseError(line_no, col, "expected one automorphism name");
      std::string name(head[0]);
      if (out_.find_automorphism(name))
        throw ParseError(line_no, col, "duplicate automorphism '" + name + "'");
      aut_open_ = true;
      aut_line_ = line_no;
      aut_col_ = col;
      current_ = AutomorphismSpec{name, {}};
      current_images_.assign(out_.generators.size(), std::nullopt);
      int rest_col = col + static_cast<int>(colon) + 1;
      auto rest = trim(body.substr(colon + 1), rest_col);
      if (!rest.empty())
        parse_mapping(rest, line_no, rest_col);
    } else if (kw == "cap") {
      if (words.size() != 3)
        throw ParseError(line_no, col,
                         "expected 'cap internal|homological <n>'");
      int n = parse_int(words[2], line_no, word_col(2), "cap");
      if (n < 1)
        throw ParseError(line_no, word_col(2), "cap must be >= 1");
      if (words[1] == "internal")
        out_.caps.internal = n;
      else if (words[1] == "homological")
        out_.caps.homological = n;
      else
        throw ParseError(line_no, word_col(1),
                         "expected 'internal' or 'homological'");
    } else {
      throw ParseError(line_no, col,
                       "unknown statement '" + std::string(kw) + "'");
    }
  }

  void parse_mapping(std::string_view body, int line_no, int col) {
    auto arrow = body.find("->");
    int name_col = col;
    auto name = trim(body.substr(0, arrow), name_col);
    std::size_t g = 0;
    while (g < out_.generators.size() && out_.generators[g].name != name)
      ++g;
    if (g == out_.generators.size())
      throw ParseError(line_no, name_col,
                       "unknown generator '" + std::string(name) + "'");
    if (current_images_[g])
      throw ParseError(line_no, name_col,
                       "generator '" + std::string(name) + "' mapped twice");
    int ecol = col + static_cast<int>(arrow) + 2;
    NcPoly image = ExprParser(body.substr(arrow + 2), line_no, ecol,
                              out_.field, out_.generators)
                       .parse();
    auto d = image.homogeneous_degree();
    if (!d || *d != out_.generators[g].degree)
      throw ParseError(line_no, ecol,
                       "image of '" + std::string(name) +
                           "' must be homogeneous of degree " +
                           std::to_string(out_.generators[g].degree));
    current_images_[g] = std::move(image);
  }

  void finish_aut() {
    if (!aut_open_)
      return;
    aut_open_ = false;
    for (Letter g = 0; g < out_.generators.size(); ++g) {
      if (current_images_[g])
        current_.images.push_back(std::move(*current_images_[g]));
      else
        current_.images.push_back(
            NcPoly::monomial(Scalar::one(out_.field),
                             Word({g}, out_.generators[g].degree)));
    }
    (void)aut_line_;
    (void)aut_col_;
    out_.declared_autos.push_back(std::move(current_));
  }

  AlgebraPresentation out_;
  bool seen_content_ = false;
  bool aut_open_ = false;
  int aut_line_ = 0;
  int aut_col_ = 0;
  AutomorphismSpec current_;
  std::vector<std::optional<NcPoly>> current_images_;
};

} // namespace

AlgebraPresentation parse_presentation(std::string_view text) {
  auto p = PresentationParser().run(text);
  p.validate();
  return p;
}

AlgebraPresentation parse_presentation(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_presentation(std::string_view(text));
}

NcPoly parse_polynomial(std::string_view text, Field field,
                        const std::vector<Generator>& generators) {
  return ExprParser(text, 1, 1, field, generators).parse();
}

std::string print_presentation(const AlgebraPresentation& p) {
  std::ostringstream os;
  auto names = p.generator_names();
  os << "field " << p.field.to_string() << "\n";
  for (const auto& g : p.generators)
    os << "gen " << g.name << " " << g.degree << "\n";
  for (const auto& r : p.relations)
    os << "rel " << r.to_string(names) << "\n";
  for (const auto& a : p.declared_autos) {
    os << "aut " << a.name << " :";
    for (std::size_t g = 0; g < a.images.size(); ++g)
      os << (g ? " ; " : " ") << names[g] << " -> "
         << a.images[g].to_string(names);
    os << "\n";
  }
  os << "cap internal " << p.caps.internal << "\n";
  os << "cap homological " << p.caps.homological << "\n";
  return os.str();
}

NcPoly apply_automorphism(const AutomorphismSpec& sigma, const NcPoly& p) {
  NcPoly out(p.field());
  for (const auto& [w, c] : p.terms()) {
    NcPoly term = NcPoly::constant(p.field(), c);
    for (Letter l : w.letters())
      term = term * sigma.images.at(l);
    out += term;
  }
  return out;
}

AutomorphismSpec compose_automorphisms(const AutomorphismSpec& sigma,
                                       const AutomorphismSpec& tau) {
  AutomorphismSpec out;
  out.name = tau.name + "*" + sigma.name;
  for (const auto& img : sigma.images)
    out.images.push_back(apply_automorphism(tau, img));
  return out;
}

} // namespace asreg
