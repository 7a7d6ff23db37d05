#include "asreg/report.hpp"

#include "asreg/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

namespace asreg {

using json = nlohmann::ordered_json;

namespace {

const char* kVersion = "0.1.0";

StageError classify(const std::string& stage, const std::exception& e) {
  std::string kind = "internal";
  if (dynamic_cast<const ParseError*>(&e))
    kind = "parse";
  else if (dynamic_cast<const InvalidPresentation*>(&e))
    kind = "presentation";
  else if (dynamic_cast<const CapExceeded*>(&e))
    kind = "cap";
  else if (dynamic_cast<const FieldMismatch*>(&e))
    kind = "field";
  else if (dynamic_cast<const SocleError*>(&e))
    kind = "socle";
  else if (dynamic_cast<const DegeneratePairing*>(&e))
    kind = "pairing";
  else if (dynamic_cast<const NotGorenstein*>(&e))
    kind = "not_gorenstein";
  else if (dynamic_cast<const ShapeMismatch*>(&e))
    kind = "shape";
  std::string s = stage;
  if (auto* ae = dynamic_cast<const Error*>(&e))
    s = ae->stage();
  return {s, kind, e.what()};
}

bool is_input_kind(const std::string& kind) {
  return kind == "parse" || kind == "presentation" || kind == "cap" ||
         kind == "field";
}

class Timer {
public:
  Timer(std::vector<std::pair<std::string, double>>& out, std::string name)
      : out_(out), name_(std::move(name)),
        start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    std::chrono::duration<double, std::milli> d =
        std::chrono::steady_clock::now() - start_;
    out_.emplace_back(name_, d.count());
  }

private:
  std::vector<std::pair<std::string, double>>& out_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

std::string str(const Scalar& s) { return s.to_string(); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(str(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json blocks_json(const GradedLinearMap& f) {
  json out = json::array();
  for (const auto& [bd, m] : f.blocks)
    out.push_back({{"bidegree", {bd.first, bd.second}},
                   {"matrix", matrix_json(m)}});
  return out;
}

json aut_json(const AutomorphismSpec& s, const AlgebraPresentation& p) {
  json out = json::object();
  auto names = p.generator_names();
  for (std::size_t g = 0; g < s.images.size() && g < names.size(); ++g)
    out[names[g]] = s.images[g].to_string(names);
  return out;
}

json opt_int(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

} // namespace

bool VerificationReport::any_verdict_failed() const {
  if (!nakayama)
    return false;
  for (const auto& v : nakayama->verdicts)
    if (v.status == VerdictStatus::Fail)
      return true;
  return false;
}

int VerificationReport::exit_code() const {
  if (error)
    return is_input_kind(error->kind) ? 1 : 2;
  return any_verdict_failed() ? 2 : 0;
}

AlgebraPresentation change_field(const AlgebraPresentation& p, Field f) {
  if (p.field == f)
    return p;
  if (!p.field.is_rational())
    throw FieldMismatch("can only move a presentation from Q to F_p, not from " +
                        p.field.to_string());
  auto convert = [&](const NcPoly& poly) {
    NcPoly out(f);
    for (const auto& [w, c] : poly.terms())
      out += NcPoly::monomial(Scalar(f, c.value()), w);
    return out;
  };
  AlgebraPresentation out = p;
  out.field = f;
  out.relations.clear();
  for (const auto& r : p.relations)
    out.relations.push_back(convert(r));
  for (auto& a : out.declared_autos)
    for (auto& img : a.images)
      img = convert(img);
  out.validate();
  return out;
}

VerificationReport run_pipeline(const AlgebraPresentation& p,
                                const PipelineOptions& options) {
  VerificationReport r;
  r.presentation = p;
  r.options = options;
  const int ci = options.cap_internal, ch = options.cap_homological;
  std::string stage = "groebner";
  try {
    if (p.max_relation_degree() > ci)
      throw CapExceeded("groebner",
                        "internal cap " + std::to_string(ci) +
                            " is below the relation degree " +
                            std::to_string(p.max_relation_degree()));
    {
      Timer t(r.timing_ms, "groebner");
      r.algebra = std::make_shared<const QuotientAlgebra>(p, ci);
      r.groebner_rules = r.algebra->groebner().rules.size();
      for (int n = 0; n <= ci; ++n)
        r.hilbert.push_back(r.algebra->dim(n));
    }
    if (options.stop_after == Stage::Groebner)
      return r;

    stage = "resolution";
    {
      Timer t(r.timing_ms, "resolution");
      r.resolution = std::make_shared<const Resolution>(
          minimal_resolution(r.algebra, ci, ch));
      for (const auto& w : r.resolution->warnings())
        r.notes.push_back("resolution: " + w);
    }
    {
      Timer t(r.timing_ms, "signature");
      r.signature = gorenstein_signature(*r.resolution);
      if (!r.signature->note.empty())
        r.notes.push_back("signature: " + r.signature->note);
    }
    if (options.stop_after == Stage::Resolution)
      return r;

    stage = "ext";
    {
      Timer t(r.timing_ms, "ext");
      r.ext = ext_basis(*r.resolution);
      r.ext->set_signature(r.signature->d, r.signature->ell);
      if (r.resolution->terminated())
        compute_products(*r.ext, *r.resolution);
      else
        r.notes.push_back("ext: products not computed; the resolution did "
                          "not terminate under the homological cap");
    }
    if (options.stop_after == Stage::Ext)
      return r;

    stage = "frobenius";
    if (r.ext->has_products()) {
      Timer t(r.timing_ms, "frobenius");
      try {
        r.frobenius = frobenius_form(*r.ext);
        if (r.frobenius->nondegenerate) {
          r.mu_E = nakayama_of_E(*r.ext, *r.frobenius);
          r.graded_symmetric = is_graded_symmetric(*r.ext, *r.mu_E);
        } else {
          r.notes.push_back("frobenius: pairing is degenerate");
        }
      } catch (const SocleError& e) {
        r.notes.push_back(std::string("frobenius: ") + e.what());
      }
    } else {
      r.notes.push_back("frobenius: skipped without a product table");
    }
    if (options.stop_after == Stage::Frobenius)
      return r;

    stage = "nakayama";
    {
      Timer t(r.timing_ms, "nakayama");
      // without mu_E every verdict is skipped with the signature's reason
      GorensteinSignature sig = *r.signature;
      if (!r.mu_E)
        sig.regular = false;
      r.nakayama = nakayama_verdicts(*r.resolution, sig, *r.ext,
                                     r.mu_E ? *r.mu_E : GradedLinearMap{});
    }
  } catch (const std::exception& e) {
    r.error = classify(stage, e);
  }
  return r;
}

std::string report_json(const VerificationReport& r) {
  const AlgebraPresentation& p = r.presentation;
  auto names = p.generator_names();
  json j;
  j["tool"] = "asreg";
  j["version"] = kVersion;

  json gens = json::array();
  for (const auto& g : p.generators)
    gens.push_back({{"name", g.name}, {"degree", g.degree}});
  json rels = json::array();
  for (const auto& rel : p.relations)
    rels.push_back(rel.to_string(names));
  json autos = json::array();
  for (const auto& a : p.declared_autos)
    autos.push_back({{"name", a.name}, {"images", aut_json(a, p)}});
  j["input"] = {{"source", r.options.source},
                {"field", p.field.to_string()},
                {"generators", gens},
                {"relations", rels},
                {"automorphisms", autos},
                {"caps",
                 {{"internal", r.options.cap_internal},
                  {"homological", r.options.cap_homological}}}};

  if (r.algebra) {
    json rules = json::array();
    for (const auto& rule : r.algebra->groebner().rules)
      rules.push_back(rule.poly.to_string(names));
    j["groebner"] = {{"rules", r.groebner_rules},
                     {"basis", rules},
                     {"hilbert", r.hilbert}};
  } else {
    j["groebner"] = nullptr;
  }

  if (r.resolution) {
    const Resolution& P = *r.resolution;
    json betti = json::array();
    for (const auto& [key, count] : betti_table(P))
      betti.push_back(
          {{"i", key.first}, {"degree", key.second}, {"count", count}});
    json complete = json::array();
    for (bool b : P.complete())
      complete.push_back(b);
    j["resolution"] = {{"length", P.length()},
                       {"terminated", P.terminated()},
                       {"complete", complete},
                       {"betti", betti}};
  } else {
    j["resolution"] = nullptr;
  }

  if (r.signature) {
    const auto& s = *r.signature;
    json coh = json::array();
    for (const auto& [key, dim] : s.dual_cohomology)
      coh.push_back({{"i", key.first}, {"m", key.second}, {"dim", dim}});
    j["signature"] = {{"gorenstein_ok", to_string(s.gorenstein_ok)},
                      {"d", opt_int(s.d)},
                      {"ell", opt_int(s.ell)},
                      {"regular", s.regular},
                      {"window", {s.window_low, s.window_high}},
                      {"dual_cohomology", coh}};
  } else {
    j["signature"] = nullptr;
  }

  if (r.ext) {
    const ExtAlgebra& E = *r.ext;
    json bd = json::array();
    for (const auto& [i, jj] : E.bidegrees())
      bd.push_back({{"i", i}, {"j", jj}, {"dim", E.block(i, jj).size()}});
    json basis = json::array();
    for (std::size_t a = 0; a < E.dim(); ++a)
      basis.push_back({{"index", a},
                       {"i", E.basis()[a].i},
                       {"j", E.basis()[a].j},
                       {"generator", E.basis()[a].generator}});
    json products = nullptr;
    json assoc = nullptr;
    if (E.has_products()) {
      products = json::array();
      for (std::size_t a = 0; a < E.dim(); ++a)
        for (std::size_t b = 0; b < E.dim(); ++b) {
          json terms = json::array();
          const Vec& v = E.product(a, b);
          for (std::size_t t = 0; t < v.size(); ++t)
            if (!v[t].is_zero())
              terms.push_back({{"index", t}, {"coef", str(v[t])}});
          if (!terms.empty())
            products.push_back({{"a", a}, {"b", b}, {"terms", terms}});
        }
      assoc = check_associativity(E);
    }
    j["ext"] = {{"dimension", E.dim()}, {"finite", E.finite()},
                {"bidegrees", bd},      {"basis", basis},
                {"products", products}, {"associative", assoc}};
  } else {
    j["ext"] = nullptr;
  }

  if (r.frobenius) {
    const auto& F = *r.frobenius;
    json pairing = json::array();
    for (const auto& [bd, m] : F.blocks)
      pairing.push_back({{"bidegree", {bd.first, bd.second}},
                         {"matrix", matrix_json(m)}});
    j["frobenius"] = {
        {"socle_bidegree", {F.top.first, F.top.second}},
        {"nondegenerate", F.nondegenerate},
        {"pairing", pairing},
        {"nakayama", r.mu_E ? blocks_json(*r.mu_E) : json(nullptr)},
        {"graded_symmetric",
         r.graded_symmetric ? json(*r.graded_symmetric) : json(nullptr)}};
  } else {
    j["frobenius"] = nullptr;
  }

  if (r.nakayama) {
    const auto& n = *r.nakayama;
    j["nakayama"] = {
        {"mu_A_declared",
         n.mu_declared ? aut_json(*n.mu_declared, p) : json(nullptr)},
        {"mu_A_recovered",
         n.mu_recovered ? aut_json(*n.mu_recovered, p) : json(nullptr)},
        {"declared_matches_recovered",
         n.declared_matches_recovered ? json(*n.declared_matches_recovered)
                                      : json(nullptr)},
        {"f_mu_A", n.f_mu ? blocks_json(*n.f_mu) : json(nullptr)},
        {"hdet_mu_A", n.hdet_mu ? json(str(*n.hdet_mu)) : json(nullptr)}};
    json verdicts = json::object();
    for (const auto& v : n.verdicts)
      verdicts[v.name] = {{"status", to_string(v.status)},
                          {"detail", v.detail}};
    j["verdicts"] = verdicts;
  } else {
    j["nakayama"] = nullptr;
    j["verdicts"] = nullptr;
  }

  j["notes"] = r.notes;
  if (r.error)
    j["error"] = {{"stage", r.error->stage},
                  {"kind", r.error->kind},
                  {"message", r.error->message}};
  else
    j["error"] = nullptr;
  j["exit_code"] = r.exit_code();
  return j.dump(2) + "\n";
}

namespace {

void print_matrix(std::ostream& os, const Matrix& m, const std::string& indent) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? " " : "") << std::setw(6) << m(r, c).to_string();
    os << " ]\n";
  }
}

void print_blocks(std::ostream& os, const GradedLinearMap& f) {
  for (const auto& [bd, m] : f.blocks) {
    os << "    (" << bd.first << ", " << bd.second << ")\n";
    print_matrix(os, m, "      ");
  }
}

} // namespace

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  const AlgebraPresentation& p = r.presentation;
  auto names = p.generator_names();
  os << "input: " << r.options.source << "  (field " << p.field.to_string()
     << ", caps internal " << r.options.cap_internal << " homological "
     << r.options.cap_homological << ")\n";
  for (const auto& rel : p.relations)
    os << "  rel " << rel.to_string(names) << "\n";

  if (r.algebra) {
    os << "groebner: " << r.groebner_rules << " rules\n  hilbert:";
    for (auto d : r.hilbert)
      os << " " << d;
    os << "\n";
  }
  if (r.resolution) {
    const Resolution& P = *r.resolution;
    os << "resolution: length " << P.length()
       << (P.terminated() ? ", terminated" : ", not terminated") << "\n";
    for (int i = 0; i <= P.length(); ++i) {
      os << "  V^(-" << i << "):";
      std::map<int, int> by_deg;
      for (int d : P.v_degrees()[static_cast<std::size_t>(i)])
        ++by_deg[d];
      for (const auto& [d, c] : by_deg)
        os << " " << c << "@" << d;
      os << "\n";
    }
  }
  if (r.signature) {
    const auto& s = *r.signature;
    os << "signature: gorenstein_ok " << to_string(s.gorenstein_ok);
    if (s.d)
      os << ", d = " << *s.d << ", ell = " << *s.ell;
    os << (s.regular ? ", regular" : "") << "\n";
  }
  if (r.ext) {
    os << "ext: dim " << r.ext->dim() << ", bidegrees";
    for (const auto& [i, jj] : r.ext->bidegrees())
      os << " (" << i << "," << jj << "):" << r.ext->block(i, jj).size();
    os << "\n";
  }
  if (r.frobenius) {
    os << "frobenius: socle at (" << r.frobenius->top.first << ", "
       << r.frobenius->top.second << "), "
       << (r.frobenius->nondegenerate ? "nondegenerate" : "degenerate");
    if (r.graded_symmetric)
      os << (*r.graded_symmetric ? ", graded symmetric" : ", not graded symmetric");
    os << "\n";
    if (r.mu_E) {
      os << "  mu_E blocks:\n";
      print_blocks(os, *r.mu_E);
    }
  }
  if (r.nakayama) {
    const auto& n = *r.nakayama;
    auto show = [&](const char* label, const std::optional<AutomorphismSpec>& a) {
      if (!a)
        return;
      os << "  " << label << ":";
      for (std::size_t g = 0; g < a->images.size(); ++g)
        os << " " << names[g] << " -> " << a->images[g].to_string(names)
           << (g + 1 < a->images.size() ? "," : "");
      os << "\n";
    };
    os << "nakayama:\n";
    show("mu_A declared", n.mu_declared);
    show("mu_A recovered", n.mu_recovered);
    if (n.declared_matches_recovered)
      os << "  declared matches recovered: "
         << (*n.declared_matches_recovered ? "yes" : "no") << "\n";
    if (n.hdet_mu)
      os << "  hdet(mu_A) = " << n.hdet_mu->to_string() << "\n";
    os << "verdicts:\n";
    for (const auto& v : n.verdicts)
      os << "  " << std::left << std::setw(18) << v.name << std::setw(8)
         << to_string(v.status) << v.detail << "\n";
  }
  for (const auto& note : r.notes)
    os << "note: " << note << "\n";
  if (r.error)
    os << "error [" << r.error->stage << "/" << r.error->kind
       << "]: " << r.error->message << "\n";
  os << "timing:";
  for (const auto& [stage, ms] : r.timing_ms)
    os << " " << stage << " " << std::fixed << std::setprecision(1) << ms
       << "ms";
  os << "\n";
  return os.str();
}

HdetReport run_hdet(const AlgebraPresentation& p, const AutomorphismSpec& sigma,
                    const PipelineOptions& options) {
  HdetReport r;
  r.presentation = p;
  r.sigma = sigma;
  std::string stage = "groebner";
  try {
    auto A = std::make_shared<const QuotientAlgebra>(p, options.cap_internal);
    stage = "resolution";
    Resolution P =
        minimal_resolution(A, options.cap_internal, options.cap_homological);
    r.signature = gorenstein_signature(P);
    stage = "nakayama";
    LiftedAutomorphism lift = lift_automorphism(sigma, P);
    ExtAlgebra E = ext_basis(P);
    r.f_sigma = f_sigma(lift, E);
    r.ext = std::move(E);
    r.hdet = hdet(lift, P, *r.signature);
  } catch (const std::exception& e) {
    r.error = classify(stage, e);
  }
  return r;
}

std::string hdet_json(const HdetReport& r) {
  json j;
  j["tool"] = "asreg";
  j["version"] = kVersion;
  j["automorphism"] = {{"name", r.sigma.name},
                       {"images", aut_json(r.sigma, r.presentation)}};
  if (r.signature)
    j["signature"] = {{"gorenstein_ok", to_string(r.signature->gorenstein_ok)},
                      {"d", opt_int(r.signature->d)},
                      {"ell", opt_int(r.signature->ell)}};
  else
    j["signature"] = nullptr;
  j["f_sigma"] = r.f_sigma ? blocks_json(*r.f_sigma) : json(nullptr);
  j["hdet"] = r.hdet ? json(str(*r.hdet)) : json(nullptr);
  if (r.error)
    j["error"] = {{"stage", r.error->stage},
                  {"kind", r.error->kind},
                  {"message", r.error->message}};
  else
    j["error"] = nullptr;
  return j.dump(2) + "\n";
}

std::string hdet_text(const HdetReport& r) {
  std::ostringstream os;
  auto names = r.presentation.generator_names();
  os << "automorphism " << r.sigma.name << ":";
  for (std::size_t g = 0; g < r.sigma.images.size(); ++g)
    os << " " << names[g] << " -> " << r.sigma.images[g].to_string(names)
       << (g + 1 < r.sigma.images.size() ? "," : "");
  os << "\n";
  if (r.signature && r.signature->d)
    os << "signature: d = " << *r.signature->d << ", ell = "
       << *r.signature->ell << "\n";
  if (r.f_sigma) {
    os << "f_sigma blocks:\n";
    print_blocks(os, *r.f_sigma);
  }
  if (r.hdet)
    os << "hdet = " << r.hdet->to_string() << "\n";
  if (r.error)
    os << "error [" << r.error->stage << "/" << r.error->kind
       << "]: " << r.error->message << "\n";
  return os.str();
}

} // namespace asreg
