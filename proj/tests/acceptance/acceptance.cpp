// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "asreg/errors.hpp"
#include "asreg/report.hpp"
#include "asreg/twist.hpp"
#include "support.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace asreg;
using namespace asreg::test;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok)
      failures.push_back(what);
  }
};

AlgebraPresentation load(const std::string& name) {
  std::ifstream in(std::string(ASREG_CORPUS_DIR) + "/" + name);
  if (!in)
    throw std::runtime_error("missing corpus file " + name);
  return parse_presentation(in);
}

struct Run {
  std::shared_ptr<const QuotientAlgebra> A;
  std::shared_ptr<const Resolution> P;
  GorensteinSignature sig;
  ExtAlgebra E;
  std::optional<FrobeniusData> F;
  std::optional<GradedLinearMap> mu;
  std::optional<NakayamaResult> nak;
  double seconds = 0;
};

Run run(const AlgebraPresentation& p, int ci = 10, int ch = 5) {
  auto t0 = std::chrono::steady_clock::now();
  Run r;
  r.A = std::make_shared<const QuotientAlgebra>(p, ci);
  r.P = std::make_shared<const Resolution>(minimal_resolution(r.A, ci, ch));
  r.sig = gorenstein_signature(*r.P);
  r.E = ext_basis(*r.P);
  r.E.set_signature(r.sig.d, r.sig.ell);
  if (r.P->terminated())
    compute_products(r.E, *r.P);
  if (r.sig.regular) {
    r.F = frobenius_form(r.E);
    r.mu = nakayama_of_E(r.E, *r.F);
    r.nak = nakayama_verdicts(*r.P, r.sig, r.E, *r.mu);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  return r;
}

VerdictStatus verdict(const Run& r, const std::string& name) {
  if (!r.nak)
    return VerdictStatus::Skipped;
  for (const auto& v : r.nak->verdicts)
    if (v.name == name)
      return v.status;
  return VerdictStatus::Skipped;
}

long binom(int n, int k) {
  long out = 1;
  for (int i = 1; i <= k; ++i)
    out = out * (n - k + i) / i;
  return out;
}

bool same_aut(const QuotientAlgebra& A, const AutomorphismSpec& a,
              const AutomorphismSpec& b) {
  for (std::size_t g = 0; g < a.images.size(); ++g)
    if (A.reduce(a.images[g]) != A.reduce(b.images[g]))
      return false;
  return true;
}

const std::vector<std::string> kGorensteinCorpus{
    "poly1.alg",  "poly2.alg",     "poly3.alg",   "qplane2.alg",
    "qplane_m1.alg", "qplane3.alg", "qspace3.alg", "jordan.alg",
    "heisenberg.alg", "weighted.alg", "qplane2_f7.alg"};

// ---------------------------------------------------------------------------

void commutative(Criterion& c) {
  const char* files[] = {"poly1.alg", "poly2.alg", "poly3.alg"};
  for (int n = 1; n <= 3; ++n) {
    std::string tag = files[n - 1];
    auto p = load(tag);
    Run r = run(p);
    c.expect(r.seconds < 10.0, tag + ": runtime " + std::to_string(r.seconds));
    auto betti = betti_table(*r.P);
    for (int i = 0; i <= n; ++i)
      c.expect(betti[{i, i}] == binom(n, i), tag + ": Betti number " +
                                                 std::to_string(i));
    c.expect(betti.size() == static_cast<std::size_t>(n + 1),
             tag + ": extra Betti entries");
    c.expect(r.sig.d == n && r.sig.ell == n, tag + ": signature");
    for (int i = 0; i <= n; ++i)
      c.expect(r.E.block(i, -i).size() == static_cast<std::size_t>(binom(n, i)),
               tag + ": dim E^" + std::to_string(i));
    if (!r.nak) {
      c.expect(false, tag + ": no verdicts");
      continue;
    }
    Field F = r.A->field();
    c.expect(*r.mu == xi_automorphism(r.E, Scalar(F, n % 2 == 1 ? 1L : -1L),
                                      Scalar::one(F)),
             tag + ": mu_E");
    c.expect(r.nak->mu_recovered &&
                 same_aut(*r.A, *r.nak->mu_recovered,
                          AutomorphismSpec::identity(F, r.A->degrees())),
             tag + ": recovered mu_A");
    c.expect(r.nak->hdet_mu && r.nak->hdet_mu->is_one(), tag + ": hdet");
    for (const char* v : {"T42_deg1", "T42_full", "T53", "graded_symmetric"})
      c.expect(verdict(r, v) == VerdictStatus::Pass, tag + ": " + v);
  }
}

void quantum(Criterion& c) {
  for (const char* f :
       {"qplane2.alg", "qplane_m1.alg", "qplane3.alg", "qspace3.alg"}) {
    std::string tag = f;
    Run r = run(load(f));
    if (!r.nak) {
      c.expect(false, tag + ": not regular");
      continue;
    }
    c.expect(r.F->nondegenerate, tag + ": pairing degenerate");
    c.expect(verdict(r, "T42_deg1") == VerdictStatus::Pass, tag + ": T42_deg1");
    c.expect(verdict(r, "T42_full") == VerdictStatus::Pass, tag + ": T42_full");
    c.expect(r.nak->hdet_mu && r.nak->hdet_mu->is_one(), tag + ": hdet");
    if (tag == "qplane_m1.alg") {
      auto xi = AutomorphismSpec::xi(q(-1), r.A->degrees());
      c.expect(r.nak->mu_A && same_aut(*r.A, *r.nak->mu_A, xi),
               tag + ": mu_A = xi_{-1}");
      c.expect(q(-1).pow(*r.sig.ell).is_one(), tag + ": c^ell");
      c.expect(verdict(r, "T41") == VerdictStatus::Pass, tag + ": T41");
    }
  }
}

void jordan(Criterion& c) {
  Run r = run(load("jordan.alg"));
  c.expect(r.seconds < 30.0, "runtime " + std::to_string(r.seconds));
  if (!r.nak || !r.nak->mu_A) {
    c.expect(false, "no mu_A");
    return;
  }
  const QuotientAlgebra& A = *r.A;
  Field F = A.field();
  Matrix S(F, 2, 2);
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t s = 0; s < 2; ++s)
      S(g, s) = A.reduce(r.nak->mu_A->images[g])
                    .coefficient(Word({static_cast<Letter>(s)}, 1));
  // unipotent and not the identity, so not semisimple
  Matrix N = S - Matrix::identity(F, 2);
  c.expect(N.rank() == 1 && (N * N).rank() == 0, "mu_A|A_1 is semisimple");
  c.expect(verdict(r, "T42_deg1") == VerdictStatus::Pass, "T42_deg1");
  c.expect(verdict(r, "T53") == VerdictStatus::Pass, "T53");
  const Matrix& m = r.mu->blocks.at({1, -1});
  c.expect(!m(1, 0).is_zero() || !m(0, 1).is_zero(), "mu_E of xi form");
  c.expect(!is_graded_symmetric(r.E, *r.mu), "E graded symmetric");
}

void calibration(Criterion& c) {
  for (const auto& f : kGorensteinCorpus) {
    auto p = load(f);
    Run r = run(p, std::min(p.caps.internal, 10), 5);
    if (!r.sig.d) {
      c.expect(false, f + ": not Gorenstein");
      continue;
    }
    for (long cv : {2L, 3L, -1L}) {
      Scalar s(r.A->field(), cv);
      auto xi = AutomorphismSpec::xi(s, r.A->degrees());
      Scalar h = hdet(lift_automorphism(xi, *r.P), *r.P, r.sig);
      c.expect(h == s.pow(*r.sig.ell),
               f + ": hdet(xi_" + std::to_string(cv) + ") = " + h.to_string());
    }
  }
}

ChainMap random_cocycle_lift(const Run& r, std::mt19937& rng) {
  const auto& bds = r.E.bidegrees();
  auto [i, j] = bds[std::uniform_int_distribution<std::size_t>(
      0, bds.size() - 1)(rng)];
  std::uniform_int_distribution<long> coef(-2, 2);
  std::optional<ChainMap> out;
  for (std::size_t a : r.E.block(i, j)) {
    ChainMap g = lift_cocycle(*r.P, i, r.E.basis()[a].generator, &rng) *
                 Scalar(r.A->field(), coef(rng));
    out = out ? *out + g : g;
  }
  ChainMap h = random_graded_map(r.P->complex(), r.P->complex(), i - 1, j, rng);
  return *out + boundary_of(h);
}

void properties(Criterion& c) {
  std::mt19937 rng(20240617);
  // graded composition associativity on random chain-map triples
  {
    std::vector<Run> runs;
    for (const char* f : {"poly2.alg", "qplane2.alg", "jordan.alg", "poly3.alg"})
      runs.push_back(run(load(f), 8, 5));
    int triples = 0;
    for (int t = 0; t < 240; ++t) {
      const Run& r = runs[static_cast<std::size_t>(t) % runs.size()];
      ChainMap f = random_cocycle_lift(r, rng);
      ChainMap g = random_cocycle_lift(r, rng);
      ChainMap h = random_cocycle_lift(r, rng);
      if (!f.is_chain_map() || !g.is_chain_map() || !h.is_chain_map()) {
        c.expect(false, "random lift is not a chain map");
        continue;
      }
      ChainMap a = graded_compose(graded_compose(h, g), f);
      ChainMap b = graded_compose(h, graded_compose(g, f));
      bool same = a.shift_i == b.shift_i && a.shift_j == b.shift_j;
      for (int p : r.P->complex()->positions())
        same = same && a.component(p).same_entries(b.component(p));
      c.expect(same, "graded composition not associative");
      ++triples;
    }
    c.expect(triples >= 200, "fewer than 200 triples");
  }
  // lift independence of f_sigma
  {
    Run r = run(load("jordan.alg"), 8, 5);
    auto sigma = load("jordan.alg").declared_autos.at(0);
    auto base = f_sigma(lift_automorphism(sigma, *r.P), r.E);
    Scalar h0 = hdet(lift_automorphism(sigma, *r.P), *r.P, r.sig);
    for (int t = 0; t < 50; ++t) {
      auto L = lift_automorphism(sigma, *r.P, &rng);
      c.expect(f_sigma(L, r.E) == base, "f_sigma depends on the lift");
      c.expect(hdet(L, *r.P, r.sig) == h0, "hdet depends on the lift");
    }
  }
  // pairing associativity and the Nakayama identity on every corpus E
  for (const auto& f : kGorensteinCorpus) {
    auto p = load(f);
    Run r = run(p, std::min(p.caps.internal, 10), 5);
    if (!r.F) {
      c.expect(false, f + ": no Frobenius data");
      continue;
    }
    const std::size_t N = r.E.dim();
    const Matrix& Pm = r.F->pairing;
    auto e = [&](const Vec& v) { return r.F->scale * v[r.F->socle_index]; };
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        for (std::size_t d = 0; d < N; ++d) {
          Scalar left = e(r.E.multiply(r.E.product(a, b), r.E.unit_vector(d)));
          Scalar right = e(r.E.multiply(r.E.unit_vector(a), r.E.product(b, d)));
          c.expect(left == right, f + ": pairing not associative");
        }
    Matrix mu = r.mu->to_matrix(r.E);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        Scalar rhs = Scalar::zero(r.E.field());
        for (std::size_t k = 0; k < N; ++k)
          rhs += mu(k, b) * Pm(k, a);
        c.expect(Pm(a, b) == rhs, f + ": (x,y) != (mu(y), x)");
      }
  }
  // contravariance of f and multiplicativity of hdet on commuting diagonals
  for (const char* f : {"poly2.alg", "qplane2.alg", "qspace3.alg"}) {
    auto p = load(f);
    Run r = run(p, 8, 5);
    std::uniform_int_distribution<long> pick(1, 5);
    for (int t = 0; t < 5; ++t) {
      std::vector<Scalar> a, b;
      for (std::size_t g = 0; g < p.generators.size(); ++g) {
        a.push_back(q(pick(rng) * (t % 2 ? -1 : 1), pick(rng)));
        b.push_back(q(pick(rng), pick(rng)));
      }
      auto s = AutomorphismSpec::diagonal(a, r.A->degrees());
      auto u = AutomorphismSpec::diagonal(b, r.A->degrees());
      auto su = compose_automorphisms(s, u); // u o s
      auto Ls = lift_automorphism(s, *r.P, &rng);
      auto Lu = lift_automorphism(u, *r.P, &rng);
      auto Lsu = lift_automorphism(su, *r.P, &rng);
      c.expect(f_sigma(Lsu, r.E) == f_sigma(Ls, r.E).after(r.E, f_sigma(Lu, r.E)),
               std::string(f) + ": f not contravariant");
      c.expect(hdet(Lsu, *r.P, r.sig) ==
                   hdet(Ls, *r.P, r.sig) * hdet(Lu, *r.P, r.sig),
               std::string(f) + ": hdet not multiplicative");
    }
  }
}

void twists(Criterion& c) {
  auto p = load("poly2.alg");
  for (auto [a, b] : {std::pair{2L, 3L}, {5L, 1L}, {-1L, 1L}, {3L, 7L}}) {
    auto s = AutomorphismSpec::diagonal(std::vector<Scalar>{q(a), q(b)},
                                        p.generator_degrees());
    auto t = graded_twist({p, s}, 10);
    // x*y = a xy and y*x = b xy, so y*x = (b/a) x*y
    NcPoly expect = parse_polynomial(
        "y*x - " + q(b, a).to_string() + "*x*y", p.field, p.generators);
    c.expect(t.relations.size() == 1 && t.relations[0] == expect,
             "diag(" + std::to_string(a) + "," + std::to_string(b) +
                 ") twist relation");
  }
  std::mt19937 rng(99);
  for (const auto& f : {"poly2.alg", "poly3.alg", "qplane2.alg", "qspace3.alg",
                        "heisenberg.alg", "jordan.alg"}) {
    auto base = load(f);
    std::vector<AutomorphismSpec> sigmas;
    if (std::string(f) == "jordan.alg") {
      sigmas.push_back(base.declared_autos.at(0));
      sigmas.push_back(AutomorphismSpec::xi(q(3), base.generator_degrees()));
    } else {
      std::uniform_int_distribution<long> pick(1, 4);
      for (int k = 0; k < 2; ++k) {
        std::vector<Scalar> d;
        for (std::size_t g = 0; g < base.generators.size(); ++g)
          d.push_back(q(pick(rng) * (k ? -1 : 1), pick(rng)));
        sigmas.push_back(
            AutomorphismSpec::diagonal(d, base.generator_degrees()));
      }
    }
    for (const auto& s : sigmas) {
      auto check = twist_roundtrip_check(base, s, 8, 5);
      c.expect(check.hilbert_equal(), std::string(f) + ": Hilbert changed");
      c.expect(check.betti_equal(), std::string(f) + ": Betti changed");
      Run r = run(graded_twist({base, s}, 8), 8, 5);
      c.expect(r.nak && r.nak->hdet_mu && r.nak->hdet_mu->is_one(),
               std::string(f) + ": twisted hdet(mu) != 1");
    }
  }
}

void negative(Criterion& c) {
  auto p = load("monomial_xy.alg");
  Run r = run(p);
  bool socle = false;
  try {
    frobenius_form(r.E);
  } catch (const SocleError&) {
    socle = true;
  }
  c.expect(socle, "frobenius_form accepted the monomial algebra");
  PipelineOptions o;
  VerificationReport rep = run_pipeline(p, o);
  c.expect(rep.signature &&
               rep.signature->gorenstein_ok != Tri::True,
           "gorenstein_ok reported true");
  c.expect(rep.nakayama.has_value(), "no verdict block");
  if (rep.nakayama)
    for (const auto& v : rep.nakayama->verdicts)
      c.expect(v.status == VerdictStatus::Skipped, v.name + " was decided");
  c.expect(rep.exit_code() == 0, "non-zero exit code");
}

} // namespace

int main() {
  const std::pair<const char*, std::function<void(Criterion&)>> criteria[] = {
      {"commutative corpus", commutative},
      {"quantum corpus", quantum},
      {"Jordan plane", jordan},
      {"hdet calibration", calibration},
      {"property suites", properties},
      {"twist suite", twists},
      {"non-Gorenstein control", negative},
  };
  int failed = 0;
  int k = 0;
  for (const auto& [name, body] : criteria) {
    ++k;
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
                   .count();
    std::ostringstream line;
    line << (c.failures.empty() ? "PASS" : "FAIL") << " " << k << " " << name
         << " (" << std::fixed;
    line.precision(2);
    line << s << " s)";
    if (!c.failures.empty()) {
      line << ": " << c.failures.front();
      if (c.failures.size() > 1)
        line << " (+" << c.failures.size() - 1 << " more)";
      ++failed;
    }
    std::cout << line.str() << std::endl;
  }
  return failed ? 1 : 0;
}
