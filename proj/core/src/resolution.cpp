#include "asreg/resolution.hpp"

#include "asreg/errors.hpp"

#include <algorithm>
#include <numeric>

namespace asreg {

std::string to_string(Tri t) {
  switch (t) {
  case Tri::True:
    return "true";
  case Tri::False:
    return "false";
  default:
    return "unknown";
  }
}

int Resolution::max_generator_degree() const {
  int out = 0;
  for (const auto& degs : v_degrees_)
    for (int d : degs)
      out = std::max(out, d);
  return out;
}

ModuleMap Resolution::differential(int i) const {
  return complex_->differential(-i);
}

const GradedFreeModule& Resolution::term(int i) const {
  return complex_->term(-i);
}

std::optional<ModuleElement> Resolution::lift(int i, int n,
                                              const ModuleElement& b,
                                              std::mt19937* perturb) const {
  const QuotientAlgebra& A = *algebra_;
  if (n > cap_internal_)
    throw CapExceeded("resolution", "lift requested in internal degree " +
                                        std::to_string(n) + " beyond cap " +
                                        std::to_string(cap_internal_));
  DegreeCoords tgt(A, term(i - 1), n);
  Vec rhs = tgt.coordinates(b);
  DegreeCoords src(A, term(i), n);
  if (i < 1 || i > length() || n < 0 ||
      static_cast<std::size_t>(i) >= solvers_.size() ||
      !solvers_[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)]) {
    if (!is_zero_vec(rhs))
      return std::nullopt;
    return src.element(zero_vec(A.field(), src.dim()));
  }
  const SpanSolver& solver =
      *solvers_[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
  auto sol = solver.solve(rhs);
  if (!sol)
    return std::nullopt;
  if (perturb) {
    std::uniform_int_distribution<long> coef(-3, 3);
    for (const auto& k : solver.kernel()) {
      Scalar c(A.field(), coef(*perturb));
      for (std::size_t t = 0; t < k.size(); ++t)
        (*sol)[t] += c * k[t];
    }
  }
  return src.element(*sol);
}

Resolution minimal_resolution(std::shared_ptr<const QuotientAlgebra> algebra,
                              int cap_internal, int cap_homological) {
  const QuotientAlgebra& A = *algebra;
  const Field F = A.field();
  if (cap_internal > A.cap())
    throw CapExceeded("resolution",
                      "internal cap " + std::to_string(cap_internal) +
                          " exceeds Groebner completion degree " +
                          std::to_string(A.cap()));
  Resolution R;
  R.algebra_ = algebra;
  R.cap_internal_ = cap_internal;
  R.cap_homological_ = cap_homological;
  R.v_degrees_.push_back({0});
  R.complete_.push_back(true);
  R.solvers_.emplace_back(); // position 0 has no d^{(0)} solver

  ChainComplex X(algebra);
  X.set_term(0, GradedFreeModule{{0}});

  for (int i = 1; i <= cap_homological; ++i) {
    GradedFreeModule target = X.term(-i + 1);
    GradedFreeModule source;
    std::vector<ModuleElement> images;
    std::vector<std::shared_ptr<const SpanSolver>> solvers(
        static_cast<std::size_t>(cap_internal) + 1);
    for (int n = 1; n <= cap_internal; ++n) {
      DegreeCoords tn(A, target, n);
      std::vector<Vec> kernel;
      if (i == 1) {
        for (std::size_t k = 0; k < tn.dim(); ++k) {
          Vec e = zero_vec(F, tn.dim());
          e[k] = Scalar::one(F);
          kernel.push_back(std::move(e));
        }
      } else if (const auto& prev =
                     R.solvers_[static_cast<std::size_t>(i - 1)]
                               [static_cast<std::size_t>(n)]) {
        kernel = prev->kernel();
      }

      auto solver = std::make_shared<SpanSolver>(F, tn.dim());
      DegreeCoords sn(A, source, n);
      for (std::size_t k = 0; k < sn.dim(); ++k) {
        auto [g, w] = sn.basis_element(k);
        ModuleElement img(target.rank(), NcPoly(F));
        NcPoly wp = NcPoly::monomial(Scalar::one(F), w);
        for (std::size_t c = 0; c < target.rank(); ++c)
          if (!images[g][c].is_zero())
            img[c] = A.multiply(wp, images[g][c]);
        solver->insert(tn.coordinates(img));
      }
      for (const auto& z : kernel) {
        if (solver->contains(z))
          continue;
        solver->insert(z);
        source.generator_degrees.push_back(n);
        images.push_back(tn.element(z));
      }
      solvers[static_cast<std::size_t>(n)] = std::move(solver);
    }
    R.solvers_.push_back(std::move(solvers));
    if (source.rank() == 0) {
      R.terminated_ = true;
      break;
    }
    ModuleMap d(F, source, target);
    for (std::size_t g = 0; g < images.size(); ++g)
      d.set_image(g, images[g]);
    X.set_term(-i, source);
    X.set_differential(-i, std::move(d));
    int top = *std::max_element(source.generator_degrees.begin(),
                                source.generator_degrees.end());
    bool ok = top < cap_internal;
    R.complete_.push_back(ok);
    if (!ok)
      R.warnings_.push_back("V^(-" + std::to_string(i) +
                            ") has a generator in internal degree " +
                            std::to_string(top) +
                            " = cap; syzygies beyond the cap are not visible");
    R.v_degrees_.push_back(source.generator_degrees);
  }
  if (!R.terminated_)
    R.warnings_.push_back("no empty step up to homological cap " +
                          std::to_string(cap_homological) +
                          "; the resolution may continue");
  R.complex_ = std::make_shared<const ChainComplex>(std::move(X));
  return R;
}

std::map<std::pair<int, int>, int> betti_table(const Resolution& P) {
  std::map<std::pair<int, int>, int> out;
  for (std::size_t i = 0; i < P.v_degrees().size(); ++i)
    for (int d : P.v_degrees()[i])
      ++out[{static_cast<int>(i), d}];
  return out;
}

DegreeCoords dual_coords(const Resolution& P, int i, int m) {
  GradedFreeModule neg;
  for (int d : P.term(i).generator_degrees)
    neg.generator_degrees.push_back(-d);
  return DegreeCoords(P.algebra(), neg, m);
}

Matrix dual_differential(const Resolution& P, int i, int m) {
  const QuotientAlgebra& A = P.algebra();
  const Field F = A.field();
  DegreeCoords src = dual_coords(P, i, m);
  DegreeCoords tgt = dual_coords(P, i + 1, m);
  Matrix out(F, tgt.dim(), src.dim());
  if (tgt.dim() == 0 || src.dim() == 0)
    return out;
  ModuleMap d = P.differential(i + 1);
  for (std::size_t k = 0; k < src.dim(); ++k) {
    auto [r, w] = src.basis_element(k);
    NcPoly wp = NcPoly::monomial(Scalar::one(F), w);
    ModuleElement img(P.term(i + 1).rank(), NcPoly(F));
    for (std::size_t c = 0; c < img.size(); ++c)
      if (!d.entry(c, r).is_zero())
        img[c] = A.multiply(d.entry(c, r), wp);
    Vec col = tgt.coordinates(img);
    for (std::size_t t = 0; t < col.size(); ++t)
      out(t, k) = col[t];
  }
  return out;
}

GorensteinSignature gorenstein_signature(const Resolution& P) {
  GorensteinSignature sig;
  int maxdeg = P.max_generator_degree();
  sig.window_low = -maxdeg;
  sig.window_high = P.cap_internal() - maxdeg;
  const int D = P.length();

  std::size_t total = 0;
  std::optional<std::pair<int, int>> where;
  for (int m = sig.window_low; m <= sig.window_high; ++m) {
    std::vector<std::size_t> rank(static_cast<std::size_t>(D) + 2, 0);
    std::vector<std::size_t> dim(static_cast<std::size_t>(D) + 1, 0);
    for (int i = 0; i <= D; ++i) {
      dim[static_cast<std::size_t>(i)] = dual_coords(P, i, m).dim();
      rank[static_cast<std::size_t>(i) + 1] =
          i < D ? dual_differential(P, i, m).rank() : 0;
    }
    for (int i = 0; i <= D; ++i) {
      std::size_t h = dim[static_cast<std::size_t>(i)] -
                      rank[static_cast<std::size_t>(i) + 1] -
                      rank[static_cast<std::size_t>(i)];
      if (h == 0)
        continue;
      sig.dual_cohomology[{i, m}] = h;
      total += h;
      where = std::pair{i, m};
    }
  }

  if (!P.terminated()) {
    sig.gorenstein_ok = Tri::Unknown;
    sig.note = "resolution did not terminate within homological cap " +
               std::to_string(P.cap_homological());
    return sig;
  }
  if (std::find(P.complete().begin(), P.complete().end(), false) !=
      P.complete().end()) {
    sig.gorenstein_ok = Tri::Unknown;
    sig.note = "a generator sits at the internal cap; raise --cap-internal";
    return sig;
  }
  if (total == 1) {
    sig.gorenstein_ok = Tri::True;
    sig.d = where->first;
    sig.ell = -where->second;
  } else {
    sig.gorenstein_ok = Tri::False;
    sig.note = "Ext(k, A) has total dimension " + std::to_string(total) +
               " in internal degrees [" + std::to_string(sig.window_low) +
               ", " + std::to_string(sig.window_high) + "]";
  }
  sig.regular = sig.gorenstein_ok == Tri::True && *sig.d == D &&
                P.v_degrees()[static_cast<std::size_t>(D)].size() == 1;
  if (sig.gorenstein_ok == Tri::True && !sig.regular)
    sig.note = "dual cohomology is one-dimensional but not at the top term";
  return sig;
}

} // namespace asreg
