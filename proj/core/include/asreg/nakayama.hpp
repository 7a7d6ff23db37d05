#pragma once

#include "asreg/frobenius.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace asreg {

/// sigma-linear chain automorphism phi of P over sigma, phi^{(0)} = sigma on
/// P^{(0)} = A. phi[i] acts on P^{(-i)}.
struct LiftedAutomorphism {
  AutomorphismSpec sigma;
  std::vector<ModuleMap> phi;
};

/// Throws InvalidPresentation when sigma is not an automorphism of A.
LiftedAutomorphism lift_automorphism(const AutomorphismSpec& sigma,
                                     const Resolution& P,
                                     std::mt19937* perturb = nullptr);

/// The induced automorphism of E: on E^i the transpose action of phi^{(-i)}
/// modulo A_{>=1}; f_{sigma tau} = f_tau o f_sigma.
GradedLinearMap f_sigma(const LiftedAutomorphism& lift, const ExtAlgebra& E);

/// Scalar by which psi -> sigma^{-1} o psi o phi^{(-d)} acts on the line
/// H^d(Hom_A(P, A))_{-ell}. Throws NotGorenstein without a signature.
Scalar hdet(const LiftedAutomorphism& lift, const Resolution& P,
            const GorensteinSignature& sig);

/// Every generator in degree 1 and V^{(-1)} dual to A_1.
bool generated_in_degree_one(const Resolution& P);

/// mu_A from mu_E on E^{1,-1}: Phi = (-1)^{d+1} M_1, mu_A(x_r) = sum_s
/// (B^{-1} Phi B)_{rs} x_s with B the linear parts of d^{(-1)}. Nullopt
/// unless generated in degree 1.
std::optional<AutomorphismSpec> recover_mu_A(const GradedLinearMap& mu_E,
                                             const Resolution& P,
                                             const ExtAlgebra& E, int d);

/// c with sigma = xi_c, if any.
std::optional<Scalar> xi_scalar(const AutomorphismSpec& sigma,
                                const QuotientAlgebra& A);

enum class VerdictStatus { Pass, Fail, Skipped };
std::string to_string(VerdictStatus s);

struct Verdict {
  std::string name;
  VerdictStatus status = VerdictStatus::Skipped;
  std::string detail;
};

struct NakayamaResult {
  std::optional<AutomorphismSpec> mu_declared;
  std::optional<AutomorphismSpec> mu_recovered;
  std::optional<bool> declared_matches_recovered;
  /// The automorphism the verdicts use: declared when present.
  std::optional<AutomorphismSpec> mu_A;
  std::optional<GradedLinearMap> f_mu;
  std::optional<Scalar> hdet_mu;
  std::vector<Verdict> verdicts;
};

/// T41, T42_deg1, T42_full, T53, graded_symmetric, epsilon_witness.
NakayamaResult nakayama_verdicts(const Resolution& P,
                                 const GorensteinSignature& sig,
                                 const ExtAlgebra& E,
                                 const GradedLinearMap& mu_E);

} // namespace asreg
