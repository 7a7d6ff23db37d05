#pragma once

#include "asreg/nakayama.hpp"
#include "asreg/presentation.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace asreg {

/// Last stage a run executes; later stages are left empty.
enum class Stage { Groebner, Resolution, Ext, Frobenius, Nakayama };

struct PipelineOptions {
  int cap_internal = 10;
  int cap_homological = 5;
  Stage stop_after = Stage::Nakayama;
  /// Name shown in the report's input echo.
  std::string source = "<stdin>";
};

struct StageError {
  std::string stage;
  std::string kind;
  std::string message;
};

struct VerificationReport {
  AlgebraPresentation presentation;
  PipelineOptions options;

  std::shared_ptr<const QuotientAlgebra> algebra;
  std::vector<std::size_t> hilbert;
  std::size_t groebner_rules = 0;

  std::shared_ptr<const Resolution> resolution;
  std::optional<GorensteinSignature> signature;
  std::optional<ExtAlgebra> ext;
  std::optional<FrobeniusData> frobenius;
  std::optional<GradedLinearMap> mu_E;
  std::optional<bool> graded_symmetric;
  std::optional<NakayamaResult> nakayama;

  /// Cap-honesty notes and non-fatal stage outcomes, in pipeline order.
  std::vector<std::string> notes;
  /// Stage that ended the run early, if any.
  std::optional<StageError> error;
  /// Milliseconds per stage; text output only.
  std::vector<std::pair<std::string, double>> timing_ms;

  bool any_verdict_failed() const;
  /// 0 ok, 1 input error, 2 verdict or verification failure.
  int exit_code() const;
};

/// Replaces the coefficient field (Q -> F_p, or a no-op).
AlgebraPresentation change_field(const AlgebraPresentation& p, Field f);

/// gb -> resolution -> signature -> ext -> frobenius -> lift/f/hdet ->
/// verdicts. Library errors are caught and recorded with their stage; a
/// missing Frobenius structure on a non-Gorenstein input is an outcome,
/// not an error.
VerificationReport run_pipeline(const AlgebraPresentation& p,
                                const PipelineOptions& options);

std::string report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

struct HdetReport {
  AlgebraPresentation presentation;
  AutomorphismSpec sigma;
  std::optional<GorensteinSignature> signature;
  std::optional<Scalar> hdet;
  std::optional<GradedLinearMap> f_sigma;
  std::optional<ExtAlgebra> ext;
  std::optional<StageError> error;
};

HdetReport run_hdet(const AlgebraPresentation& p, const AutomorphismSpec& sigma,
                    const PipelineOptions& options);
std::string hdet_json(const HdetReport& r);
std::string hdet_text(const HdetReport& r);

} // namespace asreg
