#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hn/types.hpp"

namespace hn {

enum class Verdict { Holds, Fails, Inconclusive };

std::string to_string(Verdict v);

/// One evaluated condition instance: the sample point and/or selector it was
/// evaluated at, the residual, and the quadrature state behind it.
struct SampleResidual {
  std::vector<Complex> point;  // z or w coordinates; empty when not point-indexed
  MultiIndex index;            // rho or m selector; empty when not index-selected
  std::optional<int> axis;     // j (1-based) for axis-selected conditions
  std::optional<std::pair<int, int>> axis_pair;  // (l1, l2), 1-based
  Complex residual{0.0, 0.0};
  double quad_error = 0.0;
  bool converged = true;
};

/// Outcome of one sampled condition check.  Holds means the condition held on
/// every sampled instance (never a proof over all z); Inconclusive flags any
/// non-converged quadrature.
struct ConditionReport {
  std::string condition_id;
  std::string equation_id;  // which integral identity the residuals realize
  double threshold = 1e-6;
  std::vector<SampleResidual> samples;
  double max_abs_residual = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<double> fitted_constant;
  std::optional<double> fitted_constant_error;
  std::string note;
};

/// Derives max_abs_residual and the verdict from the collected samples.
void finalize_report(ConditionReport& report);

}  // namespace hn
