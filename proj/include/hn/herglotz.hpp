#pragma once

#include "hn/conditions.hpp"
#include "hn/measure.hpp"
#include "hn/report.hpp"
#include "hn/sample_plan.hpp"

namespace hn {

/// Representing data (a, b, mu) of a half-plane function: a real constant,
/// non-negative linear coefficients, and a real-space measure satisfying the
/// growth condition.
struct HalfPlaneRepresentation {
  double a = 0.0;
  std::vector<double> b;
  MeasureSpec mu;

  HalfPlaneRepresentation(double a_, std::vector<double> b_, MeasureSpec mu_);
  /// Pure-measure data (a = 0, b = 0).
  explicit HalfPlaneRepresentation(MeasureSpec mu_);

  int dim() const { return mu.dim(); }
};

struct EvalResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

/// Value a + sum b_l z_l + pi^{-n} int K(z, t) dmu(t).  For points with a
/// lower-half coordinate this is the symmetric extension.
EvalResult evaluate_half_plane(const HalfPlaneRepresentation& rep, const HalfPlanePoint& z,
                               const QuadratureConfig& cfg = {});

/// Partial derivative for a multi-index with |k| >= 1: the constant drops,
/// b contributes only at first order, the integral differentiates under the
/// integral sign through the kernel-derivative closed form.
EvalResult evaluate_half_plane_derivative(const HalfPlaneRepresentation& rep,
                                          const MultiIndex& k, const HalfPlanePoint& z,
                                          const QuadratureConfig& cfg = {});

/// Checks that at points with one coordinate moved to the lower half-plane
/// the symmetric extension does not depend on the remaining (upper) ones:
/// every such first-order derivative is sampled and compared against zero.
ConditionReport check_variable_dependence(const HalfPlaneRepresentation& rep,
                                          const SamplePlan& plan,
                                          const CheckOptions& opts = {});

/// Checks Im >= 0 on the sampled upper-half-plane points; the recorded
/// residual is the positive part of the violation.
ConditionReport check_positivity(const HalfPlaneRepresentation& rep, const SamplePlan& plan,
                                 const CheckOptions& opts = {});

}  // namespace hn
