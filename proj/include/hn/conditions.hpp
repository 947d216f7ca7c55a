#pragma once

#include "hn/measure.hpp"
#include "hn/report.hpp"
#include "hn/sample_plan.hpp"

namespace hn {

/// The four equivalent shapes each characterization comes in.
enum class ConditionForm { A, B, C, D };

ConditionForm condition_form_from_char(char c);
char to_char(ConditionForm form);

struct CheckOptions {
  double threshold = 1e-6;
  QuadratureConfig quad{};
  /// Evaluate the conjugate-pair kernel with the conjugated value taken from
  /// the first selected axis instead of the second.  The two variants differ
  /// only for measures that already violate the condition; the default keeps
  /// the second-axis convention of the dimension-2 specialization.
  bool strict_conjugation = false;
};

/// Finiteness of the growth integral.  Fails for measures with a catalogued
/// divergent density, Inconclusive when quadrature cannot settle.
ConditionReport growth_check(const MeasureSpec& mu, const CheckOptions& opts = {});

/// Second-order kernel residual
///   int 1/((t_{l1} - z_{l1})^2 (t_{l2} - conj z_{l2})^2) prod_{j != l1,l2} (...) dmu
/// for one point and one (1-based) axis pair l1 < l2.
Complex nevanlinna_residual(const MeasureSpec& mu, const HalfPlanePoint& z, int l1, int l2,
                            const CheckOptions& opts = {}, QuadratureResult* detail = nullptr);

/// Factor-product residual for an arbitrary sign pattern; realizes form (b)
/// of both the Nevanlinna and Lebesgue characterizations.
Complex pattern_residual(const MeasureSpec& mu, const HalfPlanePoint& z, const SignVector& rho,
                         const CheckOptions& opts = {}, QuadratureResult* detail = nullptr);

/// Moebius-moment residual int prod ((t_j - i)/(t_j + i))^{m_j} (1+t_j^2)^{-1} dmu;
/// realizes the discrete form (d) on the real side.
Complex moment_residual(const MeasureSpec& mu, const MultiIndex& m,
                        const CheckOptions& opts = {}, QuadratureResult* detail = nullptr);

/// Squared-factor residual int (t_j - z_j)^{-2} prod_{l != j} (...) dmu of the
/// Lebesgue characterization, for a 1-based axis j.
Complex lebesgue_axis_residual(const MeasureSpec& mu, const HalfPlanePoint& z, int axis,
                               const CheckOptions& opts = {}, QuadratureResult* detail = nullptr);

/// Sampled check of the Nevanlinna condition in one of its four forms.
/// Requires n >= 2 and a passed growth check.
ConditionReport nevanlinna_check(const MeasureSpec& mu, const SamplePlan& plan,
                                 ConditionForm form, const CheckOptions& opts = {});

/// Theorem mode assumes (and verifies) that mu is a Nevanlinna measure and
/// samples the characterization restricted to that class; corollary mode
/// assumes only the growth condition and samples the unrestricted variants.
enum class LebesgueMode { Theorem, Corollary };

/// Sampled decision "mu = c * Lebesgue" in one of the four variants.  When it
/// holds, the fitted constant c (growth integral / pi^n) is attached.
ConditionReport lebesgue_check(const MeasureSpec& mu, const SamplePlan& plan,
                               ConditionForm variant, const CheckOptions& opts = {},
                               LebesgueMode mode = LebesgueMode::Theorem);

/// Dimension-specialized single-integrand forms.
ConditionReport lebesgue_check_dim1(const MeasureSpec& mu, const SamplePlan& plan,
                                    const CheckOptions& opts = {});
ConditionReport lebesgue_check_dim2(const MeasureSpec& mu, const SamplePlan& plan,
                                    const CheckOptions& opts = {});

/// Refined squared-factor variant with the fixed reference point i in the
/// undifferentiated brackets.
ConditionReport lebesgue_refinement_check(const MeasureSpec& mu, const SamplePlan& plan,
                                          const CheckOptions& opts = {});

}  // namespace hn
