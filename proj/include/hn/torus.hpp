#pragma once

#include "hn/conditions.hpp"
#include "hn/herglotz.hpp"
#include "hn/measure.hpp"
#include "hn/report.hpp"
#include "hn/sample_plan.hpp"

namespace hn {

/// Representing data (alpha, nu) of a disk function: a real constant and a
/// finite torus measure.
struct DiskRepresentation {
  double alpha = 0.0;
  MeasureSpec nu;

  DiskRepresentation(double alpha_, MeasureSpec nu_);
  explicit DiskRepresentation(MeasureSpec nu_);

  int dim() const { return nu.dim(); }
};

/// int prod_j e^{i m_j s_j} dnu for a finite torus measure.
Complex fourier_coefficient(const MeasureSpec& nu, const MultiIndex& m,
                            const QuadratureConfig& cfg = {},
                            QuadratureResult* detail = nullptr);

/// Vanishing of every coefficient whose index has at least one positive and
/// one negative entry, sampled over the box |m_j| <= max_index.  Vacuous in
/// dimension 1.
ConditionReport mixed_fourier_check(const MeasureSpec& nu, int max_index,
                                    const CheckOptions& opts = {});

/// Value i*alpha + (2pi)^{-n} int (2 prod_j (1 - w_j e^{-i s_j})^{-1} - 1) dnu.
EvalResult evaluate_disk(const DiskRepresentation& rep, const PolydiskPoint& w,
                         const QuadratureConfig& cfg = {});

/// Partial derivative in the (1-based) coordinate j.
EvalResult evaluate_disk_derivative(const DiskRepresentation& rep, int j,
                                    const PolydiskPoint& w, const QuadratureConfig& cfg = {});

/// Checks Re >= 0 on sampled polydisk points.
ConditionReport check_disk_positivity(const DiskRepresentation& rep, const SamplePlan& plan,
                                      const CheckOptions& opts = {});

/// Sampled decision "nu = c * Lebesgue" on the torus, in the four variants of
/// the polydisk characterization.  Theorem mode first verifies vanishing mixed
/// coefficients; corollary mode drops that prerequisite.  Fitted constant is
/// mass / (2pi)^n when the check holds.
ConditionReport torus_lebesgue_check(const MeasureSpec& nu, const SamplePlan& plan,
                                     ConditionForm variant, const CheckOptions& opts = {},
                                     LebesgueMode mode = LebesgueMode::Theorem);

}  // namespace hn
