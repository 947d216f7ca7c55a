#pragma once

#include <optional>

#include "hn/conditions.hpp"
#include "hn/torus.hpp"

namespace hn {

/// Composite classification of one real-space measure.  In dimension 1 the
/// Nevanlinna verdict coincides with the growth verdict (the condition is
/// vacuous there).
struct MeasureClassification {
  Verdict growth = Verdict::Inconclusive;
  Verdict nevanlinna = Verdict::Inconclusive;
  Verdict lebesgue_multiple = Verdict::Inconclusive;
  std::optional<double> constant;
  std::optional<double> constant_error;
  std::string notes;
};

MeasureClassification classify_measure(const MeasureSpec& mu, const PlanConfig& plan_config = {},
                                       const CheckOptions& opts = {});

/// Torus analogue: finite mass, vanishing mixed coefficients, Lebesgue multiple.
struct TorusMeasureClassification {
  Verdict finite_mass = Verdict::Inconclusive;
  Verdict mixed_fourier = Verdict::Inconclusive;
  Verdict lebesgue_multiple = Verdict::Inconclusive;
  std::optional<double> constant;
  std::optional<double> constant_error;
  std::string notes;
};

TorusMeasureClassification classify_torus_measure(const MeasureSpec& nu,
                                                  const PlanConfig& plan_config = {},
                                                  const CheckOptions& opts = {});

/// Product-measure decision record: per-factor classifications, the verdict
/// the product theorem predicts for the product, and the verdict observed by
/// running the product condition directly on the assembled measure.
struct ProductClassification {
  bool degenerate = false;
  MeasureClassification factor1;
  MeasureClassification factor2;
  Verdict predicted = Verdict::Inconclusive;
  Verdict observed = Verdict::Inconclusive;
  bool agree = false;
  std::string notes;
};

/// Classifies mu1 (x) mu2; when b1 is given the product places mu1 on those
/// (1-based) axes instead of the leading block.
ProductClassification classify_product(const MeasureSpec& mu1, const MeasureSpec& mu2,
                                       const PlanConfig& plan_config = {},
                                       const CheckOptions& opts = {},
                                       const std::optional<std::vector<int>>& b1 = std::nullopt);

struct TorusProductClassification {
  bool degenerate = false;
  TorusMeasureClassification factor1;
  TorusMeasureClassification factor2;
  Verdict predicted = Verdict::Inconclusive;
  Verdict observed = Verdict::Inconclusive;
  bool agree = false;
  std::string notes;
};

TorusProductClassification classify_product_torus(
    const MeasureSpec& nu1, const MeasureSpec& nu2, const PlanConfig& plan_config = {},
    const CheckOptions& opts = {},
    const std::optional<std::vector<int>>& b1 = std::nullopt);

}  // namespace hn
