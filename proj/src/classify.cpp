#include "hn/classify.hpp"

namespace hn {

namespace {

constexpr const char* kZeroProductNote =
    "degenerate: one factor is the zero measure, so the product is zero and carries no "
    "information about the other factor";

Verdict combine_and(Verdict a, Verdict b) {
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return (a == Verdict::Holds && b == Verdict::Holds) ? Verdict::Holds : Verdict::Fails;
}

Verdict combine_or(Verdict a, Verdict b) {
  if (a == Verdict::Holds || b == Verdict::Holds) return Verdict::Holds;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Fails;
}

}  // namespace

MeasureClassification classify_measure(const MeasureSpec& mu, const PlanConfig& plan_config,
                                       const CheckOptions& opts) {
  MeasureClassification result;
  const ConditionReport growth = growth_check(mu, opts);
  result.growth = growth.verdict;
  if (growth.verdict != Verdict::Holds) {
    // without the growth condition the measure is neither Nevanlinna nor a
    // Lebesgue multiple (those have finite growth integral c * pi^n)
    result.nevanlinna = growth.verdict == Verdict::Fails ? Verdict::Fails : Verdict::Inconclusive;
    result.lebesgue_multiple = result.nevanlinna;
    result.notes = "growth condition not satisfied";
    return result;
  }
  const SamplePlan plan = SamplePlan::make(mu.dim(), plan_config);
  if (mu.dim() == 1) {
    result.nevanlinna = Verdict::Holds;
    result.notes = "dimension 1: the Nevanlinna condition is vacuous given growth";
  } else {
    result.nevanlinna = nevanlinna_check(mu, plan, ConditionForm::C, opts).verdict;
  }
  const ConditionReport lebesgue =
      lebesgue_check(mu, plan, ConditionForm::B, opts, LebesgueMode::Corollary);
  result.lebesgue_multiple = lebesgue.verdict;
  result.constant = lebesgue.fitted_constant;
  result.constant_error = lebesgue.fitted_constant_error;
  return result;
}

TorusMeasureClassification classify_torus_measure(const MeasureSpec& nu,
                                                  const PlanConfig& plan_config,
                                                  const CheckOptions& opts) {
  TorusMeasureClassification result;
  if (mass_declared_divergent(nu)) {
    result.finite_mass = Verdict::Fails;
    result.mixed_fourier = Verdict::Fails;
    result.lebesgue_multiple = Verdict::Fails;
    result.notes = "infinite total mass";
    return result;
  }
  const QuadratureResult mass = total_mass(nu, opts.quad);
  result.finite_mass = mass.converged ? Verdict::Holds : Verdict::Inconclusive;
  const SamplePlan plan = SamplePlan::make(nu.dim(), plan_config);
  result.mixed_fourier = mixed_fourier_check(nu, plan.max_index(), opts).verdict;
  const ConditionReport lebesgue =
      torus_lebesgue_check(nu, plan, ConditionForm::C, opts, LebesgueMode::Corollary);
  result.lebesgue_multiple = lebesgue.verdict;
  result.constant = lebesgue.fitted_constant;
  result.constant_error = lebesgue.fitted_constant_error;
  return result;
}

ProductClassification classify_product(const MeasureSpec& mu1, const MeasureSpec& mu2,
                                       const PlanConfig& plan_config, const CheckOptions& opts,
                                       const std::optional<std::vector<int>>& b1) {
  ProductClassification result;
  const MeasureSpec product =
      b1 ? permuted_product(*b1, mu1, mu2) : tensor(mu1, mu2);
  if (is_zero_measure(product)) {
    result.degenerate = true;
    result.notes = kZeroProductNote;
    result.agree = true;
    return result;
  }
  result.factor1 = classify_measure(mu1, plan_config, opts);
  result.factor2 = classify_measure(mu2, plan_config, opts);
  result.predicted =
      combine_and(combine_and(result.factor1.nevanlinna, result.factor2.nevanlinna),
                  combine_or(result.factor1.lebesgue_multiple, result.factor2.lebesgue_multiple));
  const SamplePlan plan = SamplePlan::make(product.dim(), plan_config);
  result.observed = nevanlinna_check(product, plan, ConditionForm::C, opts).verdict;
  result.agree = result.predicted != Verdict::Inconclusive &&
                 result.observed != Verdict::Inconclusive &&
                 result.predicted == result.observed;
  return result;
}

TorusProductClassification classify_product_torus(
    const MeasureSpec& nu1, const MeasureSpec& nu2, const PlanConfig& plan_config,
    const CheckOptions& opts, const std::optional<std::vector<int>>& b1) {
  TorusProductClassification result;
  const MeasureSpec product =
      b1 ? permuted_product(*b1, nu1, nu2) : tensor(nu1, nu2);
  if (is_zero_measure(product)) {
    result.degenerate = true;
    result.notes = kZeroProductNote;
    result.agree = true;
    return result;
  }
  result.factor1 = classify_torus_measure(nu1, plan_config, opts);
  result.factor2 = classify_torus_measure(nu2, plan_config, opts);
  result.predicted =
      combine_and(combine_and(result.factor1.mixed_fourier, result.factor2.mixed_fourier),
                  combine_or(result.factor1.lebesgue_multiple, result.factor2.lebesgue_multiple));
  result.observed = mixed_fourier_check(product, plan_config.max_index, opts).verdict;
  result.agree = result.predicted != Verdict::Inconclusive &&
                 result.observed != Verdict::Inconclusive &&
                 result.predicted == result.observed;
  return result;
}

}  // namespace hn
