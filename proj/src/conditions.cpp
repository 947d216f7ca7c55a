#include "hn/conditions.hpp"

#include <cmath>
#include <numbers>

#include "hn/kernels.hpp"

namespace hn {

namespace {

const Complex kI{0.0, 1.0};

Complex cpow_int(Complex base, int exponent) {
  if (exponent < 0) return cpow_int(1.0 / base, -exponent);
  Complex result{1.0, 0.0};
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

ScalarFn growth_axis() {
  return [](double t) { return Complex{1.0 / (1.0 + t * t), 0.0}; };
}

ScalarFn poisson_bracket_axis(Complex zj) {
  // (1/(t - z) - 1/(t - conj z)), the 2i-scaled one-axis Poisson kernel
  return [zj](double t) { return 1.0 / (t - zj) - 1.0 / (t - std::conj(zj)); };
}

ScalarFn squared_factor_axis(Complex zj) {
  return [zj](double t) {
    const Complex d = t - zj;
    return 1.0 / (d * d);
  };
}

ScalarFn moment_axis(int m) {
  return [m](double t) {
    return cpow_int((t - kI) / (t + kI), m) / (1.0 + t * t);
  };
}

ScalarFn factor_axis(int k, Complex zj) {
  return [k, zj](double t) { return nevanlinna_factor(k, zj, t); };
}

Integrand pattern_integrand(const SignVector& rho, const HalfPlanePoint& z) {
  std::vector<ScalarFn> axes;
  axes.reserve(rho.size());
  for (int j = 0; j < z.dim(); ++j)
    axes.push_back(factor_axis(rho[static_cast<std::size_t>(j)], z[j]));
  return Integrand::separable(std::move(axes));
}

Integrand pattern_sum_integrand(const std::vector<SignVector>& patterns,
                                const HalfPlanePoint& z) {
  std::vector<SeparableTerm> terms;
  terms.reserve(patterns.size());
  for (const SignVector& rho : patterns) {
    SeparableTerm term;
    for (int j = 0; j < z.dim(); ++j)
      term.axes.push_back(factor_axis(rho[static_cast<std::size_t>(j)], z[j]));
    terms.push_back(std::move(term));
  }
  return Integrand::separable_sum(z.dim(), std::move(terms));
}

Integrand moment_integrand(const MultiIndex& m) {
  std::vector<ScalarFn> axes;
  axes.reserve(m.size());
  for (int e : m) axes.push_back(moment_axis(e));
  return Integrand::separable(std::move(axes));
}

SampleResidual record(const QuadratureResult& r) {
  SampleResidual s;
  s.residual = r.value;
  s.quad_error = r.error_estimate;
  s.converged = r.converged;
  return s;
}

void require_growth(const MeasureSpec& mu, const CheckOptions& opts) {
  const ConditionReport growth = growth_check(mu, opts);
  if (growth.verdict == Verdict::Fails)
    throw OrderingError("growth check must pass before this condition applies");
}

const char* mode_note(LebesgueMode mode) {
  return mode == LebesgueMode::Theorem
             ? "sampled plan only; assumes a Nevanlinna measure"
             : "sampled plan only; assumes only the growth condition";
}

}  // namespace

ConditionForm condition_form_from_char(char c) {
  switch (c) {
    case 'a':
      return ConditionForm::A;
    case 'b':
      return ConditionForm::B;
    case 'c':
      return ConditionForm::C;
    case 'd':
      return ConditionForm::D;
    default:
      throw ParseError("condition form must be one of a, b, c, d");
  }
}

char to_char(ConditionForm form) {
  switch (form) {
    case ConditionForm::A:
      return 'a';
    case ConditionForm::B:
      return 'b';
    case ConditionForm::C:
      return 'c';
    default:
      return 'd';
  }
}

ConditionReport growth_check(const MeasureSpec& mu, const CheckOptions& opts) {
  ConditionReport report;
  report.condition_id = "growth";
  report.equation_id = "growth-weight-integral";
  report.threshold = opts.threshold;
  report.note = "verdict is finiteness of the integral, not smallness";
  const QuadratureResult r = growth_integral(mu, opts.quad);
  SampleResidual s = record(r);
  report.samples.push_back(s);
  report.max_abs_residual = std::abs(r.value);
  if (growth_declared_divergent(mu))
    report.verdict = Verdict::Fails;
  else if (!r.converged)
    report.verdict = Verdict::Inconclusive;
  else
    report.verdict = Verdict::Holds;
  return report;
}

Complex nevanlinna_residual(const MeasureSpec& mu, const HalfPlanePoint& z, int l1, int l2,
                            const CheckOptions& opts, QuadratureResult* detail) {
  const int n = mu.dim();
  if (n < 2) throw DimensionError("the condition is vacuous in dimension 1");
  if (l1 < 1 || l2 > n || l1 >= l2) throw DimensionError("need axes 1 <= l1 < l2 <= n");
  if (z.dim() != n) throw DimensionError("sample point dimension mismatch");
  std::vector<ScalarFn> axes;
  axes.reserve(static_cast<std::size_t>(n));
  const Complex conjugated = std::conj(opts.strict_conjugation ? z[l1 - 1] : z[l2 - 1]);
  for (int j = 1; j <= n; ++j) {
    if (j == l1)
      axes.push_back(squared_factor_axis(z[l1 - 1]));
    else if (j == l2)
      axes.push_back(squared_factor_axis(conjugated));
    else
      axes.push_back(poisson_bracket_axis(z[j - 1]));
  }
  const QuadratureResult r = integrate(mu, Integrand::separable(std::move(axes)), opts.quad);
  if (detail) *detail = r;
  return r.value;
}

Complex pattern_residual(const MeasureSpec& mu, const HalfPlanePoint& z, const SignVector& rho,
                         const CheckOptions& opts, QuadratureResult* detail) {
  if (static_cast<int>(rho.size()) != mu.dim() || z.dim() != mu.dim())
    throw DimensionError("pattern or point dimension mismatch");
  const QuadratureResult r = integrate(mu, pattern_integrand(rho, z), opts.quad);
  if (detail) *detail = r;
  return r.value;
}

Complex moment_residual(const MeasureSpec& mu, const MultiIndex& m, const CheckOptions& opts,
                        QuadratureResult* detail) {
  if (static_cast<int>(m.size()) != mu.dim())
    throw DimensionError("multi-index dimension mismatch");
  const QuadratureResult r = integrate(mu, moment_integrand(m), opts.quad);
  if (detail) *detail = r;
  return r.value;
}

Complex lebesgue_axis_residual(const MeasureSpec& mu, const HalfPlanePoint& z, int axis,
                               const CheckOptions& opts, QuadratureResult* detail) {
  const int n = mu.dim();
  if (axis < 1 || axis > n) throw DimensionError("axis selector out of range");
  if (z.dim() != n) throw DimensionError("sample point dimension mismatch");
  std::vector<ScalarFn> axes;
  axes.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    if (j == axis)
      axes.push_back(squared_factor_axis(z[j - 1]));
    else
      axes.push_back(poisson_bracket_axis(z[j - 1]));
  }
  const QuadratureResult r = integrate(mu, Integrand::separable(std::move(axes)), opts.quad);
  if (detail) *detail = r;
  return r.value;
}

ConditionReport nevanlinna_check(const MeasureSpec& mu, const SamplePlan& plan,
                                 ConditionForm form, const CheckOptions& opts) {
  const int n = mu.dim();
  if (n < 2) throw DimensionError("the Nevanlinna condition is vacuous in dimension 1");
  if (plan.dim() != n) throw DimensionError("plan dimension mismatch");
  require_growth(mu, opts);

  ConditionReport report;
  report.condition_id = std::string("nevanlinna.") + to_char(form);
  report.threshold = opts.threshold;
  report.note = "sampled plan only; holds means no sampled residual exceeded the threshold";

  const auto mixed_sign = [](const SignVector& rho) {
    return contains(rho, 1) && contains(rho, -1);
  };

  switch (form) {
    case ConditionForm::A: {
      report.equation_id = "mixed-sign-products-sum";
      const std::vector<SignVector> patterns = sign_vectors(n, mixed_sign);
      for (const HalfPlanePoint& z : plan.z_samples()) {
        const QuadratureResult r =
            integrate(mu, pattern_sum_integrand(patterns, z), opts.quad);
        SampleResidual s = record(r);
        s.point = z.coords();
        report.samples.push_back(std::move(s));
      }
      break;
    }
    case ConditionForm::B: {
      report.equation_id = "mixed-sign-product";
      const std::vector<SignVector> patterns = sign_vectors(n, mixed_sign);
      for (const HalfPlanePoint& z : plan.z_samples()) {
        for (const SignVector& rho : patterns) {
          QuadratureResult r;
          pattern_residual(mu, z, rho, opts, &r);
          SampleResidual s = record(r);
          s.point = z.coords();
          s.index = rho;
          report.samples.push_back(std::move(s));
        }
      }
      break;
    }
    case ConditionForm::C: {
      report.equation_id = "conjugate-pair-kernel";
      for (const HalfPlanePoint& z : plan.z_samples()) {
        for (int l1 = 1; l1 <= n; ++l1) {
          for (int l2 = l1 + 1; l2 <= n; ++l2) {
            QuadratureResult r;
            nevanlinna_residual(mu, z, l1, l2, opts, &r);
            SampleResidual s = record(r);
            s.point = z.coords();
            s.axis_pair = {l1, l2};
            report.samples.push_back(std::move(s));
          }
        }
      }
      break;
    }
    case ConditionForm::D: {
      report.equation_id = "mixed-moebius-moments";
      const std::vector<MultiIndex> indices =
          index_box(n, plan.max_index(), has_positive_and_negative);
      for (const MultiIndex& m : indices) {
        QuadratureResult r;
        moment_residual(mu, m, opts, &r);
        SampleResidual s = record(r);
        s.index = m;
        report.samples.push_back(std::move(s));
      }
      break;
    }
  }
  finalize_report(report);
  return report;
}

ConditionReport lebesgue_check(const MeasureSpec& mu, const SamplePlan& plan,
                               ConditionForm variant, const CheckOptions& opts,
                               LebesgueMode mode) {
  const int n = mu.dim();
  if (plan.dim() != n) throw DimensionError("plan dimension mismatch");
  require_growth(mu, opts);
  if (mode == LebesgueMode::Theorem && n >= 2) {
    const ConditionReport gate = nevanlinna_check(mu, plan, ConditionForm::C, opts);
    if (gate.verdict == Verdict::Fails)
      throw OrderingError(
          "measure is not a Nevanlinna measure; the theorem-form check does not apply");
    if (gate.verdict == Verdict::Inconclusive) {
      ConditionReport report;
      report.condition_id = std::string("lebesgue.") + to_char(variant);
      report.threshold = opts.threshold;
      report.verdict = Verdict::Inconclusive;
      report.note = "prerequisite Nevanlinna check was inconclusive";
      return report;
    }
  }

  ConditionReport report;
  report.condition_id = std::string("lebesgue.") + to_char(variant);
  report.threshold = opts.threshold;
  report.note = mode_note(mode);

  const auto no_plus_nonzero = [](const SignVector& rho) {
    return !contains(rho, 1) && is_nonzero(rho);
  };
  const auto nonzero_pattern = [](const SignVector& rho) { return is_nonzero(rho); };

  switch (variant) {
    case ConditionForm::A: {
      report.equation_id =
          mode == LebesgueMode::Theorem ? "no-plus-products-sum" : "nonzero-products-sum";
      const std::vector<SignVector> patterns =
          sign_vectors(n, mode == LebesgueMode::Theorem
                              ? std::function<bool(const SignVector&)>(no_plus_nonzero)
                              : std::function<bool(const SignVector&)>(nonzero_pattern));
      for (const HalfPlanePoint& z : plan.z_samples()) {
        const QuadratureResult r =
            integrate(mu, pattern_sum_integrand(patterns, z), opts.quad);
        SampleResidual s = record(r);
        s.point = z.coords();
        report.samples.push_back(std::move(s));
      }
      break;
    }
    case ConditionForm::B: {
      report.equation_id =
          mode == LebesgueMode::Theorem ? "no-plus-product" : "nonzero-product";
      const std::vector<SignVector> patterns =
          sign_vectors(n, mode == LebesgueMode::Theorem
                              ? std::function<bool(const SignVector&)>(no_plus_nonzero)
                              : std::function<bool(const SignVector&)>(nonzero_pattern));
      for (const HalfPlanePoint& z : plan.z_samples()) {
        for (const SignVector& rho : patterns) {
          QuadratureResult r;
          pattern_residual(mu, z, rho, opts, &r);
          SampleResidual s = record(r);
          s.point = z.coords();
          s.index = rho;
          report.samples.push_back(std::move(s));
        }
      }
      break;
    }
    case ConditionForm::C: {
      report.equation_id = mode == LebesgueMode::Theorem ? "squared-factor-product"
                                                         : "squared-factor-plus-kernel";
      for (const HalfPlanePoint& z : plan.z_samples()) {
        for (int j = 1; j <= n; ++j) {
          QuadratureResult r;
          lebesgue_axis_residual(mu, z, j, opts, &r);
          SampleResidual s = record(r);
          s.point = z.coords();
          s.axis = j;
          report.samples.push_back(std::move(s));
        }
        if (mode == LebesgueMode::Corollary && n >= 2) {
          for (int l1 = 1; l1 <= n; ++l1) {
            for (int l2 = l1 + 1; l2 <= n; ++l2) {
              QuadratureResult r;
              nevanlinna_residual(mu, z, l1, l2, opts, &r);
              SampleResidual s = record(r);
              s.point = z.coords();
              s.axis_pair = {l1, l2};
              report.samples.push_back(std::move(s));
            }
          }
        }
      }
      break;
    }
    case ConditionForm::D: {
      report.equation_id = mode == LebesgueMode::Theorem ? "nonnegative-moebius-moments"
                                                         : "nonzero-moebius-moments";
      const std::vector<MultiIndex> indices =
          index_box(n, plan.max_index(),
                    mode == LebesgueMode::Theorem
                        ? std::function<bool(const MultiIndex&)>(is_nonnegative_nonzero)
                        : std::function<bool(const MultiIndex&)>(is_nonzero));
      for (const MultiIndex& m : indices) {
        QuadratureResult r;
        moment_residual(mu, m, opts, &r);
        SampleResidual s = record(r);
        s.index = m;
        report.samples.push_back(std::move(s));
      }
      break;
    }
  }
  finalize_report(report);
  if (report.verdict == Verdict::Holds) {
    const QuadratureResult growth = growth_integral(mu, opts.quad);
    const double pi_n = std::pow(std::numbers::pi, n);
    report.fitted_constant = growth.value.real() / pi_n;
    report.fitted_constant_error = growth.error_estimate / pi_n;
  }
  return report;
}

ConditionReport lebesgue_check_dim1(const MeasureSpec& mu, const SamplePlan& plan,
                                    const CheckOptions& opts) {
  if (mu.dim() != 1) throw DimensionError("dimension-1 wrapper needs a 1-dimensional measure");
  require_growth(mu, opts);
  ConditionReport report;
  report.condition_id = "lebesgue-dim1";
  report.equation_id = "poisson-minus-growth-weight";
  report.threshold = opts.threshold;
  report.note = mode_note(LebesgueMode::Corollary);
  for (const HalfPlanePoint& z : plan.z_samples()) {
    const Complex z0 = z[0];
    const ScalarFn axis = [z0](double t) {
      return Complex{z0.imag() / std::norm(t - z0) - 1.0 / (1.0 + t * t), 0.0};
    };
    const QuadratureResult r = integrate(mu, Integrand::separable({axis}), opts.quad);
    SampleResidual s = record(r);
    s.point = z.coords();
    report.samples.push_back(std::move(s));
  }
  finalize_report(report);
  return report;
}

ConditionReport lebesgue_check_dim2(const MeasureSpec& mu, const SamplePlan& plan,
                                    const CheckOptions& opts) {
  if (mu.dim() != 2) throw DimensionError("dimension-2 wrapper needs a 2-dimensional measure");
  require_growth(mu, opts);
  ConditionReport report;
  report.condition_id = "lebesgue-dim2";
  report.equation_id = "poisson-minus-growth-weight";
  report.threshold = opts.threshold;
  report.note = mode_note(LebesgueMode::Corollary);
  for (const HalfPlanePoint& z : plan.z_samples()) {
    std::vector<SeparableTerm> terms(2);
    for (int j = 0; j < 2; ++j) {
      const Complex zj = z[j];
      terms[0].axes.push_back(
          [zj](double t) { return Complex{zj.imag() / std::norm(t - zj), 0.0}; });
      terms[1].axes.push_back(growth_axis());
    }
    terms[1].coefficient = Complex{-1.0, 0.0};
    const QuadratureResult r =
        integrate(mu, Integrand::separable_sum(2, std::move(terms)), opts.quad);
    SampleResidual s = record(r);
    s.point = z.coords();
    report.samples.push_back(std::move(s));
  }
  finalize_report(report);
  return report;
}

ConditionReport lebesgue_refinement_check(const MeasureSpec& mu, const SamplePlan& plan,
                                          const CheckOptions& opts) {
  const int n = mu.dim();
  if (plan.dim() != n) throw DimensionError("plan dimension mismatch");
  require_growth(mu, opts);
  ConditionReport report;
  report.condition_id = "lebesgue-refinement";
  report.equation_id = "squared-factor-reference-product";
  report.threshold = opts.threshold;
  report.note = "sampled plan only";
  for (const HalfPlanePoint& z : plan.z_samples()) {
    for (int j = 1; j <= n; ++j) {
      std::vector<ScalarFn> axes;
      for (int l = 1; l <= n; ++l) {
        if (l == j) {
          axes.push_back(squared_factor_axis(z[l - 1]));
        } else {
          const Complex zl = z[l - 1];
          axes.push_back([zl](double t) { return 1.0 / (t - zl) - 1.0 / (t + kI); });
        }
      }
      const QuadratureResult r = integrate(mu, Integrand::separable(std::move(axes)), opts.quad);
      SampleResidual s = record(r);
      s.point = z.coords();
      s.axis = j;
      report.samples.push_back(std::move(s));
    }
  }
  finalize_report(report);
  return report;
}

}  // namespace hn
