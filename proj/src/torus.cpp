#include "hn/torus.hpp"

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

void require_finite_mass(const MeasureSpec& nu) {
  if (nu.domain() != Domain::Torus) throw DomainError("expected a torus measure");
  if (mass_declared_divergent(nu)) throw DivergenceError("torus measure has infinite mass");
}

ScalarFn fourier_axis(int m) {
  return [m](double s) { return std::exp(kI * (static_cast<double>(m) * s)); };
}

ScalarFn disk_factor_axis(int k, Complex w) {
  return [k, w](double s) { return disk_factor(k, w, s); };
}

// e^{is} ((w - 1)/(w - e^{is}))^2, the differentiated axis of variant (d)
ScalarFn squared_disk_axis(Complex w) {
  return [w](double s) {
    const Complex phase = std::exp(kI * s);
    const Complex ratio = (w - 1.0) / (w - phase);
    return phase * ratio * ratio;
  };
}

// e^{is} ((conj w - 1)/(conj w e^{is} - 1))^2, its conjugate-slot partner
ScalarFn squared_disk_axis_conjugate(Complex w) {
  return [w](double s) {
    const Complex phase = std::exp(kI * s);
    const Complex wc = std::conj(w);
    const Complex ratio = (wc - 1.0) / (wc * phase - 1.0);
    return phase * ratio * ratio;
  };
}

// w/(e^{is} - w) - e^{-is}/(e^{-is} - conj w), the undifferentiated bracket
ScalarFn disk_bracket_axis(Complex w) {
  return [w](double s) {
    const Complex phase = std::exp(kI * s);
    const Complex anti = std::conj(phase);
    return w / (phase - w) - anti / (anti - std::conj(w));
  };
}

SampleResidual record(const QuadratureResult& r) {
  SampleResidual s;
  s.residual = r.value;
  s.quad_error = r.error_estimate;
  s.converged = r.converged;
  return s;
}

Integrand moment_integrand(const MultiIndex& m) {
  std::vector<ScalarFn> axes;
  axes.reserve(m.size());
  for (int e : m) axes.push_back(fourier_axis(e));
  return Integrand::separable(std::move(axes));
}

Integrand pattern_integrand(const SignVector& rho, const PolydiskPoint& w) {
  std::vector<ScalarFn> axes;
  for (int j = 0; j < w.dim(); ++j)
    axes.push_back(disk_factor_axis(rho[static_cast<std::size_t>(j)], w[j]));
  return Integrand::separable(std::move(axes));
}

Integrand pattern_sum_integrand(const std::vector<SignVector>& patterns,
                                const PolydiskPoint& w) {
  std::vector<SeparableTerm> terms;
  terms.reserve(patterns.size());
  for (const SignVector& rho : patterns) {
    SeparableTerm term;
    for (int j = 0; j < w.dim(); ++j)
      term.axes.push_back(disk_factor_axis(rho[static_cast<std::size_t>(j)], w[j]));
    terms.push_back(std::move(term));
  }
  return Integrand::separable_sum(w.dim(), std::move(terms));
}

EvalResult from_quadrature(Complex constant, const QuadratureResult& integral, double scale) {
  EvalResult e;
  e.value = constant + scale * integral.value;
  e.error_estimate = scale * integral.error_estimate;
  e.evaluations = integral.evaluations;
  e.converged = integral.converged;
  return e;
}

}  // namespace

DiskRepresentation::DiskRepresentation(double alpha_, MeasureSpec nu_)
    : alpha(alpha_), nu(std::move(nu_)) {
  require_finite_mass(nu);
}

DiskRepresentation::DiskRepresentation(MeasureSpec nu_)
    : DiskRepresentation(0.0, std::move(nu_)) {}

Complex fourier_coefficient(const MeasureSpec& nu, const MultiIndex& m,
                            const QuadratureConfig& cfg, QuadratureResult* detail) {
  if (static_cast<int>(m.size()) != nu.dim())
    throw DimensionError("multi-index dimension mismatch");
  require_finite_mass(nu);
  const QuadratureResult r = integrate(nu, moment_integrand(m), cfg);
  if (detail) *detail = r;
  return r.value;
}

ConditionReport mixed_fourier_check(const MeasureSpec& nu, int max_index,
                                    const CheckOptions& opts) {
  require_finite_mass(nu);
  ConditionReport report;
  report.condition_id = "fourier";
  report.equation_id = "mixed-fourier-coefficients";
  report.threshold = opts.threshold;
  const int n = nu.dim();
  if (n == 1) {
    report.note = "vacuous in dimension 1; every finite measure qualifies";
    report.verdict = Verdict::Holds;
    return report;
  }
  report.note = "coefficients sampled over |m_j| <= " + std::to_string(max_index);
  for (const MultiIndex& m : index_box(n, max_index, has_positive_and_negative)) {
    QuadratureResult r;
    fourier_coefficient(nu, m, opts.quad, &r);
    SampleResidual s = record(r);
    s.index = m;
    report.samples.push_back(std::move(s));
  }
  finalize_report(report);
  return report;
}

EvalResult evaluate_disk(const DiskRepresentation& rep, const PolydiskPoint& w,
                         const QuadratureConfig& cfg) {
  const int n = rep.dim();
  if (w.dim() != n) throw DimensionError("evaluation point dimension mismatch");
  std::vector<SeparableTerm> terms(2);
  for (int j = 0; j < n; ++j) {
    const Complex wj = w[j];
    terms[0].axes.push_back(
        [wj](double s) { return 1.0 / (1.0 - wj * std::exp(-kI * s)); });
    terms[1].axes.push_back([](double) { return Complex{1.0, 0.0}; });
  }
  terms[0].coefficient = Complex{2.0, 0.0};
  terms[1].coefficient = Complex{-1.0, 0.0};
  const QuadratureResult integral =
      integrate(rep.nu, Integrand::separable_sum(n, std::move(terms)), cfg);
  const double scale = std::pow(2.0 * std::numbers::pi, -n);
  return from_quadrature(kI * rep.alpha, integral, scale);
}

EvalResult evaluate_disk_derivative(const DiskRepresentation& rep, int j,
                                    const PolydiskPoint& w, const QuadratureConfig& cfg) {
  const int n = rep.dim();
  if (w.dim() != n) throw DimensionError("evaluation point dimension mismatch");
  if (j < 1 || j > n) throw DimensionError("coordinate selector out of range");
  SeparableTerm term;
  term.coefficient = Complex{2.0, 0.0};
  for (int l = 0; l < n; ++l) {
    const Complex wl = w[l];
    if (l + 1 == j) {
      term.axes.push_back([wl](double s) {
        const Complex e = std::exp(-kI * s);
        const Complex d = 1.0 - wl * e;
        return e / (d * d);
      });
    } else {
      term.axes.push_back([wl](double s) { return 1.0 / (1.0 - wl * std::exp(-kI * s)); });
    }
  }
  const QuadratureResult integral =
      integrate(rep.nu, Integrand::separable_sum(n, {std::move(term)}), cfg);
  const double scale = std::pow(2.0 * std::numbers::pi, -n);
  return from_quadrature(Complex{0.0, 0.0}, integral, scale);
}

ConditionReport check_disk_positivity(const DiskRepresentation& rep, const SamplePlan& plan,
                                      const CheckOptions& opts) {
  if (plan.dim() != rep.dim()) throw DimensionError("plan dimension mismatch");
  ConditionReport report;
  report.condition_id = "disk-positivity";
  report.equation_id = "nonnegative-real-part";
  report.threshold = opts.threshold;
  report.note = "residual is the violation max(0, -Re)";
  for (const PolydiskPoint& w : plan.disk_samples()) {
    const EvalResult v = evaluate_disk(rep, w, opts.quad);
    SampleResidual s;
    s.point = w.coords();
    s.residual = Complex{std::max(0.0, -v.value.real()), 0.0};
    s.quad_error = v.error_estimate;
    s.converged = v.converged;
    report.samples.push_back(std::move(s));
  }
  finalize_report(report);
  return report;
}

ConditionReport torus_lebesgue_check(const MeasureSpec& nu, const SamplePlan& plan,
                                     ConditionForm variant, const CheckOptions& opts,
                                     LebesgueMode mode) {
  const int n = nu.dim();
  if (plan.dim() != n) throw DimensionError("plan dimension mismatch");
  require_finite_mass(nu);
  if (mode == LebesgueMode::Theorem && n >= 2) {
    const ConditionReport gate = mixed_fourier_check(nu, plan.max_index(), opts);
    if (gate.verdict == Verdict::Fails)
      throw OrderingError(
          "measure has non-vanishing mixed Fourier coefficients; theorem form does not apply");
    if (gate.verdict == Verdict::Inconclusive) {
      ConditionReport report;
      report.condition_id = std::string("torus-lebesgue.") + to_char(variant);
      report.threshold = opts.threshold;
      report.verdict = Verdict::Inconclusive;
      report.note = "prerequisite mixed-coefficient check was inconclusive";
      return report;
    }
  }

  ConditionReport report;
  report.condition_id = std::string("torus-lebesgue.") + to_char(variant);
  report.threshold = opts.threshold;
  report.note = mode == LebesgueMode::Theorem
                    ? "sampled plan only; assumes vanishing mixed coefficients"
                    : "sampled plan only; no mixed-coefficient assumption";

  const auto no_plus_nonzero = [](const SignVector& rho) {
    return !contains(rho, 1) && is_nonzero(rho);
  };
  const auto nonzero_pattern = [](const SignVector& rho) { return is_nonzero(rho); };
  const std::vector<PolydiskPoint> disk = plan.disk_samples();

  switch (variant) {
    case ConditionForm::A: {
      report.equation_id = mode == LebesgueMode::Theorem ? "disk-no-plus-products-sum"
                                                         : "disk-nonzero-products-sum";
      const std::vector<SignVector> patterns =
          sign_vectors(n, mode == LebesgueMode::Theorem
                              ? std::function<bool(const SignVector&)>(no_plus_nonzero)
                              : std::function<bool(const SignVector&)>(nonzero_pattern));
      for (const PolydiskPoint& w : disk) {
        const QuadratureResult r = integrate(nu, pattern_sum_integrand(patterns, w), opts.quad);
        SampleResidual s = record(r);
        s.point = w.coords();
        report.samples.push_back(std::move(s));
      }
      break;
    }
    case ConditionForm::B: {
      report.equation_id =
          mode == LebesgueMode::Theorem ? "disk-no-plus-product" : "disk-nonzero-product";
      const std::vector<SignVector> patterns =
          sign_vectors(n, mode == LebesgueMode::Theorem
                              ? std::function<bool(const SignVector&)>(no_plus_nonzero)
                              : std::function<bool(const SignVector&)>(nonzero_pattern));
      for (const PolydiskPoint& w : disk) {
        for (const SignVector& rho : patterns) {
          const QuadratureResult r = integrate(nu, pattern_integrand(rho, w), opts.quad);
          SampleResidual s = record(r);
          s.point = w.coords();
          s.index = rho;
          report.samples.push_back(std::move(s));
        }
      }
      break;
    }
    case ConditionForm::C: {
      report.equation_id = mode == LebesgueMode::Theorem ? "nonnegative-fourier-coefficients"
                                                         : "nonzero-fourier-coefficients";
      const std::vector<MultiIndex> indices =
          index_box(n, plan.max_index(),
                    mode == LebesgueMode::Theorem
                        ? std::function<bool(const MultiIndex&)>(is_nonnegative_nonzero)
                        : std::function<bool(const MultiIndex&)>(is_nonzero));
      for (const MultiIndex& m : indices) {
        QuadratureResult r;
        fourier_coefficient(nu, m, opts.quad, &r);
        SampleResidual s = record(r);
        s.index = m;
        report.samples.push_back(std::move(s));
      }
      break;
    }
    case ConditionForm::D: {
      report.equation_id = "disk-squared-factor-product";
      for (const PolydiskPoint& w : disk) {
        for (int j = 1; j <= n; ++j) {
          std::vector<ScalarFn> axes;
          for (int l = 1; l <= n; ++l) {
            if (l == j)
              axes.push_back(squared_disk_axis(w[l - 1]));
            else
              axes.push_back(disk_bracket_axis(w[l - 1]));
          }
          const QuadratureResult r =
              integrate(nu, Integrand::separable(std::move(axes)), opts.quad);
          SampleResidual s = record(r);
          s.point = w.coords();
          s.axis = j;
          report.samples.push_back(std::move(s));
        }
        if (mode == LebesgueMode::Corollary && n >= 2) {
          for (int j1 = 1; j1 <= n; ++j1) {
            for (int j2 = j1 + 1; j2 <= n; ++j2) {
              std::vector<ScalarFn> axes;
              for (int l = 1; l <= n; ++l) {
                if (l == j1)
                  axes.push_back(squared_disk_axis(w[l - 1]));
                else if (l == j2)
                  axes.push_back(squared_disk_axis_conjugate(w[l - 1]));
                else
                  axes.push_back(disk_bracket_axis(w[l - 1]));
              }
              const QuadratureResult r =
                  integrate(nu, Integrand::separable(std::move(axes)), opts.quad);
              SampleResidual s = record(r);
              s.point = w.coords();
              s.axis_pair = {j1, j2};
              report.samples.push_back(std::move(s));
            }
          }
        }
      }
      break;
    }
  }
  finalize_report(report);
  if (report.verdict == Verdict::Holds) {
    const QuadratureResult mass = total_mass(nu, opts.quad);
    const double norm = std::pow(2.0 * std::numbers::pi, n);
    report.fitted_constant = mass.value.real() / norm;
    report.fitted_constant_error = mass.error_estimate / norm;
  }
  return report;
}

}  // namespace hn
