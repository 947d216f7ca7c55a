#include "hn/herglotz.hpp"

#include <cmath>
#include <numbers>

namespace hn {

namespace {

const Complex kI{0.0, 1.0};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_growth_finite(const MeasureSpec& mu, const QuadratureConfig& cfg) {
  if (growth_declared_divergent(mu))
    throw DivergenceError("representing measure violates the growth condition");
  if (!growth_integral(mu, cfg).converged)
    throw DivergenceError("growth integral did not converge for the representing measure");
}

/// K(z, .) as a two-term separable integrand in t.
Integrand kernel_integrand(const HalfPlanePoint& z) {
  const int n = z.dim();
  std::vector<SeparableTerm> terms(2);
  Complex scale{1.0, 0.0};
  for (int j = 0; j < n; ++j) {
    const Complex zj = z[j];
    terms[0].axes.push_back([zj](double t) { return 1.0 / (t - zj) - 1.0 / (t + kI); });
    terms[1].axes.push_back([](double t) { return 1.0 / (t - kI) - 1.0 / (t + kI); });
    scale /= 2.0 * kI;
  }
  terms[0].coefficient = 2.0 * kI * scale;
  terms[1].coefficient = -kI * scale;
  return Integrand::separable_sum(n, std::move(terms));
}

Integrand kernel_derivative_integrand(const MultiIndex& k, const HalfPlanePoint& z) {
  const int n = z.dim();
  SeparableTerm term;
  Complex scale{1.0, 0.0};
  for (int j = 0; j < n; ++j) {
    const Complex zj = z[j];
    const int order = k[static_cast<std::size_t>(j)];
    if (order == 0) {
      term.axes.push_back([zj](double t) { return 1.0 / (t - zj) - 1.0 / (t + kI); });
    } else {
      term.axes.push_back([zj, order](double t) { return std::pow(t - zj, -(order + 1)); });
      term.coefficient *= factorial(order);
    }
    if (j > 0) scale /= 2.0 * kI;
  }
  term.coefficient *= scale;
  return Integrand::separable_sum(n, {std::move(term)});
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

HalfPlaneRepresentation::HalfPlaneRepresentation(double a_, std::vector<double> b_,
                                                 MeasureSpec mu_)
    : a(a_), b(std::move(b_)), mu(std::move(mu_)) {
  if (mu.domain() != Domain::RealSpace)
    throw DomainError("half-plane representation needs a real-space measure");
  if (static_cast<int>(b.size()) != mu.dim())
    throw DimensionError("linear coefficient count does not match dimension");
  for (double coefficient : b)
    if (!(coefficient >= 0.0)) throw SpecError("linear coefficients must be non-negative");
}

HalfPlaneRepresentation::HalfPlaneRepresentation(MeasureSpec mu_)
    : HalfPlaneRepresentation(0.0, std::vector<double>(static_cast<std::size_t>(mu_.dim()), 0.0),
                              std::move(mu_)) {}

EvalResult evaluate_half_plane(const HalfPlaneRepresentation& rep, const HalfPlanePoint& z,
                               const QuadratureConfig& cfg) {
  if (z.dim() != rep.dim()) throw DimensionError("evaluation point dimension mismatch");
  require_growth_finite(rep.mu, cfg);
  Complex linear{rep.a, 0.0};
  for (int j = 0; j < rep.dim(); ++j) linear += rep.b[static_cast<std::size_t>(j)] * z[j];
  const QuadratureResult integral = integrate(rep.mu, kernel_integrand(z), cfg);
  const double scale = std::pow(std::numbers::pi, -rep.dim());
  return from_quadrature(linear, integral, scale);
}

EvalResult evaluate_half_plane_derivative(const HalfPlaneRepresentation& rep,
                                          const MultiIndex& k, const HalfPlanePoint& z,
                                          const QuadratureConfig& cfg) {
  if (z.dim() != rep.dim() || static_cast<int>(k.size()) != rep.dim())
    throw DimensionError("evaluation point or multi-index dimension mismatch");
  const int order = multi_index_order(k);
  if (order < 1) throw DimensionError("derivative order must be at least 1");
  require_growth_finite(rep.mu, cfg);
  Complex linear{0.0, 0.0};
  if (order == 1) {
    for (int j = 0; j < rep.dim(); ++j)
      if (k[static_cast<std::size_t>(j)] == 1) linear += rep.b[static_cast<std::size_t>(j)];
  }
  const QuadratureResult integral =
      integrate(rep.mu, kernel_derivative_integrand(k, z), cfg);
  const double scale = std::pow(std::numbers::pi, -rep.dim());
  return from_quadrature(linear, integral, scale);
}

ConditionReport check_variable_dependence(const HalfPlaneRepresentation& rep,
                                          const SamplePlan& plan, const CheckOptions& opts) {
  const int n = rep.dim();
  if (n < 2) throw DimensionError("variable dependence needs at least two variables");
  if (plan.dim() != n) throw DimensionError("plan dimension mismatch");
  ConditionReport report;
  report.condition_id = "variable-dependence";
  report.equation_id = "lower-half-independence";
  report.threshold = opts.threshold;
  report.note = "derivatives in upper-half coordinates at points with one lower-half coordinate";
  for (const HalfPlanePoint& z : plan.z_samples()) {
    for (int lower = 0; lower < n; ++lower) {
      const HalfPlanePoint mixed = z.conjugated(lower);
      for (int l = 0; l < n; ++l) {
        if (l == lower) continue;
        MultiIndex k(static_cast<std::size_t>(n), 0);
        k[static_cast<std::size_t>(l)] = 1;
        const EvalResult d = evaluate_half_plane_derivative(rep, k, mixed, opts.quad);
        SampleResidual s;
        s.point = mixed.coords();
        s.axis = l + 1;
        s.residual = d.value;
        s.quad_error = d.error_estimate;
        s.converged = d.converged;
        report.samples.push_back(std::move(s));
      }
    }
  }
  finalize_report(report);
  return report;
}

ConditionReport check_positivity(const HalfPlaneRepresentation& rep, const SamplePlan& plan,
                                 const CheckOptions& opts) {
  if (plan.dim() != rep.dim()) throw DimensionError("plan dimension mismatch");
  ConditionReport report;
  report.condition_id = "positivity";
  report.equation_id = "nonnegative-imaginary-part";
  report.threshold = opts.threshold;
  report.note = "residual is the violation max(0, -Im)";
  for (const HalfPlanePoint& z : plan.z_samples()) {
    const EvalResult v = evaluate_half_plane(rep, z, opts.quad);
    SampleResidual s;
    s.point = z.coords();
    s.residual = Complex{std::max(0.0, -v.value.imag()), 0.0};
    s.quad_error = v.error_estimate;
    s.converged = v.converged;
    report.samples.push_back(std::move(s));
  }
  finalize_report(report);
  return report;
}

}  // namespace hn
