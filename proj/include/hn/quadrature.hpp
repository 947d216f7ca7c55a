#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hn/types.hpp"

namespace hn {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  /// Panel budget per one-dimensional integral.
  int max_subdivisions = 2000;

  /// Config with both tolerances scaled, for sub-integrals of composite
  /// integrals (axis factors, nested stages).
  QuadratureConfig tightened(double abs_factor, double rel_factor) const {
    QuadratureConfig c = *this;
    c.abs_tol *= abs_factor;
    c.rel_tol *= rel_factor;
    return c;
  }
};

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;

  QuadratureResult& operator+=(const QuadratureResult& other) {
    value += other.value;
    error_estimate += other.error_estimate;
    evaluations += other.evaluations;
    converged = converged && other.converged;
    return *this;
  }

  QuadratureResult scaled(Complex c) const {
    QuadratureResult r = *this;
    r.value *= c;
    r.error_estimate *= std::abs(c);
    return r;
  }
};

using ScalarFn = std::function<Complex(double)>;

/// Adaptive Gauss-Kronrod 15(7) over [a, b].  The real and imaginary parts
/// share one panel subdivision; the panel error is the sum of the two parts'
/// Kronrod-Gauss differences.  Panels are bisected worst-first until the
/// summed error meets max(abs_tol, rel_tol * |value|) or the budget runs out.
/// The final value sums panels in interval order with pairwise summation,
/// so results are deterministic for a fixed config.
QuadratureResult integrate_interval(const ScalarFn& f, double a, double b,
                                    const QuadratureConfig& cfg);

/// Integral over R via the substitution t = tan(theta), theta in (-pi/2, pi/2).
QuadratureResult integrate_real_line(const ScalarFn& f, const QuadratureConfig& cfg);

/// Integral over one torus axis [0, 2pi).
QuadratureResult integrate_torus_axis(const ScalarFn& f, const QuadratureConfig& cfg);

struct SeparableTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<ScalarFn> axes;
};

/// Integrand on R^n or [0,2pi)^n: either a sum of separable terms
/// (coefficient times a product of one-variable factors) or an opaque
/// n-variate function.  Separable structure is what lets product-type
/// measures factor an n-dimensional integral into one-dimensional pieces;
/// opaque integrands fall back to nested quadrature and tensor grids.
class Integrand {
public:
  using GenericFn = std::function<Complex(std::span<const double>)>;

  static Integrand separable(std::vector<ScalarFn> axes);
  static Integrand separable_sum(int dim, std::vector<SeparableTerm> terms);
  static Integrand generic(int dim, GenericFn fn);

  int dim() const { return dim_; }
  bool is_separable() const { return !terms_.empty() || generic_ == nullptr; }
  const std::vector<SeparableTerm>& terms() const { return terms_; }

  /// Pointwise evaluation, available for every representation.
  Complex operator()(std::span<const double> x) const;

private:
  Integrand(int dim, std::vector<SeparableTerm> terms, GenericFn fn)
      : dim_(dim), terms_(std::move(terms)), generic_(std::move(fn)) {}

  int dim_ = 0;
  std::vector<SeparableTerm> terms_;
  GenericFn generic_;
};

}  // namespace hn
