#include "hn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace hn {

namespace {

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1].  The 7-point Gauss rule
// is embedded at the odd Kronrod nodes.
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct Panel {
  double a, b;
  Complex kronrod;
  double error;
  long seq;  // insertion order, breaks ties deterministically
};

struct PanelWorse {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.seq > y.seq;
  }
};

Panel evaluate_panel(const ScalarFn& f, double a, double b, long seq) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex kronrod{0.0, 0.0};
  Complex gauss{0.0, 0.0};
  for (int i = 0; i < 8; ++i) {
    const double offset = half * kKronrodNodes[i];
    Complex v;
    if (i == 7) {
      v = f(mid);
      kronrod += kKronrodWeights[i] * v;
      gauss += kGaussWeights[3] * v;
    } else {
      const Complex lo = f(mid - offset);
      const Complex hi = f(mid + offset);
      v = lo + hi;
      kronrod += kKronrodWeights[i] * v;
      if (i % 2 == 1) gauss += kGaussWeights[i / 2] * v;
    }
  }
  kronrod *= half;
  gauss *= half;
  const Complex diff = kronrod - gauss;
  double err = std::abs(diff.real()) + std::abs(diff.imag());
  if (!std::isfinite(err) || !std::isfinite(kronrod.real()) || !std::isfinite(kronrod.imag()))
    err = std::numeric_limits<double>::infinity();
  return Panel{a, b, kronrod, err, seq};
}

Complex pairwise_sum(std::span<const Complex> values) {
  if (values.empty()) return Complex{0.0, 0.0};
  if (values.size() == 1) return values[0];
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

constexpr int kInitialPanels = 8;

}  // namespace

QuadratureResult integrate_interval(const ScalarFn& f, double a, double b,
                                    const QuadratureConfig& cfg) {
  QuadratureResult result;
  if (a == b) return result;

  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
  long seq = 0;
  Complex total{0.0, 0.0};
  double total_error = 0.0;
  const double step = (b - a) / kInitialPanels;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double lo = a + i * step;
    const double hi = (i + 1 == kInitialPanels) ? b : a + (i + 1) * step;
    Panel p = evaluate_panel(f, lo, hi, seq++);
    total += p.kronrod;
    total_error += p.error;
    queue.push(p);
  }
  result.evaluations = 15 * kInitialPanels;

  int panels = kInitialPanels;
  while (total_error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) &&
         panels < cfg.max_subdivisions) {
    Panel worst = queue.top();
    queue.pop();
    total -= worst.kronrod;
    total_error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval no longer bisectable in double precision
      total += worst.kronrod;
      total_error += worst.error;
      queue.push(worst);
      break;
    }
    Panel left = evaluate_panel(f, worst.a, mid, seq++);
    Panel right = evaluate_panel(f, mid, worst.b, seq++);
    result.evaluations += 30;
    total += left.kronrod + right.kronrod;
    total_error += left.error + right.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  std::vector<Panel> all;
  all.reserve(queue.size());
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::vector<Complex> values;
  values.reserve(all.size());
  double error = 0.0;
  for (const Panel& p : all) {
    values.push_back(p.kronrod);
    error += p.error;
  }
  result.value = pairwise_sum(values);
  result.error_estimate = error;
  result.converged =
      std::isfinite(error) &&
      error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(result.value));
  return result;
}

QuadratureResult integrate_real_line(const ScalarFn& f, const QuadratureConfig& cfg) {
  const auto substituted = [&f](double theta) {
    const double t = std::tan(theta);
    return f(t) * (1.0 + t * t);
  };
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  return integrate_interval(substituted, -kHalfPi, kHalfPi, cfg);
}

QuadratureResult integrate_torus_axis(const ScalarFn& f, const QuadratureConfig& cfg) {
  return integrate_interval(f, 0.0, 2.0 * std::numbers::pi, cfg);
}

Integrand Integrand::separable(std::vector<ScalarFn> axes) {
  const int dim = static_cast<int>(axes.size());
  std::vector<SeparableTerm> terms(1);
  terms[0].axes = std::move(axes);
  return Integrand(dim, std::move(terms), nullptr);
}

Integrand Integrand::separable_sum(int dim, std::vector<SeparableTerm> terms) {
  for (const SeparableTerm& term : terms) {
    if (static_cast<int>(term.axes.size()) != dim)
      throw DimensionError("separable term arity does not match integrand dimension");
  }
  return Integrand(dim, std::move(terms), nullptr);
}

Integrand Integrand::generic(int dim, GenericFn fn) {
  return Integrand(dim, {}, std::move(fn));
}

Complex Integrand::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw DimensionError("integrand evaluated at point of wrong dimension");
  if (generic_) return generic_(x);
  Complex sum{0.0, 0.0};
  for (const SeparableTerm& term : terms_) {
    Complex prod = term.coefficient;
    for (int j = 0; j < dim_; ++j) prod *= term.axes[static_cast<std::size_t>(j)](x[static_cast<std::size_t>(j)]);
    sum += prod;
  }
  return sum;
}

}  // namespace hn
