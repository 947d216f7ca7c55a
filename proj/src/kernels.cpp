#include "hn/kernels.hpp"

#include <cmath>

namespace hn {

namespace {

const Complex kI{0.0, 1.0};

void require_same_dim(int a, int b) {
  if (a != b) throw DimensionError("dimension mismatch between point arguments");
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Complex herglotz_kernel(const HalfPlanePoint& z, const RealPoint& t) {
  require_same_dim(z.dim(), t.dim());
  const int n = z.dim();
  Complex shifted{1.0, 0.0};   // prod_l (1/(t_l - z_l) - 1/(t_l + i))
  Complex centered{1.0, 0.0};  // prod_l (1/(t_l - i) - 1/(t_l + i))
  Complex scale{1.0, 0.0};     // (2i)^{-n}
  for (int l = 0; l < n; ++l) {
    shifted *= 1.0 / (t[l] - z[l]) - 1.0 / (t[l] + kI);
    centered *= 1.0 / (t[l] - kI) - 1.0 / (t[l] + kI);
    scale /= 2.0 * kI;
  }
  return kI * scale * (2.0 * shifted - centered);
}

Complex herglotz_kernel_derivative(const MultiIndex& k, const HalfPlanePoint& z,
                                   const RealPoint& t) {
  require_same_dim(z.dim(), static_cast<int>(k.size()));
  require_same_dim(z.dim(), t.dim());
  if (multi_index_order(k) < 1)
    throw DimensionError("derivative order must be at least 1; use herglotz_kernel");
  const int n = z.dim();
  Complex prod{1.0, 0.0};
  Complex scale{1.0, 0.0};  // (2i)^{-(n-1)}
  for (int l = 0; l < n; ++l) {
    const int order = k[static_cast<std::size_t>(l)];
    if (order == 0) {
      prod *= 1.0 / (t[l] - z[l]) - 1.0 / (t[l] + kI);
    } else {
      prod *= factorial(order) / std::pow(t[l] - z[l], order + 1);
    }
    if (l > 0) scale /= 2.0 * kI;
  }
  return scale * prod;
}

double poisson_kernel(const HalfPlanePoint& z, const RealPoint& t) {
  require_same_dim(z.dim(), t.dim());
  if (!z.all_upper()) throw DomainError("Poisson kernel requires all coordinates in C^+");
  double prod = 1.0;
  for (int l = 0; l < z.dim(); ++l) prod *= z[l].imag() / std::norm(t[l] - z[l]);
  return prod;
}

Complex nevanlinna_factor(int k, Complex z, double t) {
  switch (k) {
    case 0:
      return Complex{1.0 / (1.0 + t * t), 0.0};
    case -1:
      if (z.imag() == 0.0) throw DomainError("factor undefined for real z");
      return (1.0 / (t - z) - 1.0 / (t - kI)) / (2.0 * kI);
    case 1:
      if (z.imag() == 0.0) throw DomainError("factor undefined for real z");
      return (1.0 / (t + kI) - 1.0 / (t - std::conj(z))) / (2.0 * kI);
    default:
      throw DimensionError("factor index must be -1, 0 or 1");
  }
}

Complex nevanlinna_factor_product(const SignVector& rho, const HalfPlanePoint& z,
                                  const RealPoint& t) {
  require_same_dim(z.dim(), static_cast<int>(rho.size()));
  require_same_dim(z.dim(), t.dim());
  Complex prod{1.0, 0.0};
  for (int j = 0; j < z.dim(); ++j)
    prod *= nevanlinna_factor(rho[static_cast<std::size_t>(j)], z[j], t[j]);
  return prod;
}

Complex disk_factor(int k, Complex w, double s) {
  if (!(std::abs(w) < 1.0)) throw DomainError("disk factor requires |w| < 1");
  const Complex phase = std::exp(kI * s);
  switch (k) {
    case 0:
      return Complex{0.5, 0.0};
    case -1:
      return 0.5 * w / (phase - w);
    case 1:
      return -0.5 * std::conj(w) / (std::conj(phase) - std::conj(w));
    default:
      throw DimensionError("factor index must be -1, 0 or 1");
  }
}

Complex disk_factor_product(const SignVector& rho, const PolydiskPoint& w,
                            const TorusPoint& s) {
  require_same_dim(w.dim(), static_cast<int>(rho.size()));
  require_same_dim(w.dim(), s.dim());
  Complex prod{1.0, 0.0};
  for (int j = 0; j < w.dim(); ++j)
    prod *= disk_factor(rho[static_cast<std::size_t>(j)], w[j], s[j]);
  return prod;
}

Complex conjugation_alternating_sum(std::span<const Complex> xi,
                                    std::span<const Complex> eta) {
  if (xi.size() != eta.size()) throw DimensionError("argument vectors differ in length");
  Complex prod{1.0, 0.0};
  for (const Complex& x : xi) prod *= x - std::conj(x);
  return prod;
}

}  // namespace hn
