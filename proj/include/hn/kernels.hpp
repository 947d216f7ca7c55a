#pragma once

#include <span>

#include "hn/types.hpp"

namespace hn {

/// Kernel of the half-plane integral representation, defined for
/// z in (C \ R)^n and t in R^n.
Complex herglotz_kernel(const HalfPlanePoint& z, const RealPoint& t);

/// Partial derivative of the kernel for a multi-index k with |k| >= 1.
/// Closed form: each differentiated axis contributes k_l! / (t_l - z_l)^{k_l+1},
/// undifferentiated axes keep their kernel factor.
Complex herglotz_kernel_derivative(const MultiIndex& k, const HalfPlanePoint& z,
                                   const RealPoint& t);

/// Product of the one-dimensional Poisson kernels Im z_l / |t_l - z_l|^2.
/// Strictly positive; requires every coordinate in the upper half-plane.
double poisson_kernel(const HalfPlanePoint& z, const RealPoint& t);

/// One-axis kernel factor indexed by k in {-1,0,1}.  The k=0 factor is real
/// and equals 1/(1+t^2); k=+1 is the conjugate of k=-1.
Complex nevanlinna_factor(int k, Complex z, double t);

/// Product of nevanlinna_factor over all axes, one sign per axis.
Complex nevanlinna_factor_product(const SignVector& rho, const HalfPlanePoint& z,
                                  const RealPoint& t);

/// Polydisk counterpart of nevanlinna_factor, for |w| < 1 and a torus angle s.
/// The k=0 factor is the constant 1/2; k=+1 is minus the conjugate of k=-1.
Complex disk_factor(int k, Complex w, double s);

Complex disk_factor_product(const SignVector& rho, const PolydiskPoint& w,
                            const TorusPoint& s);

/// Alternating sum over all conjugation patterns of prod_j (psi(xi_j) - eta_j),
/// where psi conjugates the entries selected by the pattern.  Collapses to the
/// closed form prod_j (xi_j - conj(xi_j)); in particular the value does not
/// depend on eta.
Complex conjugation_alternating_sum(std::span<const Complex> xi,
                                    std::span<const Complex> eta);

}  // namespace hn
