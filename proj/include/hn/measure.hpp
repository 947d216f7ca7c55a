#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hn/quadrature.hpp"
#include "hn/types.hpp"

namespace hn {

enum class Domain { RealSpace, Torus };

class MeasureSpec;

/// Uniformly sampled density data.  On R^n the samples live on a rectangular
/// support box and are interpolated multilinearly (zero outside the box); on
/// the torus the grid is uniform over [0,2pi)^n and periodic.
struct GridData {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<std::size_t> shape;
  std::vector<double> values;  // row-major

  int dim() const { return static_cast<int>(shape.size()); }
  double interpolate_box(std::span<const double> x) const;
  double interpolate_torus(std::span<const double> s) const;
};

/// Closed-form or grid-backed density from the built-in catalogue.  Catalogue
/// names on R: "poisson-1d" (params re, im), "cauchy", "gaussian",
/// "one-plus-t-squared" (declared non-integrable against the growth weight),
/// "grid", and "torus-grid" (pullback of a torus grid through the angle map).
/// On the torus the same closed-form names denote the pullbacks of their real
/// counterparts through the inverse angle map, "grid" is a native torus grid,
/// and "real-grid" is the pullback of a real grid.  Pullbacks carry no extra
/// Jacobian: the angle-map Jacobian cancels against the density substitution.
struct DensityComponent {
  std::string name;
  double scale = 1.0;
  std::vector<double> params;
  GridData grid;
};

struct LebesgueComponent {
  double weight = 1.0;
};

struct DiracComponent {
  std::vector<double> point;
  double weight = 1.0;
};

/// Pushforward of weight * dt along the affine embedding t -> base + t*direction.
/// On the torus domain the same parameters denote the image of that real-space
/// component under the angle map, i.e. the curve s(base + t*direction) carrying
/// the per-axis Jacobian 2/(1 + x^2); this keeps the component family closed
/// under the Cayley correspondence.
struct LineComponent {
  std::vector<double> base;
  std::vector<double> direction;
  double weight = 1.0;
};

struct TensorComponent {
  std::vector<MeasureSpec> factors;  // dims sum to the parent dimension
};

/// Product measure with factor 0 living on the axes listed in b1 (1-based,
/// strictly increasing) and factor 1 on the complementary axes.
struct PermutedComponent {
  std::vector<int> b1;
  std::vector<MeasureSpec> factors;  // exactly two
};

using MeasureComponent = std::variant<LebesgueComponent, DiracComponent, LineComponent,
                                      DensityComponent, TensorComponent, PermutedComponent>;

/// A positive Borel measure on R^n or [0,2pi)^n given as a finite sum of
/// structured components.  The family is closed under non-negative scaling,
/// addition, tensor products, coordinate-permuted products and the Cayley
/// correspondence, and every integral against it reduces to exact evaluations
/// plus one-dimensional (or low-dimensional grid) quadrature.
/// Values are immutable after construction.
class MeasureSpec {
public:
  MeasureSpec(int dim, Domain domain, std::vector<MeasureComponent> components);

  static MeasureSpec zero(int dim, Domain domain);
  static MeasureSpec lebesgue(int dim, double weight, Domain domain);
  static MeasureSpec point_mass(std::vector<double> point, double weight, Domain domain);
  static MeasureSpec line(std::vector<double> base, std::vector<double> direction,
                          double weight, Domain domain = Domain::RealSpace);
  static MeasureSpec density(DensityComponent component, Domain domain);

  int dim() const { return dim_; }
  Domain domain() const { return domain_; }
  const std::vector<MeasureComponent>& components() const { return components_; }

  MeasureSpec scaled(double factor) const;

private:
  void validate() const;

  int dim_;
  Domain domain_;
  std::vector<MeasureComponent> components_;
};

/// Component-wise sum of two measures on the same space.
MeasureSpec sum(const MeasureSpec& a, const MeasureSpec& b);

MeasureSpec tensor(const MeasureSpec& mu1, const MeasureSpec& mu2);

/// Product measure placing mu1 on the (1-based) axes b1 and mu2 on the rest.
MeasureSpec permuted_product(std::vector<int> b1, const MeasureSpec& mu1,
                             const MeasureSpec& mu2);

bool is_zero_measure(const MeasureSpec& mu);

/// True when some positively weighted density component is catalogued as
/// non-integrable against the growth weight prod (1+t^2)^{-1}.
bool growth_declared_divergent(const MeasureSpec& mu);

/// True when some positively weighted component has declared infinite mass.
bool mass_declared_divergent(const MeasureSpec& mu);

/// Integral of f against mu.  Dirac components evaluate f exactly, line
/// components reduce to one 1-D integral, Lebesgue and density components use
/// adaptive panels (tan substitution on unbounded axes), and tensor/permuted
/// components factor when f is separable, falling back to nested quadrature
/// (dim <= 3) otherwise.
QuadratureResult integrate(const MeasureSpec& mu, const Integrand& f,
                           const QuadratureConfig& cfg = {});

/// Integral of prod (1+t_l^2)^{-1}; finite exactly for the representable
/// real-space measures.  Declared-divergent densities short-circuit to a
/// non-converged infinite result.
QuadratureResult growth_integral(const MeasureSpec& mu, const QuadratureConfig& cfg = {});

/// Total mass of a torus measure.
QuadratureResult total_mass(const MeasureSpec& nu, const QuadratureConfig& cfg = {});

/// Angle map s(t) with e^{is} = (t - i)/(t + i); increasing bijection from R
/// onto (0, 2pi), and its inverse t = -cot(s/2).
double cayley_angle(double t);
double cayley_angle_inverse(double s);

/// Pushforward through the per-axis angle map with Jacobian 2/(1+t^2),
/// i.e. the measure nu with
///   int g dnu = int g(s(t_1),...,s(t_n)) * prod_l 2/(1+t_l^2) dmu.
/// Requires the growth condition (the image is finite exactly then).
MeasureSpec cayley_pushforward(const MeasureSpec& mu, const QuadratureConfig& cfg = {});

/// Inverse of cayley_pushforward.  Torus atoms with a coordinate at s = 0
/// have no real-space preimage and are rejected.
MeasureSpec cayley_pullback(const MeasureSpec& nu);

}  // namespace hn
