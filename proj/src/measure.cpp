#include "hn/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace hn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_closed_form(const std::string& name) {
  return name == "poisson-1d" || name == "cauchy" || name == "gaussian" ||
         name == "one-plus-t-squared";
}

double closed_form_value(const DensityComponent& d, double t) {
  if (d.name == "poisson-1d") {
    const double dx = t - d.params[0];
    const double im = d.params[1];
    return im / (dx * dx + im * im);
  }
  if (d.name == "cauchy") return 1.0 / (std::numbers::pi * (1.0 + t * t));
  if (d.name == "gaussian") return std::exp(-0.5 * t * t) / std::sqrt(kTwoPi);
  if (d.name == "one-plus-t-squared") return 1.0 + t * t;
  throw SpecError("unknown closed-form density '" + d.name + "'");
}

int density_dim(const DensityComponent& d) {
  if (d.name == "grid" || d.name == "real-grid" || d.name == "torus-grid")
    return d.grid.dim();
  return 1;
}

bool density_name_known(const std::string& name, Domain domain) {
  if (is_closed_form(name)) return true;
  if (name == "grid") return true;
  if (name == "real-grid") return domain == Domain::Torus;
  if (name == "torus-grid") return domain == Domain::RealSpace;
  return false;
}

double density_value(const DensityComponent& d, Domain domain, std::span<const double> x) {
  double v;
  if (domain == Domain::RealSpace) {
    if (d.name == "grid") {
      v = d.grid.interpolate_box(x);
    } else if (d.name == "torus-grid") {
      std::vector<double> s(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) s[j] = cayley_angle(x[j]);
      v = d.grid.interpolate_torus(s);
    } else {
      v = closed_form_value(d, x[0]);
    }
  } else {
    if (d.name == "grid") {
      v = d.grid.interpolate_torus(x);
    } else if (d.name == "real-grid") {
      std::vector<double> t(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) t[j] = cayley_angle_inverse(x[j]);
      v = d.grid.interpolate_box(t);
    } else {
      v = closed_form_value(d, cayley_angle_inverse(x[0]));
    }
  }
  return d.scale * v;
}

// Growth-weight integrability of a density on R; "one-plus-t-squared" is the
// catalogued divergent entry, everything else decays or has compact support.
bool density_growth_integrable(const DensityComponent& d) {
  return d.name != "one-plus-t-squared";
}

// Torus-side mass finiteness; pullback densities inherit the real-space
// growth classification.
bool density_mass_finite(const DensityComponent& d) {
  return d.name != "one-plus-t-squared";
}

double density_max_value(const DensityComponent& d) {
  if (d.name == "grid" || d.name == "real-grid" || d.name == "torus-grid") {
    double m = 0.0;
    for (double v : d.grid.values) m = std::max(m, v);
    return d.scale * m;
  }
  return d.scale;
}

void validate_density(const DensityComponent& d, int dim, Domain domain) {
  if (!density_name_known(d.name, domain))
    throw SpecError("unknown density '" + d.name + "' for this domain");
  if (!(d.scale >= 0.0)) throw SpecError("density scale must be non-negative");
  if (density_dim(d) != dim) throw SpecError("density dimension does not match measure dimension");
  if (d.name == "poisson-1d") {
    if (d.params.size() != 2 || !(d.params[1] > 0.0))
      throw SpecError("poisson-1d density needs parameters (re, im) with im > 0");
  }
  if (d.name == "grid" || d.name == "real-grid" || d.name == "torus-grid") {
    const GridData& g = d.grid;
    const int gd = g.dim();
    if (gd < 1 || gd > 3) throw SpecError("grid densities support dimensions 1 to 3");
    std::size_t count = 1;
    for (std::size_t n : g.shape) {
      if (n < 2) throw SpecError("grid needs at least 2 nodes per axis");
      count *= n;
    }
    if (g.values.size() != count) throw SpecError("grid value count does not match shape");
    for (double v : g.values)
      if (!(v >= 0.0)) throw SpecError("grid density values must be non-negative");
    const bool box = (d.name == "grid" && domain == Domain::RealSpace) ||
                     (d.name == "real-grid" && domain == Domain::Torus);
    if (box) {
      if (g.lo.size() != g.shape.size() || g.hi.size() != g.shape.size())
        throw SpecError("grid support box does not match shape");
      for (std::size_t a = 0; a < g.lo.size(); ++a)
        if (!(g.lo[a] < g.hi[a])) throw SpecError("grid support box is empty");
    }
  }
}

struct ComponentVisitor {
  int dim;
  Domain domain;

  void operator()(const LebesgueComponent& c) const {
    if (!(c.weight >= 0.0)) throw SpecError("component weight must be non-negative");
  }
  void operator()(const DiracComponent& c) const {
    if (!(c.weight >= 0.0)) throw SpecError("component weight must be non-negative");
    if (static_cast<int>(c.point.size()) != dim)
      throw SpecError("atom point dimension does not match measure dimension");
    if (domain == Domain::Torus) {
      for (double s : c.point)
        if (!(s >= 0.0 && s < kTwoPi)) throw SpecError("atom coordinate outside [0, 2pi)");
    }
  }
  void operator()(const LineComponent& c) const {
    if (!(c.weight >= 0.0)) throw SpecError("component weight must be non-negative");
    if (static_cast<int>(c.base.size()) != dim ||
        static_cast<int>(c.direction.size()) != dim)
      throw SpecError("line base/direction dimension does not match measure dimension");
    bool nonzero = false;
    for (double v : c.direction) nonzero = nonzero || v != 0.0;
    if (!nonzero) throw SpecError("line direction must be non-zero");
  }
  void operator()(const DensityComponent& c) const { validate_density(c, dim, domain); }
  void operator()(const TensorComponent& c) const {
    if (c.factors.empty()) throw SpecError("tensor component needs at least one factor");
    int total = 0;
    for (const MeasureSpec& factor : c.factors) {
      if (factor.domain() != domain) throw SpecError("tensor factor domain mismatch");
      total += factor.dim();
    }
    if (total != dim) throw SpecError("tensor factor dimensions do not sum to measure dimension");
  }
  void operator()(const PermutedComponent& c) const {
    if (c.factors.size() != 2) throw SpecError("permuted product needs exactly two factors");
    for (const MeasureSpec& factor : c.factors)
      if (factor.domain() != domain) throw SpecError("permuted factor domain mismatch");
    if (c.factors[0].dim() + c.factors[1].dim() != dim)
      throw SpecError("permuted factor dimensions do not sum to measure dimension");
    if (static_cast<int>(c.b1.size()) != c.factors[0].dim())
      throw SpecError("index set size does not match first factor dimension");
    int prev = 0;
    for (int idx : c.b1) {
      if (idx <= prev || idx > dim) throw SpecError("index set must be a strictly increasing subset of 1..n");
      prev = idx;
    }
  }
};

}  // namespace

double GridData::interpolate_box(std::span<const double> x) const {
  const int n = dim();
  // locate the cell and the fractional position per axis
  std::vector<std::size_t> cell(static_cast<std::size_t>(n));
  std::vector<double> frac(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const auto ia = static_cast<std::size_t>(a);
    if (x[ia] < lo[ia] || x[ia] > hi[ia]) return 0.0;
    const double h = (hi[ia] - lo[ia]) / static_cast<double>(shape[ia] - 1);
    double pos = (x[ia] - lo[ia]) / h;
    std::size_t c = static_cast<std::size_t>(pos);
    if (c >= shape[ia] - 1) c = shape[ia] - 2;
    cell[ia] = c;
    frac[ia] = pos - static_cast<double>(c);
  }
  double value = 0.0;
  const std::size_t corners = std::size_t{1} << n;
  for (std::size_t corner = 0; corner < corners; ++corner) {
    double weight = 1.0;
    std::size_t index = 0;
    for (int a = 0; a < n; ++a) {
      const auto ia = static_cast<std::size_t>(a);
      const bool high = (corner >> a) & 1u;
      weight *= high ? frac[ia] : 1.0 - frac[ia];
      index = index * shape[ia] + cell[ia] + (high ? 1 : 0);
    }
    value += weight * values[index];
  }
  return value;
}

double GridData::interpolate_torus(std::span<const double> s) const {
  const int n = dim();
  std::vector<std::size_t> cell(static_cast<std::size_t>(n));
  std::vector<double> frac(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const auto ia = static_cast<std::size_t>(a);
    const double h = kTwoPi / static_cast<double>(shape[ia]);
    double wrapped = s[ia] - kTwoPi * std::floor(s[ia] / kTwoPi);
    double pos = wrapped / h;
    std::size_t c = static_cast<std::size_t>(pos);
    if (c >= shape[ia]) c = shape[ia] - 1;
    cell[ia] = c;
    frac[ia] = pos - static_cast<double>(c);
  }
  double value = 0.0;
  const std::size_t corners = std::size_t{1} << n;
  for (std::size_t corner = 0; corner < corners; ++corner) {
    double weight = 1.0;
    std::size_t index = 0;
    for (int a = 0; a < n; ++a) {
      const auto ia = static_cast<std::size_t>(a);
      const bool high = (corner >> a) & 1u;
      weight *= high ? frac[ia] : 1.0 - frac[ia];
      const std::size_t node = (cell[ia] + (high ? 1 : 0)) % shape[ia];
      index = index * shape[ia] + node;
    }
    value += weight * values[index];
  }
  return value;
}

MeasureSpec::MeasureSpec(int dim, Domain domain, std::vector<MeasureComponent> components)
    : dim_(dim), domain_(domain), components_(std::move(components)) {
  validate();
}

void MeasureSpec::validate() const {
  if (dim_ < 1) throw DimensionError("measure dimension must be at least 1");
  ComponentVisitor v{dim_, domain_};
  for (const MeasureComponent& c : components_) std::visit(v, c);
}

MeasureSpec MeasureSpec::zero(int dim, Domain domain) { return MeasureSpec(dim, domain, {}); }

MeasureSpec MeasureSpec::lebesgue(int dim, double weight, Domain domain) {
  return MeasureSpec(dim, domain, {LebesgueComponent{weight}});
}

MeasureSpec MeasureSpec::point_mass(std::vector<double> point, double weight, Domain domain) {
  return MeasureSpec(static_cast<int>(point.size()), domain,
                     {DiracComponent{std::move(point), weight}});
}

MeasureSpec MeasureSpec::line(std::vector<double> base, std::vector<double> direction,
                              double weight, Domain domain) {
  const int dim = static_cast<int>(base.size());
  return MeasureSpec(dim, domain, {LineComponent{std::move(base), std::move(direction), weight}});
}

MeasureSpec MeasureSpec::density(DensityComponent component, Domain domain) {
  const int dim = density_dim(component);
  return MeasureSpec(dim, domain, {std::move(component)});
}

MeasureSpec MeasureSpec::scaled(double factor) const {
  if (!(factor >= 0.0)) throw SpecError("measures scale by non-negative factors only");
  std::vector<MeasureComponent> scaled_components;
  scaled_components.reserve(components_.size());
  for (const MeasureComponent& c : components_) {
    MeasureComponent copy = c;
    std::visit(
        [factor](auto& comp) {
          using T = std::decay_t<decltype(comp)>;
          if constexpr (std::is_same_v<T, LebesgueComponent> ||
                        std::is_same_v<T, DiracComponent> ||
                        std::is_same_v<T, LineComponent>) {
            comp.weight *= factor;
          } else if constexpr (std::is_same_v<T, DensityComponent>) {
            comp.scale *= factor;
          } else if constexpr (std::is_same_v<T, TensorComponent>) {
            if (!comp.factors.empty()) comp.factors[0] = comp.factors[0].scaled(factor);
          } else {
            static_assert(std::is_same_v<T, PermutedComponent>);
            comp.factors[0] = comp.factors[0].scaled(factor);
          }
        },
        copy);
    scaled_components.push_back(std::move(copy));
  }
  return MeasureSpec(dim_, domain_, std::move(scaled_components));
}

MeasureSpec sum(const MeasureSpec& a, const MeasureSpec& b) {
  if (a.dim() != b.dim()) throw DimensionError("measure sum requires equal dimensions");
  if (a.domain() != b.domain()) throw DomainError("measure sum requires equal domains");
  std::vector<MeasureComponent> components = a.components();
  components.insert(components.end(), b.components().begin(), b.components().end());
  return MeasureSpec(a.dim(), a.domain(), std::move(components));
}

MeasureSpec tensor(const MeasureSpec& mu1, const MeasureSpec& mu2) {
  if (mu1.domain() != mu2.domain())
    throw DomainError("tensor product requires factors on the same domain");
  TensorComponent component{{mu1, mu2}};
  return MeasureSpec(mu1.dim() + mu2.dim(), mu1.domain(), {std::move(component)});
}

MeasureSpec permuted_product(std::vector<int> b1, const MeasureSpec& mu1,
                             const MeasureSpec& mu2) {
  if (mu1.domain() != mu2.domain())
    throw DomainError("permuted product requires factors on the same domain");
  if (static_cast<int>(b1.size()) != mu1.dim())
    throw DimensionError("index set size must equal the first factor dimension");
  PermutedComponent component{std::move(b1), {mu1, mu2}};
  return MeasureSpec(mu1.dim() + mu2.dim(), mu1.domain(), {std::move(component)});
}

bool is_zero_measure(const MeasureSpec& mu) {
  for (const MeasureComponent& c : mu.components()) {
    const bool component_zero = std::visit(
        [](const auto& comp) -> bool {
          using T = std::decay_t<decltype(comp)>;
          if constexpr (std::is_same_v<T, LebesgueComponent> ||
                        std::is_same_v<T, DiracComponent> ||
                        std::is_same_v<T, LineComponent>) {
            return comp.weight == 0.0;
          } else if constexpr (std::is_same_v<T, DensityComponent>) {
            return density_max_value(comp) == 0.0;
          } else {
            for (const MeasureSpec& factor : comp.factors)
              if (is_zero_measure(factor)) return true;
            return false;
          }
        },
        c);
    if (!component_zero) return false;
  }
  return true;
}

namespace {

bool component_declared_divergent(const MeasureComponent& c, bool torus_mass) {
  return std::visit(
      [torus_mass](const auto& comp) -> bool {
        using T = std::decay_t<decltype(comp)>;
        if constexpr (std::is_same_v<T, DensityComponent>) {
          if (comp.scale == 0.0) return false;
          return torus_mass ? !density_mass_finite(comp) : !density_growth_integrable(comp);
        } else if constexpr (std::is_same_v<T, TensorComponent> ||
                             std::is_same_v<T, PermutedComponent>) {
          for (const MeasureSpec& factor : comp.factors)
            if (is_zero_measure(factor)) return false;
          for (const MeasureSpec& factor : comp.factors)
            for (const MeasureComponent& inner : factor.components())
              if (component_declared_divergent(inner, torus_mass)) return true;
          return false;
        } else {
          return false;
        }
      },
      c);
}

}  // namespace

bool growth_declared_divergent(const MeasureSpec& mu) {
  for (const MeasureComponent& c : mu.components())
    if (component_declared_divergent(c, /*torus_mass=*/false)) return true;
  return false;
}

bool mass_declared_divergent(const MeasureSpec& mu) {
  for (const MeasureComponent& c : mu.components())
    if (component_declared_divergent(c, /*torus_mass=*/true)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// integration
// ---------------------------------------------------------------------------

namespace {

QuadratureResult integrate_component(const MeasureComponent& c, Domain domain,
                                     const Integrand& f, const QuadratureConfig& cfg);

// err(u*v) <= |u| err_v + |v| err_u, to first order
void multiply_into(QuadratureResult& acc, const QuadratureResult& factor) {
  acc.error_estimate =
      std::abs(acc.value) * factor.error_estimate + std::abs(factor.value) * acc.error_estimate;
  acc.value *= factor.value;
  acc.evaluations += factor.evaluations;
  acc.converged = acc.converged && factor.converged;
}

QuadratureResult integrate_axis(const ScalarFn& g, Domain domain, const QuadratureConfig& cfg) {
  return domain == Domain::RealSpace ? integrate_real_line(g, cfg)
                                     : integrate_torus_axis(g, cfg);
}

// Nested adaptive quadrature; axis a is integrated by axes[a] with the point
// assembled in a shared buffer.  Inner stages run at tightened tolerances and
// their worst error/convergence state is merged into the outer result.
struct AxisRule {
  enum Kind { RealLine, TorusAxis, Interval } kind = RealLine;
  double lo = 0.0, hi = 0.0;
};

QuadratureResult nested_quadrature(const std::vector<AxisRule>& axes,
                                   const std::function<Complex(std::span<const double>)>& f,
                                   const QuadratureConfig& cfg) {
  const int n = static_cast<int>(axes.size());
  std::vector<double> point(static_cast<std::size_t>(n));
  bool inner_converged = true;
  long leaf_evaluations = 0;
  double worst_inner_error = 0.0;

  std::function<QuadratureResult(int, const QuadratureConfig&)> stage =
      [&](int axis, const QuadratureConfig& stage_cfg) -> QuadratureResult {
    const ScalarFn slice = [&, axis](double x) -> Complex {
      point[static_cast<std::size_t>(axis)] = x;
      if (axis + 1 == n) {
        ++leaf_evaluations;
        return f(point);
      }
      QuadratureResult inner = stage(axis + 1, stage_cfg.tightened(0.1, 0.1));
      inner_converged = inner_converged && inner.converged;
      worst_inner_error = std::max(worst_inner_error, inner.error_estimate);
      return inner.value;
    };
    switch (axes[static_cast<std::size_t>(axis)].kind) {
      case AxisRule::RealLine:
        return integrate_real_line(slice, stage_cfg);
      case AxisRule::TorusAxis:
        return integrate_torus_axis(slice, stage_cfg);
      case AxisRule::Interval:
      default:
        return integrate_interval(slice, axes[static_cast<std::size_t>(axis)].lo,
                                  axes[static_cast<std::size_t>(axis)].hi, stage_cfg);
    }
  };

  QuadratureResult outer = stage(0, cfg);
  outer.converged = outer.converged && inner_converged;
  outer.error_estimate += worst_inner_error;
  outer.evaluations = leaf_evaluations;
  return outer;
}

std::vector<AxisRule> uniform_axes(int n, Domain domain) {
  AxisRule rule;
  rule.kind = domain == Domain::RealSpace ? AxisRule::RealLine : AxisRule::TorusAxis;
  return std::vector<AxisRule>(static_cast<std::size_t>(n), rule);
}

QuadratureResult integrate_lebesgue(const LebesgueComponent& c, Domain domain,
                                    const Integrand& f, const QuadratureConfig& cfg) {
  if (c.weight == 0.0) return {};
  QuadratureResult total;
  if (f.is_separable()) {
    const QuadratureConfig axis_cfg = cfg.tightened(0.2, 0.2);
    for (const SeparableTerm& term : f.terms()) {
      QuadratureResult prod;
      prod.value = term.coefficient;
      for (const ScalarFn& axis : term.axes)
        multiply_into(prod, integrate_axis(axis, domain, axis_cfg));
      total += prod;
    }
  } else {
    if (f.dim() > 3)
      throw Error("non-separable integrands are supported up to dimension 3");
    total = nested_quadrature(uniform_axes(f.dim(), domain),
                              [&f](std::span<const double> x) { return f(x); }, cfg);
  }
  return total.scaled(c.weight);
}

QuadratureResult integrate_dirac(const DiracComponent& c, const Integrand& f) {
  QuadratureResult r;
  r.value = c.weight * f(c.point);
  r.evaluations = 1;
  return r;
}

QuadratureResult integrate_line(const LineComponent& c, Domain domain, const Integrand& f,
                                const QuadratureConfig& cfg) {
  if (c.weight == 0.0) return {};
  const std::size_t n = c.base.size();
  std::vector<double> point(n);
  const ScalarFn along = [&](double t) -> Complex {
    if (domain == Domain::RealSpace) {
      for (std::size_t j = 0; j < n; ++j) point[j] = c.base[j] + t * c.direction[j];
      return f(point);
    }
    double jacobian = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double x = c.base[j] + t * c.direction[j];
      point[j] = cayley_angle(x);
      jacobian *= 2.0 / (1.0 + x * x);
    }
    return jacobian * f(point);
  };
  return integrate_real_line(along, cfg).scaled(c.weight);
}

QuadratureResult integrate_torus_grid(const DensityComponent& d, const Integrand& f,
                                      const QuadratureConfig& cfg) {
  // Uniform node sum over the periodic grid; spectrally accurate for smooth
  // periodic integrands and exact for band-limited ones.  The error estimate
  // compares against the half-resolution subsample.
  const GridData& g = d.grid;
  const int n = g.dim();
  std::vector<double> point(static_cast<std::size_t>(n));
  std::vector<std::size_t> index(static_cast<std::size_t>(n), 0);
  Complex full{0.0, 0.0};
  Complex half{0.0, 0.0};
  bool halvable = true;
  for (std::size_t na : g.shape) halvable = halvable && na % 2 == 0;
  long evals = 0;
  double cell = 1.0;
  for (std::size_t na : g.shape) cell *= kTwoPi / static_cast<double>(na);
  bool done = false;
  while (!done) {
    std::size_t flat = 0;
    bool on_half_grid = true;
    for (int a = 0; a < n; ++a) {
      const auto ia = static_cast<std::size_t>(a);
      point[ia] = kTwoPi * static_cast<double>(index[ia]) / static_cast<double>(g.shape[ia]);
      flat = flat * g.shape[ia] + index[ia];
      on_half_grid = on_half_grid && index[ia] % 2 == 0;
    }
    const Complex contribution = g.values[flat] * f(point);
    ++evals;
    full += contribution;
    if (halvable && on_half_grid) half += contribution;
    done = true;
    for (int a = n - 1; a >= 0; --a) {
      const auto ia = static_cast<std::size_t>(a);
      if (++index[ia] < g.shape[ia]) {
        done = false;
        break;
      }
      index[ia] = 0;
    }
  }
  QuadratureResult r;
  r.value = d.scale * cell * full;
  r.evaluations = evals;
  if (halvable) {
    const Complex coarse = d.scale * cell * (static_cast<double>(std::size_t{1} << n)) * half;
    const Complex diff = r.value - coarse;
    r.error_estimate = std::abs(diff.real()) + std::abs(diff.imag());
    r.converged = r.error_estimate <= std::max(cfg.abs_tol * 1e4, cfg.rel_tol * 1e2 * std::abs(r.value));
  }
  return r;
}

QuadratureResult integrate_density(const DensityComponent& d, Domain domain, const Integrand& f,
                                   const QuadratureConfig& cfg) {
  if (d.scale == 0.0) return {};
  if (domain == Domain::Torus && d.name == "grid") return integrate_torus_grid(d, f, cfg);

  const int n = density_dim(d);
  const auto weighted = [&](std::span<const double> x) -> Complex {
    return density_value(d, domain, x) * f(x);
  };
  if (n == 1) {
    const ScalarFn g = [&](double x) { return weighted(std::span<const double>(&x, 1)); };
    if (domain == Domain::Torus) return integrate_torus_axis(g, cfg);
    if (d.name == "grid") return integrate_interval(g, d.grid.lo[0], d.grid.hi[0], cfg);
    return integrate_real_line(g, cfg);
  }
  std::vector<AxisRule> axes;
  if (domain == Domain::RealSpace && d.name == "grid") {
    for (int a = 0; a < n; ++a) {
      AxisRule rule;
      rule.kind = AxisRule::Interval;
      rule.lo = d.grid.lo[static_cast<std::size_t>(a)];
      rule.hi = d.grid.hi[static_cast<std::size_t>(a)];
      axes.push_back(rule);
    }
  } else {
    axes = uniform_axes(n, domain);
  }
  return nested_quadrature(axes, weighted, cfg);
}

// Splits the axes of a separable term along a factor decomposition and
// multiplies the factor integrals; evaluates products generically otherwise.
QuadratureResult integrate_factored(const std::vector<MeasureSpec>& factors,
                                    const std::vector<std::vector<int>>& factor_axes,
                                    int dim, const Integrand& f, const QuadratureConfig& cfg) {
  QuadratureResult total;
  if (f.is_separable()) {
    const QuadratureConfig factor_cfg = cfg.tightened(0.2, 0.2);
    for (const SeparableTerm& term : f.terms()) {
      QuadratureResult prod;
      prod.value = term.coefficient;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        std::vector<ScalarFn> axes;
        axes.reserve(factor_axes[i].size());
        for (int global : factor_axes[i]) axes.push_back(term.axes[static_cast<std::size_t>(global)]);
        multiply_into(prod, integrate(factors[i], Integrand::separable(std::move(axes)), factor_cfg));
      }
      total += prod;
    }
    return total;
  }

  // nested product integration, one factor per stage
  std::vector<double> point(static_cast<std::size_t>(dim));
  bool inner_converged = true;
  double worst_inner_error = 0.0;
  long leaf_evaluations = 0;

  std::function<QuadratureResult(std::size_t, const QuadratureConfig&)> stage =
      [&](std::size_t i, const QuadratureConfig& stage_cfg) -> QuadratureResult {
    const int local_dim = factors[i].dim();
    Integrand::GenericFn slice = [&, i](std::span<const double> x) -> Complex {
      for (int a = 0; a < static_cast<int>(x.size()); ++a)
        point[static_cast<std::size_t>(factor_axes[i][static_cast<std::size_t>(a)])] = x[static_cast<std::size_t>(a)];
      if (i + 1 == factors.size()) {
        ++leaf_evaluations;
        return f(point);
      }
      QuadratureResult inner = stage(i + 1, stage_cfg.tightened(0.1, 0.1));
      inner_converged = inner_converged && inner.converged;
      worst_inner_error = std::max(worst_inner_error, inner.error_estimate);
      return inner.value;
    };
    return integrate(factors[i], Integrand::generic(local_dim, std::move(slice)), stage_cfg);
  };

  QuadratureResult outer = stage(0, cfg);
  outer.converged = outer.converged && inner_converged;
  outer.error_estimate += worst_inner_error;
  outer.evaluations = leaf_evaluations;
  return outer;
}

QuadratureResult integrate_component(const MeasureComponent& c, Domain domain,
                                     const Integrand& f, const QuadratureConfig& cfg) {
  return std::visit(
      [&](const auto& comp) -> QuadratureResult {
        using T = std::decay_t<decltype(comp)>;
        if constexpr (std::is_same_v<T, LebesgueComponent>) {
          return integrate_lebesgue(comp, domain, f, cfg);
        } else if constexpr (std::is_same_v<T, DiracComponent>) {
          return integrate_dirac(comp, f);
        } else if constexpr (std::is_same_v<T, LineComponent>) {
          return integrate_line(comp, domain, f, cfg);
        } else if constexpr (std::is_same_v<T, DensityComponent>) {
          return integrate_density(comp, domain, f, cfg);
        } else if constexpr (std::is_same_v<T, TensorComponent>) {
          std::vector<std::vector<int>> factor_axes;
          int next = 0;
          for (const MeasureSpec& factor : comp.factors) {
            std::vector<int> axes(static_cast<std::size_t>(factor.dim()));
            for (int& a : axes) a = next++;
            factor_axes.push_back(std::move(axes));
          }
          return integrate_factored(comp.factors, factor_axes, next, f, cfg);
        } else {
          static_assert(std::is_same_v<T, PermutedComponent>);
          const int dim = comp.factors[0].dim() + comp.factors[1].dim();
          std::vector<bool> in_first(static_cast<std::size_t>(dim), false);
          std::vector<std::vector<int>> factor_axes(2);
          for (int idx : comp.b1) {
            in_first[static_cast<std::size_t>(idx - 1)] = true;
            factor_axes[0].push_back(idx - 1);
          }
          for (int a = 0; a < dim; ++a)
            if (!in_first[static_cast<std::size_t>(a)]) factor_axes[1].push_back(a);
          return integrate_factored(comp.factors, factor_axes, dim, f, cfg);
        }
      },
      c);
}

}  // namespace

QuadratureResult integrate(const MeasureSpec& mu, const Integrand& f,
                           const QuadratureConfig& cfg) {
  if (f.dim() != mu.dim())
    throw DimensionError("integrand dimension does not match measure dimension");
  QuadratureResult total;
  const QuadratureConfig component_cfg =
      mu.components().size() > 1
          ? cfg.tightened(1.0 / static_cast<double>(mu.components().size()), 1.0)
          : cfg;
  for (const MeasureComponent& c : mu.components())
    total += integrate_component(c, mu.domain(), f, component_cfg);
  return total;
}

QuadratureResult growth_integral(const MeasureSpec& mu, const QuadratureConfig& cfg) {
  if (mu.domain() != Domain::RealSpace)
    throw DomainError("growth integral is defined for real-space measures");
  if (growth_declared_divergent(mu)) {
    QuadratureResult r;
    r.value = std::numeric_limits<double>::infinity();
    r.error_estimate = std::numeric_limits<double>::infinity();
    r.converged = false;
    return r;
  }
  std::vector<ScalarFn> axes(static_cast<std::size_t>(mu.dim()),
                             [](double t) { return Complex{1.0 / (1.0 + t * t), 0.0}; });
  return integrate(mu, Integrand::separable(std::move(axes)), cfg);
}

QuadratureResult total_mass(const MeasureSpec& nu, const QuadratureConfig& cfg) {
  if (nu.domain() != Domain::Torus)
    throw DomainError("total mass is tracked for torus measures");
  if (mass_declared_divergent(nu)) {
    QuadratureResult r;
    r.value = std::numeric_limits<double>::infinity();
    r.error_estimate = std::numeric_limits<double>::infinity();
    r.converged = false;
    return r;
  }
  std::vector<ScalarFn> axes(static_cast<std::size_t>(nu.dim()),
                             [](double) { return Complex{1.0, 0.0}; });
  return integrate(nu, Integrand::separable(std::move(axes)), cfg);
}

// ---------------------------------------------------------------------------
// Cayley correspondence
// ---------------------------------------------------------------------------

double cayley_angle(double t) {
  // arg((t - i)/(t + i)) mapped into (0, 2pi)
  double s = std::atan2(-2.0 * t, t * t - 1.0);
  if (s <= 0.0) s += kTwoPi;
  return s;
}

double cayley_angle_inverse(double s) { return -std::cos(0.5 * s) / std::sin(0.5 * s); }

namespace {

MeasureSpec map_components(const MeasureSpec& mu, Domain target,
                           const std::function<MeasureComponent(const MeasureComponent&)>& map) {
  std::vector<MeasureComponent> mapped;
  mapped.reserve(mu.components().size());
  for (const MeasureComponent& c : mu.components()) mapped.push_back(map(c));
  return MeasureSpec(mu.dim(), target, std::move(mapped));
}

MeasureComponent push_component(const MeasureComponent& c);

MeasureSpec push_spec(const MeasureSpec& mu) {
  return map_components(mu, Domain::Torus, push_component);
}

MeasureComponent push_component(const MeasureComponent& c) {
  return std::visit(
      [](const auto& comp) -> MeasureComponent {
        using T = std::decay_t<decltype(comp)>;
        if constexpr (std::is_same_v<T, LebesgueComponent> || std::is_same_v<T, LineComponent>) {
          return comp;
        } else if constexpr (std::is_same_v<T, DiracComponent>) {
          DiracComponent atom = comp;
          for (double& x : atom.point) {
            atom.weight *= 2.0 / (1.0 + x * x);
            x = cayley_angle(x);
          }
          return atom;
        } else if constexpr (std::is_same_v<T, DensityComponent>) {
          DensityComponent d = comp;
          if (d.name == "grid")
            d.name = "real-grid";
          else if (d.name == "torus-grid")
            d.name = "grid";
          return d;
        } else if constexpr (std::is_same_v<T, TensorComponent>) {
          TensorComponent t = comp;
          for (MeasureSpec& factor : t.factors) factor = push_spec(factor);
          return t;
        } else {
          PermutedComponent p = comp;
          for (MeasureSpec& factor : p.factors) factor = push_spec(factor);
          return p;
        }
      },
      c);
}

MeasureComponent pull_component(const MeasureComponent& c);

MeasureSpec pull_spec(const MeasureSpec& nu) {
  return map_components(nu, Domain::RealSpace, pull_component);
}

MeasureComponent pull_component(const MeasureComponent& c) {
  return std::visit(
      [](const auto& comp) -> MeasureComponent {
        using T = std::decay_t<decltype(comp)>;
        if constexpr (std::is_same_v<T, LebesgueComponent> || std::is_same_v<T, LineComponent>) {
          return comp;
        } else if constexpr (std::is_same_v<T, DiracComponent>) {
          DiracComponent atom = comp;
          for (double& s : atom.point) {
            if (s == 0.0)
              throw DivergenceError("torus atom at s = 0 has no real-space preimage");
            const double t = cayley_angle_inverse(s);
            atom.weight *= 0.5 * (1.0 + t * t);
            s = t;
          }
          return atom;
        } else if constexpr (std::is_same_v<T, DensityComponent>) {
          DensityComponent d = comp;
          if (d.name == "grid")
            d.name = "torus-grid";
          else if (d.name == "real-grid")
            d.name = "grid";
          return d;
        } else if constexpr (std::is_same_v<T, TensorComponent>) {
          TensorComponent t = comp;
          for (MeasureSpec& factor : t.factors) factor = pull_spec(factor);
          return t;
        } else {
          PermutedComponent p = comp;
          for (MeasureSpec& factor : p.factors) factor = pull_spec(factor);
          return p;
        }
      },
      c);
}

}  // namespace

MeasureSpec cayley_pushforward(const MeasureSpec& mu, const QuadratureConfig& cfg) {
  if (mu.domain() != Domain::RealSpace)
    throw DomainError("pushforward starts from a real-space measure");
  if (growth_declared_divergent(mu))
    throw DivergenceError("growth condition fails; the image measure would be infinite");
  const QuadratureResult growth = growth_integral(mu, cfg);
  if (!growth.converged)
    throw DivergenceError("growth integral did not converge; cannot push forward");
  return push_spec(mu);
}

MeasureSpec cayley_pullback(const MeasureSpec& nu) {
  if (nu.domain() != Domain::Torus)
    throw DomainError("pullback starts from a torus measure");
  if (mass_declared_divergent(nu))
    throw DivergenceError("torus measure has infinite mass");
  return pull_spec(nu);
}

}  // namespace hn
