#include "hn/sample_plan.hpp"

#include <random>

namespace hn {

namespace {

// Uniform double in [0, 1) built directly from the generator output, so the
// stream does not depend on the standard library's distribution internals.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SamplePlan SamplePlan::make(int dim, const PlanConfig& config) {
  if (dim < 1) throw DimensionError("sample plan dimension must be at least 1");
  if (config.samples < 1) throw DimensionError("sample plan needs at least one point");
  std::mt19937_64 rng(config.seed);
  std::vector<HalfPlanePoint> points;
  points.reserve(static_cast<std::size_t>(config.samples));
  for (int i = 0; i < config.samples; ++i) {
    std::vector<Complex> coords(static_cast<std::size_t>(dim));
    for (Complex& z : coords) {
      const double re = -3.0 + 6.0 * uniform01(rng);
      const double im = 0.5 + 2.5 * uniform01(rng);
      z = Complex{re, im};
    }
    points.push_back(HalfPlanePoint::upper(std::move(coords)));
  }
  return SamplePlan(dim, config.max_index, std::move(points));
}

std::vector<PolydiskPoint> SamplePlan::disk_samples() const {
  const Complex i{0.0, 1.0};
  std::vector<PolydiskPoint> points;
  points.reserve(z_samples_.size());
  for (const HalfPlanePoint& z : z_samples_) {
    std::vector<Complex> w(static_cast<std::size_t>(dim_));
    for (int j = 0; j < dim_; ++j) w[static_cast<std::size_t>(j)] = (z[j] - i) / (z[j] + i);
    points.push_back(PolydiskPoint(std::move(w)));
  }
  return points;
}

std::vector<SignVector> sign_vectors(int dim, const std::function<bool(const SignVector&)>& keep) {
  std::vector<SignVector> out;
  SignVector current(static_cast<std::size_t>(dim), -1);
  while (true) {
    if (keep(current)) out.push_back(current);
    int axis = dim - 1;
    while (axis >= 0 && current[static_cast<std::size_t>(axis)] == 1) {
      current[static_cast<std::size_t>(axis)] = -1;
      --axis;
    }
    if (axis < 0) break;
    ++current[static_cast<std::size_t>(axis)];
  }
  return out;
}

std::vector<MultiIndex> index_box(int dim, int bound,
                                  const std::function<bool(const MultiIndex&)>& keep) {
  std::vector<MultiIndex> out;
  MultiIndex current(static_cast<std::size_t>(dim), -bound);
  while (true) {
    if (keep(current)) out.push_back(current);
    int axis = dim - 1;
    while (axis >= 0 && current[static_cast<std::size_t>(axis)] == bound) {
      current[static_cast<std::size_t>(axis)] = -bound;
      --axis;
    }
    if (axis < 0) break;
    ++current[static_cast<std::size_t>(axis)];
  }
  return out;
}

bool has_positive_and_negative(const MultiIndex& m) {
  bool pos = false, neg = false;
  for (int e : m) {
    pos = pos || e > 0;
    neg = neg || e < 0;
  }
  return pos && neg;
}

bool is_nonzero(const MultiIndex& m) {
  for (int e : m)
    if (e != 0) return true;
  return false;
}

bool is_nonnegative_nonzero(const MultiIndex& m) {
  bool nonzero = false;
  for (int e : m) {
    if (e < 0) return false;
    nonzero = nonzero || e > 0;
  }
  return nonzero;
}

}  // namespace hn
