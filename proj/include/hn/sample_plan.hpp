#pragma once

#include <functional>
#include <vector>

#include "hn/types.hpp"

namespace hn {

struct PlanConfig {
  int samples = 50;
  unsigned long long seed = 0;
  int max_index = 4;
};

/// Deterministic set of evaluation points standing in for the "for all z"
/// quantifier of the conditions: seeded pseudo-random points of C^{+n} with
/// Re in [-3,3] and Im in [0.5,3], plus a bound on the multi-index box.
/// Identical (dim, config) pairs produce bit-identical plans.
class SamplePlan {
public:
  static SamplePlan make(int dim, const PlanConfig& config = {});

  int dim() const { return dim_; }
  int max_index() const { return max_index_; }
  const std::vector<HalfPlanePoint>& z_samples() const { return z_samples_; }

  /// The same points mapped into the polydisk through (z - i)/(z + i).
  std::vector<PolydiskPoint> disk_samples() const;

private:
  SamplePlan(int dim, int max_index, std::vector<HalfPlanePoint> z)
      : dim_(dim), max_index_(max_index), z_samples_(std::move(z)) {}

  int dim_;
  int max_index_;
  std::vector<HalfPlanePoint> z_samples_;
};

/// All vectors of {-1,0,1}^n passing the filter.
std::vector<SignVector> sign_vectors(int dim, const std::function<bool(const SignVector&)>& keep);

/// All vectors of {-bound,...,bound}^n passing the filter.
std::vector<MultiIndex> index_box(int dim, int bound,
                                  const std::function<bool(const MultiIndex&)>& keep);

bool has_positive_and_negative(const MultiIndex& m);
bool is_nonzero(const MultiIndex& m);
bool is_nonnegative_nonzero(const MultiIndex& m);

}  // namespace hn
