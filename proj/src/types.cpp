#include "hn/types.hpp"

#include <cmath>
#include <numbers>

namespace hn {

HalfPlanePoint::HalfPlanePoint(std::vector<Complex> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("half-plane point must have dimension >= 1");
  for (const Complex& z : coords_) {
    if (!(z.imag() != 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw DomainError("half-plane point coordinate lies on the real axis");
  }
}

HalfPlanePoint HalfPlanePoint::upper(std::vector<Complex> coords) {
  HalfPlanePoint p(std::move(coords));
  if (!p.all_upper()) throw DomainError("coordinate not in the upper half-plane");
  return p;
}

bool HalfPlanePoint::all_upper() const {
  for (const Complex& z : coords_)
    if (z.imag() <= 0.0) return false;
  return true;
}

HalfPlanePoint HalfPlanePoint::conjugated(int j) const {
  std::vector<Complex> c = coords_;
  c[static_cast<std::size_t>(j)] = std::conj(c[static_cast<std::size_t>(j)]);
  return HalfPlanePoint(std::move(c));
}

HalfPlanePoint HalfPlanePoint::conjugated() const {
  std::vector<Complex> c = coords_;
  for (Complex& z : c) z = std::conj(z);
  return HalfPlanePoint(std::move(c));
}

TorusPoint::TorusPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("torus point must have dimension >= 1");
  for (double s : coords_) {
    if (!(s >= 0.0) || !(s < 2.0 * std::numbers::pi))
      throw DomainError("torus coordinate outside [0, 2pi)");
  }
}

PolydiskPoint::PolydiskPoint(std::vector<Complex> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("polydisk point must have dimension >= 1");
  for (const Complex& w : coords_) {
    if (!(std::abs(w) < 1.0)) throw DomainError("polydisk coordinate outside the open unit disk");
  }
}

int multi_index_order(const MultiIndex& k) {
  int order = 0;
  for (int e : k) {
    if (e < 0) throw DimensionError("multi-index entries must be non-negative");
    order += e;
  }
  return order;
}

bool contains(const SignVector& v, int entry) {
  for (int e : v)
    if (e == entry) return true;
  return false;
}

}  // namespace hn
