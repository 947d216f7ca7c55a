#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hn {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Arity or dimension mismatch between arguments.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Argument outside the domain an operation is defined on
/// (coordinate on the real axis, point outside the polydisk, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// An integral that is structurally infinite (growth condition or total
/// mass violated).
class DivergenceError : public Error {
public:
  using Error::Error;
};

/// A check was invoked before its prerequisite check passed.
class OrderingError : public Error {
public:
  using Error::Error;
};

/// Measure description violates a structural invariant.
class SpecError : public Error {
public:
  using Error::Error;
};

/// Measure description could not be parsed.
class ParseError : public Error {
public:
  using Error::Error;
};

enum class HalfPlane { Upper, Lower };

/// Point in (C \ R)^n.  Every coordinate must have non-zero imaginary part;
/// the per-coordinate tag is the sign of that imaginary part.
class HalfPlanePoint {
public:
  explicit HalfPlanePoint(std::vector<Complex> coords);

  /// Constructs a point of C^{+n}; throws DomainError unless Im > 0 everywhere.
  static HalfPlanePoint upper(std::vector<Complex> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Complex>& coords() const { return coords_; }
  Complex operator[](int j) const { return coords_[static_cast<std::size_t>(j)]; }

  HalfPlane tag(int j) const {
    return coords_[static_cast<std::size_t>(j)].imag() > 0.0 ? HalfPlane::Upper
                                                             : HalfPlane::Lower;
  }
  bool all_upper() const;

  /// Copy with coordinate j conjugated.
  HalfPlanePoint conjugated(int j) const;
  /// Copy with every coordinate conjugated.
  HalfPlanePoint conjugated() const;

private:
  std::vector<Complex> coords_;
};

struct RealPoint {
  std::vector<double> coords;

  RealPoint() = default;
  explicit RealPoint(std::vector<double> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  double operator[](int j) const { return coords[static_cast<std::size_t>(j)]; }
};

/// Point of [0, 2pi)^n; construction rejects out-of-range coordinates.
class TorusPoint {
public:
  explicit TorusPoint(std::vector<double> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](int j) const { return coords_[static_cast<std::size_t>(j)]; }

private:
  std::vector<double> coords_;
};

/// Point of the open unit polydisk D^n.
class PolydiskPoint {
public:
  explicit PolydiskPoint(std::vector<Complex> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Complex>& coords() const { return coords_; }
  Complex operator[](int j) const { return coords_[static_cast<std::size_t>(j)]; }

private:
  std::vector<Complex> coords_;
};

using MultiIndex = std::vector<int>;

/// Entries in {-1,0,1} selecting one factor per axis.
using SignVector = std::vector<int>;

int multi_index_order(const MultiIndex& k);
bool contains(const SignVector& v, int entry);

}  // namespace hn
