#pragma once

#include <functional>
#include <vector>

#include "schlicht/disk_map.hpp"

namespace schlicht {

enum class AngularMode { Closed, Numeric };

enum class FixedClass { DenjoyWolffInterior, BoundaryAttractive, Neutral, Repulsive, Irregular };
const char* fixed_class_name(FixedClass c);

struct BoundaryFixedPoint {
  Cx xi;
  double derivative;  // +inf when irregular; |phi'| for interior points
  FixedClass cls;
};

struct GeodesicPoint {
  double s;
  Cx z;
};

struct Extrapolated {
  double value;
  double error;
};

// Repeated Richardson elimination for samples f(h0 2^-k) with an error
// expansion in powers of h^p; returns the entry with the smallest update.
Extrapolated richardson(const std::vector<double>& samples, double p, int max_order = 6);

// Radial residual |phi(r xi) - xi| at r = 1 - 1e-8 (best of two radii).
double radial_residual(const std::function<Cx(Cx)>& f, Cx xi);

double angular_derivative(const DiskMap& map, Cx xi, AngularMode mode);
double angular_derivative_numeric(const std::function<Cx(Cx)>& f, Cx xi, int levels = 21,
                                  double h = 1e-2);

// Closed-form angular derivative if available, otherwise numeric. `used_numeric`
// reports which path produced the value.
double angular_derivative_auto(const DiskMap& map, Cx xi, bool* used_numeric = nullptr);

BoundaryFixedPoint classify_fixed_point(const DiskMap& map, Cx xi);
Cx denjoy_wolff(const DiskMap& map, double tol);
GeodesicPoint geodesic_point(double theta, double s);

}  // namespace schlicht
