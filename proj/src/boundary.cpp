#include "schlicht/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace schlicht {

const char* fixed_class_name(FixedClass c) {
  switch (c) {
    case FixedClass::DenjoyWolffInterior: return "denjoy_wolff_interior";
    case FixedClass::BoundaryAttractive: return "boundary_attractive";
    case FixedClass::Neutral: return "neutral";
    case FixedClass::Repulsive: return "repulsive";
    case FixedClass::Irregular: return "irregular";
  }
  return "?";
}

Extrapolated richardson(const std::vector<double>& samples, double p, int max_order) {
  std::size_t n = samples.size();
  if (n == 0) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
  if (n == 1) return {samples[0], std::numeric_limits<double>::infinity()};
  std::vector<std::vector<double>> T(n);
  Extrapolated best{samples[n - 1], std::abs(samples[n - 1] - samples[n - 2])};
  for (std::size_t k = 0; k < n; ++k) {
    T[k].push_back(samples[k]);
    for (std::size_t j = 1; j <= k && int(j) <= max_order; ++j) {
      double f = std::pow(2.0, p * double(j));
      double v = T[k][j - 1] + (T[k][j - 1] - T[k - 1][j - 1]) / (f - 1.0);
      T[k].push_back(v);
      double err = std::abs(v - T[k][j - 1]);
      if (err < best.error) best = {v, err};
    }
  }
  return best;
}

double radial_residual(const std::function<Cx(Cx)>& f, Cx xi) {
  double best = std::numeric_limits<double>::infinity();
  for (double r : {1.0 - 1e-8, 1.0 - 1e-10}) {
    try {
      best = std::min(best, std::abs(f(r * xi) - xi));
    } catch (const Error&) {
    }
  }
  return best;
}

double angular_derivative_numeric(const std::function<Cx(Cx)>& f, Cx xi, int levels, double h) {
  std::vector<double> q;
  for (int k = 0; k < levels; ++k) {
    double d = h * std::ldexp(1.0, -k);
    Cx z = (1.0 - d) * xi;
    q.push_back(((xi - f(z)) / (xi - z)).real());
  }
  if (q.size() >= 6) {
    bool growing = q.back() > 1e8;
    for (std::size_t k = q.size() - 5; k < q.size() && growing; ++k) growing = q[k] > q[k - 1];
    if (growing) return std::numeric_limits<double>::infinity();
  }
  return richardson(q, 1.0).value;
}

namespace {

void require_fixed(const DiskMap& map, Cx xi) {
  if (!unimodular(xi)) throw Error(ErrorKind::DomainError, "boundary point must be unimodular");
  auto f = [&](Cx z) { return eval(map, z); };
  if (!(radial_residual(f, xi) < 1e-6))
    throw Error(ErrorKind::NotFixed, "point " + format_complex(xi) + " is not fixed");
}

}  // namespace

double angular_derivative(const DiskMap& map, Cx xi, AngularMode mode) {
  if (mode == AngularMode::Closed) {
    if (!unimodular(xi)) throw Error(ErrorKind::DomainError, "boundary point must be unimodular");
    Jet j = boundary_jet(map, xi);
    if (!(std::abs(j.value - xi) < 1e-8)) require_fixed(map, xi);
    return j.deriv.real();
  }
  require_fixed(map, xi);
  return angular_derivative_numeric([&](Cx z) { return eval(map, z); }, xi);
}

double angular_derivative_auto(const DiskMap& map, Cx xi, bool* used_numeric) {
  try {
    double d = angular_derivative(map, xi, AngularMode::Closed);
    if (used_numeric) *used_numeric = false;
    return d;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoClosedForm && e.kind() != ErrorKind::PoleHit) throw;
  }
  if (used_numeric) *used_numeric = true;
  return angular_derivative(map, xi, AngularMode::Numeric);
}

BoundaryFixedPoint classify_fixed_point(const DiskMap& map, Cx xi) {
  if (std::abs(xi) > 1.0 + 1e-12) throw Error(ErrorKind::DomainError, "point outside the disk");
  if (!unimodular(xi)) {
    if (!(std::abs(eval(map, xi) - xi) < 1e-6))
      throw Error(ErrorKind::NotFixed, "point " + format_complex(xi) + " is not fixed");
    double d = std::abs(deriv(map, xi));
    FixedClass c = d < 1.0 - 1e-12 ? FixedClass::DenjoyWolffInterior : FixedClass::Neutral;
    return {xi, d, c};
  }
  double d = angular_derivative_auto(map, xi);
  FixedClass c;
  if (std::isinf(d))
    c = FixedClass::Irregular;
  else if (d < 1.0 - 1e-12)
    c = FixedClass::BoundaryAttractive;
  else if (d <= 1.0 + 1e-12)
    c = FixedClass::Neutral;
  else
    c = FixedClass::Repulsive;
  return {xi, d, c};
}

Cx denjoy_wolff(const DiskMap& map, double tol) {
  Cx z = 0.0;
  double prev_arg = 0.0;
  int stable = 0;
  for (long n = 0; n < 1000000; ++n) {
    Cx next = eval(map, z);
    double step = std::abs(next - z);
    if (std::abs(next) > 1.0 - 10 * tol) return next / std::abs(next);
    if (std::abs(next) > 1.0 - 1e-6) {
      double a = std::arg(next);
      stable = std::abs(a - prev_arg) < std::sqrt(tol) ? stable + 1 : 0;
      prev_arg = a;
      if (stable > 50 && step < tol) return next / std::abs(next);
    }
    if (step < tol && std::abs(next) <= 1.0 - 1e-6) return next;
    z = next;
  }
  throw Error(ErrorKind::NoConvergence, "Denjoy-Wolff iteration did not settle");
}

GeodesicPoint geodesic_point(double theta, double s) {
  if (!(theta > 0.0 && theta <= kPi / 2 + 1e-15) || !(s > -1.0 && s < 1.0))
    throw Error(ErrorKind::DomainError, "geodesic parameters out of range");
  double r = std::tan(kPi / 4 - theta / 2);
  Cx w(0.0, s);
  return {s, (w + r) / (1.0 + r * w)};
}

}  // namespace schlicht
