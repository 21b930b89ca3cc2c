#include "schlicht/modulus.hpp"

#include <algorithm>
#include <cmath>

namespace schlicht {

const char* source_name(ModulusSource s) {
  switch (s) {
    case ModulusSource::ClosedForm: return "closed_form";
    case ModulusSource::ChangeRule: return "change_rule";
    case ModulusSource::Grid: return "grid";
  }
  return "?";
}

ModulusResult reduced_modulus_closed(DigonFamily family, double a0, double theta) {
  if (!(theta > 0.0 && theta < kPi))
    throw Error(ErrorKind::DomainError, "theta must lie in (0, pi)");
  if (family == DigonFamily::D1 && !(a0 >= 0.0 && a0 < 1.0))
    throw Error(ErrorKind::DomainError, "D1 needs a0 in [0,1)");
  if (family == DigonFamily::D2 && !(a0 > -1.0 && a0 <= 0.0))
    throw Error(ErrorKind::DomainError, "D2 needs a0 in (-1,0]");
  double c = std::cos(theta);
  double s = std::sin(theta);
  double den = family == DigonFamily::D1 ? (1.0 - a0) * (1.0 - a0) : (1.0 + a0) * (1.0 + a0);
  double arg = 4.0 * (1.0 - c) / s * (1.0 - 2.0 * a0 * c + a0 * a0) / den;
  return {2.0 / kPi * std::log(arg), ModulusSource::ClosedForm, 0.0};
}

double modulus_change(double m, double psi_a, double psi_b, double da, double db) {
  return m + std::log(da) / psi_a + std::log(db) / psi_b;
}

double modulus_change_expansion(double m, double psi_a, double psi_b, Cx c1, Cx d1) {
  return m + std::log(std::abs(c1)) / psi_a + std::log(std::abs(d1)) / psi_b;
}

namespace {

// circle vertices starting and ending at `start`, counterclockwise, with the
// marked points inserted exactly
std::vector<Cx> circle_from(double start, int n, const std::vector<double>& marked) {
  std::vector<double> angles;
  for (int k = 0; k <= n; ++k) angles.push_back(start + 2 * kPi * k / n);
  for (double m : marked) {
    double t = start + std::fmod(std::fmod(m - start, 2 * kPi) + 2 * kPi, 2 * kPi);
    auto it = std::min_element(angles.begin(), angles.end(),
                               [&](double p, double q) { return std::abs(p - t) < std::abs(q - t); });
    if (it != angles.begin() && it + 1 != angles.end()) *it = t;
  }
  std::vector<Cx> pts;
  for (std::size_t k = 0; k < angles.size(); ++k)
    pts.push_back(k == 0 || k + 1 == angles.size() ? std::polar(1.0, start)
                                                   : std::polar(1.0, angles[k]));
  return pts;
}

int nearest_vertex(const std::vector<Cx>& v, Cx z) {
  int best = 0;
  for (int k = 1; k < int(v.size()); ++k)
    if (std::abs(v[k] - z) < std::abs(v[best] - z)) best = k;
  return best;
}

void check_points(int circle_points) {
  if (circle_points < 16) throw Error(ErrorKind::DomainError, "too few circle points");
}

}  // namespace

DigonGridSpec slit_disk_spec(Cx xi, int circle_points) {
  check_points(circle_points);
  if (!unimodular(xi)) throw Error(ErrorKind::DomainError, "xi must be unimodular");
  double t = std::arg(xi);
  DigonGridSpec spec;
  spec.vertices = circle_from(t, circle_points, {});
  spec.vertices.push_back(0.0);
  spec.a = 0;
  spec.b = circle_points;
  return spec;
}

DigonGridSpec d1_spec(double a0, double theta, int circle_points) {
  check_points(circle_points);
  if (!(a0 >= 0.0 && a0 < 1.0)) throw Error(ErrorKind::DomainError, "D1 needs a0 in [0,1)");
  if (!(theta > 0.0 && theta < kPi)) throw Error(ErrorKind::DomainError, "theta in (0, pi)");
  DigonGridSpec spec;
  spec.vertices = circle_from(kPi, circle_points, {theta, -theta});
  spec.vertices.push_back(a0);
  spec.a = nearest_vertex(spec.vertices, std::polar(1.0, theta));
  spec.b = nearest_vertex(spec.vertices, std::polar(1.0, -theta));
  return spec;
}

DigonGridSpec d2_spec(double a0, double theta, int circle_points) {
  check_points(circle_points);
  if (!(a0 > -1.0 && a0 <= 0.0)) throw Error(ErrorKind::DomainError, "D2 needs a0 in (-1,0]");
  if (!(theta > 0.0 && theta < kPi)) throw Error(ErrorKind::DomainError, "theta in (0, pi)");
  DigonGridSpec spec;
  spec.vertices = circle_from(0.0, circle_points, {theta, -theta});
  spec.vertices.push_back(a0);
  spec.a = nearest_vertex(spec.vertices, std::polar(1.0, theta));
  spec.b = nearest_vertex(spec.vertices, std::polar(1.0, -theta));
  return spec;
}

}  // namespace schlicht
