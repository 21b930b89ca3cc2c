#include "schlicht/extremal.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>

namespace schlicht {

const char* region_name(Region r) {
  switch (r) {
    case Region::U1: return "U1";
    case Region::U2: return "U2";
    case Region::U3: return "U3";
    case Region::Gamma0: return "gamma0";
    case Region::Chord: return "chord";
    case Region::BoundaryArcClosure: return "boundary_arc_closure";
  }
  return "?";
}

const char* case_name(ExtremalCase c) {
  switch (c) {
    case ExtremalCase::A: return "a";
    case ExtremalCase::B: return "b";
    case ExtremalCase::C: return "c";
  }
  return "?";
}

namespace {

void check_theta(double theta) {
  if (!(theta > 0.0 && theta <= kPi / 2 + 1e-15))
    throw Error(ErrorKind::DomainError, "theta must lie in (0, pi/2]");
}

void check_disk(Cx a) {
  if (!in_open_disk(a)) throw Error(ErrorKind::DomainError, "point must lie in the open disk");
}

Cx K(Cx z, double theta) {
  Cx e = std::polar(1.0, theta);
  return (z - std::conj(e)) / (z - e);
}

}  // namespace

double phi_cap(Cx a, double theta) {
  check_disk(a);
  check_theta(theta);
  double c = std::cos(theta);
  double N = 1.0 - std::norm(a);
  double d = c - a.real();
  if (d == 0.0) return c;
  if (a.imag() == 0.0) return a.real();  // the circle meets the axis at a itself
  // rationalized form of center -+ radius; continuous across Re a = cos(theta)
  return 2.0 * (N * c - d) / (N + std::sqrt(N * N - 4.0 * d * N * c + 4.0 * d * d));
}

GammaCircle gamma_circle(Cx a, double theta) {
  check_disk(a);
  check_theta(theta);
  double c = std::cos(theta);
  double d = c - a.real();
  if (std::abs(d) <= 1e-14) throw Error(ErrorKind::DegenerateChord, "Re a = cos(theta)");
  double center = (1.0 - std::norm(a)) / (2.0 * d);
  return {center, std::sqrt(1.0 + center * center - 2.0 * center * c)};
}

Region classify_region(Cx a, double theta) {
  check_theta(theta);
  if (!in_open_disk(a)) return Region::BoundaryArcClosure;
  double c = std::cos(theta);
  double x = a.real(), y = a.imag();
  double g = (x * x + y * y) * c - x;
  if (std::abs(g) <= 1e-12) return Region::Gamma0;
  if (std::abs(x - c) <= 1e-12 && std::abs(y) < std::sin(theta)) return Region::Chord;
  if (x > c) return Region::U1;
  return g < 0.0 ? Region::U2 : Region::U3;
}

Cx moeb_t(Cx z, double t, double theta, bool inverse) {
  check_theta(theta);
  if (!(std::abs(t) < theta)) throw Error(ErrorKind::DomainError, "t must lie in (-theta, theta)");
  double lambda = moeb_t_lambda(t, theta);
  auto m = hyperbolic_pair_coefficients(theta, inverse ? 1.0 / lambda : lambda);
  return (m.a * z + m.b) / (m.c * z + m.d);
}

double t_zero(Cx a, double theta) {
  check_disk(a);
  check_theta(theta);
  double phi = phi_cap(a, theta);
  Cx L = K(phi, theta) / K(a, theta);
  double logL = std::log(std::abs(L));
  auto f = [&](double t) { return std::log(moeb_t_lambda(t, theta)) - logL; };
  double lo = -theta + 1e-9, hi = theta - 1e-9;
  double flo = f(lo), fhi = f(hi);
  if (!(flo < 0.0 && fhi > 0.0)) throw Error(ErrorKind::RootNotBracketed, "t0 residual");
  // a few bisection steps, then TOMS 748 to full precision
  for (int k = 0; k < 8; ++k) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  std::uintmax_t iters = 200;
  auto tol = [](double l, double h) { return std::abs(h - l) <= 1e-15; };
  auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  return 0.5 * (r.first + r.second);
}

DiskMap pick_pm(double x, double theta, int sign) {
  check_theta(theta);
  if (sign > 0) {
    if (!(x >= 0.0 && x < 1.0)) throw Error(ErrorKind::DomainError, "p+ needs x in [0,1)");
    return DiskMap::pick_plus(x, theta);
  }
  if (!(x > -1.0 && x <= 0.0)) throw Error(ErrorKind::DomainError, "p- needs x in (-1,0]");
  return DiskMap::pick_minus(x, theta);
}

SlitTip slit_endpoint(double x, double theta, int sign) {
  DiskMap p = pick_pm(x, theta, sign);
  double tip = boundary_jet(p, sign > 0 ? -1.0 : 1.0).value.real();
  double c = std::cos(theta);
  double ax = std::abs(x);
  double den = ax * ax - 2.0 * ax * c + 1.0;
  double root = std::sqrt(2.0 * ax * (1.0 + ax * ax) * c);
  double printed = sign > 0 ? (2.0 * root - ax * ax - 2.0 * ax * c - 1.0) / den
                            : (den - 2.0 * root) / den;
  return {tip, printed, tip - printed};
}

Cx unkelbach_parameter(Cx v) {
  check_disk(v);
  if (v == Cx(0.0)) return 0.0;
  Cx a = v;
  for (int k = 0; k < 500; ++k) {
    Cx next = v * (1.0 + a) / (1.0 + std::conj(a));
    if (std::abs(next - a) < 1e-13) return next;
    a = next;
  }
  // fallback: a = r e^{ib}; b - 2 arg(1 + r e^{ib}) is increasing with total increase 2 pi
  double r = std::abs(v), av = std::arg(v);
  auto H = [&](double b) { return b - 2.0 * std::arg(1.0 + std::polar(r, b)) - av; };
  double lo = av - kPi, hi = av + kPi;
  double k = std::ceil(H(lo) / (2 * kPi));
  double target = 2 * kPi * k;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (H(mid) < target ? lo : hi) = mid;
  }
  a = std::polar(r, 0.5 * (lo + hi));
  if (!(std::abs(a * (1.0 + std::conj(a)) / (1.0 + a) - v) < 1e-12))
    throw Error(ErrorKind::SolverDiverged, "no solution a for v = " + format_complex(v));
  return a;
}

DiskMap unkelbach_extremal(Cx v) {
  Cx a = unkelbach_parameter(v);
  if (a == Cx(0.0)) return DiskMap::identity();
  Cx k = (1.0 + std::conj(a)) / (1.0 + a);
  return DiskMap::moebius(k, k * a, std::conj(a), 1.0);
}

double h_plus(double x, double theta) {
  double c = std::cos(theta);
  return (1.0 - 2.0 * x * c + x * x) / ((1.0 - x) * (1.0 - x));
}

double h_minus(double x, double theta) {
  double c = std::cos(theta);
  return (1.0 - 2.0 * x * c + x * x) / ((1.0 + x) * (1.0 + x));
}

namespace {

ExtremalCase case_for(Region r) {
  switch (r) {
    case Region::Gamma0: return ExtremalCase::C;
    case Region::U3: return ExtremalCase::B;
    default: return ExtremalCase::A;
  }
}

}  // namespace

double main_bound(Cx a, double theta) {
  check_disk(a);
  Region r = classify_region(a, theta);
  switch (case_for(r)) {
    case ExtremalCase::A: return h_plus(phi_cap(a, theta), theta);
    case ExtremalCase::B: return h_minus(phi_cap(a, theta), theta);
    case ExtremalCase::C: return 1.0;
  }
  return 1.0;
}

ExtremalConfig main_extremal(Cx a, double theta) {
  check_disk(a);
  check_theta(theta);
  ExtremalConfig cfg{a, theta, classify_region(a, theta), 0.0, 0.0, ExtremalCase::C,
                     DiskMap::identity(), 1.0};
  cfg.which = case_for(cfg.region);
  cfg.phi_cap = cfg.which == ExtremalCase::C ? 0.0 : phi_cap(a, theta);
  cfg.t0 = t_zero(a, theta);
  DiskMap inner = DiskMap::identity();
  if (cfg.which == ExtremalCase::A) {
    inner = pick_pm(cfg.phi_cap, theta, +1);
    cfg.bound = h_plus(cfg.phi_cap, theta);
  } else if (cfg.which == ExtremalCase::B) {
    inner = pick_pm(cfg.phi_cap, theta, -1);
    cfg.bound = h_minus(cfg.phi_cap, theta);
  }
  if (cfg.t0 == 0.0)
    cfg.extremal = inner;
  else if (cfg.which == ExtremalCase::C)
    cfg.extremal = DiskMap::moeb_t_inverse(cfg.t0, theta);
  else
    cfg.extremal = compose(DiskMap::moeb_t_inverse(cfg.t0, theta), inner);
  return cfg;
}

RegionPolylines region_polylines(double theta, int n) {
  check_theta(theta);
  RegionPolylines p;
  for (int k = 0; k <= n; ++k) p.unit_circle.push_back(std::polar(1.0, 2 * kPi * k / n));
  Cx e = std::polar(1.0, theta);
  p.chord = {std::conj(e), e};
  double c = std::cos(theta);
  if (c < 1e-12) {
    p.gamma0 = {Cx(0.0, -1.0), Cx(0.0, 1.0)};
    return p;
  }
  double R = 1.0 / (2.0 * c);
  double a1 = std::arg(e - R);
  for (int k = 0; k <= n; ++k) {
    double a = a1 + (2 * kPi - 2 * a1) * k / n;
    p.gamma0.push_back(R + std::polar(R, a));
  }
  return p;
}

}  // namespace schlicht
