#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schlicht/boundary.hpp"
#include "schlicht/extremal.hpp"

using namespace schlicht;

namespace {

// circle through three points, intersected with (-1, 1)
double concyclic_real_point(Cx p, Cx q, Cx r) {
  double ax = p.real(), ay = p.imag(), bx = q.real(), by = q.imag(), cx = r.real(), cy = r.imag();
  double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  double ux = (std::norm(p) * (by - cy) + std::norm(q) * (cy - ay) + std::norm(r) * (ay - by)) / d;
  double uy = (std::norm(p) * (cx - bx) + std::norm(q) * (ax - cx) + std::norm(r) * (bx - ax)) / d;
  double rad = std::abs(p - Cx(ux, uy));
  double h = std::sqrt(rad * rad - uy * uy);
  double x1 = ux - h, x2 = ux + h;
  return std::abs(x1) < 1.0 ? x1 : x2;
}

double piecewise_phi(Cx a, double theta) {
  double c = std::cos(theta);
  double center = (1.0 - std::norm(a)) / (2.0 * (c - a.real()));
  double radius = std::sqrt(1.0 + center * center - 2.0 * center * c);
  return a.real() < c ? center - radius : center + radius;
}

double lambda(double t, double theta) { return std::sin((theta + t) / 2) / std::sin((theta - t) / 2); }

double sqrt_derivative_product(const DiskMap& f, double theta) {
  Cx e = std::polar(1.0, theta);
  return std::sqrt(angular_derivative(f, e, AngularMode::Closed) *
                   angular_derivative(f, std::conj(e), AngularMode::Closed));
}

}  // namespace

TEST_CASE("phi cap values") {
  double th = kPi / 3;
  CHECK(phi_cap(0.5, th) == 0.5);
  CHECK(phi_cap(-0.3, th) == -0.3);
  CHECK(phi_cap(0.9, 1.0) == 0.9);
  CHECK(std::abs(phi_cap(Cx(0.1, std::sqrt(0.19)), th)) < 1e-12);
  for (Cx a : {Cx(0.2, 0.3), Cx(-0.5, 0.2), Cx(0.8, -0.1), Cx(0.3, -0.6)}) {
    Cx e = std::polar(1.0, th);
    CHECK(std::abs(phi_cap(a, th) - concyclic_real_point(a, e, std::conj(e))) < 1e-10);
    CHECK(std::abs(phi_cap(a, th) - piecewise_phi(a, th)) < 1e-12);
  }
}

TEST_CASE("phi cap is continuous across the chord") {
  double th = 1.0, c = std::cos(th);
  for (double y : {0.0, 0.2, -0.5}) {
    CHECK(std::abs(phi_cap(Cx(c + 1e-8, y), th) - c) < 1e-6);
    CHECK(std::abs(phi_cap(Cx(c - 1e-8, y), th) - c) < 1e-6);
    CHECK(phi_cap(Cx(c, y), th) == doctest::Approx(c).epsilon(1e-15));
  }
}

TEST_CASE("gamma circle") {
  for (double th : {0.4, kPi / 3, 1.3}) {
    GammaCircle g = gamma_circle(0.0, th);
    CHECK(std::abs(g.center - 1.0 / (2.0 * std::cos(th))) < 1e-14);
    CHECK(std::abs(std::abs(g.center - std::polar(1.0, th)) - g.radius) < 1e-12);
    CHECK(std::abs(std::abs(g.center) - g.radius) < 1e-12);
  }
  GammaCircle g = gamma_circle(0.5, kPi / 3 + 0.2);
  CHECK(std::abs(std::abs(g.center - 0.5) - g.radius) < 1e-12);
  CHECK_THROWS_AS(gamma_circle(Cx(std::cos(1.0), 0.1), 1.0), Error);
}

TEST_CASE("regions") {
  double th = kPi / 3;
  CHECK(classify_region(0.9, th) == Region::U1);
  CHECK(classify_region(-0.5, th) == Region::U3);
  CHECK(classify_region(0.0, th) == Region::Gamma0);
  CHECK(classify_region(Cx(0.5, 0.2), th) == Region::Chord);
  CHECK(classify_region(Cx(0.3, 0.1), th) == Region::U2);
  CHECK(classify_region(Cx(1.0, 0.0), th) == Region::BoundaryArcClosure);
  for (Cx a : {Cx(0.9, 0.1), Cx(0.3, 0.1), Cx(0.5, 0.3)}) CHECK(phi_cap(a, th) > 0.0);
  for (Cx a : {Cx(-0.5, 0.1), Cx(-0.1, -0.7)}) {
    CHECK(classify_region(a, th) == Region::U3);
    CHECK(phi_cap(a, th) < 0.0);
  }
  RegionPolylines p = region_polylines(th, 64);
  for (Cx z : p.gamma0) CHECK(std::abs(std::norm(z) * std::cos(th) - z.real()) < 1e-12);
  RegionPolylines q = region_polylines(kPi / 2, 64);
  for (Cx z : q.gamma0) CHECK(std::abs(z.real()) < 1e-15);
}

TEST_CASE("hyperbolic Moebius family") {
  double th = 1.2;
  for (double t : {-0.9, -0.2, 0.0, 0.5, 1.1}) {
    CHECK(std::abs(moeb_t(1.0, t, th) - std::polar(1.0, t)) < 1e-12);
    Cx e = std::polar(1.0, th);
    CHECK(std::abs(moeb_t(e, t, th) - e) < 1e-12);
    CHECK(std::abs(moeb_t(std::conj(e), t, th) - std::conj(e)) < 1e-12);
    CHECK(std::abs(moeb_t(moeb_t(Cx(0.2, 0.3), t, th, true), t, th) - Cx(0.2, 0.3)) < 1e-12);
    // angular derivative at e^{-i theta}
    double d = angular_derivative(DiskMap::moeb_t(t, th), std::conj(e), AngularMode::Numeric);
    CHECK(std::abs(d - lambda(t, th)) < 1e-6);
  }
  CHECK(std::abs(moeb_t(Cx(0.3, -0.4), 0.0, th) - Cx(0.3, -0.4)) < 1e-15);
}

TEST_CASE("t zero") {
  double th = kPi / 3;
  CHECK(t_zero(0.4, th) == doctest::Approx(0.0).epsilon(1e-14));
  for (Cx a : {Cx(0.2, 0.3), Cx(-0.4, 0.5), Cx(0.7, -0.2), Cx(0.05, 0.9)}) {
    double t0 = t_zero(a, th);
    double phi = phi_cap(a, th);
    CHECK(std::abs(moeb_t(a, t0, th) - Cx(phi)) < 1e-10);
    CHECK(std::abs(t_zero(std::conj(a), th) + t0) < 1e-12);
    Cx e = std::polar(1.0, th);
    double L = std::abs(((phi - std::conj(e)) / (phi - e)) / ((a - std::conj(e)) / (a - e)));
    double closed = 2.0 * std::atan(std::tan(th / 2) * (L - 1.0) / (L + 1.0));
    CHECK(std::abs(t0 - closed) < 1e-12);
  }
}

TEST_CASE("Pick functions with two fixed boundary points") {
  double th = kPi / 3;
  DiskMap p = pick_pm(0.2, th, +1);
  Cx e = std::polar(1.0, th);
  CHECK(std::abs(angular_derivative(p, e, AngularMode::Closed) - 0.5376 / 0.4096) < 1e-12);
  CHECK(std::abs(angular_derivative(p, std::conj(e), AngularMode::Closed) - 0.5376 / 0.4096) < 1e-12);
  CHECK(std::abs(eval(pick_pm(0.0, th, -1), Cx(0.4, 0.1)) - Cx(0.4, 0.1)) < 1e-15);
  CHECK_THROWS_AS(pick_pm(0.2, th, -1), Error);
  CHECK_THROWS_AS(pick_pm(-0.2, th, +1), Error);
}

TEST_CASE("slit tips") {
  double th = kPi / 3;
  SlitTip plus = slit_endpoint(0.2, th, +1);
  // u+(zeta(-1)) = -62, disk root of z^2 + 62 z + 1
  double root = (-62.0 + std::sqrt(62.0 * 62.0 - 4.0)) / 2.0;
  CHECK(std::abs(plus.computed_tip - root) < 1e-12);
  CHECK(std::abs(plus.printed_formula - (-0.3903)) < 1e-4);
  CHECK(std::abs(plus.discrepancy) > 0.3);

  SlitTip minus = slit_endpoint(-0.2, th, -1);
  double x = 0.2, c = std::cos(th);
  double u = (-(1.0 + x * x) * 2.0 + 4.0 * x * c) / (x * 2.0 - (1.0 - x) * (1.0 - x) - 2.0 * x * c);
  double w = (u - std::sqrt(u * u - 4.0)) / 2.0;
  CHECK(std::abs(minus.computed_tip - w) < 1e-12);

  CHECK(std::abs(slit_endpoint(0.0, th, +1).computed_tip + 1.0) < 1e-12);
  CHECK(std::abs(slit_endpoint(0.0, th, -1).computed_tip - 1.0) < 1e-12);
}

TEST_CASE("Unkelbach extremal") {
  CHECK(to_text(unkelbach_extremal(0.0)) == "(id)");
  for (double v : {0.3, -0.4, 0.7}) {
    DiskMap m = unkelbach_extremal(v);
    CHECK(std::abs(unkelbach_parameter(v) - Cx(v)) < 1e-14);
    Cx z(0.2, 0.5);
    CHECK(std::abs(eval(m, z) - (z + v) / (1.0 + v * z)) < 1e-14);
    CHECK(std::abs(angular_derivative(m, 1.0, AngularMode::Closed) - (1.0 - v) / (1.0 + v)) < 1e-14);
  }
  DiskMap m = unkelbach_extremal(0.3);
  Cx v0 = eval(m, 0.0);
  CHECK(std::abs(angular_derivative(m, 1.0, AngularMode::Closed) * ((1.0 + v0) / (1.0 - v0)).real() - 1.0) < 1e-12);
  for (Cx v : {Cx(0.2, 0.4), Cx(-0.6, -0.3), Cx(0.1, -0.8)}) {
    Cx a = unkelbach_parameter(v);
    CHECK(std::abs(a * (1.0 + std::conj(a)) / (1.0 + a) - v) < 1e-12);
    CHECK(std::abs(eval(unkelbach_extremal(v), 0.0) - v) < 1e-12);
  }
}

TEST_CASE("main extremal") {
  ExtremalConfig z = main_extremal(0.0, 1.0);
  CHECK(z.which == ExtremalCase::C);
  CHECK(z.bound == 1.0);
  CHECK(to_text(z.extremal) == "(id)");

  ExtremalConfig h = main_extremal(0.5, kPi / 3);
  CHECK(h.which == ExtremalCase::A);
  CHECK(h.phi_cap == 0.5);
  CHECK(std::abs(h.bound - 3.0) < 1e-12);
  CHECK(to_text(h.extremal) == to_text(DiskMap::pick_plus(0.5, kPi / 3)));

  for (double th : {0.3, kPi / 3, 1.2, kPi / 2})
    for (Cx a : {Cx(0.2, 0.3), Cx(-0.5, 0.4), Cx(0.9, 0.05), Cx(0.1, -0.2), Cx(-0.2, -0.7)}) {
      ExtremalConfig cfg = main_extremal(a, th);
      CAPTURE(th);
      CAPTURE(a);
      CHECK(std::abs(eval(cfg.extremal, 0.0) - a) < 1e-9);
      CHECK(std::abs(sqrt_derivative_product(cfg.extremal, th) - cfg.bound) < 1e-9);
      CHECK(cfg.bound >= 1.0);
      CHECK(std::abs(main_bound(a, th) - cfg.bound) < 1e-15);
    }
  // a on the arc: case c, automorphism through a
  double th = 1.1;
  GammaCircle g = gamma_circle(0.0, th);
  Cx a = g.center + std::polar(g.radius, 2.5);
  ExtremalConfig c = main_extremal(a, th);
  CHECK(c.which == ExtremalCase::C);
  CHECK(c.bound == 1.0);
  CHECK(std::abs(eval(c.extremal, 0.0) - a) < 1e-9);
  CHECK(std::abs(sqrt_derivative_product(c.extremal, th) - 1.0) < 1e-9);
}

TEST_CASE("bound functions") {
  CHECK(std::abs(h_plus(0.5, kPi / 3) - 3.0) < 1e-15);
  CHECK(std::abs(h_minus(-0.5, kPi / 3) - (1.0 + 0.5 + 0.25) / 0.25) < 1e-14);
  CHECK(h_plus(0.0, 1.0) == 1.0);
}
