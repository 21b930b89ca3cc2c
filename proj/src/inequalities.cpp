#include "schlicht/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schlicht/boundary.hpp"
#include "schlicht/extremal.hpp"
#include "schlicht/random_maps.hpp"

namespace schlicht {

namespace {

struct Derivative {
  double value;
  bool numeric;
};

Derivative boundary_derivative(const DiskMap& map, Cx xi) {
  bool numeric = false;
  double d = angular_derivative_auto(map, xi, &numeric);
  return {d, numeric};
}

double tol_for(bool numeric) { return numeric ? kNumericTol : kClosedTol; }

void require_univalent(const DiskMap& map) {
  Health h = sampled_health(map, 400);
  if (!h.self_map || !h.injective)
    throw Error(ErrorKind::Unhealthy, "univalence heuristic failed for " + to_text(map));
}

void add_complex(InequalityReport& r, const std::string& key, Cx z) {
  r.params.emplace_back(key + "_re", z.real());
  r.params.emplace_back(key + "_im", z.imag());
}

DiskMap disk_shift(Cx tau) { return DiskMap::moebius(1.0, -tau, -std::conj(tau), 1.0); }
DiskMap disk_shift_inverse(Cx tau) { return DiskMap::moebius(1.0, tau, std::conj(tau), 1.0); }

}  // namespace

void branch_guard(const DiskMap& map) {
  const int rings = 12, per_ring = 64;
  for (int j = 0; j < rings; ++j) {
    double r = 0.99 * (j + 0.5) / rings;
    double prev = 0.0;
    for (int k = 0; k <= per_ring; ++k) {
      Cx w = eval(map, std::polar(r, 2 * kPi * k / per_ring));
      if (std::abs(w) <= 1e-12 || (w.imag() == 0.0 && w.real() < 0.0))
        throw Error(ErrorKind::BranchViolation, "image meets the closed negative axis");
      double a = std::arg(w);
      if (k > 0 && std::abs(a - prev) > kPi)
        throw Error(ErrorKind::BranchViolation, "image crosses the negative real axis");
      prev = a;
    }
  }
}

InequalityReport check_theorem_A(const DiskMap& map, Cx tau, const std::vector<Cx>& xis,
                                 TheoremAForm form) {
  if (form == TheoremAForm::Auto) {
    if (!unimodular(tau)) {
      form = TheoremAForm::Interior;
    } else {
      double d = angular_derivative_auto(map, tau);
      form = d < 1.0 - 1e-12 ? TheoremAForm::Hyperbolic : TheoremAForm::Parabolic;
    }
  }
  std::string text = to_text(map);
  bool numeric = false;
  double lhs = 0.0, rhs = 0.0;
  std::string name;
  if (form == TheoremAForm::Interior) {
    if (!in_open_disk(tau)) throw Error(ErrorKind::WrongRegime, "interior form needs |tau| < 1");
    if (!(std::abs(eval(map, tau) - tau) < 1e-9))
      throw Error(ErrorKind::NotFixed, "tau is not fixed");
    DiskMap psi = tau == Cx(0.0) ? map : compose(disk_shift(tau), compose(map, disk_shift_inverse(tau)));
    Cx d0 = deriv(psi, 0.0);
    if (std::abs(1.0 - d0) < 1e-14) throw Error(ErrorKind::WrongRegime, "phi'(tau) = 1");
    for (Cx xi : xis) {
      Cx eta = tau == Cx(0.0) ? xi : eval(disk_shift(tau), xi);
      eta /= std::abs(eta);
      Derivative d = boundary_derivative(psi, eta);
      numeric |= d.numeric;
      if (!(d.value > 1.0)) throw Error(ErrorKind::WrongRegime, "boundary point not repulsive");
      lhs += 1.0 / (d.value - 1.0);
    }
    rhs = ((1.0 + d0) / (1.0 - d0)).real();
    name = "theorem_A_eq1";
  } else {
    if (!unimodular(tau)) throw Error(ErrorKind::WrongRegime, "boundary form needs |tau| = 1");
    DiskMap psi = rotate_conjugate(map, std::conj(tau));
    Derivative dt = boundary_derivative(psi, 1.0);
    numeric |= dt.numeric;
    if (form == TheoremAForm::Hyperbolic && !(dt.value > 0.0 && dt.value < 1.0))
      throw Error(ErrorKind::WrongRegime, "eq2 needs phi'(tau) in (0,1)");
    if (form == TheoremAForm::Parabolic && !(dt.value > 0.0 && dt.value <= 1.0 + 1e-12))
      throw Error(ErrorKind::WrongRegime, "eq3 needs phi'(tau) in (0,1]");
    for (Cx xi : xis) {
      Cx eta = std::conj(tau) * xi;
      Derivative d = boundary_derivative(psi, eta);
      numeric |= d.numeric;
      if (!(d.value > 1.0)) throw Error(ErrorKind::WrongRegime, "boundary point not repulsive");
      double w = form == TheoremAForm::Hyperbolic ? 1.0 : std::norm(1.0 - eta);
      lhs += w / (d.value - 1.0);
    }
    if (form == TheoremAForm::Hyperbolic) {
      rhs = dt.value / (1.0 - dt.value);
      name = "theorem_A_eq2";
    } else {
      Cx v = eval(psi, 0.0);
      rhs = v == Cx(0.0) ? std::numeric_limits<double>::infinity()
                         : 2.0 * (1.0 / v - 1.0).real();
      name = "theorem_A_eq3";
    }
  }
  InequalityReport r = make_report(name, text, lhs, rhs, true, tol_for(numeric));
  add_complex(r, "tau", tau);
  r.params.emplace_back("n_xi", double(xis.size()));
  return r;
}

InequalityReport check_theorem_B(const DiskMap& map, Cx tau, const std::vector<Cx>& xis) {
  require_univalent(map);
  Derivative dt = boundary_derivative(map, tau);
  if (!(dt.value > 0.0 && dt.value < 1.0))
    throw Error(ErrorKind::WrongRegime, "theorem B needs phi'(tau) in (0,1)");
  bool numeric = dt.numeric;
  double lhs = 0.0;
  for (Cx xi : xis) {
    Derivative d = boundary_derivative(map, xi);
    numeric |= d.numeric;
    if (!(d.value > 1.0)) throw Error(ErrorKind::WrongRegime, "boundary point not repulsive");
    lhs += 1.0 / std::log(d.value);
  }
  double rhs = -1.0 / std::log(dt.value);
  InequalityReport r = make_report("theorem_B", to_text(map), lhs, rhs, true, tol_for(numeric));
  add_complex(r, "tau", tau);
  r.params.emplace_back("phi_prime_tau", dt.value);
  return r;
}

InequalityReport check_cp31(const DiskMap& map, double theta, int n_samples) {
  Cx e = std::polar(1.0, theta);
  Derivative d1 = boundary_derivative(map, e);
  Derivative d2 = boundary_derivative(map, std::conj(e));
  double lhs = d1.value * d2.value;
  double rhs = -std::numeric_limits<double>::infinity();
  double s_max = 0.0;
  for (int k = 0; k < n_samples; ++k) {
    double s = -1.0 + 2.0 * (k + 1) / (n_samples + 1);
    Cx w = eval(map, geodesic_point(theta, s).z);
    double q = 1.0 - std::norm(w);
    double v = 1.0 + 4.0 * w.imag() / (q * q);
    if (v > rhs) {
      rhs = v;
      s_max = s;
    }
  }
  InequalityReport r = make_report("cp31", to_text(map), lhs, rhs, false,
                                   tol_for(d1.numeric || d2.numeric), true);
  r.params.emplace_back("theta", theta);
  r.params.emplace_back("n_samples", double(n_samples));
  r.params.emplace_back("s_at_sup", s_max);
  return r;
}

std::vector<InequalityReport> check_cpe(const DiskMap& map) {
  Derivative d = boundary_derivative(map, 1.0);
  double tol = tol_for(d.numeric);
  Cx v = eval(map, 0.0);
  std::string text = to_text(map);
  std::vector<InequalityReport> out;
  out.push_back(make_report("cpe", text, d.value, 1.0 / ((1.0 + v) / (1.0 - v)).real(), false, tol));
  out.push_back(make_report("ineqGuniv", text, d.value, ((1.0 - v) / (1.0 + v)).real(), false, tol));
  Health h = sampled_health(map, 400);
  if (h.self_map && h.injective)
    out.push_back(make_report("inegGuniv2", text, std::abs(d.value),
                              std::norm(1.0 - v) / (1.0 - std::norm(v)), false, tol));
  double av = std::abs(v);
  out.push_back(make_report("cpe_remark", text, ((1.0 - v) / (1.0 + v)).real(),
                            (1.0 - av) / (1.0 + av), false, kClosedTol));
  for (auto& r : out) add_complex(r, "phi0", v);
  return out;
}

InequalityReport check_unkelbach_osserman(const DiskMap& map) {
  Cx v = eval(map, 0.0);
  if (std::abs(v) > 1e-12) throw Error(ErrorKind::NotFixed, "0 is not fixed");
  Derivative d = boundary_derivative(map, 1.0);
  double d0 = std::abs(deriv(map, 0.0));
  InequalityReport r = make_report("unkelbach_osserman", to_text(map), d.value,
                                   2.0 / (1.0 + d0), false, tol_for(d.numeric));
  r.params.emplace_back("abs_phi_prime_0", d0);
  return r;
}

InequalityReport check_av(const DiskMap& map, Cx z, double alpha) {
  require_univalent(map);
  bool numeric = false;
  if (alpha <= 0.0) {
    Derivative d = boundary_derivative(map, 1.0);
    alpha = d.value;
    numeric = d.numeric;
  } else if (!(radial_residual([&](Cx u) { return eval(map, u); }, 1.0) < 1e-6)) {
    throw Error(ErrorKind::NotFixed, "1 is not fixed");
  }
  Jet j = eval_jet(map, z);
  double rz = 1.0 - std::norm(z);
  double rw = 1.0 - std::norm(j.value);
  double rhs = (rz / std::pow(std::abs(1.0 - z), 4)) * (std::pow(std::abs(1.0 - j.value), 4) / rw) /
               (alpha * alpha);
  InequalityReport r = make_report("av", to_text(map), std::abs(j.deriv), rhs, false, tol_for(numeric));
  add_complex(r, "z", z);
  r.params.emplace_back("alpha", alpha);
  return r;
}

std::vector<InequalityReport> check_o1(const DiskMap& map) {
  Derivative d = boundary_derivative(map, 1.0);
  Jet j = eval_jet(map, 0.0);
  Cx v = j.value, d0 = j.deriv;
  double new_bound = 2.0 / ((1.0 - v * v + d0) / ((1.0 - v) * (1.0 - v))).real();
  double av = std::abs(v);
  double L = 2.0 / ((1.0 - av * av + std::abs(d0)) / ((1.0 - av) * (1.0 - av)));
  std::string text = to_text(map);
  std::vector<InequalityReport> out;
  out.push_back(make_report("o1", text, d.value, new_bound, false, tol_for(d.numeric)));
  out.back().params = {{"new_bound", new_bound}, {"L", L}};
  out.push_back(make_report("o1_vs_osserman", text, new_bound, L, false, kClosedTol));
  return out;
}

std::vector<InequalityReport> check_origin1(const DiskMap& map) {
  branch_guard(map);
  Derivative d = boundary_derivative(map, 1.0);
  Cx v = eval(map, 0.0);
  double rhs = -std::log(std::abs(v)) / 2.0;
  std::string text = to_text(map);
  std::vector<InequalityReport> out;
  out.push_back(make_report("origin1", text, d.value, rhs, false, tol_for(d.numeric)));
  add_complex(out.back(), "phi0", v);
  if (v.imag() == 0.0 && v.real() > 0.0 && v.real() < 1.0) {
    double cpe_rhs = 1.0 / ((1.0 + v) / (1.0 - v)).real();
    out.push_back(make_report("origin1_vs_cpe", text, rhs, cpe_rhs, false, kClosedTol));
  }
  return out;
}

std::vector<InequalityReport> check_two_sided(const DiskMap& map, Cx z) {
  branch_guard(map);
  double a = std::abs(eval(map, 0.0));
  double r = std::abs(z);
  double w = std::abs(eval(map, z));
  std::string text = to_text(map);
  std::vector<InequalityReport> out;
  out.push_back(make_report("two_sided_lower", text, w, std::pow(a, (1 + r) / (1 - r)), false));
  out.push_back(make_report("two_sided_upper", text, w, std::pow(a, (1 - r) / (1 + r)), true));
  if (r > 0.0) {
    InequalityReport l = make_report("lindelof_strict", text, std::pow(a, (1 - r) / (1 + r)),
                                     (r + a) / (1 + r * a), true);
    l.pass = l.margin > 0.0;
    out.push_back(l);
  }
  for (auto& rep : out) add_complex(rep, "z", z);
  return out;
}

std::vector<InequalityReport> check_main(const DiskMap& map, double theta) {
  require_univalent(map);
  Cx e = std::polar(1.0, theta);
  Derivative d1 = boundary_derivative(map, e);
  Derivative d2 = boundary_derivative(map, std::conj(e));
  double tol = tol_for(d1.numeric || d2.numeric);
  double prod = d1.value * d2.value;
  Cx a = eval(map, 0.0);
  Region region = classify_region(a, theta);
  std::string text = to_text(map);
  std::vector<InequalityReport> out;
  out.push_back(make_report("main", text, std::sqrt(prod), main_bound(a, theta), false, tol));
  out.push_back(make_report("eq12", text, prod, 1.0, false, tol));
  if (region == Region::U1)
    out.push_back(make_report("main_corollary", text, std::sqrt(prod), h_plus(a.real(), theta),
                              false, tol));
  if (region == Region::U3)
    out.push_back(make_report("main_corollary", text, std::sqrt(prod), h_minus(a.real(), theta),
                              false, tol));
  for (auto& r : out) {
    r.params.emplace_back("theta", theta);
    add_complex(r, "phi0", a);
    r.params.emplace_back("region", double(static_cast<int>(region)));
  }
  return out;
}

}  // namespace schlicht
