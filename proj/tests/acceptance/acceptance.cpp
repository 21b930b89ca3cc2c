// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "schlicht/boundary.hpp"
#include "schlicht/cli.hpp"
#include "schlicht/extremal.hpp"
#include "schlicht/inequalities.hpp"
#include "schlicht/modulus.hpp"
#include "schlicht/random_maps.hpp"
#include "schlicht/semigroups.hpp"
#include "schlicht/suite.hpp"

using namespace schlicht;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

const InequalityReport& named(const std::vector<InequalityReport>& rs, const std::string& n) {
  for (const auto& r : rs)
    if (r.name == n) return r;
  throw std::runtime_error("missing report " + n);
}

DiskMap automorphism_to_zero(Cx c) { return DiskMap::moebius(1.0, -c, -std::conj(c), 1.0); }
DiskMap automorphism_from_zero(Cx c) { return DiskMap::moebius(1.0, c, std::conj(c), 1.0); }

// circle through three points, intersected with (-1, 1)
double concyclicity_residual(Cx a, double theta, double phi) {
  Cx p = a, q = std::polar(1.0, theta), r = std::conj(q);
  double ax = p.real(), ay = p.imag(), bx = q.real(), by = q.imag(), cx = r.real(), cy = r.imag();
  double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  double ux = (std::norm(p) * (by - cy) + std::norm(q) * (cy - ay) + std::norm(r) * (ay - by)) / d;
  double uy = (std::norm(p) * (cx - bx) + std::norm(q) * (ax - cx) + std::norm(r) * (bx - ax)) / d;
  Cx center(ux, uy);
  return std::abs(std::abs(Cx(phi) - center) - std::abs(p - center));
}

Outcome criterion1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  DiskMap f = DiskMap::moebius(2.0, -1.0, -1.0, 2.0);
  double dm = angular_derivative(f, -1.0, AngularMode::Closed);
  double dp = angular_derivative(f, 1.0, AngularMode::Closed);
  o.need(dm == 1.0 / 3.0, "closed derivative at -1 = " + num(dm));
  o.need(dp == 3.0, "closed derivative at 1 = " + num(dp));
  double nm = angular_derivative(f, -1.0, AngularMode::Numeric);
  double np = angular_derivative(f, 1.0, AngularMode::Numeric);
  o.need(std::abs(nm - 1.0 / 3.0) < 1e-6, "numeric derivative at -1 = " + num(nm));
  o.need(std::abs(np - 3.0) < 1e-6, "numeric derivative at 1 = " + num(np));
  auto r = check_o1(f);
  const auto& o1 = named(r, "o1");
  o.need(std::abs(o1.rhs - 3.0) < 1e-12, "O1 bound " + num(o1.rhs));
  o.need(std::abs(o1.margin) < 1e-12, "O1 margin " + num(o1.margin));
  o.need(std::abs(o1.param("L") - 1.0 / 3.0) < 1e-12, "L = " + num(o1.param("L")));
  double dt = seconds_since(t0);
  o.need(dt < 1.0, "runtime " + num(dt) + " s");
  if (o.ok) o.detail = "derivatives 1/3 and 3, O1 bound 3 attained, L 1/3, " + num(dt) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  InequalityReport e1 = check_theorem_A(DiskMap::blaschke({0.0, 0.0}, 0.0), 0.0, {1.0});
  DiskMap h = DiskMap::moebius(2.0, 1.0, 1.0, 2.0);
  InequalityReport e2 = check_theorem_A(h, 1.0, {-1.0}, TheoremAForm::Hyperbolic);
  InequalityReport e3 = check_theorem_A(h, 1.0, {-1.0}, TheoremAForm::Parabolic);
  o.need(e1.name == "theorem_A_eq1" && std::abs(e1.margin) < 1e-12, "eq1 margin " + num(e1.margin));
  o.need(e2.name == "theorem_A_eq2" && std::abs(e2.margin) < 1e-12, "eq2 margin " + num(e2.margin));
  o.need(e3.name == "theorem_A_eq3" && std::abs(e3.margin) < 1e-12, "eq3 margin " + num(e3.margin));
  if (o.ok) o.detail = "eq1, eq2, eq3 margins below 1e-12";
  return o;
}

Outcome criterion3() {
  Outcome o;
  InequalityReport eq = check_theorem_B(DiskMap::moebius(2.0, -1.0, -1.0, 2.0), -1.0, {1.0});
  o.need(std::abs(eq.lhs - 1.0 / std::log(3.0)) < 1e-12 && std::abs(eq.margin) < 1e-12,
         "automorphism margin " + num(eq.margin));
  CounterRng g(2024);
  double worst = INFINITY;
  int checked = 0;
  for (int s = 0; s < 200; ++s) {
    try {
      double theta = g.uniform(10 * s, 0.2, kPi / 2);
      DiskMap u = random_univalent_fixing_pair(theta, {derive_seed(2024, s), 1 + s % 3});
      // strong hyperbolic factor: attracting at e^{i theta}, repelling at e^{-i theta}
      Cx e = std::polar(1.0, theta);
      auto m = hyperbolic_pair_coefficients(theta, 200.0);
      DiskMap hyp = DiskMap::moebius(m.a, m.b, m.c, m.d);
      if (angular_derivative(hyp, e, AngularMode::Closed) > 1.0) {
        m = hyperbolic_pair_coefficients(theta, 1.0 / 200.0);
        hyp = DiskMap::moebius(m.a, m.b, m.c, m.d);
      }
      Cx c = g.in_disk(10 * s + 1, 0.5);
      DiskMap f = compose(automorphism_from_zero(c), compose(hyp, compose(u, automorphism_to_zero(c))));
      Cx tau = eval(automorphism_from_zero(c), e);
      Cx xi = eval(automorphism_from_zero(c), std::conj(e));
      InequalityReport r = check_theorem_B(f, tau, {xi});
      worst = std::min(worst, r.margin);
      ++checked;
    } catch (const Error& err) {
      o.need(false, "seed " + std::to_string(s) + ": " + err.what());
    }
  }
  o.need(worst >= -1e-9, "worst margin " + num(worst));
  if (o.ok) o.detail = "1/log 3 equality; " + std::to_string(checked) + " random compositions, worst margin " + num(worst);
  return o;
}

Outcome criterion4() {
  Outcome o;
  CounterRng g(77);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    Cx v = g.in_disk(i, 0.9);
    worst = std::max(worst, std::abs(named(check_cpe(unkelbach_extremal(v)), "cpe").margin));
  }
  o.need(worst < 1e-12, "CPe worst |margin| " + num(worst));
  double worst_real = 0.0;
  for (double v : {-0.8, -0.4, 0.1, 0.4, 0.75}) {
    DiskMap m = DiskMap::moebius(1.0, v, v, 1.0);
    worst_real = std::max(worst_real, std::abs(named(check_cpe(m), "ineqGuniv").margin));
  }
  o.need(worst_real < 1e-12, "ineqGuniv worst |margin| " + num(worst_real));
  if (o.ok) o.detail = "CPe |margin| <= " + num(worst) + ", ineqGuniv |margin| <= " + num(worst_real);
  return o;
}

Outcome criterion5() {
  Outcome o;
  double worst_value = 0.0, worst_bound = 0.0;
  for (int i = 0; i < 10; ++i) {
    double theta = (i + 1) * (kPi / 2) / 10;
    for (int j = 0; j < 20; ++j) {
      Cx a = std::polar(0.1 + 0.2 * (j % 5), 2 * kPi * (j / 5) / 4 + 0.3);
      ExtremalConfig cfg = main_extremal(a, theta);
      worst_value = std::max(worst_value, std::abs(eval(cfg.extremal, 0.0) - a));
      Cx e = std::polar(1.0, theta);
      double prod = angular_derivative(cfg.extremal, e, AngularMode::Closed) *
                    angular_derivative(cfg.extremal, std::conj(e), AngularMode::Closed);
      worst_bound = std::max(worst_bound, std::abs(std::sqrt(prod) - cfg.bound));
    }
  }
  o.need(worst_value < 1e-9, "extremal(0) error " + num(worst_value));
  o.need(worst_bound < 1e-9, "sharpness error " + num(worst_bound));

  CounterRng g(5);
  double worst = INFINITY;
  int checked = 0, skipped = 0;
  for (int s = 0; s < 200; ++s) {
    double theta = g.uniform(s, 0.1, kPi / 2);
    try {
      DiskMap f = random_univalent_fixing_pair(theta, {derive_seed(5, s), 1 + s % 3});
      worst = std::min(worst, named(check_main(f, theta), "main").margin);
      ++checked;
    } catch (const Error&) {
      ++skipped;
    }
  }
  o.need(worst >= -1e-9, "random worst margin " + num(worst));
  o.need(checked >= 190, std::to_string(skipped) + " random maps rejected");

  double theta = 1.1;
  GammaCircle gc = gamma_circle(0.0, theta);
  Cx a = gc.center + std::polar(gc.radius, 2.8);
  ExtremalConfig c = main_extremal(a, theta);
  Cx e = std::polar(1.0, theta);
  double prod = angular_derivative(c.extremal, e, AngularMode::Closed) *
                angular_derivative(c.extremal, std::conj(e), AngularMode::Closed);
  o.need(c.which == ExtremalCase::C && c.bound == 1.0, "case c bound " + num(c.bound));
  o.need(std::abs(std::sqrt(prod) - 1.0) < 1e-9, "case c product " + num(prod));
  if (o.ok)
    o.detail = "200 grid extremals sharp to " + num(worst_bound) + "; " + std::to_string(checked) +
               " random maps, worst margin " + num(worst) + "; case c bound 1";
  return o;
}

Outcome criterion6() {
  Outcome o;
  CounterRng g(6);
  double worst_fit = 0.0, worst_moeb = 0.0;
  for (int i = 0; i < 200; ++i) {
    double theta = g.uniform(3 * i, 0.05, kPi / 2);
    Cx a = g.in_disk(3 * i + 1, 0.98);
    double phi = phi_cap(a, theta);
    if (std::abs(a.imag()) > 1e-6) worst_fit = std::max(worst_fit, concyclicity_residual(a, theta, phi));
    worst_moeb = std::max(worst_moeb, std::abs(moeb_t(a, t_zero(a, theta), theta) - Cx(phi)));
  }
  o.need(worst_fit < 1e-10, "concyclicity residual " + num(worst_fit));
  o.need(worst_moeb < 1e-10, "moeb(a, t0) residual " + num(worst_moeb));
  bool real_exact = true;
  for (double th : {0.3, 1.0, kPi / 2})
    for (double x : {-0.9, -0.3, 0.0, 0.2, 0.5403023058681398, 0.77, 0.99})
      real_exact = real_exact && phi_cap(x, th) == x;
  o.need(real_exact, "Phi(x) != x for some real x");
  double worst_cont = 0.0;
  for (double th : {0.4, 1.0, 1.5})
    for (double y : {0.0, 0.1, -0.3}) {
      double c = std::cos(th);
      if (std::abs(Cx(c, y)) >= 1.0) continue;
      for (double s : {1e-8, -1e-8}) worst_cont = std::max(worst_cont, std::abs(phi_cap(Cx(c + s, y), th) - c));
    }
  o.need(worst_cont < 1e-6, "continuity gap " + num(worst_cont));
  if (o.ok)
    o.detail = "fit " + num(worst_fit) + ", moeb " + num(worst_moeb) + ", continuity " + num(worst_cont);
  return o;
}

Outcome criterion7() {
  Outcome o;
  GeneratorArgs args;
  args.closed = gen::ClosedKind::OneMinusZ2;
  Generator g = make_generator(GeneratorKind::Closed, args);
  double worst = 0.0;
  for (Cx z : {Cx(0.3), Cx(0.0, 0.3), Cx(-0.5, 0.4)})
    for (double t : {0.1, 1.0, 5.0}) {
      double c = std::tanh(t);
      worst = std::max(worst, std::abs(flow(g, z, t, 1e-12).zt - (z + c) / (1.0 + z * c)));
    }
  o.need(worst < 1e-8, "flow error " + num(worst));
  auto [semi, bd] = check_flow_laws(g, Cx(0.0, 0.3), 0.5, 0.5, 1.0);
  o.need(semi.lhs < 1e-7, "semigroup residual " + num(semi.lhs));
  o.need(bd.lhs < 1e-6, "boundary derivative residual " + num(bd.lhs));
  auto gi = check_generator_inequalities(g, 1.0);
  o.need(std::abs(gi[0].margin) < 1e-12, "equ2 margin " + num(gi[0].margin));
  o.need(std::abs(gi[1].margin) < 1e-12, "O3 margin " + num(gi[1].margin));
  Extrapolated lim = origin_limit(DiskMap::exponential(0.8));
  o.need(std::abs(lim.value - 0.4) < 1e-8, "root limit " + num(lim.value));
  if (o.ok)
    o.detail = "flow " + num(worst) + ", semigroup " + num(semi.lhs) + ", derivative " + num(bd.lhs) +
               ", limit error " + num(std::abs(lim.value - 0.4));
  return o;
}

Outcome criterion8() {
  Outcome o;
  double worst = 0.0;
  bool lindelof = true;
  for (double t : {0.2, 0.8, 1.5}) {
    DiskMap f = DiskMap::exponential(t);
    const auto& r = named(check_origin1(f), "origin1");
    o.need(std::abs(r.margin - t / 2.0) < 1e-12, "origin1 margin " + num(r.margin));
    for (double rad : {0.25, 0.5, 0.75})
      for (double ang : {0.0, 1.0, 2.5, kPi}) {
        Cx z = std::polar(rad, ang);
        auto rs = check_two_sided(f, z);
        double w = std::exp(t * (z.real() - 1.0));
        double lo = w - std::exp(-t * (1 + rad) / (1 - rad));
        double hi = std::exp(-t * (1 - rad) / (1 + rad)) - w;
        const auto& L = named(rs, "two_sided_lower");
        const auto& U = named(rs, "two_sided_upper");
        worst = std::max({worst, std::abs(L.margin - lo), std::abs(U.margin - hi)});
        o.need(L.pass && U.pass, "two-sided bound fails");
        lindelof = lindelof && named(rs, "lindelof_strict").pass;
      }
  }
  o.need(worst < 1e-12, "two-sided margin deviation " + num(worst));
  o.need(lindelof, "Lindelof strict improvement fails");
  if (o.ok) o.detail = "origin1 margins t/2, two-sided margins match to " + num(worst);
  return o;
}

Outcome criterion9() {
  Outcome o;
  double closed = reduced_modulus_closed(DigonFamily::D1, 0.0, kPi / 2).value;
  o.need(std::abs(closed - 2.0 / kPi * std::log(4.0)) < 1e-14, "closed form " + num(closed));
  double rect = grid_modulus(Rectangle{2.0, 1.0}, 128).value;
  o.need(std::abs(rect - 2.0) < 0.02, "rectangle " + num(rect));
  ModulusResult slit = reduced_modulus_numeric(slit_disk_spec(1.0));
  o.need(std::abs(slit.value) < 2e-2,
         "slit disk " + num(slit.value) + " +- " + num(slit.est_error) + " (expected 0)");
  ModulusResult d1 = reduced_modulus_numeric(d1_spec(0.0, kPi / 2));
  o.need(std::abs(d1.value - closed) < 5e-2, "D1 grid " + num(d1.value) + " vs " + num(closed));
  o.detail = (o.ok ? "" : o.detail + " | ") + "closed " + num(closed) + ", rectangle " + num(rect) +
             ", slit disk " + num(slit.value) + ", D1 grid " + num(d1.value);
  return o;
}

Outcome criterion10() {
  Outcome o;
  InequalityReport r = check_cp31(DiskMap::identity(), kPi / 3, 101);
  o.need(r.advisory && !r.pass, "identity report not flagged as advisory violation");
  SuiteConfig cfg;
  cfg.n_cases = 50;
  cfg.which = {"cp31"};
  SuiteResult s = run_suite(cfg);
  o.need(s.summary.failed == 0, "cp31 counted as failure");
  if (o.ok)
    o.detail = "identity lhs " + num(r.lhs) + " < rhs " + num(r.rhs) + " recorded as advisory; " +
               std::to_string(s.summary.advisory_flagged) + " advisory flags, 0 failures";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "schlicht");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  return cli::run(int(argv.size()), argv.data(), out, err);
}

Outcome criterion11() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  int c1 = run_cli({"verify", "--suite", "all", "--samples", "200", "--seed", "42", "--out", "acceptance_1.json"});
  int c2 = run_cli({"verify", "--suite", "all", "--samples", "200", "--seed", "42", "--out", "acceptance_2.json"});
  double dt = seconds_since(t0);
  std::string a = slurp("acceptance_1.json"), b = slurp("acceptance_2.json");
  std::vector<InequalityReport> reps;
  SuiteSummary s;
  reports_from_json(a, &reps, &s);
  o.need(c1 == 0 && c2 == 0, "exit codes " + std::to_string(c1) + ", " + std::to_string(c2));
  o.need(!a.empty() && a == b, "reports differ between runs");
  o.need(s.failed == 0, std::to_string(s.failed) + " failures");
  o.need(dt < 120.0, "two runs took " + num(dt) + " s");
  if (o.ok)
    o.detail = std::to_string(s.total) + " reports, 0 failures, " + std::to_string(s.advisory_flagged) +
               " advisory, identical bytes, " + num(dt / 2) + " s per run";
  return o;
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8,
                                                    criterion9, criterion10, criterion11};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::printf("%s %2zu  %s\n", o.ok ? "PASS" : "FAIL", i + 1, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
