#include "schlicht/semigroups.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "schlicht/inequalities.hpp"

namespace schlicht {

namespace {

std::vector<Cx> disk_samples(int n) {
  std::vector<Cx> pts;
  int rings = std::max(1, int(std::sqrt(n / kPi)));
  for (int j = 0; j < rings; ++j) {
    double r = 0.99 * (j + 0.5) / rings;
    int m = std::max(4, int(std::lround(2.0 * n * (j + 0.5) / (rings * rings))));
    for (int k = 0; k < m; ++k) pts.push_back(std::polar(r, 0.31 * j + 2 * kPi * k / m));
  }
  return pts;
}

Jet positive_jet(const PositiveFunction& p, Cx z) {
  if (!p.cayley) return {p.value, 0.0};
  Jet f = eval_jet(p.f, z);
  Cx den = p.xi - f.value;
  return {(p.xi + f.value) / den, 2.0 * p.xi * f.deriv / (den * den)};
}

Jet closed_jet(const gen::Closed& c, Cx z) {
  switch (c.kind) {
    case gen::ClosedKind::NegZ: return {-c.scale * z, -c.scale};
    case gen::ClosedKind::OneMinusZ2: return {c.scale * (1.0 - z * z), -2.0 * c.scale * z};
    case gen::ClosedKind::OneMinusZSquared:
      return {c.scale * (1.0 - z) * (1.0 - z), -2.0 * c.scale * (1.0 - z)};
  }
  return {0.0, 0.0};
}

struct GenJet {
  Cx z;
  Jet operator()(const gen::Closed& c) const { return closed_jet(c, z); }
  Jet operator()(const gen::BerksonPorta& b) const {
    Cx P = (b.w - z) * (1.0 - std::conj(b.w) * z);
    Cx dP = -(1.0 - std::conj(b.w) * z) - std::conj(b.w) * (b.w - z);
    Jet p = positive_jet(b.p, z);
    return {P * p.value, dP * p.value + P * p.deriv};
  }
  Jet operator()(const gen::FromPhiXi& f) const {
    Cx P = (f.w - z) * (1.0 - std::conj(f.w) * z);
    Cx dP = -(1.0 - std::conj(f.w) * z) - std::conj(f.w) * (f.w - z);
    Jet phi = eval_jet(f.phi, z);
    Cx den = f.xi + phi.value;
    Cx Q = (f.xi - phi.value) / den;
    Cx dQ = -2.0 * f.xi * phi.deriv / (den * den);
    return {P * Q, dP * Q + P * dQ};
  }
  Jet operator()(const gen::ParabolicFromPhi& f) const {
    Jet phi = eval_jet(f.phi, z);
    Cx u = 1.0 - z;
    Cx den = 1.0 - phi.value;
    Cx Q = (1.0 + phi.value) / den;
    Cx dQ = 2.0 * phi.deriv / (den * den);
    return {u * u * Q, -2.0 * u * Q + u * u * dQ};
  }
  Jet operator()(const gen::RootFromPhi& f) const {
    Jet rho = eval_jet(f.root, z);
    Cx den = 1.0 + rho.value;
    Cx Q = (1.0 - rho.value) / den;
    Cx dQ = -2.0 * rho.deriv / (den * den);
    return {-z * Q, -Q - z * dQ};
  }
};

Jet gen_jet(const Generator& g, Cx z) { return std::visit(GenJet{z}, g.form); }

void not_generator(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::NotAGenerator, what);
}

}  // namespace

Generator make_generator(GeneratorKind kind, const GeneratorArgs& a) {
  switch (kind) {
    case GeneratorKind::BerksonPorta: {
      not_generator(std::abs(a.w) <= 1.0 + 1e-12, "Berkson-Porta point outside the closed disk");
      if (a.p.cayley) {
        not_generator(unimodular(a.p.xi), "Cayley point must be unimodular");
        not_generator(sampled_health(a.p.f, 400).self_map, "Cayley map is not a self-map");
      }
      for (Cx z : disk_samples(400))
        not_generator(positive_jet(a.p, z).value.real() > 0.0, "Re p <= 0 at a sample point");
      return {gen::BerksonPorta{a.w, a.p}};
    }
    case GeneratorKind::FromPhiXi:
      not_generator(unimodular(a.xi), "xi must be unimodular");
      not_generator(std::abs(a.w) <= 1.0 + 1e-12, "w outside the closed disk");
      not_generator(std::abs(a.w - a.xi) > 1e-12, "w must differ from xi");
      not_generator(sampled_health(a.phi, 400).self_map, "phi is not a self-map");
      return {gen::FromPhiXi{a.phi, a.xi, a.w}};
    case GeneratorKind::ParabolicFromPhi:
      not_generator(sampled_health(a.phi, 400).self_map, "phi is not a self-map");
      return {gen::ParabolicFromPhi{a.phi}};
    case GeneratorKind::RootFromPhi:
      not_generator(a.n >= 1, "root order must be positive");
      not_generator(sampled_health(a.phi, 400).self_map, "phi is not a self-map");
      branch_guard(a.phi);
      return {gen::RootFromPhi{a.phi, a.n, DiskMap::root(a.phi, a.n)}};
    case GeneratorKind::Closed:
      not_generator(a.scale > 0.0, "scale must be positive");
      return {gen::Closed{a.closed, a.scale}};
  }
  throw Error(ErrorKind::NotAGenerator, "unknown generator kind");
}

Cx gen_eval(const Generator& g, Cx z) { return gen_jet(g, z).value; }
Cx gen_deriv(const Generator& g, Cx z) { return gen_jet(g, z).deriv; }

double gen_boundary_deriv(const Generator& g, Cx xi, bool* used_numeric) {
  if (used_numeric) *used_numeric = false;
  if (auto c = std::get_if<gen::Closed>(&g.form)) return closed_jet(*c, xi).deriv.real();
  if (auto f = std::get_if<gen::FromPhiXi>(&g.form); f && std::abs(f->xi - xi) < 1e-14) {
    bool num = false;
    double d = angular_derivative_auto(f->phi, xi, &num);
    if (used_numeric) *used_numeric = num;
    return std::norm(1.0 - std::conj(f->w) * xi) * d / 2.0;
  }
  if (auto f = std::get_if<gen::ParabolicFromPhi>(&g.form); f && xi == Cx(1.0)) {
    bool num = false;
    double d = angular_derivative_auto(f->phi, 1.0, &num);
    if (used_numeric) *used_numeric = num;
    return -2.0 / d;
  }
  if (auto f = std::get_if<gen::RootFromPhi>(&g.form); f && xi == Cx(1.0)) {
    bool num = false;
    double d = angular_derivative_auto(f->phi, 1.0, &num);
    if (used_numeric) *used_numeric = num;
    return d / (2.0 * f->n);
  }
  if (used_numeric) *used_numeric = true;
  std::vector<double> q;
  for (int k = 0; k < 21; ++k) {
    double d = 1e-2 * std::ldexp(1.0, -k);
    q.push_back((gen_eval(g, (1.0 - d) * xi) / (-d * xi)).real());
  }
  return richardson(q, 1.0).value;
}

namespace {

std::string closed_text(const gen::Closed& c) {
  std::string e = c.kind == gen::ClosedKind::NegZ       ? "-z"
                  : c.kind == gen::ClosedKind::OneMinusZ2 ? "1-z^2"
                                                          : "(1-z)^2";
  if (c.scale == 1.0) return e;
  return format_real(c.scale) + "*" + (c.kind == gen::ClosedKind::OneMinusZSquared ? e : "(" + e + ")");
}

struct GenText {
  std::string operator()(const gen::Closed& c) const { return closed_text(c); }
  std::string operator()(const gen::BerksonPorta& b) const {
    std::string p = b.p.cayley ? "(cayley " + format_complex(b.p.xi) + " " + to_text(b.p.f) + ")"
                               : format_complex(b.p.value);
    return "(bp " + format_complex(b.w) + " " + p + ")";
  }
  std::string operator()(const gen::FromPhiXi& f) const {
    return "(fromphi " + format_complex(f.xi) + " " + format_complex(f.w) + " " + to_text(f.phi) + ")";
  }
  std::string operator()(const gen::ParabolicFromPhi& f) const {
    return "(parabolic " + to_text(f.phi) + ")";
  }
  std::string operator()(const gen::RootFromPhi& f) const {
    return "(root " + std::to_string(f.n) + " " + to_text(f.phi) + ")";
  }
};

// top-level items of "(head a b (c d) ...)" as substrings
std::vector<std::string_view> split_items(std::string_view s) {
  auto fail = [&] {
    throw Error(ErrorKind::ParseError, "bad generator text '" + std::string(s) + "'");
  };
  std::size_t b = s.find_first_not_of(" \t\n");
  std::size_t e = s.find_last_not_of(" \t\n");
  if (b == std::string_view::npos || s[b] != '(' || s[e] != ')') fail();
  std::string_view body = s.substr(b + 1, e - b - 1);
  std::vector<std::string_view> items;
  std::size_t i = 0;
  while (i < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (body[i] == '(') {
      int depth = 0;
      for (; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        if (body[i] == ')' && --depth == 0) {
          ++i;
          break;
        }
      }
      if (depth != 0) fail();
    } else {
      while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])) && body[i] != '(')
        ++i;
    }
    items.push_back(body.substr(start, i - start));
  }
  return items;
}

}  // namespace

std::string generator_text(const Generator& g) { return std::visit(GenText{}, g.form); }

Generator parse_generator(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || !s.empty()) s += c;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  GeneratorArgs a;
  std::string compact;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  // closed vocabulary, optionally scaled by "k*"
  {
    std::string e = compact;
    double scale = 1.0;
    if (auto star = e.find('*'); star != std::string::npos) {
      Cx k = parse_complex(e.substr(0, star));
      if (k.imag() != 0.0) throw Error(ErrorKind::ParseError, "scale must be real");
      scale = k.real();
      e = e.substr(star + 1);
      if (e.size() > 2 && e.front() == '(' && e.back() == ')' && e != "(1-z)^2") e = e.substr(1, e.size() - 2);
    }
    a.scale = scale;
    if (e == "-z") {
      a.closed = gen::ClosedKind::NegZ;
      return make_generator(GeneratorKind::Closed, a);
    }
    if (e == "1-z^2") {
      a.closed = gen::ClosedKind::OneMinusZ2;
      return make_generator(GeneratorKind::Closed, a);
    }
    if (e == "(1-z)^2") {
      a.closed = gen::ClosedKind::OneMinusZSquared;
      return make_generator(GeneratorKind::Closed, a);
    }
  }
  auto items = split_items(s);
  if (items.empty()) throw Error(ErrorKind::ParseError, "empty generator text");
  std::string head(items[0]);
  auto want = [&](std::size_t n) {
    if (items.size() != n + 1)
      throw Error(ErrorKind::ParseError, "'" + head + "' takes " + std::to_string(n) + " arguments");
  };
  if (head == "parabolic") {
    want(1);
    a.phi = parse_map(items[1]);
    return make_generator(GeneratorKind::ParabolicFromPhi, a);
  }
  if (head == "root") {
    want(2);
    a.n = std::stoi(std::string(items[1]));
    a.phi = parse_map(items[2]);
    return make_generator(GeneratorKind::RootFromPhi, a);
  }
  if (head == "fromphi") {
    want(3);
    a.xi = parse_complex(items[1]);
    a.w = parse_complex(items[2]);
    a.phi = parse_map(items[3]);
    return make_generator(GeneratorKind::FromPhiXi, a);
  }
  if (head == "bp") {
    want(2);
    a.w = parse_complex(items[1]);
    if (!items[2].empty() && items[2].front() == '(') {
      auto sub = split_items(items[2]);
      if (sub.size() != 3 || sub[0] != "cayley")
        throw Error(ErrorKind::ParseError, "expected (cayley xi MAP)");
      a.p.cayley = true;
      a.p.xi = parse_complex(sub[1]);
      a.p.f = parse_map(sub[2]);
    } else {
      a.p.value = parse_complex(items[2]);
    }
    return make_generator(GeneratorKind::BerksonPorta, a);
  }
  throw Error(ErrorKind::ParseError, "unknown generator '" + std::string(text) + "'");
}

// Dormand-Prince 5(4)
FlowResult flow(const Generator& g, Cx z0, double t, double tol, std::vector<TrajectoryRow>* rows) {
  if (!in_open_disk(z0)) throw Error(ErrorKind::DomainError, "flow start must lie in the open disk");
  if (!(t >= 0.0)) throw Error(ErrorKind::DomainError, "flow time must be nonnegative");
  if (!(tol > 0.0)) throw Error(ErrorKind::DomainError, "tolerance must be positive");
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  FlowResult res{t, z0, z0, 0, 0.0};
  if (rows) rows->push_back({0.0, z0, 0, 0.0});
  double now = 0.0;
  Cx z = z0;
  double h = std::min(t, 1e-2);
  Cx k1 = gen_eval(g, z);
  while (now < t) {
    if (h < 1e-14) throw Error(ErrorKind::StepUnderflow, "flow step fell below 1e-14");
    bool last = now + h >= t;
    if (last) h = t - now;
    Cx z_new, k7;
    double err;
    try {
      Cx k2 = gen_eval(g, z + h * (a21 * k1));
      Cx k3 = gen_eval(g, z + h * (a31 * k1 + a32 * k2));
      Cx k4 = gen_eval(g, z + h * (a41 * k1 + a42 * k2 + a43 * k3));
      Cx k5 = gen_eval(g, z + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      Cx k6 = gen_eval(g, z + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      z_new = z + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      if (!(std::abs(z_new) <= 1.0 + 1e-12)) throw Error(ErrorKind::DomainError, "left the disk");
      k7 = gen_eval(g, z_new);
      err = std::abs(h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::StepUnderflow) throw;
      h *= 0.5;
      continue;
    }
    if (!std::isfinite(err)) {
      h *= 0.5;
      continue;
    }
    if (err <= tol) {
      now = last ? t : now + h;
      z = z_new;
      k1 = k7;
      ++res.steps;
      res.est_error += err;
      if (rows) rows->push_back({now, z, res.steps, res.est_error});
      double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(tol / err, 0.2), 0.2, 5.0);
      h *= fac;
    } else {
      h *= std::max(0.2, 0.9 * std::pow(tol / err, 0.25));
    }
  }
  res.zt = z;
  return res;
}

FlowResult flow(const Generator& g, Cx z0, double t, double tol) {
  return flow(g, z0, t, tol, nullptr);
}

std::string trajectory_csv(const std::vector<TrajectoryRow>& rows) {
  std::ostringstream os;
  os << "t,re,im,step_count,est_error\n";
  for (const auto& r : rows)
    os << format_real(r.t) << ',' << format_real(r.z.real()) << ',' << format_real(r.z.imag())
       << ',' << r.step_count << ',' << format_real(r.est_error) << '\n';
  return os.str();
}

std::pair<InequalityReport, InequalityReport> check_flow_laws(const Generator& g, Cx z, double t,
                                                              double s, Cx xi, double tol) {
  std::string text = generator_text(g);
  Cx direct = flow(g, z, t + s, tol).zt;
  Cx chained = flow(g, flow(g, z, s, tol).zt, t, tol).zt;
  InequalityReport comp =
      make_report("flow_semigroup", text, std::abs(direct - chained), 1e-7, true, 0.0);
  comp.params = {{"t", t}, {"s", s}, {"z_re", z.real()}, {"z_im", z.imag()}};

  double gp = gen_boundary_deriv(g, xi);
  double exact = std::exp(t * gp);
  double numeric = t == 0.0 ? 1.0
                            : angular_derivative_numeric(
                                  [&](Cx u) { return flow(g, u, t, tol).zt; }, xi, 12);
  InequalityReport law =
      make_report("flow_boundary_derivative", text, std::abs(numeric - exact), 1e-6, true, 0.0);
  law.params = {{"t", t}, {"xi_re", xi.real()}, {"xi_im", xi.imag()}, {"numeric", numeric},
                {"exp_t_gprime", exact}};
  return {comp, law};
}

std::vector<InequalityReport> check_generator_inequalities(const Generator& g, Cx xi) {
  if (!unimodular(xi)) throw Error(ErrorKind::NotNullPoint, "null point must be unimodular");
  Cx near = gen_eval(g, (1.0 - 1e-8) * xi);
  if (!(std::abs(near) < 1e-6))
    throw Error(ErrorKind::NotNullPoint, format_complex(xi) + " is not a null point");
  bool numeric = false;
  double gp = gen_boundary_deriv(g, xi, &numeric);
  double tol = numeric ? kNumericTol : kClosedTol;
  Jet j0 = gen_jet(g, 0.0);
  std::string text = generator_text(g);
  bool at_one = xi == Cx(1.0);
  std::vector<InequalityReport> out;
  out.push_back(make_report(at_one ? "equ2" : "equ1", text, -gp,
                            2.0 * (j0.value * std::conj(xi)).real(), true, tol));
  out.push_back(make_report("o3", text, 2.0 * gp,
                            -(j0.deriv + 4.0 * std::conj(xi) * j0.value).real(), false, tol));
  for (auto& r : out) r.params = {{"xi_re", xi.real()}, {"xi_im", xi.imag()}, {"g_prime_xi", gp}};
  return out;
}

Extrapolated origin_limit(const DiskMap& phi) {
  std::vector<double> v;
  for (int k = 0; k <= 10; ++k) {
    int n = 1 << k;
    Generator g{gen::RootFromPhi{phi, n, DiskMap::root(phi, n)}};
    v.push_back(-double(n) * gen_deriv(g, 0.0).real());
  }
  return richardson(v, 2.0);
}

}  // namespace schlicht
