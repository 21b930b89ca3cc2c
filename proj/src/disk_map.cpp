#include "schlicht/disk_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace schlicht {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::DomainError, what);
}

void irregular(bool boundary, bool ok, const char* what) {
  if (boundary && !ok) throw Error(ErrorKind::NoClosedForm, what);
}

Cx moebius_coeff_eval(const node::Moebius& m, Cx z, bool boundary, Cx* d) {
  Cx den = m.c * z + m.d;
  if (den == Cx(0.0) || std::abs(den) < 1e-15 * (std::abs(m.c) + std::abs(m.d)))
    throw Error(ErrorKind::PoleHit, "Moebius denominator vanishes");
  (void)boundary;
  *d = (m.a * m.d - m.b * m.c) / (den * den);
  return (m.a * z + m.b) / den;
}

// Inverse Joukowski of the Pick chain z -> zeta -> u(zeta) -> root of w^2 - u w + 1.
Jet pick_core(Cx z, double x, double c, bool boundary) {
  if (x == 0.0) return {z, 1.0};
  double A = 1.0 + x * x;
  double B = -4.0 * x * c;
  double C = x;
  double D = (1.0 - x) * (1.0 - x) - 2.0 * x * c;
  double det = (1.0 - x) * (1.0 - x) * (1.0 + x * x - 2.0 * x * c);
  Cx q = z * z + 1.0;
  Cx N = A * q + B * z;
  Cx M = C * q + D * z;
  Cx s = std::sqrt(N * N - 4.0 * M * M);
  if (std::abs(N + s) < std::abs(N - s)) s = -s;
  Cx w = 2.0 * M / (N + s);
  Cx w_big = (N + s) / (2.0 * M);
  Cx ratio2 = 4.0 / ((N + s) * (N + s));  // (w/M)^2 for the small root
  if (std::abs(std::abs(w) - std::abs(w_big)) <= 1e-9 && w.imag() * z.imag() < 0.0) {
    // both roots on the circle: keep the one in the half plane of z
    w = w_big;
    ratio2 = (w / M) * (w / M);
  }
  Cx den = w * w - 1.0;
  irregular(boundary, std::abs(den) > 1e-9, "Pick map at a critical boundary point");
  Cx dw = det * (z * z - 1.0) * ratio2 / den;
  return {w, dw};
}

Jet jet(const DiskMap& map, Cx z, bool boundary);

struct JetVisitor {
  Cx z;
  bool boundary;

  Jet operator()(const node::Identity&) const { return {z, 1.0}; }
  Jet operator()(const node::Rotation& r) const {
    Cx e = std::polar(1.0, r.alpha);
    return {e * z, e};
  }
  Jet operator()(const node::Moebius& m) const {
    Cx d;
    Cx w = moebius_coeff_eval(m, z, boundary, &d);
    return {w, d};
  }
  Jet operator()(const node::Blaschke& b) const {
    std::size_t n = b.zeros.size();
    std::vector<Cx> f(n), df(n);
    for (std::size_t k = 0; k < n; ++k) {
      Cx a = b.zeros[k];
      Cx den = 1.0 - std::conj(a) * z;
      f[k] = (z - a) / den;
      df[k] = (1.0 - std::norm(a)) / (den * den);
    }
    Cx e = std::polar(1.0, b.phase);
    Cx value = e;
    for (Cx v : f) value *= v;
    Cx d = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Cx term = df[k];
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) term *= f[j];
      d += term;
    }
    return {value, e * d};
  }
  Jet operator()(const node::PickBeta& p) const {
    double beta = p.beta;
    Cx s = std::sqrt((1.0 - z) * (1.0 - z) + 4.0 * beta * z);
    irregular(boundary, std::abs(s) > 1e-12, "Pick beta at its branch point");
    // principal root: Re s > 0 on the disk, s(0) = 1
    Cx D = 1.0 - z + s;
    Cx ds = (-2.0 * (1.0 - z) + 4.0 * beta) / (2.0 * s);
    Cx dD = -1.0 + ds;
    Cx w = 4.0 * beta * z / (D * D);
    Cx dw = 4.0 * beta * (D - 2.0 * z * dD) / (D * D * D);
    return {w, dw};
  }
  Jet operator()(const node::PickPlus& p) const {
    return pick_core(z, p.x, std::cos(p.theta), boundary);
  }
  Jet operator()(const node::PickMinus& p) const {
    Jet j = pick_core(-z, std::abs(p.x), -std::cos(p.theta), boundary);
    return {-j.value, j.deriv};
  }
  Jet operator()(const node::MoebT& m) const {
    node::Moebius c = hyperbolic_pair_coefficients(m.theta, moeb_t_lambda(m.t, m.theta));
    return (*this)(c);
  }
  Jet operator()(const node::MoebTInverse& m) const {
    node::Moebius c = hyperbolic_pair_coefficients(m.theta, 1.0 / moeb_t_lambda(m.t, m.theta));
    return (*this)(c);
  }
  Jet operator()(const node::RootBranch& r) const {
    Jet in = jet(*r.inner, z, boundary);
    if (in.value.imag() == 0.0 && in.value.real() <= 0.0)
      throw Error(ErrorKind::BranchViolation, "root argument on the negative real axis");
    Cx w = std::exp(std::log(in.value) / double(r.n));
    return {w, w * in.deriv / (double(r.n) * in.value)};
  }
  Jet operator()(const node::Exponential& e) const {
    Cx w = std::exp(e.t * (z - 1.0));
    return {w, e.t * w};
  }
  Jet operator()(const node::Compose& c) const {
    Jet in = jet(*c.inner, z, boundary);
    Jet out = jet(*c.outer, in.value, boundary);
    return {out.value, out.deriv * in.deriv};
  }
};

Jet jet(const DiskMap& map, Cx z, bool boundary) {
  return std::visit(JetVisitor{z, boundary}, map.node());
}

}  // namespace

DiskMap::DiskMap() : node_(std::make_shared<const Node>(node::Identity{})) {}
DiskMap::DiskMap(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

DiskMap DiskMap::identity() { return DiskMap(); }
DiskMap DiskMap::rotation(double alpha) { return DiskMap(node::Rotation{alpha}); }

DiskMap DiskMap::moebius(Cx a, Cx b, Cx c, Cx d) {
  require(std::abs(a * d - b * c) > 0.0, "Moebius determinant is zero");
  return DiskMap(node::Moebius{a, b, c, d});
}

DiskMap DiskMap::blaschke(std::vector<Cx> zeros, double phase) {
  for (Cx a : zeros) require(in_open_disk(a), "Blaschke zero outside the open disk");
  return DiskMap(node::Blaschke{std::move(zeros), phase});
}

DiskMap DiskMap::pick_beta(double beta) {
  require(beta > 0.0 && beta <= 1.0, "Pick beta must lie in (0,1]");
  return DiskMap(node::PickBeta{beta});
}

DiskMap DiskMap::pick_plus(double x, double theta) {
  require(x >= 0.0 && x < 1.0, "PickPlus needs x in [0,1)");
  require(theta > 0.0 && theta <= kPi / 2 + 1e-15, "theta must lie in (0, pi/2]");
  return DiskMap(node::PickPlus{x, theta});
}

DiskMap DiskMap::pick_minus(double x, double theta) {
  require(x > -1.0 && x <= 0.0, "PickMinus needs x in (-1,0]");
  require(theta > 0.0 && theta <= kPi / 2 + 1e-15, "theta must lie in (0, pi/2]");
  return DiskMap(node::PickMinus{x, theta});
}

DiskMap DiskMap::moeb_t(double t, double theta) {
  require(std::abs(t) < theta, "MoebT needs t in (-theta, theta)");
  return DiskMap(node::MoebT{t, theta});
}

DiskMap DiskMap::moeb_t_inverse(double t, double theta) {
  require(std::abs(t) < theta, "MoebTInverse needs t in (-theta, theta)");
  return DiskMap(node::MoebTInverse{t, theta});
}

DiskMap DiskMap::root(const DiskMap& inner, int n) {
  require(n >= 1, "root order must be positive");
  return DiskMap(node::RootBranch{std::make_shared<const DiskMap>(inner), n});
}

DiskMap DiskMap::exponential(double t) {
  require(t > 0.0, "exponential needs t > 0");
  return DiskMap(node::Exponential{t});
}

Cx DiskMap::operator()(Cx z) const { return eval(*this, z); }

DiskMap compose(const DiskMap& outer, const DiskMap& inner) {
  return DiskMap(node::Compose{std::make_shared<const DiskMap>(outer),
                               std::make_shared<const DiskMap>(inner)});
}

Jet eval_jet(const DiskMap& map, Cx z) { return jet(map, z, false); }
Cx eval(const DiskMap& map, Cx z) { return jet(map, z, false).value; }
Cx deriv(const DiskMap& map, Cx z) { return jet(map, z, false).deriv; }
Jet boundary_jet(const DiskMap& map, Cx xi) { return jet(map, xi, true); }

double moeb_t_lambda(double t, double theta) {
  return std::sin((theta + t) / 2) / std::sin((theta - t) / 2);
}

node::Moebius hyperbolic_pair_coefficients(double theta, double lambda) {
  Cx e = std::polar(1.0, theta);
  Cx eb = std::conj(e);
  return {lambda * e - eb, 1.0 - lambda, lambda - 1.0, e - lambda * eb};
}

Health sampled_health(const DiskMap& map, int n) {
  require(n >= 2, "sample count must be at least 2");
  // polar rings with even point counts so that the grid is symmetric under z -> -z
  int rings = std::max(1, int(std::sqrt(n / kPi)));
  std::vector<double> weight(rings);
  for (int j = 0; j < rings; ++j) weight[j] = j + 0.5;
  double total = std::accumulate(weight.begin(), weight.end(), 0.0);
  std::vector<Cx> pts;
  for (int j = 0; j < rings; ++j) {
    double r = 0.98 * (j + 0.5) / rings;
    int m = std::max(2, 2 * int(std::lround(n * weight[j] / total / 2)));
    double offset = 0.37 * j;
    for (int k = 0; k < m; ++k) pts.push_back(std::polar(r, offset + 2 * kPi * k / m));
  }
  Health h{true, true};
  std::vector<std::pair<Cx, Cx>> img;
  img.reserve(pts.size());
  for (Cx z : pts) {
    Cx w;
    try {
      w = eval(map, z);
    } catch (const Error&) {
      h.self_map = false;
      h.injective = false;
      return h;
    }
    if (!(std::abs(w) < 1.0 + 1e-12)) h.self_map = false;
    img.push_back({w, z});
  }
  std::sort(img.begin(), img.end(),
            [](const auto& p, const auto& q) { return p.first.real() < q.first.real(); });
  for (std::size_t i = 0; i < img.size() && h.injective; ++i) {
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (img[j].first.real() - img[i].first.real() > 1e-9) break;
      if (std::abs(img[j].first - img[i].first) <= 1e-9 &&
          std::abs(img[j].second - img[i].second) > 1e-3) {
        h.injective = false;
        break;
      }
    }
  }
  return h;
}

}  // namespace schlicht
