#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <algorithm>
#include <cfloat>
#include <cmath>
#include <deque>
#include <limits>

#include "schlicht/modulus.hpp"

namespace schlicht {

namespace {

// Resistor network: links between nodes, Dirichlet stubs hanging off nodes,
// and nodes pinned to fixed potentials.
class Network {
public:
  explicit Network(int n) : fixed_(n, std::numeric_limits<double>::quiet_NaN()), stub_c_(n), stub_cv_(n), stub_cvv_(n) {}

  void link(int p, int q, double c) {
    if (c > 0.0) links_.push_back({p, q, c});
  }
  void stub(int p, double c, double v) {
    stub_c_[p] += c;
    stub_cv_[p] += c * v;
    stub_cvv_[p] += c * v * v;
  }
  void fix(int p, double v) { fixed_[p] = v; }
  bool is_fixed(int p) const { return !std::isnan(fixed_[p]); }

  // Dirichlet energy of the discrete harmonic potential
  double energy() const {
    int n = int(fixed_.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& l : links_) {
      adj[l.p].push_back(l.q);
      adj[l.q].push_back(l.p);
    }
    // free nodes reachable from a boundary condition
    std::vector<char> seen(n, 0);
    std::deque<int> queue;
    for (int p = 0; p < n; ++p)
      if (is_fixed(p) || stub_c_[p] > 0.0) {
        seen[p] = 1;
        queue.push_back(p);
      }
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      for (int q : adj[p])
        if (!seen[q]) {
          seen[q] = 1;
          queue.push_back(q);
        }
    }
    std::vector<int> index(n, -1);
    int m = 0;
    for (int p = 0; p < n; ++p)
      if (seen[p] && !is_fixed(p)) index[p] = m++;

    std::vector<double> u(fixed_);
    if (m > 0) {
      std::vector<Eigen::Triplet<double>> trip;
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
      for (int p = 0; p < n; ++p)
        if (index[p] >= 0) {
          trip.emplace_back(index[p], index[p], stub_c_[p]);
          rhs[index[p]] += stub_cv_[p];
        }
      for (const auto& l : links_) {
        int i = index[l.p], j = index[l.q];
        if (i >= 0) trip.emplace_back(i, i, l.c);
        if (j >= 0) trip.emplace_back(j, j, l.c);
        if (i >= 0 && j >= 0) {
          trip.emplace_back(i, j, -l.c);
          trip.emplace_back(j, i, -l.c);
        } else if (i >= 0 && is_fixed(l.q)) {
          rhs[i] += l.c * fixed_[l.q];
        } else if (j >= 0 && is_fixed(l.p)) {
          rhs[j] += l.c * fixed_[l.p];
        }
      }
      Eigen::SparseMatrix<double> A(m, m);
      A.setFromTriplets(trip.begin(), trip.end());
      Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                               Eigen::IncompleteCholesky<double>>
          cg;
      cg.setTolerance(1e-11);
      cg.setMaxIterations(20 * m + 1000);
      cg.compute(A);
      if (cg.info() != Eigen::Success)
        throw Error(ErrorKind::SolverDiverged, "preconditioner setup failed");
      Eigen::VectorXd x = cg.solve(rhs);
      if (cg.info() != Eigen::Success || !x.allFinite())
        throw Error(ErrorKind::SolverDiverged, "conjugate gradient did not converge");
      for (int p = 0; p < n; ++p)
        if (index[p] >= 0) u[p] = x[index[p]];
    }
    double e = 0.0;
    for (const auto& l : links_) {
      bool a = seen[l.p], b = seen[l.q];
      if (!a || !b) continue;
      double d = u[l.p] - u[l.q];
      e += l.c * d * d;
    }
    for (int p = 0; p < n; ++p)
      if (index[p] >= 0)
        e += stub_c_[p] * u[p] * u[p] - 2.0 * u[p] * stub_cv_[p] + stub_cvv_[p];
    if (!(e > 0.0) || !std::isfinite(e))
      throw Error(ErrorKind::SolverDiverged, "degenerate energy");
    return e;
  }

private:
  struct Link {
    int p, q;
    double c;
  };
  std::vector<Link> links_;
  std::vector<double> fixed_, stub_c_, stub_cv_, stub_cvv_;
};

void check_n(int n) {
  if (n < 32) throw Error(ErrorKind::DomainError, "grid resolution must be at least 32");
}

ModulusResult richardson_pair(double coarse, double fine) {
  double value = 2.0 * fine - coarse;
  double err = std::max(std::abs(fine - coarse), 64.0 * DBL_EPSILON * std::abs(value));
  if (!std::isfinite(value)) throw Error(ErrorKind::SolverDiverged, "non-finite modulus");
  return {value, ModulusSource::Grid, err};
}

double rectangle_length(const Rectangle& r, int n) {
  double h = std::max(r.width, r.height) / n;
  int nx = std::max(1, int(std::lround(r.width / h)));
  h = r.width / nx;
  int ny = int(std::ceil(r.height / h - 1e-12));
  auto id = [&](int i, int j) { return j * (nx + 1) + i; };
  Network net((nx + 1) * ny);
  for (int j = 0; j < ny; ++j) {
    double frac = std::min(1.0, (r.height - j * h) / h);
    for (int i = 0; i < nx; ++i) net.link(id(i, j), id(i + 1, j), frac);
    if (j + 1 < ny)
      for (int i = 0; i <= nx; ++i) net.link(id(i, j), id(i, j + 1), i == 0 || i == nx ? 0.5 : 1.0);
    net.fix(id(0, j), 0.0);
    net.fix(id(nx, j), 1.0);
  }
  return 1.0 / net.energy();
}

// first t in (0,1] with |p + t(q-p)| = rho
double circle_hit(Cx p, Cx q, double rho) {
  Cx d = q - p;
  double A = std::norm(d), B = 2.0 * (p.real() * d.real() + p.imag() * d.imag());
  double C = std::norm(p) - rho * rho;
  double disc = std::sqrt(std::max(0.0, B * B - 4.0 * A * C));
  double t1 = (-B - disc) / (2.0 * A), t2 = (-B + disc) / (2.0 * A);
  double t = t1 > 0.0 ? t1 : t2;
  return std::clamp(t, 1e-3, 1.0);
}

double annulus_length(const Annulus& an, int n) {
  double h = 2.0 * an.R / n;
  auto id = [&](int i, int j) { return j * (n + 1) + i; };
  auto pos = [&](int i, int j) { return Cx(-an.R + i * h, -an.R + j * h); };
  auto region = [&](Cx z) {
    double a = std::abs(z);
    return a <= an.r ? 0 : (a >= an.R ? 2 : 1);
  };
  Network net((n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      Cx p = pos(i, j);
      if (region(p) != 1) continue;
      const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        int ii = i + di[k], jj = j + dj[k];
        Cx q = pos(ii, jj);
        int rq = region(q);
        if (rq == 1) {
          if (k == 0 || k == 2) net.link(id(i, j), id(ii, jj), 1.0);
        } else {
          double t = circle_hit(p, q, rq == 0 ? an.r : an.R);
          net.stub(id(i, j), 1.0 / t, rq == 0 ? 0.0 : 1.0);
        }
      }
    }
  return 1.0 / net.energy();
}

double cross(Cx a, Cx b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool segments_cross(Cx p, Cx q, Cx s1, Cx s2) {
  double d1 = cross(q - p, s1 - p), d2 = cross(q - p, s2 - p);
  double d3 = cross(s2 - s1, p - s1), d4 = cross(s2 - s1, q - s1);
  return (d1 > 0.0) != (d2 > 0.0) && (d3 > 0.0) != (d4 > 0.0);
}

// Weakly simple polygon with bucketed even-odd inside test. Edges traversed in
// both directions are slits.
class Polygon {
public:
  explicit Polygon(std::vector<Cx> v) : v_(std::move(v)) {
    int n = int(v_.size());
    if (n < 3) throw Error(ErrorKind::DomainError, "polygon needs at least 3 vertices");
    double lo = v_[0].imag(), hi = lo;
    for (Cx z : v_) {
      lo = std::min(lo, z.imag());
      hi = std::max(hi, z.imag());
    }
    nb_ = std::max(1, std::min(1024, n / 2));
    y0_ = lo;
    dy_ = std::max(hi - lo, 1e-300) / nb_;
    buckets_.resize(nb_);
    for (int k = 0; k < n; ++k) {
      Cx a = v_[k], b = v_[(k + 1) % n];
      int b0 = bucket(std::min(a.imag(), b.imag())), b1 = bucket(std::max(a.imag(), b.imag()));
      for (int i = b0; i <= b1; ++i) buckets_[i].push_back(k);
    }
    for (int k = 0; k < n; ++k) {
      Cx a = v_[k], b = v_[(k + 1) % n];
      for (int m = 0; m < n; ++m) {
        if (m == k) continue;
        if (std::abs(v_[m] - b) < 1e-12 && std::abs(v_[(m + 1) % n] - a) < 1e-12) {
          slits_.push_back(k);
          break;
        }
      }
    }
  }

  const std::vector<Cx>& vertices() const { return v_; }
  Cx edge_start(int k) const { return v_[k]; }
  Cx edge_end(int k) const { return v_[(k + 1) % v_.size()]; }

  bool inside(Cx z) const {
    if (z.imag() < y0_ || z.imag() > y0_ + dy_ * nb_) return false;
    bool in = false;
    for (int k : buckets_[bucket(z.imag())]) {
      Cx a = edge_start(k), b = edge_end(k);
      if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
        double x = a.real() + (z.imag() - a.imag()) / (b.imag() - a.imag()) * (b.real() - a.real());
        if (x > z.real()) in = !in;
      }
    }
    return in;
  }

  bool crosses_slit(Cx p, Cx q) const {
    for (int k : slits_)
      if (segments_cross(p, q, edge_start(k), edge_end(k))) return true;
    return false;
  }

  // inner angle at vertex k, 2 pi at a slit tip
  double angle(int k) const {
    int n = int(v_.size());
    Cx v = v_[k], p = v_[(k + n - 1) % n], q = v_[(k + 1) % n];
    if (std::abs(p - q) < 1e-12) return 2 * kPi;
    double a = std::arg((p - v) / (q - v));
    return a <= 0.0 ? a + 2 * kPi : a;
  }

  // tip vertices of slits
  std::vector<int> tips() const {
    std::vector<int> t;
    int n = int(v_.size());
    for (int k = 0; k < n; ++k)
      if (std::abs(v_[(k + n - 1) % n] - v_[(k + 1) % n]) < 1e-12) t.push_back(k);
    return t;
  }

private:
  int bucket(double y) const {
    return std::clamp(int((y - y0_) / dy_), 0, nb_ - 1);
  }

  std::vector<Cx> v_;
  std::vector<int> slits_;
  std::vector<std::vector<int>> buckets_;
  double y0_ = 0.0, dy_ = 1.0;
  int nb_ = 1;
};

double plate_length(const PlatePolygon& pp, int n) {
  Polygon poly(pp.vertices);
  int ne = int(pp.vertices.size());
  auto tagged = [&](int k, int first, int last) {
    return first <= last ? (k >= first && k <= last) : (k >= first || k <= last);
  };
  for (int f : {pp.zero_first, pp.zero_last, pp.one_first, pp.one_last})
    if (f < 0 || f >= ne) throw Error(ErrorKind::DomainError, "plate edge index out of range");
  double xmin = pp.vertices[0].real(), xmax = xmin, ymin = pp.vertices[0].imag(), ymax = ymin;
  for (Cx z : pp.vertices) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  }
  double h = std::max(xmax - xmin, ymax - ymin) / n;
  int nx = int(std::ceil((xmax - xmin) / h)) + 2, ny = int(std::ceil((ymax - ymin) / h)) + 2;
  auto pos = [&](int i, int j) { return Cx(xmin + (i - 0.5) * h, ymin + (j - 0.5) * h); };
  auto id = [&](int i, int j) { return j * (nx + 1) + i; };
  const int ns = 8;
  auto face_fraction = [&](Cx mid, Cx dir) {
    int c = 0;
    for (int k = 0; k < ns; ++k)
      if (poly.inside(mid + dir * (h * ((k + 0.5) / ns - 0.5)))) ++c;
    return double(c) / ns;
  };
  Network net((nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      Cx p = pos(i, j);
      for (int k = 0; k < 2; ++k) {
        int ii = i + (k == 0), jj = j + (k == 1);
        if (ii > nx || jj > ny) continue;
        Cx q = pos(ii, jj);
        // a link crossing a plate becomes a stub on its interior end
        int hit = -1;
        double t_hit = 2.0;
        for (int e = 0; e < ne; ++e) {
          bool z0 = tagged(e, pp.zero_first, pp.zero_last), z1 = tagged(e, pp.one_first, pp.one_last);
          if (!z0 && !z1) continue;
          Cx s1 = poly.edge_start(e), s2 = poly.edge_end(e);
          if (!segments_cross(p, q, s1, s2)) continue;
          double t = cross(s2 - s1, s1 - p) / cross(s2 - s1, q - p);
          if (t < t_hit) {
            t_hit = t;
            hit = e;
          }
        }
        if (hit >= 0) {
          double v = tagged(hit, pp.zero_first, pp.zero_last) ? 0.0 : 1.0;
          if (poly.inside(p)) net.stub(id(i, j), 1.0 / std::max(t_hit, 1e-3), v);
          if (poly.inside(q)) net.stub(id(ii, jj), 1.0 / std::max(1.0 - t_hit, 1e-3), v);
          continue;
        }
        Cx mid = 0.5 * (p + q);
        double c = face_fraction(mid, k == 0 ? Cx(0.0, 1.0) : Cx(1.0, 0.0));
        if (c > 0.0 && !poly.crosses_slit(p, q)) net.link(id(i, j), id(ii, jj), c);
      }
    }
  return 1.0 / net.energy();
}

// ---- digons ----

struct Frame {
  bool bipolar;
  Cx a, b;
  Cx to_w(Cx z) const { return bipolar ? std::log((z - a) / (z - b)) : std::log(z - a); }
  Cx to_z(Cx w) const {
    Cx e = std::exp(w);
    return bipolar ? (a - b * e) / (1.0 - e) : a + e;
  }
};

struct DigonGrid {
  Frame frame;
  double h = 0.0, x_tip = 0.0, y_tip = 0.0, cut = 0.0;
  int i_lo = 0, i_hi = 0, j_lo = 0, j_hi = 0;
  std::vector<double> east, north;  // conductances of links to (i+1,j) and (i,j+1)
  int cols() const { return i_hi - i_lo + 1; }
  int rows() const { return j_hi - j_lo + 1; }
  int id(int i, int j) const { return (i - i_lo) * rows() + (j - j_lo); }
  double x(int i) const { return x_tip + (i + 0.5) * h; }
  double y(int j) const { return y_tip + (j + 0.5) * h; }
  int column_near(double xv) const { return int(std::lround((xv - x_tip) / h - 0.5)); }
  double unwrap(double y) const {
    double t = std::fmod(y - cut, 2 * kPi);
    if (t < 0.0) t += 2 * kPi;
    return cut + t;
  }
};

DigonGrid build_grid(const Polygon& poly, const DigonGridSpec& spec, double phi_a, int n) {
  const auto& v = poly.vertices();
  Cx va = v[spec.a], vb = v[spec.b];
  DigonGrid g;
  g.frame = {std::abs(va - vb) > 1e-12, va, vb};
  g.h = phi_a / n;
  double scale = std::abs(va - vb);

  // argument window: cut through the widest gap of boundary sample arguments
  std::vector<double> args;
  double far = 0.0;
  int nv = int(v.size());
  for (int k = 0; k < nv; ++k) {
    Cx p = v[k], q = v[(k + 1) % nv];
    for (int s = 0; s < 8; ++s) {
      Cx z = p + (q - p) * ((s + 0.5) / 8.0);
      if (std::abs(z - va) < 1e-12 || std::abs(z - vb) < 1e-12) continue;
      args.push_back(std::arg(g.frame.bipolar ? (z - va) / (z - vb) : z - va));
      far = std::max(far, std::abs(z - va));
    }
  }
  std::sort(args.begin(), args.end());
  double gap = args.front() + 2 * kPi - args.back(), cut = 0.5 * (args.back() + args.front() + 2 * kPi);
  for (std::size_t k = 1; k < args.size(); ++k)
    if (args[k] - args[k - 1] > gap) {
      gap = args[k] - args[k - 1];
      cut = 0.5 * (args[k] + args[k - 1]);
    }
  g.cut = cut;
  double ymin = 1e300, ymax = -1e300;
  for (double a : args) {
    double y = g.unwrap(a);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }

  auto tips = poly.tips();
  if (!tips.empty()) {
    Cx wt = g.frame.to_w(v[tips.front()]);
    g.x_tip = wt.real();
    g.y_tip = g.unwrap(wt.imag());
  } else {
    g.x_tip = 0.0;
    g.y_tip = ymin;
  }
  double eps_min = spec.eps.back();
  if (g.frame.bipolar) {
    g.i_lo = g.column_near(std::log(eps_min / scale));
    g.i_hi = g.column_near(-std::log(eps_min / scale));
  } else {
    g.i_lo = g.column_near(std::log(eps_min));
    g.i_hi = g.column_near(std::log(far)) + 2;
  }
  g.j_lo = int(std::floor((ymin - g.y_tip) / g.h - 0.5)) - 1;
  g.j_hi = int(std::ceil((ymax - g.y_tip) / g.h - 0.5)) + 1;

  const int ns = 8;
  int total = g.cols() * g.rows();
  g.east.assign(total, 0.0);
  g.north.assign(total, 0.0);
  auto fraction = [&](Cx mid, Cx dir) {
    int c = 0;
    for (int k = 0; k < ns; ++k)
      if (poly.inside(g.frame.to_z(mid + dir * (g.h * ((k + 0.5) / ns - 0.5))))) ++c;
    return double(c) / ns;
  };
  for (int i = g.i_lo; i <= g.i_hi; ++i)
    for (int j = g.j_lo; j <= g.j_hi; ++j) {
      Cx w(g.x(i), g.y(j));
      Cx z = g.frame.to_z(w);
      if (i < g.i_hi) {
        double c = fraction(w + 0.5 * g.h, Cx(0.0, 1.0));
        if (c > 0.0 && poly.crosses_slit(z, g.frame.to_z(w + g.h))) c = 0.0;
        g.east[g.id(i, j)] = c;
      }
      if (j < g.j_hi) {
        double c = fraction(w + Cx(0.0, 0.5 * g.h), Cx(1.0, 0.0));
        if (c > 0.0 && poly.crosses_slit(z, g.frame.to_z(w + Cx(0.0, g.h)))) c = 0.0;
        g.north[g.id(i, j)] = c;
      }
    }
  return g;
}

// nodes of column i joined to the node nearest height y through vertical links
std::vector<int> plate(const DigonGrid& g, int i, double y) {
  int j0 = std::clamp(int(std::lround((y - g.y_tip) / g.h - 0.5)), g.j_lo, g.j_hi);
  auto live = [&](int j) {
    bool up = j < g.j_hi && g.north[g.id(i, j)] > 0.0;
    bool down = j > g.j_lo && g.north[g.id(i, j - 1)] > 0.0;
    bool side = i < g.i_hi && g.east[g.id(i, j)] > 0.0;
    return up || down || side;
  };
  int seed = 0;
  bool found = false;
  for (int d = 0; d <= g.rows() && !found; ++d)
    for (int j : {j0 - d, j0 + d})
      if (j >= g.j_lo && j <= g.j_hi && live(j)) {
        seed = j;
        found = true;
        break;
      }
  if (!found) throw Error(ErrorKind::DomainError, "truncation arc misses the domain");
  std::vector<int> out{seed};
  for (int j = seed; j < g.j_hi && g.north[g.id(i, j)] > 0.0; ++j) out.push_back(j + 1);
  for (int j = seed; j > g.j_lo && g.north[g.id(i, j - 1)] > 0.0; --j) out.push_back(j - 1);
  return out;
}

double bisector_height(const DigonGrid& g, const Polygon& poly, int k, double phi) {
  const auto& v = poly.vertices();
  int n = int(v.size());
  Cx q = v[(k + 1) % n];
  double dir = std::arg(q - v[k]) + 0.5 * phi;
  Cx z = v[k] + std::polar(1e-7 * std::max(1.0, std::abs(q - v[k])), dir);
  return g.unwrap(std::imag(g.frame.to_w(z)));
}

std::vector<DigonSample> sample_digon(const Polygon& poly, const DigonGridSpec& spec,
                                      double phi_a, double phi_b, int n) {
  DigonGrid g = build_grid(poly, spec, phi_a, n);
  double scale = std::abs(g.frame.a - g.frame.b);
  double ya = bisector_height(g, poly, spec.a, phi_a);
  double yb = bisector_height(g, poly, spec.b, phi_b);
  std::vector<DigonSample> out;
  for (double eps : spec.eps) {
    int ia, ib;
    double ea, eb;
    if (g.frame.bipolar) {
      ia = g.column_near(std::log(eps / scale));
      ib = g.column_near(-std::log(eps / scale));
      ea = scale * std::exp(g.x(ia));
      eb = scale * std::exp(-g.x(ib));
    } else {
      ia = ib = g.column_near(std::log(eps));
      ea = eb = std::exp(g.x(ia));
    }
    ia = std::max(ia, g.i_lo);
    ib = std::min(ib, g.i_hi);
    if (ia >= ib && g.frame.bipolar)
      throw Error(ErrorKind::DomainError, "truncation radius too large for the vertex distance");
    int i_end = g.frame.bipolar ? ib : g.i_hi;
    Network net(g.cols() * g.rows());
    for (int i = ia; i <= i_end; ++i)
      for (int j = g.j_lo; j <= g.j_hi; ++j) {
        if (i < i_end) net.link(g.id(i, j), g.id(i + 1, j), g.east[g.id(i, j)]);
        if (j < g.j_hi) net.link(g.id(i, j), g.id(i, j + 1), g.north[g.id(i, j)]);
      }
    auto pa = plate(g, ia, ya);
    auto pb = plate(g, ib, yb);
    for (int j : pa) net.fix(g.id(ia, j), 0.0);
    for (int j : pb) {
      if (net.is_fixed(g.id(ib, j)))
        throw Error(ErrorKind::DomainError, "truncation arcs of the two vertices touch");
      net.fix(g.id(ib, j), 1.0);
    }
    double inv = 1.0 / net.energy();
    out.push_back({ea, eb, inv, inv + std::log(ea) / phi_a + std::log(eb) / phi_b});
  }
  return out;
}

// limits in eps of consecutive schedule pairs, error linear in eps
std::vector<double> eps_limits(const std::vector<DigonSample>& s) {
  std::vector<double> out;
  for (std::size_t k = 1; k < s.size(); ++k) {
    double e1 = s[k - 1].eps_a, e2 = s[k].eps_a;
    out.push_back(s[k].reduced - e2 * (s[k - 1].reduced - s[k].reduced) / (e1 - e2));
  }
  return out;
}

}  // namespace

ModulusResult grid_modulus(const Rectangle& rect, int n) {
  check_n(n);
  if (!(rect.width > 0.0 && rect.height > 0.0))
    throw Error(ErrorKind::DomainError, "rectangle sides must be positive");
  return richardson_pair(rectangle_length(rect, n), rectangle_length(rect, 2 * n));
}

ModulusResult grid_modulus(const Annulus& ann, int n) {
  check_n(n);
  if (!(ann.r > 0.0 && ann.R > ann.r)) throw Error(ErrorKind::DomainError, "need 0 < r < R");
  return richardson_pair(annulus_length(ann, n), annulus_length(ann, 2 * n));
}

ModulusResult grid_modulus(const PlatePolygon& poly, int n) {
  check_n(n);
  return richardson_pair(plate_length(poly, n), plate_length(poly, 2 * n));
}

DigonEstimate reduced_modulus_numeric_detail(const DigonGridSpec& spec) {
  int nv = int(spec.vertices.size());
  if (spec.a < 0 || spec.a >= nv || spec.b < 0 || spec.b >= nv || spec.a == spec.b)
    throw Error(ErrorKind::DomainError, "marked vertices out of range");
  if (spec.eps.size() < 4) throw Error(ErrorKind::DomainError, "need at least 4 truncation radii");
  for (std::size_t k = 0; k < spec.eps.size(); ++k)
    if (!(spec.eps[k] > 0.0) || (k > 0 && !(spec.eps[k] < spec.eps[k - 1])))
      throw Error(ErrorKind::DomainError, "truncation radii must decrease strictly");
  if (spec.n < 8) throw Error(ErrorKind::DomainError, "grid resolution too small");
  Polygon poly(spec.vertices);
  DigonEstimate est;
  est.angle_a = poly.angle(spec.a);
  est.angle_b = poly.angle(spec.b);
  if (!(est.angle_a > 1e-6 && est.angle_a < 2 * kPi - 1e-6 && est.angle_b > 1e-6 &&
        est.angle_b < 2 * kPi - 1e-6))
    throw Error(ErrorKind::DomainError, "marked vertex is not a corner");
  est.coarse = sample_digon(poly, spec, est.angle_a, est.angle_b, spec.n);
  est.fine = sample_digon(poly, spec, est.angle_a, est.angle_b, 2 * spec.n);
  auto lc = eps_limits(est.coarse), lf = eps_limits(est.fine);
  std::vector<double> H;
  for (std::size_t k = 0; k < lc.size(); ++k) H.push_back(2.0 * lf[k] - lc[k]);
  std::size_t m = H.size();
  double last = std::abs(H[m - 1] - H[m - 2]);
  double prev = std::abs(H[m - 2] - H[m - 3]);
  if (!std::isfinite(H[m - 1]) || !std::isfinite(last) || last > 10.0 * std::max(prev, 1e-4))
    throw Error(ErrorKind::NoConvergence,
                "truncation sequence is not settling (last step " + format_real(last) + ")");
  double err = std::max(last + std::abs(lf.back() - lc.back()), 1e-12);
  est.result = {H[m - 1], ModulusSource::Grid, err};
  return est;
}

ModulusResult reduced_modulus_numeric(const DigonGridSpec& spec) {
  return reduced_modulus_numeric_detail(spec).result;
}

}  // namespace schlicht
