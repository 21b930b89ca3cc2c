#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "schlicht/boundary.hpp"
#include "schlicht/disk_map.hpp"
#include "schlicht/report.hpp"

namespace schlicht {

// Function with positive real part: a constant, or (xi + f)/(xi - f) for a self-map f.
struct PositiveFunction {
  bool cayley = false;
  Cx value = 1.0;
  DiskMap f;
  Cx xi = 1.0;
};

namespace gen {
struct BerksonPorta { Cx w; PositiveFunction p; };
struct FromPhiXi { DiskMap phi; Cx xi; Cx w; };
struct ParabolicFromPhi { DiskMap phi; };
struct RootFromPhi { DiskMap phi; int n; DiskMap root; };
enum class ClosedKind { NegZ, OneMinusZ2, OneMinusZSquared };
struct Closed { ClosedKind kind; double scale; };
}  // namespace gen

using GeneratorForm =
    std::variant<gen::BerksonPorta, gen::FromPhiXi, gen::ParabolicFromPhi, gen::RootFromPhi, gen::Closed>;

struct Generator {
  GeneratorForm form;
};

enum class GeneratorKind { BerksonPorta, FromPhiXi, ParabolicFromPhi, RootFromPhi, Closed };

struct GeneratorArgs {
  Cx w = 1.0;
  Cx xi = 1.0;
  PositiveFunction p;
  DiskMap phi;
  int n = 1;
  gen::ClosedKind closed = gen::ClosedKind::NegZ;
  double scale = 1.0;
};

Generator make_generator(GeneratorKind kind, const GeneratorArgs& args);

Cx gen_eval(const Generator& g, Cx z);
Cx gen_deriv(const Generator& g, Cx z);
// g'(xi) at a boundary null point: closed-form limits where known, else radial quotients.
double gen_boundary_deriv(const Generator& g, Cx xi, bool* used_numeric = nullptr);

std::string generator_text(const Generator& g);
// "-z", "1-z^2", "(1-z)^2", optionally "k*<expr>", or s-expressions
// (parabolic MAP), (root n MAP), (fromphi xi w MAP), (bp w c), (bp w (cayley xi MAP)).
Generator parse_generator(std::string_view text);

struct FlowResult {
  double t;
  Cx z0;
  Cx zt;
  long steps;
  double est_error;
};

struct TrajectoryRow {
  double t;
  Cx z;
  long step_count;
  double est_error;
};

FlowResult flow(const Generator& g, Cx z0, double t, double tol);
FlowResult flow(const Generator& g, Cx z0, double t, double tol, std::vector<TrajectoryRow>* rows);
std::string trajectory_csv(const std::vector<TrajectoryRow>& rows);

std::pair<InequalityReport, InequalityReport> check_flow_laws(const Generator& g, Cx z, double t,
                                                              double s, Cx xi, double tol = 1e-12);
std::vector<InequalityReport> check_generator_inequalities(const Generator& g, Cx xi);

// n Re((1 - phi(0)^{1/n})/(1 + phi(0)^{1/n})) at n = 1, 2, ..., 2^10, extrapolated to n -> inf.
Extrapolated origin_limit(const DiskMap& phi);

}  // namespace schlicht
