#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schlicht/complex.hpp"

namespace schlicht {

class DiskMap;

namespace node {
struct Identity {};
struct Rotation { double alpha; };
struct Moebius { Cx a, b, c, d; };
struct Blaschke { std::vector<Cx> zeros; double phase; };
struct PickBeta { double beta; };
struct PickPlus { double x, theta; };
struct PickMinus { double x, theta; };
struct MoebT { double t, theta; };
struct MoebTInverse { double t, theta; };
struct RootBranch { std::shared_ptr<const DiskMap> inner; int n; };
struct Exponential { double t; };
struct Compose { std::shared_ptr<const DiskMap> outer, inner; };
}  // namespace node

using Node = std::variant<node::Identity, node::Rotation, node::Moebius, node::Blaschke,
                          node::PickBeta, node::PickPlus, node::PickMinus, node::MoebT,
                          node::MoebTInverse, node::RootBranch, node::Exponential, node::Compose>;

// Immutable expression tree of an analytic self-map of the unit disk.
class DiskMap {
public:
  DiskMap();
  explicit DiskMap(Node n);

  static DiskMap identity();
  static DiskMap rotation(double alpha);
  static DiskMap moebius(Cx a, Cx b, Cx c, Cx d);
  static DiskMap blaschke(std::vector<Cx> zeros, double phase);
  static DiskMap pick_beta(double beta);
  static DiskMap pick_plus(double x, double theta);
  static DiskMap pick_minus(double x, double theta);
  static DiskMap moeb_t(double t, double theta);
  static DiskMap moeb_t_inverse(double t, double theta);
  static DiskMap root(const DiskMap& inner, int n);
  // z -> exp(t (z - 1)), t > 0
  static DiskMap exponential(double t);

  const Node& node() const { return *node_; }

  Cx operator()(Cx z) const;

private:
  std::shared_ptr<const Node> node_;
};

struct Jet {
  Cx value;
  Cx deriv;
};

DiskMap compose(const DiskMap& outer, const DiskMap& inner);

Cx eval(const DiskMap& map, Cx z);
Cx deriv(const DiskMap& map, Cx z);
Jet eval_jet(const DiskMap& map, Cx z);

// Value and derivative at a unimodular point by analytic continuation of the
// node formulas. Throws NoClosedForm when some node is not regular there.
Jet boundary_jet(const DiskMap& map, Cx xi);

// Moebius coefficients of the hyperbolic automorphism fixing e^{+-i theta}
// with derivative lambda at e^{-i theta}.
node::Moebius hyperbolic_pair_coefficients(double theta, double lambda);
double moeb_t_lambda(double t, double theta);

struct Health {
  bool self_map;
  bool injective;
};
Health sampled_health(const DiskMap& map, int n);

std::string to_text(const DiskMap& map);
DiskMap parse_map(std::string_view text);

}  // namespace schlicht
