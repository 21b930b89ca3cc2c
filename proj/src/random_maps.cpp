#include "schlicht/random_maps.hpp"

#include <cmath>

namespace schlicht {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

std::uint64_t CounterRng::bits(std::uint64_t index) const {
  return splitmix64(splitmix64(seed_) ^ splitmix64(index ^ 0xd1b54a32d192ed03ULL));
}

double CounterRng::uniform(std::uint64_t index) const {
  return double(bits(index) >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(std::uint64_t index, double lo, double hi) const {
  return lo + (hi - lo) * uniform(index);
}

Cx CounterRng::in_disk(std::uint64_t index, double rmax) const {
  double r = rmax * std::sqrt(uniform(2 * index));
  double a = 2 * kPi * uniform(2 * index + 1);
  return std::polar(r, a);
}

DiskMap blaschke_fixing_one(std::vector<Cx> zeros) {
  double phase = 0.0;
  for (Cx a : zeros) phase -= std::arg((1.0 - a) / (1.0 - std::conj(a)));
  return DiskMap::blaschke(std::move(zeros), phase);
}

DiskMap rotate_conjugate(const DiskMap& f, Cx xi) {
  double alpha = std::arg(xi);
  if (alpha == 0.0) return f;
  return compose(DiskMap::rotation(alpha), compose(f, DiskMap::rotation(-alpha)));
}

namespace {

constexpr int kRetries = 16;
constexpr double kMaxBoundaryDerivative = 50.0;

DiskMap selfmap_layer(const CounterRng& g, std::uint64_t base) {
  int kind = int(3 * g.uniform(base));
  switch (kind) {
    case 0:
      return blaschke_fixing_one({g.in_disk(base + 1, 0.6), g.in_disk(base + 2, 0.6)});
    case 1:
      return blaschke_fixing_one({g.in_disk(base + 1, 0.6)});
    default:
      return DiskMap::pick_beta(g.uniform(base + 1, 0.2, 1.0));
  }
}

DiskMap univalent_layer(const CounterRng& g, std::uint64_t base, double theta) {
  int kind = int(4 * g.uniform(base));
  switch (kind) {
    case 0: {
      double lambda = std::exp(g.uniform(base + 1, -1.5, 1.5));
      auto m = hyperbolic_pair_coefficients(theta, lambda);
      return DiskMap::moebius(m.a, m.b, m.c, m.d);
    }
    case 1:
      return DiskMap::pick_plus(g.uniform(base + 1, 0.0, 0.7), theta);
    case 2:
      return DiskMap::pick_minus(-g.uniform(base + 1, 0.0, 0.7), theta);
    default:
      return DiskMap::moeb_t(0.8 * theta * g.uniform(base + 1, -1.0, 1.0), theta);
  }
}

bool acceptable(const DiskMap& f, std::initializer_list<Cx> fixed) {
  try {
    for (Cx xi : fixed) {
      Jet j = boundary_jet(f, xi);
      if (std::abs(j.value - xi) > 1e-9) return false;
      if (!(std::abs(j.deriv) <= kMaxBoundaryDerivative)) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return sampled_health(f, 200).self_map;
}

}  // namespace

DiskMap random_selfmap_fixing(Cx xi, const RngSpec& rng) {
  if (!unimodular(xi)) throw Error(ErrorKind::DomainError, "fixed point must be unimodular");
  if (rng.depth <= 0) return DiskMap::identity();
  CounterRng g(rng.seed);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::uint64_t base = std::uint64_t(attempt) * 1000;
    DiskMap f = selfmap_layer(g, base);
    for (int k = 1; k < rng.depth; ++k) f = compose(selfmap_layer(g, base + 10 * k), f);
    f = rotate_conjugate(f, xi);
    if (acceptable(f, {xi})) return f;
  }
  throw Error(ErrorKind::GenerationFailed, "no acceptable self-map after retries");
}

DiskMap random_univalent_fixing_pair(double theta, const RngSpec& rng) {
  if (!(theta > 0.0 && theta <= kPi / 2 + 1e-15))
    throw Error(ErrorKind::DomainError, "theta must lie in (0, pi/2]");
  if (rng.depth <= 0) return DiskMap::identity();
  CounterRng g(rng.seed);
  Cx e = std::polar(1.0, theta);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::uint64_t base = std::uint64_t(attempt) * 1000;
    DiskMap f = univalent_layer(g, base, theta);
    for (int k = 1; k < rng.depth; ++k) f = compose(univalent_layer(g, base + 10 * k, theta), f);
    if (acceptable(f, {e, std::conj(e)})) return f;
  }
  throw Error(ErrorKind::GenerationFailed, "no acceptable univalent map after retries");
}

}  // namespace schlicht
