#pragma once

#include <cstdint>

#include "schlicht/disk_map.hpp"

namespace schlicht {

struct RngSpec {
  std::uint64_t seed = 0;
  int depth = 1;
};

// Counter-based generator: every draw is a pure function of (seed, index).
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t bits(std::uint64_t index) const;
  double uniform(std::uint64_t index) const;  // [0,1)
  double uniform(std::uint64_t index, double lo, double hi) const;
  Cx in_disk(std::uint64_t index, double rmax) const;  // uniform by area in |z| < rmax

private:
  std::uint64_t seed_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

DiskMap random_selfmap_fixing(Cx xi, const RngSpec& rng);
DiskMap random_univalent_fixing_pair(double theta, const RngSpec& rng);

// Blaschke factor (z-a)/(1-conj(a)z) rotated so that it fixes 1.
DiskMap blaschke_fixing_one(std::vector<Cx> zeros);
// The map xi * f(conj(xi) z).
DiskMap rotate_conjugate(const DiskMap& f, Cx xi);

}  // namespace schlicht
