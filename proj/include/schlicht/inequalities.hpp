#pragma once

#include <vector>

#include "schlicht/disk_map.hpp"
#include "schlicht/report.hpp"

namespace schlicht {

enum class TheoremAForm { Auto, Interior, Hyperbolic, Parabolic };

InequalityReport check_theorem_A(const DiskMap& map, Cx tau, const std::vector<Cx>& xis,
                                 TheoremAForm form = TheoremAForm::Auto);
InequalityReport check_theorem_B(const DiskMap& map, Cx tau, const std::vector<Cx>& xis);
InequalityReport check_cp31(const DiskMap& map, double theta, int n_samples);
std::vector<InequalityReport> check_cpe(const DiskMap& map);
InequalityReport check_unkelbach_osserman(const DiskMap& map);
// alpha <= 0 means: compute the angular derivative at 1
InequalityReport check_av(const DiskMap& map, Cx z, double alpha = 0.0);
std::vector<InequalityReport> check_o1(const DiskMap& map);
std::vector<InequalityReport> check_origin1(const DiskMap& map);
std::vector<InequalityReport> check_two_sided(const DiskMap& map, Cx z);
std::vector<InequalityReport> check_main(const DiskMap& map, double theta);

// Sampled guard that the image avoids 0 and the closed negative real axis.
void branch_guard(const DiskMap& map);

}  // namespace schlicht
