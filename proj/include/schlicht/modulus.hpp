#pragma once

#include <string>
#include <vector>

#include "schlicht/complex.hpp"

namespace schlicht {

enum class ModulusSource { ClosedForm, ChangeRule, Grid };
const char* source_name(ModulusSource s);

struct ModulusResult {
  double value;
  ModulusSource source;
  double est_error;
};

enum class DigonFamily { D1, D2 };

ModulusResult reduced_modulus_closed(DigonFamily family, double a0, double theta);
double modulus_change(double m, double psi_a, double psi_b, double da, double db);
// Change rule when the conformal map expands as c (z-a)^{1+...} near the vertices:
// the exponent-one special case of the general rule, m + ln|c1|/psi_a + ln|d1|/psi_b.
double modulus_change_expansion(double m, double psi_a, double psi_b, Cx c1, Cx d1);

struct Rectangle {
  double width;   // distance between the two plates
  double height;  // plate length
};

struct Annulus {
  double r;
  double R;
};

// Polygon whose boundary edges carry potential 0 or 1 on the tagged ranges
// [first, last] (edge k joins vertex k and k+1); other edges are insulating.
struct PlatePolygon {
  std::vector<Cx> vertices;
  int zero_first, zero_last;
  int one_first, one_last;
};

// Extremal length of the family joining the two plates (1/energy), estimated
// on n and 2n grids with first-order Richardson extrapolation.
ModulusResult grid_modulus(const Rectangle& rect, int n);
ModulusResult grid_modulus(const Annulus& ann, int n);
ModulusResult grid_modulus(const PlatePolygon& poly, int n);

struct DigonGridSpec {
  std::vector<Cx> vertices;  // counterclockwise; slits are traversed on both sides
  int a = 0;                 // vertex indices of the marked points
  int b = 0;
  std::vector<double> eps = {0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125};
  int n = 32;                // cells across the wedge at vertex a
};

struct DigonSample {
  double eps_a, eps_b;
  double inverse_modulus;  // 1/M of the truncated domain
  double reduced;          // with the logarithmic vertex corrections
};

struct DigonEstimate {
  ModulusResult result;
  std::vector<DigonSample> coarse, fine;  // per schedule entry at n and 2n
  double angle_a, angle_b;
};

DigonEstimate reduced_modulus_numeric_detail(const DigonGridSpec& spec);
ModulusResult reduced_modulus_numeric(const DigonGridSpec& spec);

// Polygons of the standard digons. `circle_points` vertices discretize the unit circle.
DigonGridSpec slit_disk_spec(Cx xi, int circle_points = 2048);
DigonGridSpec d1_spec(double a0, double theta, int circle_points = 2048);
DigonGridSpec d2_spec(double a0, double theta, int circle_points = 2048);

}  // namespace schlicht
