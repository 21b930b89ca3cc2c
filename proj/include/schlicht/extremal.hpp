#pragma once

#include <string>
#include <vector>

#include "schlicht/disk_map.hpp"

namespace schlicht {

enum class Region { U1, U2, U3, Gamma0, Chord, BoundaryArcClosure };
const char* region_name(Region r);

enum class ExtremalCase { A, B, C };
const char* case_name(ExtremalCase c);

struct ExtremalConfig {
  Cx a;
  double theta;
  Region region;
  double phi_cap;
  double t0;
  ExtremalCase which;
  DiskMap extremal;
  double bound;
};

struct GammaCircle {
  double center;
  double radius;
};

struct SlitTip {
  double computed_tip;
  double printed_formula;
  double discrepancy;
};

double phi_cap(Cx a, double theta);
GammaCircle gamma_circle(Cx a, double theta);
Region classify_region(Cx a, double theta);

Cx moeb_t(Cx z, double t, double theta, bool inverse = false);
double t_zero(Cx a, double theta);

DiskMap pick_pm(double x, double theta, int sign);
SlitTip slit_endpoint(double x, double theta, int sign);

// Solves a(1+conj a)/(1+a) = v and returns ((1+conj a)/(1+a)) (z+a)/(1+conj(a) z).
DiskMap unkelbach_extremal(Cx v);
Cx unkelbach_parameter(Cx v);

// h+(x) = (1-2x cos t+x^2)/(1-x)^2 and h-(x) with (1+x)^2.
double h_plus(double x, double theta);
double h_minus(double x, double theta);

double main_bound(Cx a, double theta);
ExtremalConfig main_extremal(Cx a, double theta);

struct RegionPolylines {
  std::vector<Cx> unit_circle;
  std::vector<Cx> chord;
  std::vector<Cx> gamma0;
};
RegionPolylines region_polylines(double theta, int n);

}  // namespace schlicht
