#include "schlicht/plot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "schlicht/extremal.hpp"

namespace schlicht {

namespace {

constexpr double kScale = 200.0;
constexpr double kCenter = 250.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string px(Cx z) { return num(kCenter + kScale * z.real()) + "," + num(kCenter - kScale * z.imag()); }

std::string polyline(const std::vector<Cx>& pts, const char* stroke, const char* id) {
  std::string s = "  <polyline id=\"" + std::string(id) + "\" fill=\"none\" stroke=\"" + stroke +
                  "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) s += (k ? " " : "") + px(pts[k]);
  return s + "\"/>\n";
}

std::string label(Cx z, const char* text) {
  return "  <text x=\"" + num(kCenter + kScale * z.real()) + "\" y=\"" +
         num(kCenter - kScale * z.imag()) +
         "\" font-family=\"serif\" font-size=\"16\" text-anchor=\"middle\">" + text + "</text>\n";
}

}  // namespace

std::string domains_svg(double theta) {
  RegionPolylines p = region_polylines(theta, 256);
  double c = std::cos(theta);
  std::string s =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n";
  s += "  <rect width=\"500\" height=\"500\" fill=\"white\"/>\n";
  s += polyline(p.unit_circle, "black", "unit_circle");
  s += polyline(p.chord, "blue", "chord");
  s += polyline(p.gamma0, "red", "gamma0");
  s += label({(1.0 + c) / 2.0, 0.0}, "U1");
  if (c > 1e-12) s += label({c / 2.0, 0.0}, "U2");
  s += label({-0.55, 0.0}, "U3");
  s += label(std::polar(1.12, theta), "e^{i\xCE\xB8}");
  s += label(std::polar(1.12, -theta), "e^{-i\xCE\xB8}");
  s += "</svg>\n";
  return s;
}

void render_domains(double theta, const std::string& path) {
  std::string svg = domains_svg(theta);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << svg;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace schlicht
