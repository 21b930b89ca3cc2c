#pragma once

#include <string>

namespace schlicht {

// SVG drawing of the unit circle, the chord [e^{-i theta}, e^{i theta}], the arc gamma0
// and the labelled regions U1, U2, U3.
std::string domains_svg(double theta);
void render_domains(double theta, const std::string& path);

}  // namespace schlicht
