#include "schlicht/complex.hpp"

#include <charconv>
#include <cmath>

namespace schlicht {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BranchViolation: return "BranchViolation";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::NotFixed: return "NotFixed";
    case ErrorKind::NoClosedForm: return "NoClosedForm";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DegenerateChord: return "DegenerateChord";
    case ErrorKind::RootNotBracketed: return "RootNotBracketed";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::SolverDiverged: return "SolverDiverged";
    case ErrorKind::WrongRegime: return "WrongRegime";
    case ErrorKind::Unhealthy: return "Unhealthy";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::NotNullPoint: return "NotNullPoint";
    case ErrorKind::NotAGenerator: return "NotAGenerator";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

namespace {

double parse_double(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::ParseError, "bad complex literal '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Cx parse_complex(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty complex literal");
  if (text.back() != 'i') return {parse_double(text, text), 0.0};
  std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_double(body, text)};
  return {parse_double(body.substr(0, split), text), parse_double(body.substr(split), text)};
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_complex(Cx z) {
  std::string im = format_real(z.imag());
  if (im.front() != '-') im = "+" + im;
  return format_real(z.real()) + im + "i";
}

}  // namespace schlicht
