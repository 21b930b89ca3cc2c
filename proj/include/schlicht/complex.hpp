#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace schlicht {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

inline bool in_open_disk(Cx z) { return std::abs(z) < 1.0; }
inline bool unimodular(Cx z) { return std::abs(std::abs(z) - 1.0) <= 1e-12; }

enum class ErrorKind {
  BranchViolation,
  PoleHit,
  GenerationFailed,
  NotFixed,
  NoClosedForm,
  NoConvergence,
  DegenerateChord,
  RootNotBracketed,
  DomainError,
  SolverDiverged,
  WrongRegime,
  Unhealthy,
  StepUnderflow,
  NotNullPoint,
  NotAGenerator,
  ParseError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Complex numbers in `a+bi` form (no spaces). A bare real or a bare `bi` is accepted.
Cx parse_complex(std::string_view text);
std::string format_complex(Cx z);
std::string format_real(double x);

}  // namespace schlicht
