#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "fht/errors.hpp"

namespace fht {

using Complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* who) {
  if (!is_finite(z)) throw DomainError(std::string(who) + ": non-finite value");
}

inline void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw DomainError(std::string(who) + ": non-finite value");
}

// Parses complex literals of the form "a", "bi", "a+bi", "a-bi", "i", "-i".
// Decimal points only, locale independent. Throws DomainError on bad syntax.
Complex parse_complex(const std::string& text);

// Formats as "a+bi" / "a-bi" / "a" / "bi" with shortest round-trip digits.
std::string format_complex(Complex z);

}  // namespace fht
