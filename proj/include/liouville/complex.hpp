#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace liouville {

/// Arguments s (Dirichlet variable) and z (kernel variable) are both carried as this.
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// sin(pi*z) with exact zeros at integer real z.
Complex sin_pi(Complex z);

/// cos(pi*z) with exact zeros at half-integer real z.
Complex cos_pi(Complex z);

double sin_pi(double x);
double cos_pi(double x);

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws DomainError when either component is NaN or infinite.
Complex require_finite(Complex z, const char* what);

/// Parses "a", "a+bi", "a-bi", "bi" (no whitespace). Throws InvalidArgument.
Complex parse_complex(std::string_view text);

/// Shortest round-trip text: "a" when the imaginary part is zero, else "a+bi" / "a-bi".
std::string format_complex(Complex z);

}  // namespace liouville
