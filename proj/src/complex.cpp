#include "liouville/complex.hpp"

#include "liouville/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace liouville {

namespace {

// Reduces x to r in [-1, 1] with x = r + 2k.
double reduce_mod2(double x) {
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    return r;
}

double parse_double(std::string_view text, std::string_view whole) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw InvalidArgument("cannot parse complex number '" + std::string(whole) + "'");
    }
    return value;
}

std::string shortest(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

double sin_pi(double x) {
    if (!std::isfinite(x)) return std::nan("");
    double r = reduce_mod2(x);
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(kPi * r);
}

double cos_pi(double x) {
    if (!std::isfinite(x)) return std::nan("");
    double r = std::fabs(reduce_mod2(x));
    if (r == 0.5) return 0.0;
    // cos(pi r) = sin(pi (1/2 - r))
    return sin_pi(0.5 - r);
}

Complex sin_pi(Complex z) {
    const double x = z.real();
    const double y = kPi * z.imag();
    if (z.imag() == 0.0) return {sin_pi(x), 0.0};
    return {sin_pi(x) * std::cosh(y), cos_pi(x) * std::sinh(y)};
}

Complex cos_pi(Complex z) {
    const double x = z.real();
    const double y = kPi * z.imag();
    if (z.imag() == 0.0) return {cos_pi(x), 0.0};
    return {cos_pi(x) * std::cosh(y), -sin_pi(x) * std::sinh(y)};
}

Complex require_finite(Complex z, const char* what) {
    if (!is_finite(z)) throw DomainError(std::string(what) + ": non-finite value");
    return z;
}

Complex parse_complex(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty complex number");
    if (text.back() != 'i') return {parse_double(text, text), 0.0};

    std::string_view body = text.substr(0, text.size() - 1);
    // The split point is the last sign that is not part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        if (body.empty() || body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, parse_double(body, text)};
    }
    const double re = parse_double(body.substr(0, split), text);
    std::string_view im_text = body.substr(split);
    double im = 0.0;
    if (im_text == "+") {
        im = 1.0;
    } else if (im_text == "-") {
        im = -1.0;
    } else {
        im = parse_double(im_text, text);
    }
    return {re, im};
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return shortest(z.real());
    std::string out = shortest(z.real());
    if (!std::signbit(z.imag())) out += '+';
    out += shortest(z.imag());
    out += 'i';
    return out;
}

}  // namespace liouville
