#include "szq/unit_point.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string_view>

#include "szq/error.hpp"

namespace szq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Parses a decimal or p/q literal into an exact fraction.
bool parse_rational(std::string_view s, long long& num, long long& den) {
    if (s.empty()) return false;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        long long p = 0, q = 0;
        if (!parse_rational(s.substr(0, slash), p, q) || q != 1) return false;
        long long r = 0, t = 0;
        if (!parse_rational(s.substr(slash + 1), r, t) || t != 1 || r == 0) return false;
        num = p;
        den = r;
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return true;
    }
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) return false;
    long long n = 0, d = 1;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            if (n > 100000000000000LL) return false;
            n = n * 10 + (c - '0');
            if (seen_dot) d *= 10;
            seen_digit = true;
        } else {
            return false;
        }
    }
    if (!seen_digit) return false;
    num = neg ? -n : n;
    den = d;
    return true;
}

}  // namespace

double wrap_angle(double theta) noexcept {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

UnitPoint UnitPoint::from_angle(double theta) {
    double t = wrap_angle(theta);
    return UnitPoint(t, std::polar(1.0, t));
}

UnitPoint UnitPoint::from_pi_fraction(long long num, long long den) {
    if (den == 0) throw Error(Condition::parse, "zero denominator in angle");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    // reduce modulo 2
    long long period = 2 * den;
    num %= period;
    if (num < 0) num += period;
    double theta = std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    std::complex<double> z = std::polar(1.0, theta);
    if ((2 * num) % den == 0) {
        static const std::complex<double> quadrant[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        z = quadrant[(2 * num / den) % 4];
    }
    return UnitPoint(theta, z);
}

UnitPoint UnitPoint::from_complex(std::complex<double> z, double tol) {
    double r = std::abs(z);
    if (!(std::abs(r - 1.0) <= tol)) throw Error(Condition::domain, "point is not on the unit circle");
    double t = wrap_angle(std::arg(z));
    return UnitPoint(t, z / r);
}

UnitPoint parse_angle(const std::string& text) {
    std::string_view s(text);
    if (s.rfind("pi:", 0) == 0) {
        long long num = 0, den = 1;
        if (!parse_rational(s.substr(3), num, den))
            throw Error(Condition::parse, "bad pi-multiple angle '" + text + "'");
        return UnitPoint::from_pi_fraction(num, den);
    }
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return UnitPoint::from_angle(v);
    } catch (const std::exception&) {
        throw Error(Condition::parse, "bad angle '" + text + "'");
    }
}

double parse_radians(const std::string& text) {
    std::string_view s(text);
    if (s.rfind("pi:", 0) == 0) {
        long long num = 0, den = 1;
        if (!parse_rational(s.substr(3), num, den))
            throw Error(Condition::parse, "bad pi-multiple angle '" + text + "'");
        return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    }
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw Error(Condition::parse, "bad angle '" + text + "'");
    }
}

}  // namespace szq
