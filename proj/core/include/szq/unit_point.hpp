#pragma once

#include <complex>
#include <string>

namespace szq {

// A point e^{i theta} on the unit circle with theta normalized to [0, 2pi).
class UnitPoint {
public:
    UnitPoint() : theta_(0.0), z_(1.0, 0.0) {}

    static UnitPoint from_angle(double theta);
    // theta = pi * num / den; quadrant points are represented exactly.
    static UnitPoint from_pi_fraction(long long num, long long den);
    // Rejects points farther than tol from the circle, then projects.
    static UnitPoint from_complex(std::complex<double> z, double tol = 1e-12);

    double theta() const noexcept { return theta_; }
    std::complex<double> z() const noexcept { return z_; }

private:
    UnitPoint(double theta, std::complex<double> z) : theta_(theta), z_(z) {}
    double theta_;
    std::complex<double> z_;
};

// Plain radians, or "pi:<r>" where r is a decimal or a fraction p/q. The pi
// form is kept as an exact rational until the final conversion.
UnitPoint parse_angle(const std::string& text);

// Same grammar as parse_angle, without wrapping into [0, 2pi).
double parse_radians(const std::string& text);

// Angle normalized into [0, 2pi).
double wrap_angle(double theta) noexcept;

}  // namespace szq
