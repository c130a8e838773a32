#pragma once

#include <optional>
#include <string>
#include <variant>

#include "szq/opuc.hpp"
#include "szq/unit_point.hpp"

namespace szq {

// Counterclockwise arc from a to b.
class ArcSpec {
public:
    ArcSpec(UnitPoint a, UnitPoint b);
    // Arc from x to y through c.
    static ArcSpec through(cplx x, cplx c, cplx y);

    const UnitPoint& a() const noexcept { return a_; }
    const UnitPoint& b() const noexcept { return b_; }
    double length() const noexcept { return span_; }
    bool contains(cplx z, bool closed = false, double tol = 1e-14) const;

private:
    UnitPoint a_, b_;
    double span_;
};

// True when x, y, z are met in that order walking counterclockwise.
bool counterclockwise(cplx x, cplx y, cplx z);

struct Lebesgue {};
struct RogersSzego {
    double q;
};
struct ArcLebesgue {
    double theta_a;
    double theta_b;
};
struct MomentFile {
    std::string path;
};

class MeasureSpec {
public:
    using Kind = std::variant<Lebesgue, RogersSzego, ArcLebesgue, MomentFile>;

    MeasureSpec() : kind_(Lebesgue{}) {}
    explicit MeasureSpec(Kind k);

    // lebesgue | rogers-szego:q=<f> | arc-lebesgue:a=<rad>,b=<rad> | file:<path>
    static MeasureSpec parse(const std::string& text);

    const Kind& kind() const noexcept { return kind_; }
    std::optional<ArcSpec> support() const;
    std::string to_string() const;

private:
    Kind kind_;
};

MomentSequence moments(const MeasureSpec& spec, int n);

// Moments of sqrt(conj(ab)) (z-a)(z-b) conj(z) dmu for k = 0..n.
MomentSequence modified_hat_moments(const MomentSequence& mu, UnitPoint a, UnitPoint b, int n,
                                    const Tolerances& tol = {});

MomentSequence load_moments(const std::string& path);
void save_moments(const std::string& path, const MomentSequence& mu);

}  // namespace szq
