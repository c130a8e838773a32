#pragma once

// Seeded generators for property-style checks.

#include <random>
#include <vector>

#include "support/oracle.hpp"

namespace oracle {

inline szq::MeasureSpec random_arc_measure(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> start(-pi, pi), len(pi, 1.8 * pi);
    const double a = start(rng);
    return szq::MeasureSpec(szq::ArcLebesgue{a, a + len(rng)});
}

// Uniform pick among the built-in measures; arcs are random.
inline szq::MeasureSpec random_measure(std::mt19937_64& rng) {
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
        case 0: return szq::MeasureSpec();
        case 1: return rogers_szego(0.3);
        case 2: return rogers_szego(0.5);
        case 3: return rogers_szego(0.8);
        default: return random_arc_measure(rng);
    }
}

// P with zeros of modulus in [0.2, 0.9]: Schur-stable by construction.
inline szq::QpopucSpec random_admissible_spec(std::mt19937_64& rng, int n, int ell) {
    std::vector<cplx> roots;
    for (int i = 0; i < ell; ++i) roots.push_back(random_disk(rng, 0.2, 0.9));
    return {n, ell, szq::ComplexPoly::from_roots(roots), random_unit(rng)};
}

inline int random_ell(std::mt19937_64& rng, int n, int max_ell) {
    const int top = std::min(max_ell, (n - 1) / 2);
    return std::uniform_int_distribution<int>(0, top)(rng);
}

// k angles pairwise at least `gap` apart.
inline std::vector<szq::UnitPoint> spread_points(std::mt19937_64& rng, int k, double gap = 0.3) {
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    std::vector<double> th;
    while (static_cast<int>(th.size()) < k) {
        const double t = u(rng);
        bool ok = true;
        for (double x : th) ok = ok && angle_distance(x, t) > gap;
        if (ok) th.push_back(t);
    }
    std::vector<szq::UnitPoint> out;
    for (double t : th) out.push_back(szq::UnitPoint::from_angle(t));
    return out;
}

}  // namespace oracle
