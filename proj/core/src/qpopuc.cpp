#include "szq/qpopuc.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "szq/error.hpp"

namespace szq {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kRepresentationChecks = 32;
}  // namespace

void QpopucSpec::validate(const Tolerances& tol) const {
    if (n < 1) throw Error(Condition::invalid_parameter, "degree n must be positive");
    if (ell < 0 || 2 * ell + 1 > n)
        throw Error(Condition::invalid_parameter,
                    "order index l=" + std::to_string(ell) + " needs 2l+1 <= n=" + std::to_string(n));
    if (P.degree() != ell || !P.is_monic())
        throw Error(Condition::invalid_parameter, "P must be monic of degree l");
    if (!(std::abs(std::abs(tau) - 1.0) <= tol.tau_modulus))
        throw Error(Condition::invalid_parameter, "tau must lie on the unit circle");
}

ComplexPoly assemble(const QpopucSpec& spec, const SchurSequence& s) {
    spec.validate();
    const int m = spec.n - spec.ell - 1;
    const ComplexPoly rho = szego_from_schur(s, m)[static_cast<std::size_t>(m)];
    ComplexPoly q = (spec.P * rho).shifted(1) +
                    spec.tau * (reciprocal(spec.P, spec.ell) * reciprocal(rho, m));
    std::vector<cplx> c = q.coeffs();
    c.back() = 1.0;
    return ComplexPoly(std::move(c));
}

cplx invariance_parameter(const ComplexPoly& q, const Tolerances& tol) {
    if (!q.is_monic()) throw Error(Condition::invalid_parameter, "invariance test expects a monic polynomial");
    const int n = q.degree();
    const cplx tau = q.coeff(0);
    const double scale = q.max_abs_coeff();
    for (int k = 0; k <= n; ++k) {
        if (std::abs(q.coeff(k) - tau * std::conj(q.coeff(n - k))) > tol.invariance * scale)
            throw Error(Condition::invariance,
                        "coefficient " + std::to_string(k) + " violates Q = tau Q*");
    }
    return tau;
}

OrthogonalityOutcome orthogonality_params(const QpopucSpec& spec, const SchurSequence& s,
                                          const Tolerances& tol) {
    spec.validate(tol);
    const int idx = spec.n - spec.ell;
    if (s.order() < idx)
        throw Error(Condition::range, "need delta_" + std::to_string(idx) + " for orthogonality parameters");
    const cplx delta = s.delta[static_cast<std::size_t>(idx)];
    const cplx p0 = spec.P.coeff(0);
    const cplx tau = spec.tau;
    const cplx sigma = std::conj(p0) - std::conj(tau) * delta;
    if (std::abs(sigma) < tol.order_collapse * (1.0 + std::abs(delta))) return OrderCollapse{sigma, delta};

    OrthogonalityParams out;
    out.sigma = sigma;
    out.nu = (1.0 - std::norm(delta)) / std::conj(sigma);
    out.tau_tilde = tau * sigma / std::conj(sigma);
    out.omega = tau * out.tau_tilde;
    ComplexPoly q = (1.0 / sigma) * (reciprocal(spec.P, spec.ell) - (std::conj(tau) * delta) * spec.P);
    std::vector<cplx> c = q.coeffs();
    c.resize(static_cast<std::size_t>(spec.ell) + 1, 0.0);
    c.back() = 1.0;
    out.q_poly = ComplexPoly(std::move(c));
    return out;
}

ModifiedSchur modified_schur(const QpopucSpec& spec, const SchurSequence& s, const Tolerances& tol) {
    spec.validate(tol);
    const int base = spec.n - spec.ell - 1;
    if (s.order() < base) throw Error(Condition::range, "Schur sequence too short for n - ell - 1");
    const SchurCohnResult sc = schur_cohn(spec.P, tol);
    if (!sc.stable)
        throw Error(Condition::not_representable,
                    "P has a zero outside the unit disk (|s(0)| = " + std::to_string(std::abs(sc.params.back())) + ")");

    std::vector<cplx> tail(s.delta.begin() + 1, s.delta.begin() + base + 1);
    for (int j = 0; j < spec.ell; ++j) tail.push_back(spec.tau * std::conj(sc.params[static_cast<std::size_t>(j)]));
    ModifiedSchur out{SchurSequence::from_parameters(tail, s.norms[0]), spec.tau};

    // the modified form must reproduce the directly assembled polynomial
    const ComplexPoly direct = assemble(spec, s);
    const ComplexPoly rho = szego_from_schur(out.sequence, spec.n - 1).back();
    const ComplexPoly favard = rho.shifted(1) + spec.tau * reciprocal(rho, spec.n - 1);
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    const double scale = direct.max_abs_coeff();
    for (int i = 0; i < kRepresentationChecks; ++i) {
        cplx z = std::polar(1.0, angle(rng));
        if (std::abs(direct(z) - favard(z)) > 1e-10 * scale)
            throw Error(Condition::internal_consistency, "modified Schur sequence does not reproduce Q");
    }
    return out;
}

std::vector<UnitPoint> zeros_on_circle(const QpopucSpec& spec, const SchurSequence& s,
                                       const Tolerances& tol) {
    const ModifiedSchur ms = modified_schur(spec, s, tol);
    std::vector<UnitPoint> zeros = blaschke_solve(ms.sequence, spec.n, -spec.tau, tol);
    const ComplexPoly q = assemble(spec, s);
    const double scale = q.max_abs_coeff();
    for (const UnitPoint& z : zeros)
        if (std::abs(q(z.z())) > 1e-10 * scale)
            throw Error(Condition::internal_consistency, "located zero does not annihilate Q");
    return zeros;
}

std::vector<UnitPoint> invariant_sign_change_zeros(const ComplexPoly& q, cplx tau, const Tolerances& tol) {
    const int n = q.degree();
    const cplx half = std::conj(std::sqrt(tau / std::abs(tau)));
    auto g = [&](double t) {
        return (std::polar(1.0, -0.5 * n * t) * half * q(std::polar(1.0, t))).real();
    };
    const int grid = std::max(tol.zero_count_grid, 64 * n);
    std::vector<UnitPoint> out;
    double t0 = 0.0, g0 = g(0.0);
    for (int j = 1; j <= grid; ++j) {
        double t1 = kTwoPi * j / grid, g1 = g(t1);
        if (g0 == 0.0) {
            out.push_back(UnitPoint::from_angle(t0));
        } else if ((g0 < 0.0) != (g1 < 0.0) && g1 != 0.0) {
            double lo = t0, hi = t1, glo = g0;
            for (int it = 0; it < 100; ++it) {
                double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                double gm = g(mid);
                if ((gm < 0.0) == (glo < 0.0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            out.push_back(UnitPoint::from_angle(0.5 * (lo + hi)));
        }
        t0 = t1;
        g0 = g1;
    }
    return out;
}

}  // namespace szq
