#include "szq/opuc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "szq/error.hpp"

namespace szq {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

MomentSequence::MomentSequence(std::vector<cplx> mu) : mu_(std::move(mu)) {
    if (mu_.empty()) throw Error(Condition::input, "empty moment sequence");
    const cplx m0 = mu_[0];
    if (!(m0.real() > 0.0) || std::abs(m0.imag()) > 1e-12 * m0.real())
        throw Error(Condition::input, "mu_0 must be real and strictly positive");
    mu_[0] = m0.real();
}

cplx MomentSequence::operator()(int k) const {
    int a = k < 0 ? -k : k;
    if (a > order())
        throw Error(Condition::range, "moment index " + std::to_string(k) + " beyond order " +
                                          std::to_string(order()));
    cplx v = mu_[static_cast<std::size_t>(a)];
    return k < 0 ? std::conj(v) : v;
}

SchurSequence SchurSequence::from_parameters(const std::vector<cplx>& tail, double e0) {
    SchurSequence s;
    s.delta.reserve(tail.size() + 1);
    s.norms.reserve(tail.size() + 1);
    s.delta.push_back(1.0);
    s.norms.push_back(e0);
    for (cplx d : tail) {
        if (!(std::abs(d) < 1.0))
            throw Error(Condition::invalid_parameter, "Schur parameter outside the open unit disk");
        s.delta.push_back(d);
        s.norms.push_back(s.norms.back() * (1.0 - std::norm(d)));
    }
    return s;
}

SchurSequence SchurSequence::truncated(int k) const {
    if (k < 0 || k > order()) throw Error(Condition::range, "cannot truncate Schur sequence");
    SchurSequence s;
    s.delta.assign(delta.begin(), delta.begin() + k + 1);
    s.norms.assign(norms.begin(), norms.begin() + k + 1);
    return s;
}

std::vector<ComplexPoly> szego_from_schur(const SchurSequence& s, int n) {
    if (n < 0 || n > s.order())
        throw Error(Condition::range, "Schur sequence too short for order " + std::to_string(n));
    std::vector<ComplexPoly> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(ComplexPoly::constant(1.0));
    for (int k = 1; k <= n; ++k) {
        cplx d = s.delta[static_cast<std::size_t>(k)];
        if (!(std::abs(d) < 1.0))
            throw Error(Condition::invalid_parameter,
                        "|delta_" + std::to_string(k) + "| >= 1 is outside the disk");
        const ComplexPoly& prev = out.back();
        out.push_back(prev.shifted(1) + d * reciprocal(prev, k - 1));
    }
    return out;
}

SchurSequence schur_from_moments(const MomentSequence& mu, int n) {
    if (n < 0 || mu.order() < n)
        throw Error(Condition::range, "need moments up to order " + std::to_string(n));
    SchurSequence s;
    s.delta.push_back(1.0);
    s.norms.push_back(mu.mu0());
    ComplexPoly rho = ComplexPoly::constant(1.0);
    for (int k = 1; k <= n; ++k) {
        ComplexPoly rs = reciprocal(rho, k - 1);
        cplx num = 0.0, den = 0.0;
        for (int j = 0; j <= k - 1; ++j) {
            num += rho.coeff(j) * mu(j + 1);
            den += rs.coeff(j) * mu(j);
        }
        cplx d = -num / den;
        double e = s.norms.back() * (1.0 - std::norm(d));
        if (!(e > 0.0) || !(std::abs(d) < 1.0) || !std::isfinite(e))
            throw Error(Condition::measure_not_positive_definite,
                        "Toeplitz recursion broke down at step " + std::to_string(k));
        s.delta.push_back(d);
        s.norms.push_back(e);
        rho = rho.shifted(1) + d * rs;
    }
    return s;
}

cplx inner_product(const ComplexPoly& p, const ComplexPoly& q, const MomentSequence& mu) {
    cplx acc = 0.0;
    for (int j = 0; j <= p.degree(); ++j) {
        cplx pj = p.coeff(j);
        if (pj == cplx(0.0)) continue;
        for (int k = 0; k <= q.degree(); ++k) acc += pj * std::conj(q.coeff(k)) * mu(j - k);
    }
    return acc;
}

namespace {

// Unchecked evaluation used by the solver loops.
cplx blaschke_raw(const SchurSequence& s, int n, cplx z) {
    cplx b = 1.0;
    for (int k = 1; k <= n - 1; ++k) {
        cplx d = s.delta[static_cast<std::size_t>(k)];
        cplx w = z * b;
        b = (w + d) / (1.0 + std::conj(d) * w);
    }
    cplx f = z * b;
    return f / std::abs(f);
}

void check_blaschke_inputs(const SchurSequence& s, int n) {
    if (n < 1) throw Error(Condition::invalid_parameter, "Blaschke order must be at least 1");
    if (s.order() < n - 1)
        throw Error(Condition::range, "Schur sequence too short for F_" + std::to_string(n));
    for (int k = 1; k <= n - 1; ++k)
        if (!(std::abs(s.delta[static_cast<std::size_t>(k)]) < 1.0))
            throw Error(Condition::invalid_parameter,
                        "|delta_" + std::to_string(k) + "| >= 1 is outside the disk");
}

// F_n(e^{i theta}) together with d arg F / d theta, from the automorphism chain.
std::pair<cplx, double> blaschke_with_speed(const SchurSequence& s, int n, double t) {
    const cplx z = std::polar(1.0, t);
    cplx b = 1.0;
    double speed = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
        const cplx d = s.delta[static_cast<std::size_t>(k)];
        const cplx w = z * b;
        const cplx den = 1.0 + std::conj(d) * w;
        speed = (1.0 - std::norm(d)) / std::norm(den) * (1.0 + speed);
        b = (w + d) / den;
    }
    const cplx f = z * b;
    return {f / std::abs(f), 1.0 + speed};
}

// Uniform base grid, locally refined until every step advances the phase by
// less than pi/4 according to both the sampled values and the local speed.
void sample_phase(const SchurSequence& s, int n, int base, std::vector<double>& theta, std::vector<cplx>& vals) {
    constexpr double kStep = 0.25 * std::numbers::pi;
    theta.clear();
    vals.clear();
    struct Node {
        double t;
        cplx f;
        double v;
    };
    auto at = [&](double t) {
        auto [f, v] = blaschke_with_speed(s, n, t);
        return Node{t, f, v};
    };
    Node left = at(0.0);
    theta.push_back(0.0);
    vals.push_back(left.f);
    std::vector<Node> stack;
    for (int j = 1; j <= base; ++j) {
        Node right = at(kTwoPi * j / base);
        if (j == base) {
            right.t = kTwoPi;
            right.f = vals[0];
        }
        stack.push_back(right);
        while (!stack.empty()) {
            const Node r = stack.back();
            const double h = r.t - left.t;
            const double inc = std::arg(r.f * std::conj(left.f));
            const bool fine = inc > 0.0 && inc < kStep && std::max(left.v, r.v) * h < kStep;
            if (!fine && h > 1e-13) {
                stack.push_back(at(left.t + 0.5 * h));
                continue;
            }
            stack.pop_back();
            theta.push_back(r.t);
            vals.push_back(r.f);
            left = r;
        }
    }
}

}  // namespace

cplx blaschke_eval(const SchurSequence& s, int n, cplx z, const Tolerances& tol) {
    check_blaschke_inputs(s, n);
    if (!(std::abs(std::abs(z) - 1.0) <= tol.unit_circle))
        throw Error(Condition::domain, "Blaschke product evaluated off the unit circle");
    return blaschke_raw(s, n, z);
}

std::vector<UnitPoint> blaschke_solve(const SchurSequence& s, int n, cplx target,
                                      const Tolerances& tol) {
    check_blaschke_inputs(s, n);
    if (!(std::abs(std::abs(target) - 1.0) <= tol.unit_circle))
        throw Error(Condition::domain, "target is not on the unit circle");
    const cplx tgt = target / std::abs(target);
    const cplx tgt_conj = std::conj(tgt);

    std::vector<double> theta, psi;
    std::vector<cplx> vals;
    bool sampled = false;
    int base = tol.samples_per_degree * n;
    for (int attempt = 0; attempt <= tol.max_refinements && !sampled; ++attempt, base *= 2) {
        sample_phase(s, n, base, theta, vals);
        psi.assign(theta.size(), 0.0);
        psi[0] = std::arg(vals[0] * tgt_conj);
        bool ok = true;
        for (std::size_t j = 0; j + 1 < theta.size() && ok; ++j) {
            double inc = std::arg(vals[j + 1] * std::conj(vals[j]));
            if (!(inc > 0.0)) ok = false;
            psi[j + 1] = psi[j] + inc;
        }
        if (ok && std::abs(psi.back() - psi[0] - kTwoPi * n) <= tol.phase_total) sampled = true;
    }
    if (!sampled)
        throw Error(Condition::internal_consistency,
                    "Blaschke phase is not monotone with winding number n");
    const int samples = static_cast<int>(theta.size()) - 1;
    psi[samples] = psi[0] + kTwoPi * n;  // exact winding closes the last bracket

    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(n));
    int k = psi[0] <= 0.0 ? 0 : 1;
    int j = 0;
    for (int r = 0; r < n; ++r, ++k) {
        const double level = kTwoPi * k;
        while (j < samples && psi[j + 1] <= level) ++j;
        if (j >= samples) {
            // a zero at theta = 0 seen from the far end of the last bracket
            if (level - psi[samples] > tol.phase_total)
                throw Error(Condition::internal_consistency, "phase level not bracketed");
            j = samples - 1;
        }
        if (psi[j] == level) {
            roots.push_back(theta[j]);
            continue;
        }
        const double base = psi[j];
        const cplx base_conj = std::conj(vals[j]);
        auto phase = [&](double t) {
            return base + std::arg(blaschke_raw(s, n, std::polar(1.0, t)) * base_conj);
        };
        double lo = theta[j], hi = theta[j + 1];
        // bisection_width is an upper bound; stepping on to adjacent doubles
        // keeps the residual small where the phase is steep
        for (;;) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (phase(mid) < level)
                lo = mid;
            else
                hi = mid;
        }
        if (!(hi - lo < tol.bisection_width))
            throw Error(Condition::internal_consistency, "bisection stalled above the width tolerance");
        double rlo = std::abs(blaschke_raw(s, n, std::polar(1.0, lo)) - tgt);
        double rhi = std::abs(blaschke_raw(s, n, std::polar(1.0, hi)) - tgt);
        roots.push_back(rlo <= rhi ? lo : hi);
    }

    std::vector<UnitPoint> out;
    out.reserve(roots.size());
    for (double t : roots) out.push_back(UnitPoint::from_angle(t));
    std::sort(out.begin(), out.end(),
              [](const UnitPoint& a, const UnitPoint& b) { return a.theta() < b.theta(); });
    for (std::size_t i = 0; i < out.size(); ++i) {
        // where the phase is steep, one ulp in theta already moves F by speed * ulp
        const auto [fz, speed] = blaschke_with_speed(s, n, out[i].theta());
        const double floor = 16.0 * speed * std::numeric_limits<double>::epsilon() * std::max(1.0, out[i].theta());
        const double res = std::abs(fz - tgt);
        if (!(res < std::max(tol.root_residual, floor)))
            throw Error(Condition::internal_consistency,
                        "Blaschke root residual " + std::to_string(res) + " above tolerance");
        double next = i + 1 < out.size() ? out[i + 1].theta() : out[0].theta() + kTwoPi;
        if (out.size() > 1 && !(next - out[i].theta() > tol.root_gap))
            throw Error(Condition::internal_consistency, "Blaschke roots are not separated");
    }
    return out;
}

SchurCohnResult schur_cohn(const ComplexPoly& p, const Tolerances& tol) {
    if (std::abs(p.leading() - 1.0) > 1e-12)
        throw Error(Condition::invalid_parameter, "Schur-Cohn test expects a monic polynomial");
    SchurCohnResult out;
    std::vector<cplx> c = p.coeffs();
    c.back() = 1.0;
    for (int k = p.degree(); k >= 1; --k) {
        ComplexPoly pk(c);
        cplx kappa = c[0];
        double r = std::abs(kappa);
        if (std::abs(r - 1.0) <= tol.disk_band)
            throw Error(Condition::boundary_degenerate,
                        "|s_" + std::to_string(k) + "(0)| is within the refusal band of 1");
        out.params.push_back(kappa);
        out.intermediates.push_back(pk);
        if (r > 1.0) {
            out.stable = false;
            return out;
        }
        // P_{k-1} = (P_k - kappa P_k*) / (z (1 - |kappa|^2))
        std::vector<cplx> next(static_cast<std::size_t>(k), 0.0);
        const double scale = 1.0 - r * r;
        for (int i = 1; i <= k; ++i)
            next[static_cast<std::size_t>(i - 1)] =
                (c[static_cast<std::size_t>(i)] - kappa * std::conj(c[static_cast<std::size_t>(k - i)])) /
                scale;
        next.back() = 1.0;
        c = std::move(next);
    }
    return out;
}

}  // namespace szq
