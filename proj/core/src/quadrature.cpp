#include "szq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <thread>
#include <variant>

#include "linalg.hpp"
#include "szq/error.hpp"

namespace szq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx power_sum(const QuadRule& rule, int k) {
    cplx acc = 0.0;
    for (std::size_t s = 0; s < rule.nodes.size(); ++s)
        acc += rule.weights[s] * std::pow(rule.nodes[s].z(), k);
    return acc;
}

std::optional<cplx> omega_of(const QpopucSpec& spec, const SchurSequence& s, const Tolerances& tol) {
    const OrthogonalityOutcome o = orthogonality_params(spec, s, tol);
    if (const auto* p = std::get_if<OrthogonalityParams>(&o)) return p->omega;
    return std::nullopt;
}

void require_positive(const std::vector<double>& w, const Tolerances& tol) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!(w[i] > tol.weight_floor))
            throw Error(Condition::positivity_violation,
                        "weight " + std::to_string(i + 1) + " = " + std::to_string(w[i]) + " is not positive");
}

int moment_budget(const MeasureSpec& measure, const QpopucSpec& spec) {
    if (std::holds_alternative<MomentFile>(measure.kind())) return spec.n - spec.ell;
    return spec.n + 1;
}

}  // namespace

std::vector<double> weights(const std::vector<UnitPoint>& nodes, const MomentSequence& mu, int m,
                            const Tolerances& tol) {
    const int n = static_cast<int>(nodes.size());
    if (n == 0) throw Error(Condition::input, "no nodes");
    if (2 * m + 1 < n) throw Error(Condition::input, "too few moment rows for the node count");
    if (mu.order() < m) throw Error(Condition::range, "need moments up to order " + std::to_string(m));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(nodes[i].z() - nodes[j].z()) <= tol.root_gap)
                throw Error(Condition::input, "nodes are not distinct");

    detail::CMatrix a(2 * m + 1, n);
    detail::CVector b(2 * m + 1);
    for (int k = -m; k <= m; ++k) {
        for (int s = 0; s < n; ++s) a(k + m, s) = std::pow(nodes[s].z(), k);
        b(k + m) = mu(k);
    }
    const detail::CVector x = detail::least_squares(a, b);
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        if (std::abs(x(s).imag()) > tol.weight_imag * mu.mu0())
            throw Error(Condition::nodes_not_quadrature, "recovered weight has an imaginary part");
        w[s] = x(s).real();
    }
    Eigen::VectorXd wr = Eigen::Map<Eigen::VectorXd>(w.data(), n);
    const double res = (a * wr.cast<cplx>() - b).cwiseAbs().maxCoeff();
    if (!(res <= tol.weight_residual * mu.mu0()))
        throw Error(Condition::nodes_not_quadrature,
                    "moment residual " + std::to_string(res) + " exceeds tolerance");
    return w;
}

QuadRule build_rule(const MeasureSpec& measure, const QpopucSpec& spec, const Tolerances& tol) {
    spec.validate(tol);
    const MomentSequence mu = moments(measure, moment_budget(measure, spec));
    const SchurSequence s = schur_from_moments(mu, spec.n - spec.ell);
    return build_rule(measure, mu, s, spec, tol);
}

QuadRule build_rule(const MeasureSpec& measure, const MomentSequence& mu, const SchurSequence& s,
                    const QpopucSpec& spec, const Tolerances& tol) {
    QuadRule rule;
    rule.nodes = zeros_on_circle(spec, s, tol);
    rule.m = spec.n - spec.ell - 1;
    rule.weights = weights(rule.nodes, mu, rule.m, tol);
    rule.omega = omega_of(spec, s, tol);
    rule.tau = spec.tau;
    rule.ell = spec.ell;
    rule.measure = measure;
    require_positive(rule.weights, tol);
    return rule;
}

QuadRule build_classical_rule(const MeasureSpec& measure, const MomentSequence& mu,
                              const ClassicalArcResult& arc_result, const Tolerances& tol) {
    if (!arc_result.admissible)
        throw Error(Condition::inadmissible, "tau^ lies outside the admissible endpoint arc");
    const QpopucSpec& spec = arc_result.prescription.spec;
    const SchurSequence s = schur_from_moments(mu, spec.n - spec.ell);
    QuadRule rule;
    rule.nodes = arc_result.nodes;
    rule.m = spec.n - 2;
    rule.weights = weights(rule.nodes, mu, rule.m, tol);
    rule.omega = omega_of(spec, s, tol);
    rule.tau = spec.tau;
    rule.ell = 1;
    rule.measure = measure;
    require_positive(rule.weights, tol);
    return rule;
}

ExactnessReport verify_exactness(const QuadRule& rule, const MomentSequence& mu, const Tolerances& tol) {
    if (mu.order() < rule.m) throw Error(Condition::range, "need moments up to order " + std::to_string(rule.m));
    ExactnessReport rep;
    const double bound = tol.weight_residual * mu.mu0();
    bool ok = true;
    for (int k = 0; k <= rule.m; ++k) {
        rep.residuals.push_back(std::abs(power_sum(rule, k) - mu(k)));
        ok = ok && rep.residuals.back() <= bound;
    }
    const int k1 = rule.m + 1;
    if (mu.order() >= k1) {
        const cplx sk = power_sum(rule, k1);
        rep.bare_residual = std::abs(sk - mu(k1));
        if (rule.omega) {
            const cplx w = *rule.omega;
            // sum of w_s conj(z_s^k) equals conj of the power sum for real weights
            rep.omega_residual = std::abs((sk - w * std::conj(sk)) - (mu(k1) - w * std::conj(mu(k1))));
            ok = ok && *rep.omega_residual <= bound;
        }
        for (int k = k1; k <= mu.order(); ++k) {
            if (std::abs(power_sum(rule, k) - mu(k)) > bound) {
                rep.first_failing_k = k;
                break;
            }
        }
    }
    rep.passed = ok;
    return rep;
}

cplx apply(const QuadRule& rule, const std::function<cplx(cplx)>& f) {
    cplx acc = 0.0;
    for (std::size_t s = 0; s < rule.nodes.size(); ++s) acc += rule.weights[s] * f(rule.nodes[s].z());
    return acc;
}

std::string to_string(TauClass c) {
    switch (c) {
        case TauClass::positive: return "positive";
        case TauClass::inadmissible_schur: return "inadmissible-schur";
        case TauClass::simple_nodes_nonpositive_weights: return "simple-nodes-nonpositive-weights";
        case TauClass::boundary_degenerate: return "boundary-degenerate";
    }
    return "unknown";
}

TauClass classify_tau(const MeasureSpec& measure, const MomentSequence& mu, const PrescriptionContext& ctx,
                      cplx tau, const Tolerances& tol) {
    PrescriptionResult pr;
    try {
        pr = ctx.solve(tau);
    } catch (const Error&) {
        return TauClass::boundary_degenerate;
    }
    if (pr.diagnostics.boundary) return TauClass::boundary_degenerate;
    if (pr.admissible) {
        try {
            build_rule(measure, mu, ctx.deltas(), pr.spec, tol);
            return TauClass::positive;
        } catch (const Error& e) {
            if (e.condition() == Condition::positivity_violation) return TauClass::simple_nodes_nonpositive_weights;
            return TauClass::boundary_degenerate;
        }
    }
    // Schur-Cohn failed: look for n simple zeros on the circle anyway
    const ComplexPoly q = assemble(pr.spec, ctx.deltas());
    const std::vector<UnitPoint> zs = invariant_sign_change_zeros(q, pr.spec.tau, tol);
    if (static_cast<int>(zs.size()) != pr.spec.n) return TauClass::inadmissible_schur;
    try {
        const std::vector<double> w = weights(zs, mu, pr.spec.n - pr.spec.ell - 1, tol);
        for (double x : w)
            if (!(x > tol.weight_floor)) return TauClass::simple_nodes_nonpositive_weights;
    } catch (const Error&) {
        return TauClass::inadmissible_schur;
    }
    return TauClass::inadmissible_schur;
}

TauScan scan_tau(const MeasureSpec& measure, int n, int ell, const std::vector<UnitPoint>& alphas, int grid_size,
                 const Tolerances& tol) {
    if (grid_size < 8) throw Error(Condition::input, "grid size must be at least 8");
    const int budget = std::holds_alternative<MomentFile>(measure.kind()) ? n - ell : n + 1;
    const MomentSequence mu = moments(measure, budget);
    const SchurSequence s = schur_from_moments(mu, n - ell);
    const PrescriptionContext ctx(s, n, ell, alphas, tol);
    auto classify = [&](double theta) { return classify_tau(measure, mu, ctx, std::polar(1.0, theta), tol); };

    TauScan scan;
    scan.grid.resize(static_cast<std::size_t>(grid_size));
    scan.classes.resize(scan.grid.size());
    for (int j = 0; j < grid_size; ++j) scan.grid[j] = kTwoPi * j / grid_size;

    // independent grid points; each worker owns a contiguous block
    const int workers = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w) {
        const int lo = grid_size * w / workers, hi = grid_size * (w + 1) / workers;
        jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (int j = lo; j < hi; ++j) scan.classes[j] = classify(scan.grid[j]);
        }));
    }
    for (auto& j : jobs) j.get();

    auto green = [&](int j) { return scan.classes[((j % grid_size) + grid_size) % grid_size] == TauClass::positive; };
    auto refine = [&](double bad, double good) {
        while (std::abs(good - bad) > tol.scan_refine) {
            const double mid = 0.5 * (bad + good);
            if (classify(mid) == TauClass::positive)
                good = mid;
            else
                bad = mid;
        }
        return 0.5 * (bad + good);
    };
    const double step = kTwoPi / grid_size;
    bool any_red = false;
    for (int j = 0; j < grid_size; ++j) any_red = any_red || !green(j);
    if (!any_red) {
        scan.arcs.push_back({0.0, kTwoPi});
        return scan;
    }
    for (int j = 0; j < grid_size; ++j) {
        if (!green(j) || green(j - 1)) continue;
        int e = j;
        while (green(e + 1)) ++e;
        const double begin = refine(scan.grid[j] - step, scan.grid[j]);
        const double end = refine(e * step + step, e * step);
        const double b0 = wrap_angle(begin);
        scan.arcs.push_back({b0, b0 + (end - begin)});
    }
    std::sort(scan.arcs.begin(), scan.arcs.end(), [](const TauArc& x, const TauArc& y) { return x.begin < y.begin; });
    return scan;
}

}  // namespace szq
