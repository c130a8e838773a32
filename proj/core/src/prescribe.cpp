#include "szq/prescribe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linalg.hpp"
#include "szq/error.hpp"

namespace szq {

namespace {

using detail::CMatrix;
using detail::CVector;

cplx unit(cplx z) { return z / std::abs(z); }

cplx f_value(const SchurSequence& s, int order, const UnitPoint& alpha, const Tolerances& tol) {
    return std::conj(blaschke_eval(s, order, alpha.z(), tol));
}

void require_distinct(const std::vector<cplx>& v, const char* what, Condition c) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (std::abs(v[i] - v[j]) <= 1e-12)
                throw Error(c, std::string(what) + " values " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " coincide");
}

std::vector<cplx> points(const std::vector<UnitPoint>& alphas) {
    std::vector<cplx> z;
    z.reserve(alphas.size());
    for (const auto& a : alphas) z.push_back(a.z());
    return z;
}

// Post-processing shared by all solvers: residual check plus admissibility.
PrescriptionResult finalize(QpopucSpec spec, const SchurSequence& s, const std::vector<UnitPoint>& alphas,
                            PrescriptionDiagnostics diag, double residual_tol, const Tolerances& tol) {
    spec.tau = unit(spec.tau);
    const ComplexPoly q = assemble(spec, s);
    const double scale = q.max_abs_coeff();
    double res = 0.0;
    for (const auto& a : alphas) res = std::max(res, std::abs(q(a.z())) / scale);
    diag.residual = res;
    if (!(res <= residual_tol))
        throw Error(Condition::internal_consistency,
                    "prescribed node residual " + std::to_string(res) + " above tolerance");
    PrescriptionResult out{std::move(spec), false, std::move(diag)};
    try {
        SchurCohnResult sc = schur_cohn(out.spec.P, tol);
        out.admissible = sc.stable;
        out.diagnostics.schur_params = std::move(sc.params);
    } catch (const Error& e) {
        if (e.condition() != Condition::boundary_degenerate) throw;
        out.diagnostics.boundary = true;
    }
    return out;
}

ComplexPoly monic_from(const CVector& p) {
    std::vector<cplx> c(static_cast<std::size_t>(p.size()) + 1);
    for (Eigen::Index j = 0; j < p.size(); ++j) c[static_cast<std::size_t>(j)] = p(j);
    c.back() = 1.0;
    return ComplexPoly(std::move(c));
}

cplx ipow(cplx z, int k) {
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

void check_degree(int n, int ell, int min_n) {
    if (n < min_n) throw Error(Condition::input, "degree n=" + std::to_string(n) + " too small");
    if (ell < 0 || 2 * ell + 1 > n)
        throw Error(Condition::input, "order index l=" + std::to_string(ell) + " needs 2l+1 <= n");
}

}  // namespace

PrescriptionResult radau(const SchurSequence& s, int n, UnitPoint alpha, const Tolerances& tol) {
    check_degree(n, 0, 2);
    const cplx fn = blaschke_eval(s, n, alpha.z(), tol);
    QpopucSpec spec{n, 0, ComplexPoly::constant(1.0), -fn};
    PrescriptionDiagnostics diag;
    diag.f_values = {std::conj(fn)};
    return finalize(std::move(spec), s, {alpha}, std::move(diag), 1e-11, tol);
}

bool radau_arc_admissible(const SchurSequence& s, int n, cplx tau, const ArcSpec& arc, bool closed,
                          const Tolerances& tol) {
    const cplx ta = blaschke_eval(s, n, arc.a().z(), tol);
    const cplx tb = blaschke_eval(s, n, arc.b().z(), tol);
    if (std::abs(ta - tb) <= 1e-14) return false;
    ArcSpec image(UnitPoint::from_complex(ta, 1e-9), UnitPoint::from_complex(tb, 1e-9));
    return image.contains(-unit(tau), closed);
}

PrescriptionResult lobatto2(const SchurSequence& s, int n, UnitPoint alpha1, UnitPoint alpha2, cplx tau,
                            std::optional<double> t, const Tolerances& tol) {
    check_degree(n, 1, 3);
    const cplx a1 = alpha1.z(), a2 = alpha2.z();
    require_distinct({a1, a2}, "prescribed node", Condition::input);
    const cplx f1 = f_value(s, n - 1, alpha1, tol), f2 = f_value(s, n - 1, alpha2, tol);
    if (std::abs(f1 - f2) <= 1e-12)
        throw Error(Condition::degenerate, "f1 = f2 forces eta onto the unit circle");
    tau = unit(tau);

    PrescriptionDiagnostics diag;
    diag.f_values = {f1, f2};
    cplx eta;
    const cplx den = f1 * a1 - f2 * a2;
    if (std::abs(den) < tol.lobatto_degenerate * (std::abs(f1) + std::abs(f2))) {
        diag.degenerate_case = true;
        if (std::abs(tau - a1 * std::conj(f2)) > 1e-10)
            throw Error(Condition::no_solution, "degenerate two-node case admits only tau = a1 conj(f2)");
        const double tt = t.value_or(0.5);
        if (!(tt > 0.0 && tt < 1.0)) throw Error(Condition::input, "chord parameter t must lie in (0,1)");
        eta = a1 + tt * (a2 - a1);
    } else {
        const cplx c12 = std::conj((f1 - f2) / den);
        const cplx a12 = std::conj((a1 - a2) / den);
        eta = c12 + tau * a12;
        const cplx mid = -((std::conj(f1) - std::conj(f2)) / std::abs(f1 - f2)) * ((a1 - a2) / std::abs(a1 - a2));
        diag.tau_arc = ArcSpec::through(a1 * std::conj(f2), mid, a2 * std::conj(f1));
    }
    QpopucSpec spec{n, 1, ComplexPoly({-eta, 1.0}), tau};
    return finalize(std::move(spec), s, {alpha1, alpha2}, std::move(diag), tol.prescribed_residual, tol);
}

PrescriptionResult three_nodes(const SchurSequence& s, int n, const std::array<UnitPoint, 3>& alphas,
                               const Tolerances& tol) {
    check_degree(n, 1, 3);
    std::vector<cplx> a = points({alphas.begin(), alphas.end()});
    require_distinct(a, "prescribed node", Condition::input);
    std::vector<cplx> f;
    for (const auto& al : alphas) f.push_back(f_value(s, n - 1, al, tol));
    require_distinct(f, "f", Condition::degenerate);

    // Mobius map sending a_i to -f_i, composed from two cross-ratio maps
    auto cross = [](cplx z1, cplx z2, cplx z3) {
        Eigen::Matrix2cd m;
        m << z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1);
        return m;
    };
    const Eigen::Matrix2cd t1 = cross(a[0], a[1], a[2]);
    const Eigen::Matrix2cd t2 = cross(-f[0], -f[1], -f[2]);
    Eigen::Matrix2cd adj;
    adj << t2(1, 1), -t2(0, 1), -t2(1, 0), t2(0, 0);
    const Eigen::Matrix2cd m = adj * t1;
    // m ~ conj(tau) (z - eta) / (1 - conj(eta) z)
    const cplx eta = -m(0, 1) / m(0, 0);
    const cplx tau = unit(std::conj(m(0, 0) / m(1, 1)));

    PrescriptionDiagnostics diag;
    diag.f_values = f;
    const bool orient = counterclockwise(a[0], a[1], a[2]) == counterclockwise(f[0], f[1], f[2]);
    const double r = std::abs(eta);
    QpopucSpec spec{n, 1, ComplexPoly({-eta, 1.0}), tau};
    if (std::abs(r - 1.0) < tol.eta_boundary) {
        diag.boundary = true;
        diag.degenerate_case = true;
        return PrescriptionResult{std::move(spec), false, std::move(diag)};
    }
    if (orient != (r < 1.0))
        throw Error(Condition::internal_consistency, "orientation test and |eta| < 1 disagree");
    return finalize(std::move(spec), s, {alphas.begin(), alphas.end()}, std::move(diag), 1e-10, tol);
}

struct PrescriptionContext::Factor {
    detail::SplitLU lu;
    CVector u;  // M^{-1} f
    CVector v;  // M^{-1} d
};

PrescriptionContext::PrescriptionContext(const SchurSequence& s, int n, int ell, std::vector<UnitPoint> alphas,
                                         const Tolerances& tol)
    : s_(s), n_(n), ell_(ell), alphas_(std::move(alphas)), tol_(tol), factor_(std::make_unique<Factor>()) {
    check_degree(n, ell, 1);
    if (static_cast<int>(alphas_.size()) != 2 * ell)
        throw Error(Condition::input, "expected " + std::to_string(2 * ell) + " prescribed nodes");
    if (s_.order() < n - ell)
        throw Error(Condition::range, "Schur sequence too short for the prescription");
    const std::vector<cplx> a = points(alphas_);
    require_distinct(a, "prescribed node", Condition::input);
    for (const auto& al : alphas_) f_.push_back(f_value(s_, n - ell, al, tol));
    if (ell == 0) return;

    // row i: [a_i^j | f_i a_i^l conj(a_i)^j], unknowns [p ; tau conj(p)]
    const Eigen::Index k = 2 * ell;
    CMatrix m(k, k);
    CVector f(k), d(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const cplx ai = a[static_cast<std::size_t>(i)];
        const cplx al = ipow(ai, ell);
        for (int j = 0; j < ell; ++j) {
            m(i, j) = ipow(ai, j);
            m(i, ell + j) = f_[static_cast<std::size_t>(i)] * al * std::conj(ipow(ai, j));
        }
        f(i) = f_[static_cast<std::size_t>(i)];
        d(i) = al;
    }
    factor_->lu = detail::SplitLU(m);
    condition_ = factor_->lu.condition();
    if (!(condition_ <= tol.condition_limit))
        throw Error(Condition::condition_violation,
                    "interpolation matrix is singular (condition " + std::to_string(condition_) + ")");
    factor_->u = factor_->lu.solve(f);
    factor_->v = factor_->lu.solve(d);
    a_ = -factor_->u(0);
    b_ = -factor_->v(0);
}

PrescriptionContext::~PrescriptionContext() = default;
PrescriptionContext::PrescriptionContext(PrescriptionContext&&) noexcept = default;
PrescriptionContext& PrescriptionContext::operator=(PrescriptionContext&&) noexcept = default;

PrescriptionResult PrescriptionContext::solve(cplx tau) const {
    tau = unit(tau);
    PrescriptionDiagnostics diag;
    diag.f_values = f_;
    diag.condition = condition_;
    if (ell_ == 0)
        return finalize(QpopucSpec{n_, 0, ComplexPoly::constant(1.0), tau}, s_, alphas_, std::move(diag),
                        tol_.prescribed_residual, tol_);

    const CVector y = -tau * factor_->u - factor_->v;
    const CVector p = y.head(ell_);
    double scale = 1.0, drift = 0.0;
    for (int j = 0; j < ell_; ++j) {
        scale = std::max(scale, std::abs(p(j)));
        drift = std::max(drift, std::abs(y(ell_ + j) - tau * std::conj(p(j))));
    }
    if (drift > tol_.coupling * scale)
        throw Error(Condition::internal_consistency, "solution halves are not conjugate-coupled");
    return finalize(QpopucSpec{n_, ell_, monic_from(p), tau}, s_, alphas_, std::move(diag),
                    tol_.prescribed_residual, tol_);
}

PrescriptionResult prescribe_2l(const SchurSequence& s, int n, int ell, const std::vector<UnitPoint>& alphas,
                                cplx tau, const Tolerances& tol) {
    return PrescriptionContext(s, n, ell, alphas, tol).solve(tau);
}

PrescriptionResult prescribe_2lp1(const SchurSequence& s, int n, int ell, const std::vector<UnitPoint>& alphas,
                                  const Tolerances& tol) {
    check_degree(n, ell, 2);
    if (static_cast<int>(alphas.size()) != 2 * ell + 1)
        throw Error(Condition::input, "expected exactly " + std::to_string(2 * ell + 1) + " prescribed nodes");
    if (ell == 0) return radau(s, n, alphas[0], tol);

    const std::vector<cplx> a = points(alphas);
    require_distinct(a, "prescribed node", Condition::input);
    std::vector<cplx> f;
    for (const auto& al : alphas) f.push_back(f_value(s, n - ell, al, tol));
    require_distinct(f, "f", Condition::degenerate);

    const int l = ell;
    CMatrix v1(l, l), v1p(l, l + 1), v2(l + 1, l + 1), v2p(l + 1, l);
    CVector f1(l), f2(l + 1), d1(l), d2(l + 1);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j <= l; ++j) {
            if (j < l) v1(i, j) = ipow(a[i], j);
            v1p(i, j) = ipow(a[i], j);
        }
        f1(i) = f[i];
        d1(i) = ipow(a[i], l);
    }
    for (int i = 0; i <= l; ++i) {
        const cplx ai = a[static_cast<std::size_t>(l + i)];
        for (int j = 0; j <= l; ++j) {
            v2(i, j) = ipow(ai, j);
            if (j < l) v2p(i, j) = ipow(ai, j);
        }
        f2(i) = f[static_cast<std::size_t>(l + i)];
        d2(i) = ipow(ai, l);
    }

    CMatrix g(2 * l + 1, 2 * l + 1);
    g.topLeftCorner(l, l) = v1;
    g.topRightCorner(l, l + 1) = f1.asDiagonal() * v1p;
    g.bottomLeftCorner(l + 1, l) = v2p;
    g.bottomRightCorner(l + 1, l + 1) = f2.asDiagonal() * v2;
    const detail::SplitLU glu(g);
    PrescriptionDiagnostics diag;
    diag.f_values = f;
    diag.condition = glu.condition();
    if (!(diag.condition <= tol.condition_limit))
        throw Error(Condition::rank_deficiency, "the 2l+1 node system is singular");
    const cplx delta = g.determinant();

    // block elimination of the q unknowns through the invertible V2
    const Eigen::PartialPivLU<CMatrix> v2lu(v2);
    const CMatrix coupling = f1.asDiagonal() * v1p * v2lu.solve(CMatrix(f2.conjugate().asDiagonal()));
    const CMatrix schur_block = v1 - coupling * v2p;
    const CVector rhs = d1 - coupling * d2;
    const CVector p = -schur_block.partialPivLu().solve(rhs);

    cplx prod = 1.0;
    for (int i = 0; i <= 2 * l; ++i) prod *= f[i] * ipow(a[i], l);
    const double sign = (l + 1) % 2 == 0 ? 1.0 : -1.0;
    const cplx tau = unit(sign * std::conj(delta) / delta * prod);

    // homogeneous relations P(a_i) + tau f_i P*(a_i) = 0
    const ComplexPoly pp = monic_from(p);
    const ComplexPoly ps = reciprocal(pp, l);
    double res = 0.0;
    for (int i = 0; i <= 2 * l; ++i) res = std::max(res, std::abs(pp(a[i]) + tau * f[i] * ps(a[i])));
    if (!(res <= tol.prescribed_residual * std::max(1.0, pp.max_abs_coeff())))
        throw Error(Condition::internal_consistency,
                    "interpolation residual " + std::to_string(res) + " above tolerance");
    return finalize(QpopucSpec{n, l, pp, tau}, s, alphas, std::move(diag), tol.prescribed_residual, tol);
}

ClassicalArcResult classical_arc(const MomentSequence& mu, const ArcSpec& arc, int n, const ClassicalMode& mode,
                                 const Tolerances& tol) {
    if (n < 3) throw Error(Condition::input, "arc-endpoint rules need n >= 3");
    if (mu.order() < n) throw Error(Condition::range, "need moments up to order " + std::to_string(n));
    const UnitPoint a = arc.a(), b = arc.b();
    const int k = n - 2;
    const MomentSequence hat = modified_hat_moments(mu, a, b, k, tol);
    const SchurSequence hs = schur_from_moments(hat, k);

    const cplx ta = blaschke_eval(hs, k, a.z(), tol);
    const cplx tb = blaschke_eval(hs, k, b.z(), tol);
    if (std::abs(ta - tb) <= 1e-14)
        throw Error(Condition::degenerate, "endpoint images coincide under the modified Blaschke product");
    const ArcSpec hat_arc(UnitPoint::from_complex(ta, 1e-9), UnitPoint::from_complex(tb, 1e-9));

    cplx tau_hat;
    if (const auto* lob = std::get_if<LobattoMode>(&mode))
        tau_hat = unit(lob->tau_hat);
    else
        tau_hat = -blaschke_eval(hs, k, std::get<PeherstorferMode>(mode).alpha.z(), tol);
    const bool inside = hat_arc.contains(-tau_hat);

    const ComplexPoly rho = szego_from_schur(hs, k - 1).back();
    const ComplexPoly pk = rho.shifted(1) + tau_hat * reciprocal(rho, k - 1);
    ComplexPoly nodal = ComplexPoly::from_roots({a.z(), b.z()}) * pk;

    std::vector<UnitPoint> nodes = blaschke_solve(hs, k, -tau_hat, tol);
    nodes.push_back(a);
    nodes.push_back(b);
    std::sort(nodes.begin(), nodes.end(), [](const UnitPoint& x, const UnitPoint& y) { return x.theta() < y.theta(); });

    // the same polynomial in the l = 1 representation of the original measure
    const SchurSequence s = schur_from_moments(mu, n);
    const cplx tau = unit(a.z() * b.z() * tau_hat);
    PrescriptionResult pres = lobatto2(s, n, a, b, tau, std::nullopt, tol);
    const ComplexPoly direct = assemble(pres.spec, s);
    const double scale = std::max(direct.max_abs_coeff(), nodal.max_abs_coeff());
    for (int j = 0; j <= n; ++j)
        if (std::abs(direct.coeff(j) - nodal.coeff(j)) > 1e-9 * scale)
            throw Error(Condition::internal_consistency, "endpoint-modified and direct constructions disagree");
    pres.diagnostics.tau_arc = hat_arc;

    return ClassicalArcResult{inside, std::move(pres), hs, tau_hat, hat_arc, std::move(nodal), std::move(nodes)};
}

TauForOmega tau_for_omega(const PrescriptionContext& ctx, cplx omega, const Tolerances& tol) {
    omega = unit(omega);
    const int idx = ctx.n() - ctx.ell();
    const cplx delta = ctx.deltas().delta[static_cast<std::size_t>(idx)];
    const cplx a = ctx.ell() == 0 ? cplx(0.0) : ctx.coefficient_a();
    const cplx b = ctx.ell() == 0 ? cplx(1.0) : ctx.coefficient_b();
    const cplx dd = std::conj(delta);

    // forward map omega(tau) for P(0) = A tau + B
    auto forward = [&](cplx tau) -> std::optional<cplx> {
        const cplx p0 = a * tau + b;
        const cplx sigma = std::conj(p0) - std::conj(tau) * delta;
        if (std::abs(sigma) < tol.order_collapse * (1.0 + std::abs(delta))) return std::nullopt;
        return tau * tau * sigma / std::conj(sigma);
    };

    TauForOmega out;
    const cplx c2 = std::conj(b);
    const cplx c1 = (std::conj(a) - std::conj(dd)) - omega * (a - dd);
    const cplx c0 = -omega * b;
    std::vector<cplx> roots;
    if (std::abs(c2) <= 1e-12 * (1.0 + std::abs(a))) {
        // omega no longer depends on tau
        const cplx lin = std::conj(a) - delta;
        const cplx den = a - dd;
        if (std::abs(den) > 1e-14 && std::abs(lin / den - omega) <= tol.omega_match) out.all_tau = true;
        return out;
    }
    const cplx disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
    // cancellation-free pair of roots
    const cplx qv = -0.5 * (c1 + (std::real(std::conj(c1) * disc) >= 0.0 ? disc : -disc));
    if (std::abs(qv) > 0.0) {
        roots.push_back(qv / c2);
        roots.push_back(c0 / qv);
    } else {
        roots.push_back(0.0);
    }
    for (cplx r : roots) {
        if (!(std::abs(std::abs(r) - 1.0) <= tol.tau_on_circle)) continue;
        const cplx tau = unit(r);
        const auto w = forward(tau);
        if (!w || std::abs(*w - omega) > tol.omega_match) continue;
        bool dup = false;
        for (cplx t : out.taus) dup = dup || std::abs(t - tau) <= 1e-12;
        if (!dup) out.taus.push_back(tau);
    }
    return out;
}

}  // namespace szq
