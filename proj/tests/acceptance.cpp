// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>

#include "support/random_specs.hpp"

using namespace szq;
using oracle::pi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(const char* f, double x) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

double nearest(const std::vector<UnitPoint>& nodes, cplx z, std::size_t* at = nullptr) {
    double best = 1e9;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double d = std::abs(nodes[i].z() - z);
        if (d < best) {
            best = d;
            if (at) *at = i;
        }
    }
    return best;
}

// Table 1 reproduction.
Verdict table_one() {
    Verdict v;
    const auto t0 = Clock::now();
    const MeasureSpec m = oracle::rogers_szego(0.5);
    const MomentSequence mu = moments(m, 17);
    const SchurSequence s = schur_from_moments(mu, 13);
    const auto alphas = oracle::table_one_alphas();
    const PrescriptionResult pr = prescribe_2l(s, 16, 3, alphas, parse_angle("pi:0.9").z());
    const QuadRule rule = build_rule(m, mu, s, pr.spec);
    const OrthogonalityParams op = std::get<OrthogonalityParams>(orthogonality_params(pr.spec, s));
    const double elapsed = seconds_since(t0);

    for (double w : rule.weights) v.require(w > 0.0, "non-positive weight");
    for (const auto& a : alphas) {
        double best = 1.0;
        for (const auto& z : rule.nodes) best = std::min(best, oracle::angle_distance(z.theta(), a.theta()));
        v.require(best <= 1e-10, "prescribed node missing");
    }
    std::size_t i1 = 0, ifree = 0;
    nearest(rule.nodes, 1.0, &i1);
    v.require(std::abs(rule.weights[i1] - 0.188077141674534) <= 1e-9, "weight at node 1");
    const cplx free_node(-0.942694568084626, -0.333656936543722);
    const double dn = nearest(rule.nodes, free_node, &ifree);
    v.require(dn <= 1e-10, "free node " + fmt("%.2e", dn));
    v.require(std::abs(rule.weights[ifree] - 0.000883914413545) <= 1e-9, "free node weight");
    v.require(std::abs(op.tau_tilde - std::polar(1.0, -0.87834 * pi)) <= 1e-3, "tau~");
    v.require(std::abs(op.omega - std::polar(1.0, 0.02166 * pi)) <= 1e-3, "omega");
    v.require(elapsed < 1.0, "runtime " + fmt("%.3f s", elapsed));
    if (v.ok) v.detail = "16 positive weights, w(1) = " + fmt("%.15f", rule.weights[i1]) + ", " + fmt("%.4f s", elapsed);
    return v;
}

// Table 2 reproduction.
Verdict table_two() {
    Verdict v;
    const auto t0 = Clock::now();
    const MeasureSpec m = oracle::rogers_szego(0.5);
    const MomentSequence mu = moments(m, 17);
    const SchurSequence s = schur_from_moments(mu, 13);
    const PrescriptionResult pr = prescribe_2lp1(s, 16, 3, oracle::table_two_alphas());
    const QuadRule rule = build_rule(m, mu, s, pr.spec);
    const double elapsed = seconds_since(t0);

    const cplx tau = pr.spec.tau;
    v.require(std::abs(tau.real() - oracle::table_two_tau.real()) <= 1e-9 &&
                  std::abs(tau.imag() - oracle::table_two_tau.imag()) <= 1e-9,
              "tau");
    for (double w : rule.weights) v.require(w > 0.0, "non-positive weight");
    std::string bad_rows;
    double worst = 0.0;
    for (std::size_t row = 0; row < 16; ++row) {
        const auto& ref = oracle::table_two()[row];
        std::size_t at = 0;
        const double dn = nearest(rule.nodes, ref.node, &at);
        const double dw = std::abs(rule.weights[at] - ref.weight);
        if (dn > 1e-9 || dw > 1e-9) {
            bad_rows += (bad_rows.empty() ? "" : ",") + std::to_string(row + 1);
            worst = std::max(worst, dw);
        }
    }
    if (!bad_rows.empty()) v.require(false, "weight mismatch in rows " + bad_rows + " (max " + fmt("%.3e", worst) + ")");
    v.require(elapsed < 1.0, "runtime " + fmt("%.3f s", elapsed));
    v.detail = (v.ok ? "tau and all 16 rows match, " : v.detail + ", ") + fmt("%.4f s", elapsed);
    return v;
}

// Green tau-arcs for the Table 1 configuration.
Verdict green_arcs() {
    Verdict v;
    const auto t0 = Clock::now();
    const MeasureSpec m = oracle::rogers_szego(0.5);
    const auto alphas = oracle::table_one_alphas();
    const TauScan scan = scan_tau(m, 16, 3, alphas, 4000);
    const double elapsed = seconds_since(t0);

    const double expect[6] = {0.251, 0.499, 0.765, 1.229, 1.505, 1.995};
    v.require(scan.arcs.size() == 3, "arc count " + std::to_string(scan.arcs.size()));
    std::string got;
    for (std::size_t i = 0; i < scan.arcs.size() && i < 3; ++i) {
        const double b = scan.arcs[i].begin / pi, e = scan.arcs[i].end / pi;
        got += fmt(" (%.4f", b) + fmt(", %.4f)", e);
        v.require(std::abs(b - expect[2 * i]) <= 0.002, "begin of arc " + std::to_string(i + 1) + fmt(" = %.4f", b));
        v.require(std::abs(e - expect[2 * i + 1]) <= 0.002, "end of arc " + std::to_string(i + 1) + fmt(" = %.4f", e));
    }
    const MomentSequence mu = moments(m, 17);
    const PrescriptionContext ctx(schur_from_moments(mu, 13), 16, 3, alphas);
    v.require(classify_tau(m, mu, ctx, 1.0) == TauClass::simple_nodes_nonpositive_weights, "class at tau = 1");
    v.require(classify_tau(m, mu, ctx, parse_angle("pi:0.63").z()) == TauClass::inadmissible_schur,
              "class at tau = e^{0.63 pi i}");
    v.require(elapsed < 30.0, "runtime " + fmt("%.1f s", elapsed));
    if (v.ok) v.detail = "arcs/pi" + got + ", " + fmt("%.2f s", elapsed);
    return v;
}

// Exactness and sharpness over random admissible rules.
Verdict exactness_suite() {
    Verdict v;
    std::mt19937_64 rng(0x5eed0004);
    std::uniform_int_distribution<int> nd(3, 14);
    int rules = 0;
    const std::vector<MeasureSpec> fixed{MeasureSpec(), oracle::rogers_szego(0.3), oracle::rogers_szego(0.5),
                                         oracle::rogers_szego(0.8)};
    for (int t = 0; t < 250; ++t) {
        const MeasureSpec m = t % 5 < 4 ? fixed[t % 5] : oracle::random_arc_measure(rng);
        const int n = nd(rng), ell = oracle::random_ell(rng, n, 3);
        const QpopucSpec spec = oracle::random_admissible_spec(rng, n, ell);
        try {
            const QuadRule r = build_rule(m, spec);
            const MomentSequence mu = moments(m, r.m + 1);
            const ExactnessReport rep = verify_exactness(r, mu);
            v.require(rep.passed, "exactness failed");
            double sum = 0.0;
            for (double w : r.weights) {
                v.require(w > 0.0, "non-positive weight");
                sum += w;
            }
            v.require(std::abs(sum - mu.mu0()) <= 1e-10 * mu.mu0(), "weight sum");
            if (std::holds_alternative<RogersSzego>(m.kind()))
                v.require(rep.bare_residual > 1e-6, "not sharp: bare residual " + fmt("%.2e", rep.bare_residual));
            ++rules;
        } catch (const Error& e) {
            v.require(false, e.what());
        }
    }
    if (v.ok) v.detail = std::to_string(rules) + " rules";
    return v;
}

double poly_diff(const ComplexPoly& a, const ComplexPoly& b) {
    double d = 0.0;
    for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k) d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
    return d;
}

// Oracle equivalences.
Verdict equivalences() {
    Verdict v;
    std::mt19937_64 rng(0x5eed0005);
    int paths = 0;
    for (int t = 0; t < 100; ++t) {
        const MeasureSpec m = oracle::random_measure(rng);
        const int n = 3 + t % 10;
        const SchurSequence s = schur_from_moments(moments(m, n + 1), n - 1);
        const auto al = oracle::spread_points(rng, 3);
        const cplx tau = oracle::random_unit(rng);
        try {
            const PrescriptionResult a = lobatto2(s, n, al[0], al[1], tau);
            const PrescriptionResult b = prescribe_2l(s, n, 1, {al[0], al[1]}, tau);
            v.require(poly_diff(a.spec.P, b.spec.P) <= 1e-10, "lobatto2 vs prescribe_2l");
            const PrescriptionResult c = three_nodes(s, n, {al[0], al[1], al[2]});
            const PrescriptionResult d = prescribe_2lp1(s, n, 1, al);
            if (!c.diagnostics.boundary) {
                v.require(poly_diff(c.spec.P, d.spec.P) <= 1e-10 && std::abs(c.spec.tau - d.spec.tau) <= 1e-10,
                          "three_nodes vs prescribe_2lp1");
            }
            ++paths;
        } catch (const Error&) {
            // ill-posed random configuration, drawn again on the next iteration
        }
    }
    v.require(paths >= 80, "too few solvable configurations");

    int polys = 0, disagreements = 0;
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_real_distribution<double> radius(0.05, 1.8);
    while (polys < 500) {
        std::vector<cplx> roots;
        const int d = deg(rng);
        for (int i = 0; i < d; ++i) {
            double r = radius(rng);
            while (std::abs(r - 1.0) < 0.02) r = radius(rng);
            roots.push_back(r * oracle::random_unit(rng));
        }
        const ComplexPoly p = ComplexPoly::from_roots(roots);
        bool inside = true;
        for (cplx z : oracle::companion_roots(p)) inside = inside && std::abs(z) < 1.0;
        try {
            disagreements += schur_cohn(p).stable != inside;
        } catch (const Error&) {
            ++disagreements;
        }
        ++polys;
    }
    v.require(disagreements == 0, std::to_string(disagreements) + " Schur-Cohn disagreements");

    namespace l3 = oracle::lebesgue3;
    const SchurSequence leb = schur_from_moments(moments(MeasureSpec(), 3), 3);
    const PrescriptionResult lob = lobatto2(leb, 3, UnitPoint::from_angle(0.0), parse_angle("pi:1/2"), l3::tau);
    const PrescriptionResult tri =
        three_nodes(leb, 3, {UnitPoint::from_angle(0.0), parse_angle("pi:1/2"), parse_angle("pi:5/4")});
    v.require(std::abs(-lob.spec.P.coeff(0) - l3::eta) <= 1e-12, "eta from two nodes");
    v.require(std::abs(-tri.spec.P.coeff(0) - l3::eta) <= 1e-12, "eta from three nodes");
    v.require(std::abs(tri.spec.tau - l3::tau) <= 1e-12, "tau from three nodes");
    const QuadRule rule = build_rule(MeasureSpec(), lob.spec);
    v.require(nearest(rule.nodes, l3::third) <= 1e-12, "third node");
    const double w[3] = {l3::w_prescribed, l3::w_prescribed, l3::w_third};
    const cplx z[3] = {1.0, cplx(0, 1), l3::third};
    for (int i = 0; i < 3; ++i) {
        std::size_t at = 0;
        nearest(rule.nodes, z[i], &at);
        v.require(std::abs(rule.weights[at] - w[i]) <= 1e-12, "closed-form weight " + std::to_string(i + 1));
    }
    v.require(rule.omega && std::abs(*rule.omega + 1.0) <= 1e-12, "omega = -1");
    if (v.ok) v.detail = std::to_string(paths) + " path pairs, 500 Schur-Cohn verdicts, closed-form chain";
    return v;
}

// Zero locations for arc measures.
Verdict zeros_in_arc() {
    Verdict v;
    std::mt19937_64 rng(0x5eed0006);
    std::uniform_int_distribution<int> nd(3, 12);
    int specs = 0, radau_true = 0;
    while (specs < 200) {
        const MeasureSpec m = oracle::random_arc_measure(rng);
        const ArcSpec arc = *m.support();
        const int n = nd(rng), ell = oracle::random_ell(rng, n, 2);
        const QpopucSpec spec = oracle::random_admissible_spec(rng, n, ell);
        const SchurSequence s = schur_from_moments(moments(m, n), n - ell);
        const auto z = zeros_on_circle(spec, s);
        int inside = 0;
        for (const auto& p : z) inside += arc.contains(p.z());
        v.require(inside >= n - 2 * ell - 1, "too few zeros inside the arc");
        if (ell == 0 && radau_arc_admissible(s, n, spec.tau, arc)) {
            ++radau_true;
            v.require(inside == n, "admissible Radau case with a zero outside");
        }
        ++specs;
    }
    v.require(radau_true > 0, "no admissible Radau instance drawn");
    if (v.ok) v.detail = "200 specs, " + std::to_string(radau_true) + " admissible Radau cases";
    return v;
}

// Direct assembly against the modified-sequence form.
Verdict representation() {
    Verdict v;
    std::mt19937_64 rng(0x5eed0007);
    std::uniform_int_distribution<int> nd(3, 16);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const MeasureSpec m = oracle::random_measure(rng);
        const int n = nd(rng), ell = oracle::random_ell(rng, n, 4);
        const QpopucSpec spec = oracle::random_admissible_spec(rng, n, ell);
        const SchurSequence s = schur_from_moments(moments(m, n + 1), n - ell);
        const ComplexPoly q = assemble(spec, s);
        const ModifiedSchur ms = modified_schur(spec, s);
        const ComplexPoly rho = szego_from_schur(ms.sequence, n - 1).back();
        const ComplexPoly fav = rho.shifted(1) + ms.terminal * reciprocal(rho, n - 1);
        double dev = 0.0;
        for (int j = 0; j < 32; ++j) {
            const cplx z = oracle::random_unit(rng);
            dev = std::max(dev, std::abs(q(z) - fav(z)));
        }
        worst = std::max(worst, dev / q.max_abs_coeff());
    }
    v.require(worst <= 1e-10, "relative deviation " + fmt("%.2e", worst));
    if (v.ok) v.detail = "200 specs, worst relative deviation " + fmt("%.2e", worst);
    return v;
}

// tau_for_omega round trip.
Verdict omega_round_trip() {
    Verdict v;
    std::mt19937_64 rng(0x5eed0008);
    std::uniform_int_distribution<int> nd(3, 12);
    int contexts = 0, max_count = 0;
    double worst = 0.0;
    while (contexts < 100) {
        const MeasureSpec m = oracle::random_measure(rng);
        const int n = nd(rng), ell = oracle::random_ell(rng, n, 2);
        const SchurSequence s = schur_from_moments(moments(m, n + 1), n - ell);
        std::optional<PrescriptionContext> ctx;
        try {
            ctx.emplace(s, n, ell, oracle::spread_points(rng, 2 * ell));
        } catch (const Error&) {
            continue;
        }
        const auto o = orthogonality_params(ctx->solve(oracle::random_unit(rng)).spec, s);
        const auto* p = std::get_if<OrthogonalityParams>(&o);
        if (!p) continue;
        ++contexts;
        const TauForOmega r = tau_for_omega(*ctx, p->omega);
        max_count = std::max(max_count, static_cast<int>(r.taus.size()));
        v.require(r.all_tau || !r.taus.empty(), "sampled omega not recovered");
        for (cplx tau : r.taus) {
            const auto back = orthogonality_params(ctx->solve(tau).spec, s);
            if (const auto* q = std::get_if<OrthogonalityParams>(&back))
                worst = std::max(worst, std::abs(q->omega - p->omega));
            else
                v.require(false, "returned tau collapses the order");
        }
    }
    v.require(worst <= 1e-9, "omega deviation " + fmt("%.2e", worst));
    v.require(max_count <= 2, "more than two solutions");
    if (v.ok) v.detail = "100 contexts, worst deviation " + fmt("%.2e", worst);
    return v;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        Verdict (*fn)();
    };
    const Entry entries[] = {
        {1, "Table 1 reproduction", table_one},
        {2, "Table 2 reproduction", table_two},
        {3, "green tau-arc boundaries", green_arcs},
        {4, "exactness and sharpness suite", exactness_suite},
        {5, "oracle equivalences", equivalences},
        {6, "zeros inside the support arc", zeros_in_arc},
        {7, "representation equivalence", representation},
        {8, "tau-for-omega round trip", omega_round_trip},
    };
    int failed = 0;
    for (const Entry& e : entries) {
        Verdict v;
        try {
            v = e.fn();
        } catch (const std::exception& ex) {
            v.ok = false;
            v.detail = std::string("exception: ") + ex.what();
        }
        failed += !v.ok;
        std::printf("%s criterion %d (%s): %s\n", v.ok ? "PASS" : "FAIL", e.id, e.name, v.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
