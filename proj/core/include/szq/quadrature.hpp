#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "szq/measures.hpp"
#include "szq/prescribe.hpp"
#include "szq/qpopuc.hpp"

namespace szq {

struct QuadRule {
    std::vector<UnitPoint> nodes;
    std::vector<double> weights;
    int m = 0;                   // exact on span{z^k : |k| <= m}
    std::optional<cplx> omega;   // plus z^{m+1} - omega z^{-(m+1)}
    std::optional<cplx> tau;
    int ell = 0;
    MeasureSpec measure;

    int n() const noexcept { return static_cast<int>(nodes.size()); }
};

// Real weights solving sum_s w_s z_s^k = mu_k for |k| <= m in least squares.
std::vector<double> weights(const std::vector<UnitPoint>& nodes, const MomentSequence& mu, int m,
                            const Tolerances& tol = {});

QuadRule build_rule(const MeasureSpec& measure, const QpopucSpec& spec, const Tolerances& tol = {});
QuadRule build_rule(const MeasureSpec& measure, const MomentSequence& mu, const SchurSequence& s,
                    const QpopucSpec& spec, const Tolerances& tol = {});

// Rule whose nodes include both ends of the support arc.
QuadRule build_classical_rule(const MeasureSpec& measure, const MomentSequence& mu,
                              const ClassicalArcResult& arc_result, const Tolerances& tol = {});

struct ExactnessReport {
    std::vector<double> residuals;  // k = 0..m
    std::optional<double> omega_residual;
    double bare_residual = 0.0;     // z^{m+1} alone
    std::optional<int> first_failing_k;  // smallest k > m with bare residual above tolerance
    bool passed = false;
};

ExactnessReport verify_exactness(const QuadRule& rule, const MomentSequence& mu,
                                 const Tolerances& tol = {});

cplx apply(const QuadRule& rule, const std::function<cplx(cplx)>& f);

enum class TauClass {
    positive,
    inadmissible_schur,
    simple_nodes_nonpositive_weights,
    boundary_degenerate,
};

std::string to_string(TauClass c);

struct TauArc {
    double begin;  // radians in [0, 2pi)
    double end;    // begin < end, may exceed 2pi when the arc wraps
};

struct TauScan {
    std::vector<double> grid;
    std::vector<TauClass> classes;
    std::vector<TauArc> arcs;
};

// Classifies one tau for a fixed 2l-node context.
TauClass classify_tau(const MeasureSpec& measure, const MomentSequence& mu,
                      const PrescriptionContext& ctx, cplx tau, const Tolerances& tol = {});

TauScan scan_tau(const MeasureSpec& measure, int n, int ell, const std::vector<UnitPoint>& alphas,
                 int grid_size, const Tolerances& tol = {});

}  // namespace szq
