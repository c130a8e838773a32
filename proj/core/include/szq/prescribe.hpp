#pragma once

#include <array>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "szq/measures.hpp"
#include "szq/qpopuc.hpp"

namespace szq {

struct PrescriptionDiagnostics {
    std::vector<cplx> f_values;
    double condition = 1.0;
    bool degenerate_case = false;
    std::optional<ArcSpec> tau_arc;
    std::vector<cplx> schur_params;
    double residual = 0.0;  // max |Q(alpha_i)| / max|coeff(Q)|
    bool boundary = false;  // a Schur-Cohn parameter fell in the refusal band
};

struct PrescriptionResult {
    QpopucSpec spec;
    bool admissible = false;
    PrescriptionDiagnostics diagnostics;
};

// One prescribed node, P = 1.
PrescriptionResult radau(const SchurSequence& s, int n, UnitPoint alpha, const Tolerances& tol = {});

// -tau in the counterclockwise arc (F_n(a), F_n(b)).
bool radau_arc_admissible(const SchurSequence& s, int n, cplx tau, const ArcSpec& arc,
                          bool closed = false, const Tolerances& tol = {});

// Two prescribed nodes with free tau. `t` parametrizes eta on the chord in the
// degenerate configuration f1 a1 = f2 a2.
PrescriptionResult lobatto2(const SchurSequence& s, int n, UnitPoint alpha1, UnitPoint alpha2,
                            cplx tau, std::optional<double> t = std::nullopt,
                            const Tolerances& tol = {});

// Three prescribed nodes; tau and eta both determined.
PrescriptionResult three_nodes(const SchurSequence& s, int n, const std::array<UnitPoint, 3>& alphas,
                               const Tolerances& tol = {});

// Factorized 2l-node interpolation system. The coefficient matrix does not
// depend on tau, so one context serves every tau.
class PrescriptionContext {
public:
    PrescriptionContext(const SchurSequence& s, int n, int ell, std::vector<UnitPoint> alphas,
                        const Tolerances& tol = {});
    ~PrescriptionContext();
    PrescriptionContext(PrescriptionContext&&) noexcept;
    PrescriptionContext& operator=(PrescriptionContext&&) noexcept;

    int n() const noexcept { return n_; }
    int ell() const noexcept { return ell_; }
    const std::vector<UnitPoint>& alphas() const noexcept { return alphas_; }
    const std::vector<cplx>& f_values() const noexcept { return f_; }
    double condition() const noexcept { return condition_; }
    const SchurSequence& deltas() const noexcept { return s_; }

    // P(0) = A tau + B.
    cplx coefficient_a() const noexcept { return a_; }
    cplx coefficient_b() const noexcept { return b_; }

    PrescriptionResult solve(cplx tau) const;

private:
    struct Factor;
    SchurSequence s_;
    int n_;
    int ell_;
    std::vector<UnitPoint> alphas_;
    std::vector<cplx> f_;
    Tolerances tol_;
    double condition_ = 1.0;
    cplx a_{0.0}, b_{1.0};
    std::unique_ptr<Factor> factor_;
};

PrescriptionResult prescribe_2l(const SchurSequence& s, int n, int ell,
                                const std::vector<UnitPoint>& alphas, cplx tau,
                                const Tolerances& tol = {});

PrescriptionResult prescribe_2lp1(const SchurSequence& s, int n, int ell,
                                  const std::vector<UnitPoint>& alphas, const Tolerances& tol = {});

struct LobattoMode {
    cplx tau_hat;
};
struct PeherstorferMode {
    UnitPoint alpha;
};
using ClassicalMode = std::variant<LobattoMode, PeherstorferMode>;

struct ClassicalArcResult {
    bool admissible = false;          // -tau^ inside (F^_{n-2}(a), F^_{n-2}(b))
    PrescriptionResult prescription;  // l = 1 form in the original measure
    SchurSequence hat_deltas;
    cplx tau_hat;
    ArcSpec tau_hat_arc;  // (F^_{n-2}(a), F^_{n-2}(b))
    ComplexPoly nodal;    // (z-a)(z-b) P_{n-2}
    std::vector<UnitPoint> nodes;
};

// Nodes pinned at both ends of the support arc of mu.
ClassicalArcResult classical_arc(const MomentSequence& mu, const ArcSpec& arc, int n,
                                 const ClassicalMode& mode, const Tolerances& tol = {});

struct TauForOmega {
    std::vector<cplx> taus;  // at most two
    bool all_tau = false;    // omega does not depend on tau
};

TauForOmega tau_for_omega(const PrescriptionContext& ctx, cplx omega, const Tolerances& tol = {});

}  // namespace szq
