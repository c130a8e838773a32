#pragma once

#include <vector>

#include "szq/poly.hpp"
#include "szq/tolerances.hpp"
#include "szq/unit_point.hpp"

namespace szq {

// Trigonometric moments mu_k = int z^k dmu for k = 0..order(); negative
// indices follow from Hermitian symmetry.
class MomentSequence {
public:
    explicit MomentSequence(std::vector<cplx> mu);

    int order() const noexcept { return static_cast<int>(mu_.size()) - 1; }
    double mu0() const noexcept { return mu_[0].real(); }
    const std::vector<cplx>& values() const noexcept { return mu_; }
    cplx operator()(int k) const;  // throws range for |k| > order()

private:
    std::vector<cplx> mu_;
};

// delta[0] = 1 followed by the Verblunsky parameters; norms[k] = ||rho_k||^2.
struct SchurSequence {
    std::vector<cplx> delta;
    std::vector<double> norms;

    int order() const noexcept { return static_cast<int>(delta.size()) - 1; }

    // Builds delta_0 = 1, delta_1.. from `tail` and the matching norms.
    static SchurSequence from_parameters(const std::vector<cplx>& tail, double e0 = 1.0);
    // First k parameters only (k <= order()).
    SchurSequence truncated(int k) const;
};

// rho_0..rho_n via the Szego recursion.
std::vector<ComplexPoly> szego_from_schur(const SchurSequence& s, int n);

// Levinson-type recursion on the moments.
SchurSequence schur_from_moments(const MomentSequence& mu, int n);

// sum_j sum_k p_j conj(q_k) mu_{j-k}
cplx inner_product(const ComplexPoly& p, const ComplexPoly& q, const MomentSequence& mu);

// F_n(z) = z rho_{n-1}(z) / rho*_{n-1}(z), evaluated as a chain of disk
// automorphisms so that no polynomial is formed.
cplx blaschke_eval(const SchurSequence& s, int n, cplx z, const Tolerances& tol = {});

// All n solutions of F_n(z) = target, sorted by angle.
std::vector<UnitPoint> blaschke_solve(const SchurSequence& s, int n, cplx target,
                                      const Tolerances& tol = {});

struct SchurCohnResult {
    bool stable = true;
    std::vector<cplx> params;               // kappa_l, kappa_{l-1}, ..., kappa_1
    std::vector<ComplexPoly> intermediates; // P_l, P_{l-1}, ..., P_1 (monic)
};

// Downward Schur-Cohn recursion. Stops at the first parameter outside the
// closed disk; throws boundary_degenerate inside the refusal band.
SchurCohnResult schur_cohn(const ComplexPoly& p, const Tolerances& tol = {});

}  // namespace szq
