#pragma once

#include <variant>
#include <vector>

#include "szq/opuc.hpp"

namespace szq {

// Q_{n,2l+1}(z) = z P(z) rho_{n-l-1}(z) + tau P*(z) rho*_{n-l-1}(z)
struct QpopucSpec {
    int n = 0;
    int ell = 0;
    ComplexPoly P = ComplexPoly::constant(1.0);
    cplx tau = 1.0;

    // Throws invalid_parameter on any violated invariant.
    void validate(const Tolerances& tol = {}) const;
};

struct OrthogonalityParams {
    cplx sigma;
    cplx nu;
    cplx tau_tilde;
    cplx omega;
    ComplexPoly q_poly;
};

// sigma vanished: Q already lies in the next smaller orthogonality class.
struct OrderCollapse {
    cplx sigma;
    cplx delta;  // delta_{n-l}
};

using OrthogonalityOutcome = std::variant<OrthogonalityParams, OrderCollapse>;

struct ModifiedSchur {
    SchurSequence sequence;  // order n-1
    cplx terminal;           // tau
};

ComplexPoly assemble(const QpopucSpec& spec, const SchurSequence& s);

// Q(0), after checking Q = tau Q* coefficientwise.
cplx invariance_parameter(const ComplexPoly& q, const Tolerances& tol = {});

OrthogonalityOutcome orthogonality_params(const QpopucSpec& spec, const SchurSequence& s,
                                          const Tolerances& tol = {});

// Favard sequence whose Szego polynomial rho~_{n-1} gives
// Q = z rho~_{n-1} + tau rho~*_{n-1}. Requires a Schur-Cohn stable P.
ModifiedSchur modified_schur(const QpopucSpec& spec, const SchurSequence& s,
                             const Tolerances& tol = {});

std::vector<UnitPoint> zeros_on_circle(const QpopucSpec& spec, const SchurSequence& s,
                                       const Tolerances& tol = {});

// Zeros of an invariant Q on the circle, located by sign changes of the real
// function e^{-in theta/2} tau^{-1/2} Q(e^{i theta}) and refined by bisection.
// Returns only simple crossings; compare the count with deg Q.
std::vector<UnitPoint> invariant_sign_change_zeros(const ComplexPoly& q, cplx tau,
                                                   const Tolerances& tol = {});

}  // namespace szq
