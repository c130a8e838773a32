#pragma once

namespace szq {

// Every numerical threshold used by the library lives here so callers can
// tighten or relax them in one place.
struct Tolerances {
    double unit_circle = 1e-12;         // |z| = 1 acceptance band for inputs
    double tau_modulus = 1e-14;         // |tau| = 1 band for QpopucSpec::tau
    double disk_band = 1e-12;           // Schur-Cohn refuses |s_k(0)| in [1-band, 1+band]
    double root_residual = 1e-11;       // |F_n(z) - target| for Blaschke roots
    double bisection_width = 1e-14;     // angular bisection stop width
    int samples_per_degree = 64;        // initial phase sampling density
    int max_refinements = 10;           // sampling doublings before giving up
    double phase_total = 1e-9;          // winding-number check on the unwrapped phase
    double root_gap = 1e-10;            // minimal angular separation of distinct nodes
    double invariance = 1e-11;          // Q = tau Q* coefficient check, relative
    double order_collapse = 1e-12;      // |sigma| below this times (1+|delta|) collapses
    double condition_limit = 1e12;      // linear systems beyond this are singular
    double coupling = 1e-10;            // conjugate-coupling self-consistency
    double prescribed_residual = 1e-9;  // |Q(alpha)| relative to max|coeff|
    double lobatto_degenerate = 1e-12;  // |f1 a1 - f2 a2| relative to |f1|+|f2|
    double eta_boundary = 1e-9;         // three-node |eta| near 1
    double tau_on_circle = 1e-10;       // tau-for-omega root acceptance
    double omega_match = 1e-9;          // tau-for-omega forward check
    double weight_residual = 1e-9;      // moment-system residual relative to mu_0
    double weight_imag = 1e-10;         // imaginary part allowed in recovered weights
    double weight_floor = 1e-12;        // weights at or below this are not positive
    double hat_branch = 1e-10;          // branch selection for the endpoint-modified measure
    double scan_refine = 1e-4;          // tau-arc boundary refinement, radians
    int zero_count_grid = 8192;         // sign-change grid for the invariant real function
};

}  // namespace szq
