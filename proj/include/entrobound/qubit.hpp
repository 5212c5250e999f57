#pragma once

#include <cstdint>

#include "entrobound/tensor_core.hpp"

namespace entrobound::qubit {

/// Rotation angle of a 2x2 overlap matrix once phases are discarded:
/// phi = arccos(max |U_ji|) in [0, pi/4].
struct CanonicalAngle {
    double phi = 0.0;
    bool compatible = false;  // phi == 0: the observables share eigenstates
};

CanonicalAngle canonical_phi(const OverlapUnitary& u);

/// F(alpha) = h(cos^2 alpha) + h(cos^2(alpha - phi)), the s -> 2 limit of the
/// qubit bound as a function of the real-state angle alpha.
double entropy_sum_curve(double alpha, double phi);

/// dF/dalpha = -2 log2|tan a| sin 2a - 2 log2|tan(a-phi)| sin 2(a-phi).
double entropy_sum_curve_derivative(double alpha, double phi);

/// d^2F/dalpha^2 at alpha = phi/2: -(8/ln 2) [1 + cos phi ln tan(phi/2)].
double curvature_at_midpoint(double phi);

/// Root of 1 + cos(phi) ln tan(phi/2) on (0, pi/4]; computed once.
double critical_angle();

enum class Branch { ClosedForm, NumericMin };
const char* to_string(Branch b) noexcept;

struct QubitBoundResult {
    double phi = 0.0;
    double value = 0.0;
    Branch branch = Branch::ClosedForm;
    double alpha_star = 0.0;
    double phi_c = 0.0;
    double closed_form = 0.0;  // 2 h(cos^2(phi/2))
    double numeric_min = 0.0;  // min over alpha in [0, pi/2] of F
};

/// Minimum of H(A)+H(B) for the canonical qubit pair at angle phi in [0, pi/4]:
/// min[2h(cos^2(phi/2)), min_alpha F(alpha)].
QubitBoundResult qubit_bound(double phi);

/// Minimum of F over [0, pi/2] by a 1e5-point grid and golden-section refinement.
struct CurveMin {
    double alpha = 0.0;
    double value = 0.0;
};
CurveMin minimize_entropy_sum_curve(double phi);

/// Largest ||U x||_{s'} / ||x||_s over real x = (cos a, sin a), a in [0, pi/2],
/// for U = rotation(phi).
double real_norm_max(double phi, double s);

struct RealReductionCheck {
    bool passed = false;
    double real_max = 0.0;
    double worst_ratio = 0.0;     // largest ratio over the complex samples
    AmplitudeVector worst_state;
};

/// Samples complex qubit states and checks none beats the real-state maximum
/// of the Hoelder ratio by more than 1e-9.
RealReductionCheck real_reduction_check(double phi, double s, std::uint64_t n_samples, std::uint64_t rng_seed);

/// Dense Bloch-sphere search for min over psi of H_{alpha_a}(|psi|^2) +
/// H_{alpha_b}(|U psi|^2), U any 2x2 unitary. Grid then iterative zoom.
struct GridMin {
    double value = 0.0;
    AmplitudeVector state;
};
GridMin grid_min_entropy_sum(const OverlapUnitary& u, double alpha_a, double alpha_b, int grid = 400);

/// Monte-Carlo min of H(A)+H(B) over n Haar qubit states for rotation(phi).
double montecarlo_qubit_min(double phi, std::uint64_t n_states, std::uint64_t rng_seed);

} // namespace entrobound::qubit
