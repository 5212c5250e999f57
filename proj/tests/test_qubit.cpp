#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "entrobound/bounds.hpp"
#include "entrobound/qubit.hpp"
#include "oracles.hpp"

using namespace entrobound;
using namespace entrobound::qubit;

TEST(CriticalAngle, MatchesFrozenRoot) {
    const double pc = critical_angle();
    EXPECT_NEAR(pc, oracle::kCriticalAngle, 1e-12);
    EXPECT_NEAR(1.0 + std::cos(pc) * std::log(std::tan(pc / 2.0)), 0.0, 1e-12);
}

TEST(Curvature, ChangesSignAtCriticalAngle) {
    const double pc = critical_angle();
    EXPECT_GT(curvature_at_midpoint(pc - 0.01), 0.0);
    EXPECT_LT(curvature_at_midpoint(pc + 0.01), 0.0);
}

TEST(EntropySumCurve, MidpointIsStationary) {
    for (double phi : {0.1, 0.4, 0.7}) EXPECT_NEAR(entropy_sum_curve_derivative(phi / 2.0, phi), 0.0, 1e-12);
    EXPECT_NEAR(entropy_sum_curve(std::numbers::pi / 8, std::numbers::pi / 4), oracle::kTwoHCos2PiOver8, 1e-14);
}

TEST(EntropySumCurve, DerivativeMatchesFiniteDifference) {
    const double phi = 0.5;
    for (double a : {0.1, 0.3, 0.9, 1.3}) {
        const double h = 1e-6;
        const double fd = (entropy_sum_curve(a + h, phi) - entropy_sum_curve(a - h, phi)) / (2 * h);
        EXPECT_NEAR(entropy_sum_curve_derivative(a, phi), fd, 1e-6);
    }
}

TEST(QubitBound, ClosedFormBelowCriticalAngle) {
    const auto r = qubit_bound(0.4);
    EXPECT_EQ(r.branch, Branch::ClosedForm);
    EXPECT_EQ(r.value, r.closed_form);
    EXPECT_NEAR(qubit_bound(0.4).value, oracle::kTwoHCos2Point2, 1e-14);
    EXPECT_NEAR(r.value, oracle::qubit_curve_grid_min(0.4), 1e-9);
}

TEST(QubitBound, NumericAboveCriticalAngle) {
    for (double phi : {0.65, 0.7, std::numbers::pi / 4}) {
        const auto r = qubit_bound(phi);
        EXPECT_EQ(r.branch, Branch::NumericMin);
        EXPECT_LT(r.value, r.closed_form);
        EXPECT_NEAR(r.value, oracle::qubit_curve_grid_min(phi), 1e-9);
        EXPECT_LE(r.value, 1.0 + 1e-12);
    }
    // At pi/4 the minimum sits on a basis state: H = 0 + 1.
    EXPECT_NEAR(qubit_bound(std::numbers::pi / 4).value, 1.0, 1e-10);
}

TEST(QubitBound, AsymmetricMinimizerAboveCriticalAngle) {
    const auto r = qubit_bound(0.7);
    EXPECT_GT(std::abs(r.alpha_star - 0.35), 1e-3);
}

TEST(QubitBound, ZeroAngle) {
    const auto r = qubit_bound(0.0);
    EXPECT_EQ(r.value, 0.0);
}

TEST(QubitBound, AboveMaassenUffink) {
    for (double phi = 0.05; phi < 0.78; phi += 0.05) {
        const double mu = -2.0 * std::log2(std::cos(phi));
        EXPECT_GE(qubit_bound(phi).value, mu - 1e-12);
    }
}

TEST(CanonicalPhi, Examples) {
    EXPECT_NEAR(canonical_phi(rotation_unitary(0.3)).phi, 0.3, 1e-12);
    EXPECT_TRUE(canonical_phi(OverlapUnitary(ComplexMatrix::identity(2))).compatible);
    EXPECT_NEAR(canonical_phi(fourier_unitary(2)).phi, std::numbers::pi / 4, 1e-12);
    EXPECT_FALSE(canonical_phi(fourier_unitary(2)).compatible);
}

TEST(RealReduction, ComplexStatesDoNotBeatRealMaximum) {
    for (double phi : {0.3, std::numbers::pi / 4}) {
        const auto chk = real_reduction_check(phi, 1.6, 20'000, 7);
        EXPECT_TRUE(chk.passed) << chk.worst_ratio << " vs " << chk.real_max;
        EXPECT_NEAR(chk.real_max, oracle::rotation_norm_grid(phi, 1.6), 1e-9);
    }
}

TEST(GridMin, MatchesShannonCurveMinimum) {
    for (double phi : {0.3, 0.7}) {
        const auto g = grid_min_entropy_sum(rotation_unitary(phi), 1.0, 1.0);
        EXPECT_NEAR(g.value, qubit_bound(phi).value, 1e-8);
    }
}

TEST(MonteCarloQubit, AboveBoundAndClose) {
    const double phi = 0.5;
    const double mc = montecarlo_qubit_min(phi, 100'000, 1);
    const double b = qubit_bound(phi).value;
    EXPECT_GE(mc, b - 1e-12);
    EXPECT_LT(mc - b, 5e-3);
}
