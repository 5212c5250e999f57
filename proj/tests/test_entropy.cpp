#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "entrobound/entropy.hpp"
#include "entrobound/error.hpp"
#include "entrobound/random.hpp"
#include "oracles.hpp"

using namespace entrobound;

TEST(Shannon, Examples) {
    EXPECT_NEAR(shannon(ProbabilityVector({0.5, 0.5})), 1.0, 1e-15);
    EXPECT_NEAR(shannon(ProbabilityVector({0.75, 0.25})), oracle::kH34, 1e-14);
    EXPECT_EQ(shannon(ProbabilityVector({1.0, 0.0, 0.0})), 0.0);
    EXPECT_NEAR(shannon(ProbabilityVector({0.25, 0.25, 0.25, 0.25})), 2.0, 1e-15);
}

TEST(Shannon, Bounds) {
    RngStream rng(5);
    for (int k = 0; k < 200; ++k) {
        const std::size_t d = 2 + k % 7;
        const auto p = ProbabilityVector::from_amplitudes(haar_state(d, rng));
        const double h = shannon(p);
        EXPECT_GE(h, 0.0);
        EXPECT_LE(h, std::log2(double(d)) + 1e-12);
    }
}

TEST(Renyi, Examples) {
    EXPECT_NEAR(renyi(ProbabilityVector({0.75, 0.25}), 2.0), oracle::kRenyi2Of34, 1e-14);
    EXPECT_NEAR(renyi(ProbabilityVector({0.9, 0.1}), 0.75), oracle::kRenyi075Of0901, 1e-14);
    EXPECT_NEAR(renyi(ProbabilityVector({0.5, 0.5}), 3.0), 1.0, 1e-14);
    EXPECT_NEAR(renyi(ProbabilityVector({0.75, 0.25}), 1.0), oracle::kH34, 1e-14);
}

TEST(Renyi, ContinuousAtOrderOne) {
    const ProbabilityVector p({0.6, 0.3, 0.1});
    const double h = shannon(p);
    EXPECT_NEAR(renyi(p, 1.0 + 1e-6), h, 1e-5);
    EXPECT_NEAR(renyi(p, 1.0 - 1e-6), h, 1e-5);
}

TEST(Renyi, NonincreasingInOrder) {
    RngStream rng(17);
    for (int k = 0; k < 100; ++k) {
        const auto p = ProbabilityVector::from_amplitudes(haar_state(4, rng));
        double prev = renyi(p, 0.3);
        for (double a = 0.4; a < 4.0; a += 0.1) {
            const double cur = renyi(p, a);
            EXPECT_LE(cur, prev + 1e-12);
            prev = cur;
        }
    }
}

TEST(Renyi, RejectsNonPositiveOrder) {
    EXPECT_THROW(renyi(ProbabilityVector({1.0}), 0.0), Error);
    EXPECT_THROW(renyi(ProbabilityVector({1.0}), -1.0), Error);
}

TEST(ProbabilityVector, Validation) {
    EXPECT_THROW(ProbabilityVector({0.5, 0.4}), Error);
    EXPECT_THROW(ProbabilityVector({1.2, -0.2}), Error);
    EXPECT_THROW(ProbabilityVector({}), Error);
    EXPECT_NO_THROW(ProbabilityVector({0.5, 0.5 + 1e-12}));
}

TEST(BinaryEntropy, MatchesShannon) {
    for (double p = 0.0; p <= 1.0; p += 0.05)
        EXPECT_NEAR(binary_entropy(p), shannon(ProbabilityVector({p, 1.0 - p})), 1e-14);
    EXPECT_NEAR(binary_entropy(std::pow(std::cos(std::numbers::pi / 8), 2)), oracle::kHCos2PiOver8, 1e-14);
}

TEST(NormIdentities, MatchDirectRenyi) {
    RngStream rng(99);
    for (int k = 0; k < 1000; ++k) {
        const std::size_t d = 2 + k % 9;
        const auto a = haar_state(d, rng);
        const auto p = ProbabilityVector::from_amplitudes(a);
        for (double s : {1.1, 1.3, 1.5, 1.7, 1.9}) {
            const double sc = s / (s - 1.0);
            EXPECT_NEAR(renyi_from_norm(a, s), renyi(p, s / 2.0), 1e-10);
            EXPECT_NEAR(renyi_from_conjugate_norm(a, s), renyi(p, sc / 2.0), 1e-10);
        }
    }
}

TEST(NormIdentities, BasisStateHasZeroEntropy) {
    const auto e = AmplitudeVector::basis(5, 2);
    EXPECT_NEAR(renyi_from_norm(e, 1.4), 0.0, 1e-15);
    EXPECT_NEAR(renyi_from_conjugate_norm(e, 1.4), 0.0, 1e-15);
}

TEST(NormIdentities, RejectsNonState) {
    EXPECT_THROW(renyi_from_norm(AmplitudeVector{1.0, 1.0}, 1.5), Error);
}
