#include <gtest/gtest.h>

#include <omp.h>

#include "entrobound/bounds.hpp"
#include "entrobound/npim.hpp"

using namespace entrobound;

namespace {

class ThreadCount {
public:
    explicit ThreadCount(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~ThreadCount() { omp_set_num_threads(saved_); }

private:
    int saved_;
};

} // namespace

TEST(Parallel, NpimMatchesSerial) {
    ThreadCount tc(4);
    NpimConfig cfg;
    cfg.s = 1.7;
    cfg.n_seeds = 128;
    cfg.rng_seed = 9;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto u = haar_unitary(5, seed);
        const auto par = npim_norm(u, cfg);
        const auto ser = npim_norm_serial(u, cfg);
        EXPECT_EQ(par.value, ser.value);
        EXPECT_EQ(par.argmax_seed, ser.argmax_seed);
        EXPECT_EQ(par.argmax_state, ser.argmax_state);
        EXPECT_EQ(par.certified, ser.certified);
        ASSERT_EQ(par.per_seed.size(), ser.per_seed.size());
        for (std::size_t k = 0; k < par.per_seed.size(); ++k) {
            EXPECT_EQ(par.per_seed[k].final_norm, ser.per_seed[k].final_norm);
            EXPECT_EQ(par.per_seed[k].iterations, ser.per_seed[k].iterations);
        }
    }
}

TEST(Parallel, NpimIndependentOfThreadCount) {
    NpimConfig cfg;
    cfg.n_seeds = 64;
    const auto u = haar_unitary(4, 77);
    double one = 0.0;
    {
        ThreadCount tc(1);
        one = npim_norm(u, cfg).value;
    }
    ThreadCount tc(3);
    EXPECT_EQ(npim_norm(u, cfg).value, one);
}

TEST(Parallel, MonteCarloNormMatchesSerial) {
    ThreadCount tc(4);
    const auto u = haar_unitary(3, 5);
    // Not a multiple of the block size, so the tail block is exercised.
    const std::uint64_t n = 3 * kMonteCarloBlock + 123;
    const auto par = montecarlo_norm(u, HolderPair(1.5), n, 11);
    const auto ser = montecarlo_norm_serial(u, HolderPair(1.5), n, 11);
    EXPECT_EQ(par.value, ser.value);
    EXPECT_EQ(par.argmax_index, ser.argmax_index);
    EXPECT_EQ(par.argmax_state, ser.argmax_state);
}

TEST(Parallel, MonteCarloEntropyMatchesSerial) {
    ThreadCount tc(4);
    const auto u = haar_unitary(4, 6);
    const std::uint64_t n = 2 * kMonteCarloBlock + 7;
    const auto par = montecarlo_min_entropy(u, 1.0, 1.0, n, 2);
    const auto ser = montecarlo_min_entropy_serial(u, 1.0, 1.0, n, 2);
    EXPECT_EQ(par.value, ser.value);
    EXPECT_EQ(par.best_index, ser.best_index);
}

TEST(Parallel, ExtraSeedsAreAppended) {
    NpimConfig cfg;
    cfg.n_seeds = 8;
    const auto u = haar_unitary(3, 4);
    const AmplitudeVector extra[] = {haar_state(3, 123)};
    const auto est = npim_norm(u, cfg, extra);
    EXPECT_EQ(est.per_seed.size(), 9u);
    EXPECT_EQ(npim_norm_serial(u, cfg, extra).value, est.value);
}
