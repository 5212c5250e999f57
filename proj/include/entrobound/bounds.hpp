#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "entrobound/npim.hpp"
#include "entrobound/tensor_core.hpp"

namespace entrobound {

/// Largest s accepted by default: the prefactor 2s/(2-s) multiplies relative
/// norm error by roughly 4/(2-s) / ln 2 bits.
inline constexpr double kDefaultMaxS = 1.99;

/// -2 log2 c, c = max_{ji} |U_ji|.
double maassen_uffink(const OverlapUnitary& u);

/// Bits of gamma_s per unit relative error in the norm: 2s / ((2-s) ln 2).
double error_amplification(double s);

struct TightBound {
    double gamma = 0.0;
    NormEstimate estimate;
};

/// gamma_s = (-2s/(2-s)) log2 ||U||_{s->s'} with the norm from multi-seed NPIM.
/// Rejects s > max_s with ErrorKind::OutOfRange.
TightBound tight_bound(const OverlapUnitary& u, const NpimConfig& config, double max_s = kDefaultMaxS);

struct RenyiBoundPair {
    double alpha_a = 0.0;  // s/2
    double alpha_b = 0.0;  // s'/2
    double bound = 0.0;
    NormEstimate estimate;
};

/// Same value as tight_bound, labelled with the Rényi orders it constrains:
/// H_{s/2}(A) + H_{s'/2}(B) >= bound.
RenyiBoundPair renyi_bound_pair(const OverlapUnitary& u, const NpimConfig& config, double max_s = kDefaultMaxS);

/// ||U||_{1->inf}, evaluated both as the largest entry modulus and as
/// ||U e||_inf at the basis vector selecting that entry's column. Throws
/// std::logic_error if the two disagree beyond 1e-12.
double norm_one_to_inf(const OverlapUnitary& u);

enum class EigenBasis { A, B };

struct EigenstateBaseline {
    double value = 0.0;
    EigenBasis basis = EigenBasis::A;
    std::size_t index = 0;
};

/// Smallest H(A)+H(B) over eigenstates of either observable: an eigenstate
/// |a_i> scores the Shannon entropy of column i, |b_j> that of row j.
/// Ties go to the lowest index, columns before rows.
EigenstateBaseline eigenstate_baseline(const OverlapUnitary& u);

struct MonteCarloEntropy {
    double value = 0.0;
    AmplitudeVector best_state;
    std::uint64_t best_index = 0;
};

/// min over n Haar states of H_{alpha_a}(|psi|^2) + H_{alpha_b}(|U psi|^2).
MonteCarloEntropy montecarlo_min_entropy(const OverlapUnitary& u, double alpha_a, double alpha_b,
                                         std::uint64_t n_states, std::uint64_t rng_seed);
MonteCarloEntropy montecarlo_min_entropy_serial(const OverlapUnitary& u, double alpha_a, double alpha_b,
                                                std::uint64_t n_states, std::uint64_t rng_seed);

/// H_{alpha_a}(|psi|^2) + H_{alpha_b}(|U psi|^2) for one state.
double entropy_sum(const OverlapUnitary& u, const AmplitudeVector& psi, double alpha_a, double alpha_b);

struct BoundReport {
    std::size_t dim = 0;
    double s = 0.0;
    double mu_bound = 0.0;
    double gamma_s = 0.0;
    double eigenstate_baseline = 0.0;
    std::optional<double> montecarlo_min;
    bool certified = false;
    NpimConfig config;
    /// Seed used to generate U, when it was generated.
    std::optional<std::uint64_t> unitary_seed;
    std::uint64_t montecarlo_seed = 0;
    std::uint64_t montecarlo_states = 0;
    double error_amplification = 0.0;
    NormEstimate estimate;
    std::optional<MonteCarloEntropy> montecarlo;
};

/// Everything reported for one U. `mc_states == 0` skips the Monte-Carlo
/// Shannon minimum.
BoundReport build_report(const OverlapUnitary& u, const NpimConfig& config, std::uint64_t mc_states = 0,
                         std::uint64_t mc_seed = 0, double max_s = kDefaultMaxS);

/// One fresh Haar unitary per d, seeded from (config.rng_seed, d).
std::uint64_t sweep_unitary_seed(std::uint64_t rng_seed, std::size_t dim);
std::vector<BoundReport> dimension_sweep(std::span<const std::size_t> dims, const NpimConfig& config,
                                         std::uint64_t mc_states = 0, double max_s = kDefaultMaxS);

} // namespace entrobound
