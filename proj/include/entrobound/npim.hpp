#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "entrobound/tensor_core.hpp"

namespace entrobound {

struct NpimConfig {
    double s = 1.5;
    double epsilon = 1e-12;
    int max_iterations = 10'000;
    int n_seeds = 1'000;
    std::uint64_t rng_seed = 0;

    /// Throws InvalidArgument / InvalidExponent on a malformed config.
    void validate() const;
    [[nodiscard]] HolderPair holder() const { return HolderPair(s); }
};

/// Outcome of one nonlinear power iteration from a single seed.
struct NpimRun {
    double norm = 0.0;      // ||U v||_{s'} at the returned v
    AmplitudeVector state;  // v, normalized to ||v||_s = 1
    int iterations = 0;
    bool converged = false;
    /// Largest drop ||w^(k)|| - ||w^(k+1)|| seen; <= 0 means strictly monotone.
    double max_descent = 0.0;
    /// Per-iteration norms, filled only when requested.
    std::vector<double> history;
};

struct SeedRecord {
    double final_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Lower-estimate of ||U||_{s->s'} from many NPIM runs, with the bracket
/// [max_i ||U e_i||_{s'}, c^{(2-s)/s}] that can certify it.
struct NormEstimate {
    double value = 0.0;
    std::vector<SeedRecord> per_seed;
    AmplitudeVector argmax_state;
    std::size_t argmax_seed = 0;
    double bracket_lower = 0.0;
    double bracket_upper = 0.0;
    /// True only when both bracket ends pinch `value` within kCertifyTol.
    /// Otherwise `value` is a local-search lower estimate of the norm.
    bool certified = false;
    double max_descent = 0.0;
    NpimConfig config;
};

inline constexpr double kCertifyTol = 1e-6;
inline constexpr double kAscentTol = 1e-12;

/// (-2s/(2-s)) log2 norm: the entropy-sum bound implied by a norm value.
double bound_from_norm(double s, double norm);

/// ||U v||_{s'} / ||v||_s.
double holder_ratio(const OverlapUnitary& u, const HolderPair& s, std::span<const Complex> v);

/// Runs the nonlinear power iteration from `seed_state`:
///   v = u/||u||_s, w = U v, x_j = w_j |w_j|^{s'-2}, y = U^dagger x,
///   z_j = y_j |y_j|^{s'-2}, next u = z,
/// stopping once successive ||w||_{s'} differ by less than epsilon.
NpimRun npim_single_run(const OverlapUnitary& u, const HolderPair& s, const AmplitudeVector& seed_state,
                        double epsilon, int max_iterations, bool record_history = false);

/// Multi-seed NPIM. Seed k is haar_state drawn from stream (config.rng_seed, k);
/// `extra_seeds` are appended after the random ones (used for polishing).
/// Seeds run in parallel under OpenMP; aggregation is order independent.
/// Throws ErrorKind::NonConvergence if no seed converges.
NormEstimate npim_norm(const OverlapUnitary& u, const NpimConfig& config,
                       std::span<const AmplitudeVector> extra_seeds = {});

/// Single-threaded reference for npim_norm; results must match bit for bit.
NormEstimate npim_norm_serial(const OverlapUnitary& u, const NpimConfig& config,
                              std::span<const AmplitudeVector> extra_seeds = {});

/// Feasible-point lower bound max_i ||U e_i||_{s'} and the interpolation
/// upper bound c^{(2-s)/s}.
struct NormBracket {
    double lower = 0.0;
    double upper = 0.0;
};
NormBracket norm_bracket(const OverlapUnitary& u, const HolderPair& s);

struct MonteCarloNorm {
    double value = 0.0;
    AmplitudeVector argmax_state;
    std::uint64_t argmax_index = 0;
};

/// Max of ||U psi||_{s'}/||psi||_s over n Haar-random states.
MonteCarloNorm montecarlo_norm(const OverlapUnitary& u, const HolderPair& s, std::uint64_t n_states,
                               std::uint64_t rng_seed);
MonteCarloNorm montecarlo_norm_serial(const OverlapUnitary& u, const HolderPair& s, std::uint64_t n_states,
                                      std::uint64_t rng_seed);

/// Monte-Carlo argmax refined by one NPIM run started there.
struct PolishedMonteCarlo {
    MonteCarloNorm raw;
    NpimRun polished;
};
PolishedMonteCarlo polish_montecarlo(const OverlapUnitary& u, const NpimConfig& config, std::uint64_t n_states,
                                     std::uint64_t rng_seed);

/// Samples are drawn in fixed-size blocks, each from its own stream, so the
/// parallel and serial paths visit identical states.
inline constexpr std::uint64_t kMonteCarloBlock = 4096;

struct StabilityPoint {
    double s = 0.0;
    double norm = 0.0;
    double gamma = 0.0;
    bool certified = false;
};

struct StabilityScan {
    std::vector<StabilityPoint> points;
    std::vector<std::string> warnings;
};

/// Norm estimates across an s grid; warns when adjacent bound values
/// (-2s/(2-s)) log2 norm differ by more than `jump_threshold` bits.
StabilityScan stability_scan(const OverlapUnitary& u, std::span<const double> s_grid, const NpimConfig& config,
                             double jump_threshold = 0.2);

} // namespace entrobound
