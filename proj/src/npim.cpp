#include "entrobound/npim.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

// out_j = in_j |in_j|^power, scaled by a positive constant so the largest
// modulus is one before exponentiation. The constant is absorbed by the
// s-normalization of the next step.
void power_rescale(std::span<const Complex> in, std::span<Complex> out, double power) {
    double m = 0.0;
    for (const auto& z : in) m = std::max(m, std::abs(z));
    if (m == 0.0) {
        std::fill(out.begin(), out.end(), Complex{});
        return;
    }
    for (std::size_t j = 0; j < in.size(); ++j) {
        const Complex z = in[j] / m;
        const double r = std::abs(z);
        out[j] = r > 0.0 ? z * std::pow(r, power) : Complex{};
    }
}

void normalize_in_place(std::span<Complex> v, double p) {
    const double n = lp_norm(v, p);
    if (n == 0.0) throw Error(ErrorKind::ZeroVector, "NPIM iterate collapsed to zero");
    if (!std::isfinite(n)) throw Error(ErrorKind::NonFinite, "NPIM iterate norm is not finite");
    for (auto& z : v) z /= n;
}

AmplitudeVector seed_state_for(std::size_t dim, std::uint64_t root, std::size_t k,
                               std::span<const AmplitudeVector> extras, std::size_t n_random) {
    if (k < n_random) {
        RngStream rng(root, k);
        return haar_state(dim, rng);
    }
    return extras[k - n_random];
}

NormEstimate finalize(const OverlapUnitary& u, const NpimConfig& config, std::vector<NpimRun>& runs) {
    NormEstimate est;
    est.config = config;
    est.per_seed.reserve(runs.size());
    bool found = false;
    double best_unconverged = 0.0;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        const NpimRun& run = runs[k];
        est.per_seed.push_back({run.norm, run.iterations, run.converged});
        est.max_descent = std::max(est.max_descent, run.max_descent);
        if (!run.converged) {
            best_unconverged = std::max(best_unconverged, run.norm);
            continue;
        }
        // Strict comparison keeps the lowest seed index on ties.
        if (!found || run.norm > est.value) {
            est.value = run.norm;
            est.argmax_seed = k;
            found = true;
        }
    }
    if (!found) {
        std::ostringstream msg;
        msg << "none of " << runs.size() << " NPIM seeds converged within " << config.max_iterations
            << " iterations (epsilon " << config.epsilon << ", s " << config.s
            << "); best unconverged norm " << best_unconverged;
        throw Error(ErrorKind::NonConvergence, msg.str());
    }
    est.argmax_state = std::move(runs[est.argmax_seed].state);

    const auto bracket = norm_bracket(u, config.holder());
    est.bracket_lower = bracket.lower;
    est.bracket_upper = bracket.upper;
    est.certified = std::abs(bracket.upper - est.value) <= kCertifyTol &&
                    std::abs(est.value - bracket.lower) <= kCertifyTol;
    return est;
}

void check_extras(const OverlapUnitary& u, std::span<const AmplitudeVector> extras) {
    for (const auto& e : extras)
        if (e.dim() != u.dim()) throw Error(ErrorKind::DimensionMismatch, "extra NPIM seed has wrong dimension");
}

} // namespace

void NpimConfig::validate() const {
    (void)holder();
    if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidArgument, "epsilon must be > 0");
    if (max_iterations < 1) throw Error(ErrorKind::InvalidArgument, "max_iterations must be >= 1");
    if (n_seeds < 1) throw Error(ErrorKind::InvalidArgument, "n_seeds must be >= 1");
}

double bound_from_norm(double s, double norm) { return (-2.0 * s / (2.0 - s)) * std::log2(norm); }

double holder_ratio(const OverlapUnitary& u, const HolderPair& s, std::span<const Complex> v) {
    std::vector<Complex> w(u.dim());
    apply_into(u.matrix(), v, w);
    return lp_norm(w, s.conj()) / lp_norm(v, s.s());
}

NpimRun npim_single_run(const OverlapUnitary& u, const HolderPair& s, const AmplitudeVector& seed_state,
                        double epsilon, int max_iterations, bool record_history) {
    const std::size_t d = u.dim();
    if (seed_state.dim() != d) throw Error(ErrorKind::DimensionMismatch, "seed state dimension != matrix dimension");
    if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidArgument, "epsilon must be > 0");
    if (max_iterations < 1) throw Error(ErrorKind::InvalidArgument, "max_iterations must be >= 1");
    for (const auto& z : seed_state.entries())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error(ErrorKind::NonFinite, "seed state has non-finite entries");
    if (lp_norm(seed_state, 2.0) == 0.0) throw Error(ErrorKind::ZeroVector, "NPIM seed is the zero vector");

    const double sp = s.conj();
    const double power = sp - 2.0;
    const auto& m = u.matrix();

    std::vector<Complex> v(seed_state.entries().begin(), seed_state.entries().end());
    std::vector<Complex> w(d), x(d), y(d);

    NpimRun run;
    normalize_in_place(v, s.s());
    apply_into(m, v, w);
    double current = lp_norm(w, sp);
    if (!std::isfinite(current)) throw Error(ErrorKind::NonFinite, "NPIM norm is not finite");
    if (record_history) run.history.push_back(current);

    for (int k = 1; k <= max_iterations; ++k) {
        power_rescale(w, x, power);
        adjoint_apply_into(m, x, y);
        power_rescale(y, v, power);
        normalize_in_place(v, s.s());
        apply_into(m, v, w);
        const double next = lp_norm(w, sp);
        if (!std::isfinite(next)) throw Error(ErrorKind::NonFinite, "NPIM norm is not finite");
        if (record_history) run.history.push_back(next);

        run.max_descent = std::max(run.max_descent, current - next);
        run.iterations = k;
        const double change = std::abs(next - current);
        current = next;
        if (change < epsilon) {
            run.converged = true;
            break;
        }
    }
    run.norm = current;
    run.state = AmplitudeVector(std::move(v));
    return run;
}

NormEstimate npim_norm(const OverlapUnitary& u, const NpimConfig& config,
                       std::span<const AmplitudeVector> extra_seeds) {
    config.validate();
    check_extras(u, extra_seeds);
    const HolderPair s = config.holder();
    const auto n_random = static_cast<std::size_t>(config.n_seeds);
    const std::size_t total = n_random + extra_seeds.size();
    const std::uint64_t root = domain_root(config.rng_seed, StreamDomain::NpimSeeds);

    std::vector<NpimRun> runs(total);
    std::vector<std::exception_ptr> failures(total);

#pragma omp parallel for schedule(dynamic, 4)
    for (long long k = 0; k < static_cast<long long>(total); ++k) {
        const auto idx = static_cast<std::size_t>(k);
        try {
            const auto seed = seed_state_for(u.dim(), root, idx, extra_seeds, n_random);
            runs[idx] = npim_single_run(u, s, seed, config.epsilon, config.max_iterations);
        } catch (...) {
            failures[idx] = std::current_exception();
        }
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    return finalize(u, config, runs);
}

NormEstimate npim_norm_serial(const OverlapUnitary& u, const NpimConfig& config,
                              std::span<const AmplitudeVector> extra_seeds) {
    config.validate();
    check_extras(u, extra_seeds);
    const HolderPair s = config.holder();
    const auto n_random = static_cast<std::size_t>(config.n_seeds);
    const std::uint64_t root = domain_root(config.rng_seed, StreamDomain::NpimSeeds);

    std::vector<NpimRun> runs;
    runs.reserve(n_random + extra_seeds.size());
    for (std::size_t k = 0; k < n_random + extra_seeds.size(); ++k) {
        const auto seed = seed_state_for(u.dim(), root, k, extra_seeds, n_random);
        runs.push_back(npim_single_run(u, s, seed, config.epsilon, config.max_iterations));
    }
    return finalize(u, config, runs);
}

NormBracket norm_bracket(const OverlapUnitary& u, const HolderPair& s) {
    const std::size_t d = u.dim();
    NormBracket b;
    std::vector<Complex> col(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) col[j] = u(j, i);
        b.lower = std::max(b.lower, lp_norm(col, s.conj()));
    }
    b.upper = std::pow(u.max_overlap(), (2.0 - s.s()) / s.s());
    return b;
}

namespace {

struct BlockBest {
    double value = -1.0;
    std::uint64_t index = 0;
    std::vector<Complex> state;
};

BlockBest scan_block(const OverlapUnitary& u, const HolderPair& s, std::uint64_t root, std::uint64_t block,
                     std::uint64_t n_states) {
    const std::size_t d = u.dim();
    const std::uint64_t begin = block * kMonteCarloBlock;
    const std::uint64_t end = std::min(n_states, begin + kMonteCarloBlock);
    RngStream rng(root, block);
    std::vector<Complex> psi(d), image(d);
    BlockBest best;
    for (std::uint64_t i = begin; i < end; ++i) {
        haar_state_into(psi, rng);
        apply_into(u.matrix(), psi, image);
        const double ratio = lp_norm(image, s.conj()) / lp_norm(psi, s.s());
        if (ratio > best.value) {
            best.value = ratio;
            best.index = i;
            best.state = psi;
        }
    }
    return best;
}

MonteCarloNorm to_result(BlockBest best) {
    MonteCarloNorm out;
    out.value = best.value;
    out.argmax_index = best.index;
    out.argmax_state = AmplitudeVector(std::move(best.state));
    return out;
}

} // namespace

MonteCarloNorm montecarlo_norm(const OverlapUnitary& u, const HolderPair& s, std::uint64_t n_states,
                               std::uint64_t rng_seed) {
    if (n_states < 1) throw Error(ErrorKind::InvalidArgument, "n_states must be >= 1");
    const std::uint64_t root = domain_root(rng_seed, StreamDomain::MonteCarloNorm);
    const std::uint64_t n_blocks = (n_states + kMonteCarloBlock - 1) / kMonteCarloBlock;
    std::vector<BlockBest> blocks(n_blocks);

#pragma omp parallel for schedule(dynamic, 1)
    for (long long b = 0; b < static_cast<long long>(n_blocks); ++b)
        blocks[static_cast<std::size_t>(b)] = scan_block(u, s, root, static_cast<std::uint64_t>(b), n_states);

    std::size_t winner = 0;
    for (std::size_t b = 1; b < blocks.size(); ++b)
        if (blocks[b].value > blocks[winner].value) winner = b;
    return to_result(std::move(blocks[winner]));
}

MonteCarloNorm montecarlo_norm_serial(const OverlapUnitary& u, const HolderPair& s, std::uint64_t n_states,
                                      std::uint64_t rng_seed) {
    if (n_states < 1) throw Error(ErrorKind::InvalidArgument, "n_states must be >= 1");
    const std::size_t d = u.dim();
    const std::uint64_t root = domain_root(rng_seed, StreamDomain::MonteCarloNorm);
    std::vector<Complex> psi(d), image(d);
    BlockBest best;
    RngStream rng(root, 0);
    for (std::uint64_t i = 0; i < n_states; ++i) {
        if (i % kMonteCarloBlock == 0) rng = RngStream(root, i / kMonteCarloBlock);
        haar_state_into(psi, rng);
        apply_into(u.matrix(), psi, image);
        const double ratio = lp_norm(image, s.conj()) / lp_norm(psi, s.s());
        if (ratio > best.value) {
            best.value = ratio;
            best.index = i;
            best.state = psi;
        }
    }
    return to_result(std::move(best));
}

PolishedMonteCarlo polish_montecarlo(const OverlapUnitary& u, const NpimConfig& config, std::uint64_t n_states,
                                     std::uint64_t rng_seed) {
    config.validate();
    PolishedMonteCarlo out;
    out.raw = montecarlo_norm(u, config.holder(), n_states, rng_seed);
    out.polished = npim_single_run(u, config.holder(), out.raw.argmax_state, config.epsilon, config.max_iterations);
    return out;
}

StabilityScan stability_scan(const OverlapUnitary& u, std::span<const double> s_grid, const NpimConfig& config,
                             double jump_threshold) {
    StabilityScan scan;
    scan.points.reserve(s_grid.size());
    for (double s : s_grid) {
        NpimConfig c = config;
        c.s = s;
        const auto est = npim_norm(u, c);
        scan.points.push_back({s, est.value, bound_from_norm(s, est.value), est.certified});
    }
    for (std::size_t k = 1; k < scan.points.size(); ++k) {
        const auto& a = scan.points[k - 1];
        const auto& b = scan.points[k];
        const double jump = std::abs(b.gamma - a.gamma);
        if (jump > jump_threshold) {
            std::ostringstream msg;
            msg << "bound jumps by " << jump << " bits between s=" << a.s << " and s=" << b.s
                << " (threshold " << jump_threshold << "); consider more NPIM seeds";
            scan.warnings.push_back(msg.str());
        }
    }
    return scan;
}

} // namespace entrobound
