#include "entrobound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "entrobound/entropy.hpp"
#include "entrobound/error.hpp"

namespace entrobound {

double maassen_uffink(const OverlapUnitary& u) { return -2.0 * std::log2(u.max_overlap()); }

double error_amplification(double s) { return 2.0 * s / ((2.0 - s) * std::numbers::ln2); }

TightBound tight_bound(const OverlapUnitary& u, const NpimConfig& config, double max_s) {
    config.validate();
    if (config.s > max_s)
        throw Error(ErrorKind::OutOfRange,
                    "s=" + std::to_string(config.s) + " exceeds the limit 2-delta=" + std::to_string(max_s) +
                        "; norm errors are amplified by " + std::to_string(error_amplification(config.s)) +
                        " bits per unit relative error. Lower s or raise the limit explicitly.");
    TightBound out;
    out.estimate = npim_norm(u, config);
    out.gamma = bound_from_norm(config.s, out.estimate.value);
    return out;
}

RenyiBoundPair renyi_bound_pair(const OverlapUnitary& u, const NpimConfig& config, double max_s) {
    auto tb = tight_bound(u, config, max_s);
    const HolderPair s = config.holder();
    return {s.s() / 2.0, s.conj() / 2.0, tb.gamma, std::move(tb.estimate)};
}

double norm_one_to_inf(const OverlapUnitary& u) {
    const std::size_t d = u.dim();
    double entry_max = -1.0;
    std::size_t col = 0;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            if (std::abs(u(j, i)) > entry_max) {
                entry_max = std::abs(u(j, i));
                col = i;
            }
    const auto image = apply(u, AmplitudeVector::basis(d, col));
    const double via_basis = lp_norm(image, std::numeric_limits<double>::infinity());
    if (std::abs(via_basis - entry_max) > 1e-12)
        throw std::logic_error("||U||_{1->inf}: entry max " + std::to_string(entry_max) + " != ||U e||_inf " +
                               std::to_string(via_basis));
    return entry_max;
}

EigenstateBaseline eigenstate_baseline(const OverlapUnitary& u) {
    const std::size_t d = u.dim();
    std::vector<double> p(d);
    EigenstateBaseline best{std::numeric_limits<double>::infinity(), EigenBasis::A, 0};
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) p[j] = std::norm(u(j, i));
        const double h = shannon_unchecked(p);
        if (h < best.value) best = {h, EigenBasis::A, i};
    }
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) p[i] = std::norm(u(j, i));
        const double h = shannon_unchecked(p);
        if (h < best.value) best = {h, EigenBasis::B, j};
    }
    return best;
}

namespace {

void check_orders(double alpha_a, double alpha_b) {
    if (!(alpha_a > 0.0 && alpha_b > 0.0)) throw Error(ErrorKind::InvalidExponent, "Renyi orders must be > 0");
}

struct EntropyScratch {
    explicit EntropyScratch(std::size_t d) : psi(d), image(d), pa(d), pb(d) {}
    std::vector<Complex> psi, image;
    std::vector<double> pa, pb;

    double evaluate(const ComplexMatrix& m, double alpha_a, double alpha_b) {
        apply_into(m, psi, image);
        for (std::size_t k = 0; k < psi.size(); ++k) {
            pa[k] = std::norm(psi[k]);
            pb[k] = std::norm(image[k]);
        }
        return renyi_unchecked(pa, alpha_a) + renyi_unchecked(pb, alpha_b);
    }
};

struct EntropyBlock {
    double value = std::numeric_limits<double>::infinity();
    std::uint64_t index = 0;
    std::vector<Complex> state;
};

EntropyBlock entropy_block(const OverlapUnitary& u, double alpha_a, double alpha_b, std::uint64_t root,
                           std::uint64_t block, std::uint64_t n_states) {
    EntropyScratch scratch(u.dim());
    RngStream rng(root, block);
    EntropyBlock best;
    const std::uint64_t begin = block * kMonteCarloBlock;
    const std::uint64_t end = std::min(n_states, begin + kMonteCarloBlock);
    for (std::uint64_t i = begin; i < end; ++i) {
        haar_state_into(scratch.psi, rng);
        const double h = scratch.evaluate(u.matrix(), alpha_a, alpha_b);
        if (h < best.value) {
            best.value = h;
            best.index = i;
            best.state = scratch.psi;
        }
    }
    return best;
}

MonteCarloEntropy to_result(EntropyBlock b) {
    return {b.value, AmplitudeVector(std::move(b.state)), b.index};
}

} // namespace

double entropy_sum(const OverlapUnitary& u, const AmplitudeVector& psi, double alpha_a, double alpha_b) {
    check_orders(alpha_a, alpha_b);
    if (psi.dim() != u.dim()) throw Error(ErrorKind::DimensionMismatch, "state dimension != matrix dimension");
    if (!psi.is_state()) throw Error(ErrorKind::InvalidArgument, "entropy_sum needs a unit vector");
    EntropyScratch scratch(u.dim());
    std::copy(psi.entries().begin(), psi.entries().end(), scratch.psi.begin());
    return scratch.evaluate(u.matrix(), alpha_a, alpha_b);
}

MonteCarloEntropy montecarlo_min_entropy(const OverlapUnitary& u, double alpha_a, double alpha_b,
                                         std::uint64_t n_states, std::uint64_t rng_seed) {
    check_orders(alpha_a, alpha_b);
    if (n_states < 1) throw Error(ErrorKind::InvalidArgument, "n_states must be >= 1");
    const std::uint64_t root = domain_root(rng_seed, StreamDomain::MonteCarloEntropy);
    const std::uint64_t n_blocks = (n_states + kMonteCarloBlock - 1) / kMonteCarloBlock;
    std::vector<EntropyBlock> blocks(n_blocks);

#pragma omp parallel for schedule(dynamic, 1)
    for (long long b = 0; b < static_cast<long long>(n_blocks); ++b)
        blocks[static_cast<std::size_t>(b)] =
            entropy_block(u, alpha_a, alpha_b, root, static_cast<std::uint64_t>(b), n_states);

    std::size_t winner = 0;
    for (std::size_t b = 1; b < blocks.size(); ++b)
        if (blocks[b].value < blocks[winner].value) winner = b;
    return to_result(std::move(blocks[winner]));
}

MonteCarloEntropy montecarlo_min_entropy_serial(const OverlapUnitary& u, double alpha_a, double alpha_b,
                                                std::uint64_t n_states, std::uint64_t rng_seed) {
    check_orders(alpha_a, alpha_b);
    if (n_states < 1) throw Error(ErrorKind::InvalidArgument, "n_states must be >= 1");
    const std::uint64_t root = domain_root(rng_seed, StreamDomain::MonteCarloEntropy);
    EntropyScratch scratch(u.dim());
    EntropyBlock best;
    RngStream rng(root, 0);
    for (std::uint64_t i = 0; i < n_states; ++i) {
        if (i % kMonteCarloBlock == 0) rng = RngStream(root, i / kMonteCarloBlock);
        haar_state_into(scratch.psi, rng);
        const double h = scratch.evaluate(u.matrix(), alpha_a, alpha_b);
        if (h < best.value) {
            best.value = h;
            best.index = i;
            best.state = scratch.psi;
        }
    }
    return to_result(std::move(best));
}

BoundReport build_report(const OverlapUnitary& u, const NpimConfig& config, std::uint64_t mc_states,
                         std::uint64_t mc_seed, double max_s) {
    auto tb = tight_bound(u, config, max_s);
    BoundReport r;
    r.dim = u.dim();
    r.s = config.s;
    r.mu_bound = maassen_uffink(u);
    r.gamma_s = tb.gamma;
    r.eigenstate_baseline = eigenstate_baseline(u).value;
    r.certified = tb.estimate.certified;
    r.config = config;
    r.error_amplification = error_amplification(config.s);
    r.estimate = std::move(tb.estimate);
    if (mc_states > 0) {
        r.montecarlo = montecarlo_min_entropy(u, 1.0, 1.0, mc_states, mc_seed);
        r.montecarlo_min = r.montecarlo->value;
        r.montecarlo_seed = mc_seed;
        r.montecarlo_states = mc_states;
    }
    return r;
}

std::uint64_t sweep_unitary_seed(std::uint64_t rng_seed, std::size_t dim) {
    return derive_seed(domain_root(rng_seed, StreamDomain::UnitarySweep), dim);
}

std::vector<BoundReport> dimension_sweep(std::span<const std::size_t> dims, const NpimConfig& config,
                                         std::uint64_t mc_states, double max_s) {
    for (auto d : dims)
        if (d < 2) throw Error(ErrorKind::InvalidDimension, "dimension sweep needs every d >= 2");
    std::vector<BoundReport> rows;
    rows.reserve(dims.size());
    // Each report already runs its seeds in parallel; dims are processed in order.
    for (auto d : dims) {
        const auto useed = sweep_unitary_seed(config.rng_seed, d);
        auto report = build_report(haar_unitary(d, useed), config, mc_states, config.rng_seed, max_s);
        report.unitary_seed = useed;
        rows.push_back(std::move(report));
    }
    return rows;
}

} // namespace entrobound
