// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "entrobound/bounds.hpp"
#include "entrobound/entropy.hpp"
#include "entrobound/npim.hpp"
#include "entrobound/qubit.hpp"
#include "entrobound/random.hpp"

using namespace entrobound;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

char buf[512];

template <typename... Args>
std::string fmt(const char* f, Args... args) {
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

NpimConfig npim(double s, int seeds = 1000, std::uint64_t rng = 0) {
    NpimConfig c;
    c.s = s;
    c.n_seeds = seeds;
    c.rng_seed = rng;
    return c;
}

// 1. -2 log2 c <= gamma_s on Haar unitaries.
Outcome mu_dominance() {
    double worst = -1e300;
    int cases = 0;
    for (std::size_t d : {2, 3, 4, 6}) {
        for (std::uint64_t k = 0; k < 20; ++k) {
            const auto u = haar_unitary(d, derive_seed(1, 100 * d + k));
            const double mu = maassen_uffink(u);
            for (double s : {1.3, 1.6, 1.9}) {
                worst = std::max(worst, mu - tight_bound(u, npim(s)).gamma);
                ++cases;
            }
        }
    }
    return {worst <= 1e-6, fmt("%d cases, max(mu - gamma) = %.3e", cases, worst)};
}

// 2. Fourier matrices: gamma_s = log2 d.
Outcome fourier_squeeze() {
    double worst = 0.0;
    for (std::size_t d = 2; d <= 5; ++d)
        for (double s : {1.3, 1.6, 1.9})
            worst = std::max(worst, std::abs(tight_bound(fourier_unitary(d), npim(s)).gamma - std::log2(double(d))));
    return {worst < 1e-3, fmt("max |gamma - log2 d| = %.3e", worst)};
}

// 3. gamma_s approaches the Shannon minimum as s -> 2.
Outcome shannon_limit() {
    double worst = 0.0;
    bool shrink = true;
    for (std::uint64_t k = 0; k < 5; ++k) {
        const auto u = haar_unitary(2, derive_seed(3, k));
        const double target = qubit::grid_min_entropy_sum(u, 1.0, 1.0).value;
        double prev = 1e300;
        for (double s : {1.9, 1.95, 1.99}) {
            const double gap = target - tight_bound(u, npim(s)).gamma;
            if (gap > prev + 1e-9) shrink = false;
            prev = gap;
        }
        worst = std::max(worst, std::abs(prev));
    }
    return {worst < 2e-2 && shrink, fmt("max |gap at s=1.99| = %.3e, gaps nonincreasing: %s", worst,
                                         shrink ? "yes" : "no")};
}

// 4. For qubits the Renyi pair bound is attained.
Outcome renyi_tightness() {
    std::vector<OverlapUnitary> us{rotation_unitary(std::numbers::pi / 6), rotation_unitary(0.7)};
    for (std::uint64_t k = 0; k < 3; ++k) us.push_back(haar_unitary(2, derive_seed(4, k)));
    double worst = 0.0;
    for (const auto& u : us)
        for (double s : {1.2, 1.5, 1.8}) {
            const auto pair = renyi_bound_pair(u, npim(s));
            const double g = qubit::grid_min_entropy_sum(u, pair.alpha_a, pair.alpha_b).value;
            worst = std::max(worst, std::abs(g - pair.bound));
        }
    return {worst < 1e-3, fmt("%zu unitaries, max |grid min - gamma| = %.3e", us.size(), worst)};
}

// 5. Critical angle of the qubit closed form.
Outcome critical_angle() {
    const double pc = qubit::critical_angle();
    const double residual = std::abs(1.0 + std::cos(pc) * std::log(std::tan(pc / 2.0)));
    return {residual < 1e-9 && pc > 0.58 && pc < 0.592, fmt("phi_c = %.12f, residual = %.2e", pc, residual)};
}

// 6. Monte-Carlo minimum over qubit states tracks the qubit bound.
Outcome qubit_curve() {
    double worst = 0.0, worst_phi = 0.0;
    bool below = false;
    std::vector<double> grid;
    for (int k = 1; 0.02 * k <= std::numbers::pi / 4; ++k) grid.push_back(0.02 * k);
    grid.push_back(std::numbers::pi / 4);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double b = qubit::qubit_bound(grid[i]).value;
        const double mc = qubit::montecarlo_qubit_min(grid[i], 100'000, derive_seed(6, i));
        if (mc < b - 1e-9) below = true;
        if (std::abs(mc - b) > worst) {
            worst = std::abs(mc - b);
            worst_phi = grid[i];
        }
    }
    return {worst < 5e-3 && !below, fmt("%zu angles, max |MC - bound| = %.3e at phi = %.2f%s", grid.size(), worst,
                                        worst_phi, below ? ", MC below bound" : "")};
}

// 7. Random sampling falls short of NPIM at d = 4.
Outcome montecarlo_gap() {
    int strictly_below = 0;
    bool polish_ok = true;
    double min_gap = 1e300;
    const auto cfg = npim(1.5);
    for (std::uint64_t k = 0; k < 5; ++k) {
        const auto u = haar_unitary(4, derive_seed(7, k));
        const double best = npim_norm(u, cfg).value;
        const auto pol = polish_montecarlo(u, cfg, 100'000, derive_seed(70, k));
        const double gap = best - pol.raw.value;
        min_gap = std::min(min_gap, gap);
        if (gap > 1e-9) ++strictly_below;
        if (pol.polished.norm > best + 1e-12) polish_ok = false;
    }
    return {strictly_below >= 4 && polish_ok,
            fmt("MC below NPIM on %d/5 (smallest gap %.3e), polished never above NPIM: %s", strictly_below, min_gap,
                polish_ok ? "yes" : "no")};
}

// 8. Dimension sweep keeps mu <= gamma <= eigenstate baseline.
Outcome dimension_chain() {
    std::vector<std::size_t> dims;
    for (std::size_t d = 2; d <= 16; ++d) dims.push_back(d);
    const auto rows = dimension_sweep(dims, npim(1.95), 0);
    // Haar rows are rarely certified, so the chain is also required on the
    // uncertified ones; otherwise this check could pass on an empty set.
    int certified = 0, holding = 0;
    bool ok = true;
    for (const auto& r : rows) {
        const bool chain = r.mu_bound <= r.gamma_s + 1e-6 && r.gamma_s <= r.eigenstate_baseline + 1e-6;
        if (chain) ++holding;
        if (r.certified) {
            ++certified;
            if (!chain) ok = false;
        }
    }
    return {ok && holding == int(rows.size()),
            fmt("chain holds on %d/%zu rows (%d certified)", holding, rows.size(), certified)};
}

// 9. Norm/entropy identities and the finite-difference limits.
Outcome identities() {
    double worst = 0.0, worst_fd = 0.0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const std::size_t d = 2 + k % 7;
        const auto a = haar_state(d, derive_seed(9, k));
        const auto p = ProbabilityVector::from_amplitudes(a);
        for (int step = 1; step <= 9; ++step) {
            const double s = 1.0 + 0.1 * step;
            const double sc = s / (s - 1.0);
            worst = std::max({worst, std::abs(renyi_from_norm(a, s) - renyi(p, s / 2.0)),
                              std::abs(renyi_from_conjugate_norm(a, s) - renyi(p, sc / 2.0))});
        }
        if (k % 10 == 0) {
            const double h = shannon(p);
            const double theta = 1.0 - 1e-5;
            for (double s : {1.2, 1.5, 1.8}) {
                const double sc = s / (s - 1.0);
                const double pt = 1.0 / ((1.0 - theta) / s + theta / 2.0);
                const double qt = 1.0 / ((1.0 - theta) / sc + theta / 2.0);
                const double kk = (2.0 - s) / (2.0 * s);
                worst_fd = std::max({worst_fd, std::abs(std::log2(lp_norm(a, pt)) / (1.0 - theta) - kk * h),
                                     std::abs(std::log2(lp_norm(a, qt)) / (1.0 - theta) + kk * h)});
            }
        }
    }
    return {worst < 1e-9 && worst_fd < 1e-3, fmt("identities max err %.2e, finite-difference max err %.2e", worst,
                                                 worst_fd)};
}

// 10. NPIM ascent, identity norm, ||U||_{1->inf} = c.
Outcome npim_mechanics() {
    double descent = -1e300;
    int runs = 0;
    for (std::size_t d : {2, 3, 5, 8}) {
        const auto u = haar_unitary(d, derive_seed(10, d));
        for (double s : {1.2, 1.6, 1.95}) {
            const HolderPair hp(s);
            RngStream rng(derive_seed(11, d), static_cast<std::uint64_t>(s * 100));
            for (int k = 0; k < 25; ++k) {
                const auto run = npim_single_run(u, hp, haar_state(d, rng), 1e-12, 10'000, true);
                for (std::size_t i = 1; i < run.history.size(); ++i)
                    descent = std::max(descent, run.history[i - 1] - run.history[i]);
                ++runs;
            }
        }
    }
    double id_err = 0.0;
    for (std::size_t d : {2, 4, 7})
        for (double s : {1.3, 1.9})
            id_err = std::max(id_err, std::abs(npim_norm(OverlapUnitary(ComplexMatrix::identity(d)), npim(s, 50)).value - 1.0));
    double one_inf = 0.0;
    bool agree = true;
    for (std::uint64_t k = 0; k < 50; ++k) {
        const auto u = haar_unitary(2 + k % 9, derive_seed(12, k));
        try {
            one_inf = std::max(one_inf, std::abs(norm_one_to_inf(u) - u.max_overlap()));
        } catch (const std::logic_error&) {
            agree = false;
        }
    }
    const bool ok = descent <= kAscentTol && id_err < 1e-9 && agree && one_inf < 1e-12;
    return {ok, fmt("%d runs, max per-step descent %.2e; identity err %.2e; |1->inf - c| %.2e", runs, descent,
                    id_err, one_inf)};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0 = no runtime limit
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "Maassen-Uffink dominance", 120, mu_dominance},
        {2, "Fourier tightness", 120, fourier_squeeze},
        {3, "Shannon limit s -> 2", 60, shannon_limit},
        {4, "Renyi tightness (qubit)", 60, renyi_tightness},
        {5, "qubit critical angle", 0, critical_angle},
        {6, "qubit curve vs Monte-Carlo", 180, qubit_curve},
        {7, "Monte-Carlo shortfall at d=4", 180, montecarlo_gap},
        {8, "dimension sweep ordering", 0, dimension_chain},
        {9, "norm/entropy identities", 30, identities},
        {10, "NPIM mechanics", 0, npim_mechanics},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.limit_s == 0 || secs < c.limit_s;
        const bool pass = o.passed && in_time;
        if (!pass) ++failures;
        std::printf("AC%-2d %s  %-30s %s [%.1fs%s]\n", c.id, pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs,
                    in_time ? "" : " over limit");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", int(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
