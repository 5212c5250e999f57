#include "entrobound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "entrobound/bounds.hpp"
#include "entrobound/entropy.hpp"
#include "entrobound/npim.hpp"
#include "entrobound/qubit.hpp"
#include "entrobound/report_io.hpp"

namespace entrobound::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(double worst, double tol) {
    std::ostringstream os;
    os.precision(3);
    os << "worst " << std::scientific << worst << " vs tol " << tol;
    return os.str();
}

class Recorder {
public:
    explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

    void add(std::string name, bool passed, std::string detail) {
        result_.checks.push_back({std::move(name), passed, std::move(detail)});
    }
    /// Passes when worst <= tol.
    void bound(std::string name, double worst, double tol) {
        add(std::move(name), worst <= tol, describe(worst, tol));
    }
    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

NpimConfig config_for(double s, const SuiteOptions& o, std::uint64_t salt = 0) {
    NpimConfig c;
    c.s = s;
    c.n_seeds = o.n_seeds;
    c.rng_seed = derive_seed(o.rng_seed, salt);
    return c;
}

OverlapUnitary permuted(const OverlapUnitary& u) {
    // Reverse the rows and rotate the columns by one.
    const std::size_t d = u.dim();
    std::vector<Complex> data(d * d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) data[j * d + i] = u(d - 1 - j, (i + 1) % d);
    return OverlapUnitary(ComplexMatrix(d, std::move(data)));
}

SuiteResult norms_suite(const SuiteOptions& o) {
    Recorder rec("norms");

    double worst_mono = 0.0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const auto v = haar_state(2 + k % 5, derive_seed(o.rng_seed, 100 + k));
        double prev = lp_norm(v, 1.0);
        for (int step = 1; step <= 15; ++step) {
            const double cur = lp_norm(v, 1.0 + 0.2 * step);
            worst_mono = std::max(worst_mono, cur - prev);
            prev = cur;
        }
    }
    rec.bound("lp_norm nonincreasing in p (100 states, p in {1,1.2,...,4})", worst_mono, 1e-12);

    double worst_unitary = 0.0, worst_preserve = 0.0;
    for (std::size_t d = 2; d <= 16; ++d) {
        const auto u = haar_unitary(d, derive_seed(o.rng_seed, d));
        worst_unitary = std::max(worst_unitary, u.deviation());
        const auto v = haar_state(d, derive_seed(o.rng_seed, 1000 + d));
        worst_preserve = std::max(worst_preserve, std::abs(lp_norm(apply(u, v), 2.0) - 1.0));
    }
    rec.bound("haar_unitary: max |U^dagger U - I| (d=2..16)", worst_unitary, 1e-10);
    rec.bound("apply preserves the l2 norm of states", worst_preserve, 1e-10);

    double worst_one_inf = 0.0;
    bool one_inf_ok = true;
    for (std::uint64_t k = 0; k < 10; ++k) {
        const auto u = haar_unitary(2 + k % 5, derive_seed(o.rng_seed, 2000 + k));
        try {
            worst_one_inf = std::max(worst_one_inf, std::abs(norm_one_to_inf(u) - u.max_overlap()));
        } catch (const std::logic_error&) {
            one_inf_ok = false;
        }
    }
    rec.add("||U||_{1->inf} = c, both evaluations agree", one_inf_ok && worst_one_inf <= 1e-12,
            describe(worst_one_inf, 1e-12));

    double worst_identity = 0.0;
    for (std::size_t d : {2, 3, 5})
        for (double s : {1.2, 1.5, 1.8}) {
            const auto est = npim_norm(OverlapUnitary(ComplexMatrix::identity(d)), config_for(s, o, d));
            worst_identity = std::max(worst_identity, std::abs(est.value - 1.0));
        }
    rec.bound("NPIM on the identity returns 1", worst_identity, 1e-9);

    double worst_descent = 0.0, worst_bracket = 0.0, worst_perm = 0.0, worst_dual = 0.0;
    for (std::uint64_t k = 0; k < 10; ++k) {
        const std::size_t d = 2 + k % 3;
        const auto u = haar_unitary(d, derive_seed(o.rng_seed, 3000 + k));
        for (double s : {1.3, 1.7}) {
            const HolderPair hp(s);
            for (std::uint64_t j = 0; j < 5; ++j) {
                const auto run = npim_single_run(u, hp, haar_state(d, derive_seed(o.rng_seed, 4000 + 7 * k + j)),
                                                 1e-12, 10'000, true);
                for (std::size_t t = 1; t < run.history.size(); ++t)
                    worst_descent = std::max(worst_descent, run.history[t - 1] - run.history[t]);
            }
            const auto cfg = config_for(s, o, 5000 + k);
            const auto est = npim_norm(u, cfg);
            worst_bracket = std::max({worst_bracket, est.bracket_lower - est.value, est.value - est.bracket_upper});
            worst_perm = std::max(worst_perm, std::abs(npim_norm(permuted(u), cfg).value - est.value));
            worst_dual = std::max(worst_dual, std::abs(npim_norm(u.adjoint(), cfg).value - est.value));
        }
    }
    rec.bound("NPIM monotone ascent on every iteration", worst_descent, kAscentTol);
    rec.bound("NPIM value inside [max_i ||U e_i||_{s'}, c^{(2-s)/s}]", worst_bracket, 1e-12);
    rec.bound("norm invariant under row/column permutations", worst_perm, 1e-8);
    rec.bound("||U||_{s->s'} = ||U^dagger||_{s->s'} (empirical duality)", worst_dual, 1e-8);
    return rec.take();
}

SuiteResult entropy_suite(const SuiteOptions& o) {
    Recorder rec("entropy-identities");
    double worst_a = 0.0, worst_b = 0.0, worst_range = 0.0;
    const std::size_t dims[] = {2, 3, 4, 8};
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const std::size_t d = dims[k % 4];
        const auto a = haar_state(d, derive_seed(o.rng_seed, 10'000 + k));
        const auto u = haar_unitary(d, derive_seed(o.rng_seed, 20'000 + k % 16));
        const auto b = apply(u, a);
        const auto pa = ProbabilityVector::from_amplitudes(a);
        const auto pb = ProbabilityVector::from_amplitudes(b);
        for (int step = 1; step <= 9; ++step) {
            const double s = 1.0 + 0.1 * step;
            const double sc = s / (s - 1.0);
            worst_a = std::max(worst_a, std::abs(renyi_from_norm(a, s) - renyi(pa, s / 2.0)));
            worst_b = std::max(worst_b, std::abs(renyi_from_conjugate_norm(b, s) - renyi(pb, sc / 2.0)));
            const double cap = std::log2(static_cast<double>(d));
            for (double h : {renyi(pa, s / 2.0), renyi(pb, sc / 2.0)})
                worst_range = std::max({worst_range, -h, h - cap});
        }
        worst_range = std::max(worst_range, shannon(pa) - std::log2(static_cast<double>(d)));
    }
    rec.bound("H_{s/2}(A) = (2s/(2-s)) log2 ||a||_s (10^3 states x 9 orders)", worst_a, 1e-9);
    rec.bound("H_{s'/2}(B) = -(2s/(2-s)) log2 ||b||_{s'} (10^3 states x 9 orders)", worst_b, 1e-9);
    rec.bound("0 <= H <= log2 d", worst_range, 1e-12);

    double worst_fd_a = 0.0, worst_fd_b = 0.0;
    const double theta = 1.0 - 1e-5;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const std::size_t d = dims[k % 4];
        const auto a = haar_state(d, derive_seed(o.rng_seed, 30'000 + k));
        const auto ha = shannon(ProbabilityVector::from_amplitudes(a));
        for (double s : {1.2, 1.5, 1.8}) {
            const double sc = s / (s - 1.0);
            const double p_theta = 1.0 / ((1.0 - theta) / s + theta / 2.0);
            const double q_theta = 1.0 / ((1.0 - theta) / sc + theta / 2.0);
            const double ka = (2.0 - s) / (2.0 * s);
            worst_fd_a = std::max(worst_fd_a, std::abs(std::log2(lp_norm(a, p_theta)) / (1.0 - theta) - ka * ha));
            worst_fd_b = std::max(worst_fd_b, std::abs(std::log2(lp_norm(a, q_theta)) / (1.0 - theta) + ka * ha));
        }
    }
    rec.bound("finite-difference limit log2||a||_{p_theta}/(1-theta) -> (2-s)/(2s) H", worst_fd_a, 1e-3);
    rec.bound("finite-difference limit log2||b||_{q_theta}/(1-theta) -> -(2-s)/(2s) H", worst_fd_b, 1e-3);

    double worst_cont = 0.0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const auto a = haar_state(2 + k % 7, derive_seed(o.rng_seed, 40'000 + k));
        const auto p = ProbabilityVector::from_amplitudes(a);
        const double h = shannon(p);
        worst_cont = std::max({worst_cont, std::abs(renyi(p, 1.0 + 1e-6) - h), std::abs(renyi(p, 1.0 - 1e-6) - h)});
    }
    rec.bound("Renyi continuous at alpha = 1", worst_cont, 1e-5);
    return rec.take();
}

SuiteResult ordering_suite(const SuiteOptions& o) {
    Recorder rec("ordering-chain");
    double worst_mu = -1e300, worst_base = -1e300, worst_mc = -1e300;
    int certified = 0, rows = 0;
    for (std::uint64_t k = 0; k < 10; ++k) {
        const std::size_t d = 2 + k % 3;
        const auto u = haar_unitary(d, derive_seed(o.rng_seed, 50'000 + k));
        const double mu = maassen_uffink(u);
        const double base = eigenstate_baseline(u).value;
        const double mc = montecarlo_min_entropy(u, 1.0, 1.0, 20'000, derive_seed(o.rng_seed, 51'000 + k)).value;
        for (double s : {1.3, 1.6, 1.9}) {
            const auto tb = tight_bound(u, config_for(s, o, 52'000 + k));
            ++rows;
            worst_mu = std::max(worst_mu, mu - tb.gamma);
            if (tb.estimate.certified) ++certified;
            // Chain against feasible points; holds whenever NPIM reaches the
            // basis-vector lower bracket, which the norms suite checks.
            worst_base = std::max(worst_base, tb.gamma - base);
            worst_mc = std::max(worst_mc, tb.gamma - mc);
        }
    }
    rec.bound("mu_bound <= gamma_s (10 Haar U, d in {2,3,4}, s in {1.3,1.6,1.9})", worst_mu, 1e-6);
    rec.bound("gamma_s <= eigenstate_baseline", worst_base, 1e-6);
    rec.bound("gamma_s <= Monte-Carlo min of H(A)+H(B)", worst_mc, 1e-6);
    rec.add("certified rows", true, std::to_string(certified) + " of " + std::to_string(rows));

    const double mu_id = maassen_uffink(OverlapUnitary(ComplexMatrix::identity(3)));
    bool nonzero_incompatible = true;
    for (std::uint64_t k = 0; k < 10; ++k)
        nonzero_incompatible &= maassen_uffink(haar_unitary(2 + k % 3, derive_seed(o.rng_seed, 53'000 + k))) > 0.0;
    rec.add("mu_bound = 0 iff c = 1", mu_id == 0.0 && nonzero_incompatible,
            "identity mu=" + std::to_string(mu_id));
    return rec.take();
}

SuiteResult interpolation_suite(const SuiteOptions& o) {
    Recorder rec("interpolation");
    double worst = -1e300;
    const double s = 1.5;
    for (std::uint64_t k = 0; k < 10; ++k) {
        const std::size_t d = 2 + k % 3;
        const auto u = haar_unitary(d, derive_seed(o.rng_seed, 60'000 + k));
        const double base = npim_norm(u, config_for(s, o, 61'000 + k)).value;
        for (double theta : {0.25, 0.5, 0.75}) {
            // 1/p = (1-theta)/s + theta/2; the matching q_theta is p_theta's conjugate.
            const double p_theta = 1.0 / ((1.0 - theta) / s + theta / 2.0);
            const double mid = npim_norm(u, config_for(p_theta, o, 62'000 + k)).value;
            worst = std::max(worst, mid - std::pow(base, 1.0 - theta));
        }
    }
    rec.bound("||U||_{p_theta->q_theta} <= ||U||_{s->s'}^{1-theta} (10 U, theta in {.25,.5,.75})", worst, 1e-8);
    return rec.take();
}

SuiteResult qubit_suite(const SuiteOptions& o) {
    Recorder rec("qubit");
    const double phi_c = qubit::critical_angle();
    const double residual = std::abs(1.0 + std::cos(phi_c) * std::log(std::tan(phi_c / 2.0)));
    rec.bound("critical angle satisfies 1 + cos(phi) ln tan(phi/2) = 0", residual, 1e-9);
    rec.add("critical angle in (0.58, 0.592)", phi_c > 0.58 && phi_c < 0.592, "phi_c = " + format_number(phi_c));
    const double left = qubit::curvature_at_midpoint(phi_c - 0.01);
    const double right = qubit::curvature_at_midpoint(phi_c + 0.01);
    rec.add("curvature at alpha = phi/2 changes sign across phi_c", left > 0.0 && right < 0.0,
            "F'' = " + std::to_string(left) + " / " + std::to_string(right));

    double worst_stat = 0.0, worst_branch_lo = 0.0, worst_cap = -1e300;
    bool strict_above = true;
    for (int k = 1; k <= 78; ++k) {
        const double phi = 0.01 * k;
        worst_stat = std::max(worst_stat, std::abs(qubit::entropy_sum_curve_derivative(phi / 2.0, phi)));
        const auto r = qubit::qubit_bound(phi);
        if (phi <= phi_c)
            worst_branch_lo = std::max(worst_branch_lo, std::abs(r.numeric_min - r.closed_form));
        else
            strict_above &= r.numeric_min < r.closed_form;
        const double c2 = std::cos(phi) * std::cos(phi);
        worst_cap = std::max(worst_cap, r.value - std::min(binary_entropy(c2), 1.0));
    }
    rec.bound("dF/dalpha vanishes at alpha = phi/2", worst_stat, 1e-9);
    rec.bound("numeric minimum equals 2h(cos^2(phi/2)) for phi <= phi_c", worst_branch_lo, 1e-8);
    rec.add("numeric minimum strictly below the closed form for phi > phi_c", strict_above, "");
    rec.bound("bound <= min(h(cos^2 phi), 1)", worst_cap, 1e-9);

    const double phi = 0.7;
    const double direct = 2.0 * binary_entropy(std::pow(std::cos(phi / 2.0), 2));
    const double reflected = 1.0 - 2.0 * binary_entropy(std::pow(std::cos((kPi / 4.0 - phi) / 2.0), 2));
    rec.add("closed form is not symmetric about pi/4 (phi = 0.7)", std::abs(direct - reflected) > 1e-3,
            "difference " + std::to_string(std::abs(direct - reflected)));

    const auto rr = qubit::real_reduction_check(kPi / 4.0, 1.5, 100'000, o.rng_seed);
    rec.add("complex qubit states never beat the real-state norm maximum", rr.passed,
            "real max " + std::to_string(rr.real_max) + ", best sample " + std::to_string(rr.worst_ratio));

    double worst_mc = 0.0;
    for (int k = 1; k <= 39; ++k) {
        const double p = 0.02 * k;
        const double mc = qubit::montecarlo_qubit_min(p, 100'000, derive_seed(o.rng_seed, 70'000 + k));
        worst_mc = std::max(worst_mc, std::abs(mc - qubit::qubit_bound(p).value));
    }
    rec.bound("Monte-Carlo min over 1e5 qubit states matches the bound (phi step 0.02)", worst_mc, 5e-3);
    return rec.take();
}

SuiteResult tightness_suite(const SuiteOptions& o) {
    Recorder rec("tightness");
    double worst_renyi = 0.0;
    std::vector<OverlapUnitary> unitaries;
    unitaries.push_back(rotation_unitary(kPi / 6.0));
    for (std::uint64_t k = 0; k < 3; ++k) unitaries.push_back(haar_unitary(2, derive_seed(o.rng_seed, 80'000 + k)));
    for (std::size_t k = 0; k < unitaries.size(); ++k)
        for (double s : {1.2, 1.5, 1.8}) {
            const auto pair = renyi_bound_pair(unitaries[k], config_for(s, o, 81'000 + k));
            const auto grid = qubit::grid_min_entropy_sum(unitaries[k], pair.alpha_a, pair.alpha_b);
            worst_renyi = std::max(worst_renyi, std::abs(grid.value - pair.bound));
        }
    rec.bound("grid min of H_{s/2}(A)+H_{s'/2}(B) equals gamma_s (d=2, s in {1.2,1.5,1.8})", worst_renyi, 1e-3);

    double worst_limit = 0.0;
    bool gaps_shrink = true;
    for (std::uint64_t k = 0; k < 5; ++k) {
        const auto u = haar_unitary(2, derive_seed(o.rng_seed, 82'000 + k));
        const double target = qubit::grid_min_entropy_sum(u, 1.0, 1.0).value;
        double prev_gap = 1e300;
        for (double s : {1.9, 1.95, 1.99}) {
            const double gap = target - tight_bound(u, config_for(s, o, 83'000 + k)).gamma;
            gaps_shrink &= gap <= prev_gap + 1e-9;
            prev_gap = gap;
        }
        worst_limit = std::max(worst_limit, std::abs(prev_gap));
    }
    rec.bound("gamma_{1.99} within 2e-2 of min H(A)+H(B) (5 Haar qubits)", worst_limit, 2e-2);
    rec.add("gap nonincreasing along s = 1.9, 1.95, 1.99", gaps_shrink, "");
    return rec.take();
}

} // namespace

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::optional<SuiteResult> run_suite(std::string_view name, const SuiteOptions& options) {
    if (name == "norms") return norms_suite(options);
    if (name == "entropy-identities") return entropy_suite(options);
    if (name == "ordering-chain") return ordering_suite(options);
    if (name == "interpolation") return interpolation_suite(options);
    if (name == "qubit") return qubit_suite(options);
    if (name == "tightness") return tightness_suite(options);
    return std::nullopt;
}

nlohmann::json to_json(const SuiteResult& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

} // namespace entrobound::verify
