#include "entrobound/qubit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "entrobound/bounds.hpp"
#include "entrobound/entropy.hpp"
#include "entrobound/error.hpp"
#include "entrobound/npim.hpp"
#include "entrobound/scalar_search.hpp"

namespace entrobound::qubit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarterPi = kPi / 4.0;
constexpr double kHalfPi = kPi / 2.0;
constexpr double kRangeSlack = 1e-12;
constexpr int kCurveGrid = 100'000;

void check_phi(double phi) {
    if (!(phi > 0.0 && phi <= kQuarterPi))
        throw Error(ErrorKind::OutOfRange, "phi must lie in (0, pi/4], got " + std::to_string(phi));
}

void check_alpha(double alpha) {
    if (!(alpha >= -kRangeSlack && alpha <= kHalfPi + kRangeSlack))
        throw Error(ErrorKind::OutOfRange, "alpha must lie in [0, pi/2], got " + std::to_string(alpha));
}

double h_cos2(double x) {
    const double c = std::cos(x);
    return binary_entropy(std::clamp(c * c, 0.0, 1.0));
}

// log2|tan x| sin 2x, continuous at the zeros of sin 2x where it tends to 0.
double g(double x) {
    const double s2 = std::sin(2.0 * x);
    if (s2 == 0.0) return 0.0;
    const double t = std::abs(std::tan(x));
    if (t == 0.0 || !std::isfinite(t)) return 0.0;
    return std::log2(t) * s2;
}

double critical_residual(double phi) { return 1.0 + std::cos(phi) * std::log(std::tan(phi / 2.0)); }

double rotation_ratio(double alpha, double phi, double s, double s_conj) {
    const double num = std::pow(std::pow(std::abs(std::cos(phi - alpha)), s_conj) +
                                    std::pow(std::abs(std::sin(phi - alpha)), s_conj),
                                1.0 / s_conj);
    const double den =
        std::pow(std::pow(std::abs(std::cos(alpha)), s) + std::pow(std::abs(std::sin(alpha)), s), 1.0 / s);
    return num / den;
}

} // namespace

const char* to_string(Branch b) noexcept { return b == Branch::ClosedForm ? "closed_form" : "numeric_min"; }

CanonicalAngle canonical_phi(const OverlapUnitary& u) {
    if (u.dim() != 2) throw Error(ErrorKind::InvalidDimension, "canonical_phi needs a 2x2 unitary");
    const double c = std::min(u.max_overlap(), 1.0);
    CanonicalAngle out;
    out.phi = std::clamp(std::acos(c), 0.0, kQuarterPi);
    std::array<double, 4> mags{std::abs(u(0, 0)), std::abs(u(0, 1)), std::abs(u(1, 0)), std::abs(u(1, 1))};
    std::array<double, 4> expected{std::sin(out.phi), std::sin(out.phi), std::cos(out.phi), std::cos(out.phi)};
    std::sort(mags.begin(), mags.end());
    std::sort(expected.begin(), expected.end());
    for (std::size_t k = 0; k < 4; ++k)
        if (std::abs(mags[k] - expected[k]) > 1e-10)
            throw Error(ErrorKind::NotUnitary, "entry magnitudes are not {cos phi, sin phi} pairs");
    out.compatible = c >= 1.0 - 1e-12;
    if (out.compatible) out.phi = 0.0;
    return out;
}

double entropy_sum_curve(double alpha, double phi) {
    check_phi(phi);
    check_alpha(alpha);
    return h_cos2(alpha) + h_cos2(alpha - phi);
}

double entropy_sum_curve_derivative(double alpha, double phi) {
    check_phi(phi);
    check_alpha(alpha);
    return -2.0 * g(alpha) - 2.0 * g(alpha - phi);
}

double curvature_at_midpoint(double phi) {
    check_phi(phi);
    return -(8.0 / std::numbers::ln2) * critical_residual(phi);
}

double critical_angle() {
    static const double phi_c = [] {
        constexpr double lo = 0.3, hi = 0.7;
        if (!(critical_residual(lo) < 0.0 && critical_residual(hi) > 0.0))
            throw std::logic_error("critical angle bracket does not straddle a sign change");
        return bisect_root(critical_residual, lo, hi, 1e-14, 200);
    }();
    return phi_c;
}

CurveMin minimize_entropy_sum_curve(double phi) {
    check_phi(phi);
    const double step = kHalfPi / kCurveGrid;
    int best_k = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= kCurveGrid; ++k) {
        const double a = std::min(k * step, kHalfPi);
        const double f = h_cos2(a) + h_cos2(a - phi);
        if (f < best) {
            best = f;
            best_k = k;
        }
    }
    const double lo = std::max(0.0, (best_k - 1) * step);
    const double hi = std::min(kHalfPi, (best_k + 1) * step);
    const auto refined = golden_section_min([phi](double a) { return h_cos2(a) + h_cos2(a - phi); }, lo, hi, 1e-10);
    if (refined.fx < best) return {refined.x, refined.fx};
    return {std::min(best_k * step, kHalfPi), best};
}

QubitBoundResult qubit_bound(double phi) {
    QubitBoundResult r;
    r.phi = phi;
    r.phi_c = critical_angle();
    if (phi == 0.0) {
        // Compatible observables: a shared eigenstate has zero entropy in both bases.
        r.branch = Branch::ClosedForm;
        return r;
    }
    check_phi(phi);
    r.closed_form = 2.0 * h_cos2(phi / 2.0);
    const auto numeric = minimize_entropy_sum_curve(phi);
    r.numeric_min = numeric.value;
    if (phi <= r.phi_c) {
        if (numeric.value < r.closed_form - 1e-8)
            throw std::logic_error("qubit bound: numeric minimum undercuts the closed form below phi_c at phi=" +
                                   std::to_string(phi));
        r.branch = Branch::ClosedForm;
        r.alpha_star = phi / 2.0;
        r.value = r.closed_form;
    } else {
        r.branch = Branch::NumericMin;
        r.alpha_star = numeric.alpha;
        r.value = std::min(r.closed_form, numeric.value);
    }
    return r;
}

double real_norm_max(double phi, double s) {
    const HolderPair hp(s);
    const int n = kCurveGrid;
    const double step = kHalfPi / n;
    auto neg_ratio = [&](double a) { return -rotation_ratio(a, phi, hp.s(), hp.conj()); };
    int best_k = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= n; ++k) {
        const double v = neg_ratio(std::min(k * step, kHalfPi));
        if (v < best) {
            best = v;
            best_k = k;
        }
    }
    const auto refined = golden_section_min(neg_ratio, std::max(0.0, (best_k - 1) * step),
                                            std::min(kHalfPi, (best_k + 1) * step), 1e-12);
    return -std::min(best, refined.fx);
}

RealReductionCheck real_reduction_check(double phi, double s, std::uint64_t n_samples, std::uint64_t rng_seed) {
    check_phi(phi);
    const HolderPair hp(s);
    const OverlapUnitary u = rotation_unitary(phi);
    RealReductionCheck out;
    out.real_max = real_norm_max(phi, s);
    RngStream rng(domain_root(rng_seed, StreamDomain::QubitSampling), 0);
    std::vector<Complex> psi(2);
    out.worst_ratio = -1.0;
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        haar_state_into(psi, rng);
        const double ratio = holder_ratio(u, hp, psi);
        if (ratio > out.worst_ratio) {
            out.worst_ratio = ratio;
            out.worst_state = AmplitudeVector(psi);
        }
    }
    out.passed = out.worst_ratio <= out.real_max + 1e-9;
    return out;
}

GridMin grid_min_entropy_sum(const OverlapUnitary& u, double alpha_a, double alpha_b, int grid) {
    if (u.dim() != 2) throw Error(ErrorKind::InvalidDimension, "grid_min_entropy_sum needs a 2x2 unitary");
    if (grid < 8) throw Error(ErrorKind::InvalidArgument, "grid must have at least 8 points per axis");
    if (!(alpha_a > 0.0 && alpha_b > 0.0)) throw Error(ErrorKind::InvalidExponent, "Renyi orders must be > 0");

    const auto& m = u.matrix();
    std::array<double, 2> pa{}, pb{};
    auto eval = [&](double theta, double gamma) {
        const Complex a0 = std::cos(theta / 2.0);
        const Complex a1 = std::polar(std::sin(theta / 2.0), gamma);
        const Complex b0 = m(0, 0) * a0 + m(0, 1) * a1;
        const Complex b1 = m(1, 0) * a0 + m(1, 1) * a1;
        pa = {std::norm(a0), std::norm(a1)};
        pb = {std::norm(b0), std::norm(b1)};
        return renyi_unchecked(pa, alpha_a) + renyi_unchecked(pb, alpha_b);
    };

    double best = std::numeric_limits<double>::infinity();
    double bt = 0.0, bg = 0.0;
    for (int i = 0; i <= grid; ++i) {
        const double theta = kPi * i / grid;
        for (int j = 0; j < grid; ++j) {
            const double gamma = 2.0 * kPi * j / grid;
            const double v = eval(theta, gamma);
            if (v < best) {
                best = v;
                bt = theta;
                bg = gamma;
            }
        }
    }

    double wt = 2.0 * kPi / grid;
    double wg = 4.0 * kPi / grid;
    constexpr int sub = 10;
    for (int round = 0; round < 60; ++round) {
        const double ct = bt, cg = bg;
        for (int i = -sub; i <= sub; ++i) {
            const double theta = std::clamp(ct + wt * i / sub, 0.0, kPi);
            for (int j = -sub; j <= sub; ++j) {
                const double gamma = cg + wg * j / sub;
                const double v = eval(theta, gamma);
                if (v < best) {
                    best = v;
                    bt = theta;
                    bg = gamma;
                }
            }
        }
        wt *= 0.5;
        wg *= 0.5;
    }
    GridMin out;
    out.value = best;
    out.state = AmplitudeVector{Complex(std::cos(bt / 2.0)), std::polar(std::sin(bt / 2.0), bg)};
    return out;
}

double montecarlo_qubit_min(double phi, std::uint64_t n_states, std::uint64_t rng_seed) {
    const OverlapUnitary u(rotation_matrix(phi));
    return montecarlo_min_entropy(u, 1.0, 1.0, n_states, rng_seed).value;
}

} // namespace entrobound::qubit
