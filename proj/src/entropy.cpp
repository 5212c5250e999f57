#include "entrobound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

constexpr double kProbSumTol = 1e-10;
constexpr double kNegligible = 1e-300;
constexpr double kShannonWindow = 1e-9;

void check_order(double s) {
    if (!(s > 1.0 && s < 2.0)) throw Error(ErrorKind::InvalidExponent, "s must lie in (1,2), got " + std::to_string(s));
}

void check_unit(const AmplitudeVector& a) {
    if (!a.is_state(kDefaultStateTol))
        throw Error(ErrorKind::InvalidArgument, "norm identity needs a unit vector");
}

} // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw Error(ErrorKind::InvalidDimension, "probability vector must be nonempty");
    double total = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::OutOfRange, "probability outside [0,1]: " + std::to_string(p));
        total += p;
    }
    if (std::abs(total - 1.0) > kProbSumTol)
        throw Error(ErrorKind::InvalidArgument, "probabilities sum to " + std::to_string(total));
}

ProbabilityVector ProbabilityVector::from_amplitudes(const AmplitudeVector& a) {
    std::vector<double> p(a.dim());
    std::transform(a.entries().begin(), a.entries().end(), p.begin(), [](const Complex& z) {
        return std::min(std::norm(z), 1.0);
    });
    return ProbabilityVector(std::move(p));
}

double shannon_unchecked(std::span<const double> p) noexcept {
    double h = 0.0;
    for (double x : p)
        if (x >= kNegligible) h -= x * std::log2(x);
    return std::max(h, 0.0);
}

double renyi_unchecked(std::span<const double> p, double alpha) noexcept {
    if (std::abs(alpha - 1.0) < kShannonWindow) return shannon_unchecked(p);
    const double pmax = *std::max_element(p.begin(), p.end());
    if (pmax <= 0.0) return 0.0;
    // log2 sum p^a = a log2 pmax + log2 sum (p/pmax)^a, avoiding underflow for large a.
    double sum = 0.0;
    for (double x : p)
        if (x > 0.0) sum += std::pow(x / pmax, alpha);
    const double log_sum = alpha * std::log2(pmax) + std::log2(sum);
    return std::max(log_sum / (1.0 - alpha), 0.0);
}

double shannon(const ProbabilityVector& p) {
    const double cap = std::log2(static_cast<double>(p.dim()));
    return std::min(shannon_unchecked(p.probs()), cap);
}

double renyi(const ProbabilityVector& p, double alpha) {
    if (!(alpha > 0.0)) throw Error(ErrorKind::InvalidExponent, "Renyi order must be > 0, got " + std::to_string(alpha));
    const double cap = std::log2(static_cast<double>(p.dim()));
    return std::min(renyi_unchecked(p.probs(), alpha), cap);
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::OutOfRange, "binary entropy argument outside [0,1]");
    const double pair[2] = {p, 1.0 - p};
    return std::min(shannon_unchecked(pair), 1.0);
}

double renyi_from_norm(const AmplitudeVector& a, double s) {
    check_order(s);
    check_unit(a);
    return (2.0 * s / (2.0 - s)) * std::log2(lp_norm(a, s));
}

double renyi_from_conjugate_norm(const AmplitudeVector& b, double s) {
    check_order(s);
    check_unit(b);
    const double s_conj = s / (s - 1.0);
    return -(2.0 * s / (2.0 - s)) * std::log2(lp_norm(b, s_conj));
}

} // namespace entrobound
