#pragma once

#include <span>
#include <vector>

#include "entrobound/tensor_core.hpp"

namespace entrobound {

/// Outcome distribution; construction checks sum-to-one within 1e-10 and
/// every entry in [0,1].
class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> probs);

    /// Born-rule probabilities |a_i|^2 of a unit vector.
    static ProbabilityVector from_amplitudes(const AmplitudeVector& a);

    [[nodiscard]] std::size_t dim() const noexcept { return probs_.size(); }
    [[nodiscard]] std::span<const double> probs() const noexcept { return probs_; }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return probs_[i]; }

private:
    std::vector<double> probs_;
};

// All entropies are in bits.

double shannon(const ProbabilityVector& p);
/// Rényi entropy of order alpha > 0; falls back to Shannon when |alpha-1| < 1e-9.
double renyi(const ProbabilityVector& p, double alpha);
double binary_entropy(double p);

/// Unchecked kernels over raw squared moduli, for inner loops that already
/// know the input is normalized.
double shannon_unchecked(std::span<const double> p) noexcept;
double renyi_unchecked(std::span<const double> p, double alpha) noexcept;

/// H_{s/2}(A) = (2s/(2-s)) log2 ||a||_s for a unit vector a.
double renyi_from_norm(const AmplitudeVector& a, double s);
/// H_{s'/2}(B) = -(2s/(2-s)) log2 ||b||_{s'} for a unit vector b, s' = s/(s-1).
double renyi_from_conjugate_norm(const AmplitudeVector& b, double s);

} // namespace entrobound
