#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "entrobound/random.hpp"

namespace entrobound {

using Complex = std::complex<double>;

inline constexpr double kDefaultUnitarityTol = 1e-10;
inline constexpr double kDefaultStateTol = 1e-10;

/// Complex coefficients of a vector in one basis (a_i = <a_i|psi> for states).
class AmplitudeVector {
public:
    AmplitudeVector() = default;
    explicit AmplitudeVector(std::vector<Complex> entries);
    AmplitudeVector(std::initializer_list<Complex> entries);

    static AmplitudeVector zeros(std::size_t dim);
    static AmplitudeVector basis(std::size_t dim, std::size_t index);

    [[nodiscard]] std::size_t dim() const noexcept { return entries_.size(); }
    [[nodiscard]] const Complex& operator[](std::size_t i) const noexcept { return entries_[i]; }
    Complex& operator[](std::size_t i) noexcept { return entries_[i]; }

    [[nodiscard]] std::span<const Complex> entries() const noexcept { return entries_; }
    std::span<Complex> entries() noexcept { return entries_; }

    /// True when the squared moduli sum to one within `tol`.
    [[nodiscard]] bool is_state(double tol = kDefaultStateTol) const;

    bool operator==(const AmplitudeVector&) const = default;

private:
    std::vector<Complex> entries_;
};

/// Dense square complex matrix, row-major. Row index j is the output basis,
/// column index i the input basis.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    /// Throws if `entries.size() != dim*dim` or any component is non-finite.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
        return data_[row * dim_ + col];
    }
    Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }

    [[nodiscard]] std::span<const Complex> data() const noexcept { return data_; }

    [[nodiscard]] ComplexMatrix adjoint() const;

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// max_{ji} |(M^dagger M - I)_{ji}|
double unitarity_deviation(const ComplexMatrix& m);

/// The overlap matrix U_ji = <b_j|a_i> between two eigenbases. Construction
/// validates unitarity; instances are immutable afterwards.
class OverlapUnitary {
public:
    explicit OverlapUnitary(ComplexMatrix matrix, double unitarity_tol = kDefaultUnitarityTol);

    [[nodiscard]] std::size_t dim() const noexcept { return matrix_.dim(); }
    [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
        return matrix_(row, col);
    }
    [[nodiscard]] double unitarity_tol() const noexcept { return tol_; }
    [[nodiscard]] double deviation() const noexcept { return deviation_; }

    /// c = max_{ji} |U_ji|, the largest overlap.
    [[nodiscard]] double max_overlap() const noexcept { return max_overlap_; }

    [[nodiscard]] OverlapUnitary adjoint() const;

private:
    ComplexMatrix matrix_;
    double tol_;
    double deviation_;
    double max_overlap_;
};

/// Hoelder-conjugate pair (s, s') with 1/s + 1/s' = 1 and s in (1,2).
class HolderPair {
public:
    explicit HolderPair(double s);

    [[nodiscard]] double s() const noexcept { return s_; }
    [[nodiscard]] double conj() const noexcept { return s_conj_; }

private:
    double s_;
    double s_conj_;
};

/// (sum_j |v_j|^p)^{1/p}; p may be +infinity (max modulus). Throws for p < 1.
double lp_norm(std::span<const Complex> v, double p);
inline double lp_norm(const AmplitudeVector& v, double p) { return lp_norm(v.entries(), p); }

/// out_j = sum_i U_ji in_i. Spans must not alias.
void apply_into(const ComplexMatrix& u, std::span<const Complex> in, std::span<Complex> out);
/// out_i = sum_j conj(U_ji) in_j. Spans must not alias.
void adjoint_apply_into(const ComplexMatrix& u, std::span<const Complex> in, std::span<Complex> out);

AmplitudeVector apply(const OverlapUnitary& u, const AmplitudeVector& v);
AmplitudeVector adjoint_apply(const OverlapUnitary& u, const AmplitudeVector& v);

/// Haar-distributed unitary from a Ginibre matrix orthonormalized column by
/// column (the triangular factor then has a real positive diagonal).
OverlapUnitary haar_unitary(std::size_t dim, std::uint64_t seed);

/// Uniform random unit vector on the complex sphere.
AmplitudeVector haar_state(std::size_t dim, std::uint64_t seed);
AmplitudeVector haar_state(std::size_t dim, RngStream& rng);
/// Same distribution, written into `out` without allocating.
void haar_state_into(std::span<Complex> out, RngStream& rng);

/// [[cos phi, sin phi], [-sin phi, cos phi]] for any real phi.
ComplexMatrix rotation_matrix(double phi);

/// The canonical qubit overlap matrix; phi must lie in (0, pi/4].
OverlapUnitary rotation_unitary(double phi);

/// U_ji = exp(2 pi i j k / d) / sqrt(d).
OverlapUnitary fourier_unitary(std::size_t dim);

} // namespace entrobound
