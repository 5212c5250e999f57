#include "entrobound/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double max_modulus(std::span<const Complex> v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

} // namespace

AmplitudeVector::AmplitudeVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorKind::InvalidDimension, "amplitude vector must have dim >= 1");
}

AmplitudeVector::AmplitudeVector(std::initializer_list<Complex> entries)
    : AmplitudeVector(std::vector<Complex>(entries)) {}

AmplitudeVector AmplitudeVector::zeros(std::size_t dim) {
    return AmplitudeVector(std::vector<Complex>(dim, Complex{}));
}

AmplitudeVector AmplitudeVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw Error(ErrorKind::OutOfRange, "basis index out of range");
    auto v = zeros(dim);
    v[index] = 1.0;
    return v;
}

bool AmplitudeVector::is_state(double tol) const {
    double total = 0.0;
    for (const auto& z : entries_) total += std::norm(z);
    return std::abs(total - 1.0) <= tol;
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim_ == 0) throw Error(ErrorKind::InvalidDimension, "matrix dimension must be positive");
    if (data_.size() != dim_ * dim_)
        throw Error(ErrorKind::DimensionMismatch,
                    "expected " + std::to_string(dim_ * dim_) + " entries, got " + std::to_string(data_.size()));
    if (!std::all_of(data_.begin(), data_.end(), finite))
        throw Error(ErrorKind::NonFinite, "matrix contains NaN or Inf");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    std::vector<Complex> data(dim * dim, Complex{});
    for (std::size_t i = 0; i < dim; ++i) data[i * dim + i] = 1.0;
    return ComplexMatrix(dim, std::move(data));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    std::vector<Complex> data(dim_ * dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t i = 0; i < dim_; ++i) data[i * dim_ + j] = std::conj((*this)(j, i));
    return ComplexMatrix(dim_, std::move(data));
}

double unitarity_deviation(const ComplexMatrix& m) {
    const std::size_t d = m.dim();
    double worst = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            Complex acc{};
            for (std::size_t j = 0; j < d; ++j) acc += std::conj(m(j, a)) * m(j, b);
            if (a == b) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

OverlapUnitary::OverlapUnitary(ComplexMatrix matrix, double unitarity_tol)
    : matrix_(std::move(matrix)), tol_(unitarity_tol) {
    if (matrix_.dim() == 0) throw Error(ErrorKind::InvalidDimension, "empty matrix");
    if (!(tol_ >= 0.0)) throw Error(ErrorKind::InvalidArgument, "unitarity tolerance must be nonnegative");
    deviation_ = unitarity_deviation(matrix_);
    if (!(deviation_ <= tol_))
        throw Error(ErrorKind::NotUnitary, "max |U^dagger U - I| = " + std::to_string(deviation_) +
                                               " exceeds tolerance " + std::to_string(tol_));
    max_overlap_ = max_modulus(matrix_.data());
}

OverlapUnitary OverlapUnitary::adjoint() const { return OverlapUnitary(matrix_.adjoint(), tol_); }

HolderPair::HolderPair(double s) : s_(s), s_conj_(s / (s - 1.0)) {
    if (!(s > 1.0 && s < 2.0))
        throw Error(ErrorKind::InvalidExponent, "s must lie in (1,2), got " + std::to_string(s));
}

double lp_norm(std::span<const Complex> v, double p) {
    if (!(p >= 1.0)) throw Error(ErrorKind::InvalidExponent, "p must be >= 1, got " + std::to_string(p));
    const double m = max_modulus(v);
    if (m == 0.0 || std::isinf(p)) return m;
    // Scale by the largest modulus so large exponents neither overflow nor
    // underflow the leading terms.
    double sum = 0.0;
    for (const auto& z : v) {
        const double r = std::abs(z) / m;
        if (r > 0.0) sum += std::pow(r, p);
    }
    return m * std::pow(sum, 1.0 / p);
}

void apply_into(const ComplexMatrix& u, std::span<const Complex> in, std::span<Complex> out) {
    const std::size_t d = u.dim();
    if (in.size() != d || out.size() != d) throw Error(ErrorKind::DimensionMismatch, "apply: vector size != matrix dim");
    const Complex* row = u.data().data();
    for (std::size_t j = 0; j < d; ++j, row += d) {
        Complex acc{};
        for (std::size_t i = 0; i < d; ++i) acc += row[i] * in[i];
        out[j] = acc;
    }
}

void adjoint_apply_into(const ComplexMatrix& u, std::span<const Complex> in, std::span<Complex> out) {
    const std::size_t d = u.dim();
    if (in.size() != d || out.size() != d)
        throw Error(ErrorKind::DimensionMismatch, "adjoint_apply: vector size != matrix dim");
    std::fill(out.begin(), out.end(), Complex{});
    const Complex* row = u.data().data();
    for (std::size_t j = 0; j < d; ++j, row += d) {
        const Complex x = in[j];
        for (std::size_t i = 0; i < d; ++i) out[i] += std::conj(row[i]) * x;
    }
}

AmplitudeVector apply(const OverlapUnitary& u, const AmplitudeVector& v) {
    auto out = AmplitudeVector::zeros(u.dim());
    apply_into(u.matrix(), v.entries(), out.entries());
    return out;
}

AmplitudeVector adjoint_apply(const OverlapUnitary& u, const AmplitudeVector& v) {
    auto out = AmplitudeVector::zeros(u.dim());
    adjoint_apply_into(u.matrix(), v.entries(), out.entries());
    return out;
}

OverlapUnitary haar_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim < 2) throw Error(ErrorKind::InvalidDimension, "haar_unitary requires d >= 2");
    RngStream rng(seed);
    // Column-major scratch: cols[k] is the k-th column.
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (auto& col : cols)
        for (auto& z : col) z = Complex(rng.normal(), rng.normal()) * inv_sqrt2;

    // Modified Gram-Schmidt, applied twice for stability. Dividing by the
    // positive real norm fixes the phases of R's diagonal, which is what
    // makes Q Haar-distributed rather than merely unitary.
    for (std::size_t k = 0; k < dim; ++k) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t l = 0; l < k; ++l) {
                Complex proj{};
                for (std::size_t r = 0; r < dim; ++r) proj += std::conj(cols[l][r]) * cols[k][r];
                for (std::size_t r = 0; r < dim; ++r) cols[k][r] -= proj * cols[l][r];
            }
        }
        const double norm = lp_norm(cols[k], 2.0);
        for (auto& z : cols[k]) z /= norm;
    }

    std::vector<Complex> data(dim * dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) data[j * dim + i] = cols[i][j];
    return OverlapUnitary(ComplexMatrix(dim, std::move(data)));
}

void haar_state_into(std::span<Complex> out, RngStream& rng) {
    if (out.empty()) throw Error(ErrorKind::InvalidDimension, "haar_state requires d >= 1");
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& z : out) {
            z = Complex(rng.normal(), rng.normal());
            norm2 += std::norm(z);
        }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : out) z *= inv;
}

AmplitudeVector haar_state(std::size_t dim, RngStream& rng) {
    if (dim < 1) throw Error(ErrorKind::InvalidDimension, "haar_state requires d >= 1");
    auto v = AmplitudeVector::zeros(dim);
    haar_state_into(v.entries(), rng);
    return v;
}

AmplitudeVector haar_state(std::size_t dim, std::uint64_t seed) {
    RngStream rng(seed);
    return haar_state(dim, rng);
}

ComplexMatrix rotation_matrix(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return ComplexMatrix(2, {c, s, -s, c});
}

OverlapUnitary rotation_unitary(double phi) {
    if (!(phi > 0.0 && phi <= std::numbers::pi / 4))
        throw Error(ErrorKind::OutOfRange, "rotation angle must lie in (0, pi/4], got " + std::to_string(phi));
    return OverlapUnitary(rotation_matrix(phi));
}

OverlapUnitary fourier_unitary(std::size_t dim) {
    if (dim < 1) throw Error(ErrorKind::InvalidDimension, "fourier_unitary requires d >= 1");
    std::vector<Complex> data(dim * dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            // Reduce j*k mod d first so the angle stays small and exact.
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % dim) / static_cast<double>(dim);
            data[j * dim + k] = std::polar(scale, angle);
        }
    return OverlapUnitary(ComplexMatrix(dim, std::move(data)));
}

} // namespace entrobound
