#ifndef HANKEL_LAB_LINALG_HPP
#define HANKEL_LAB_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hankel_lab {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Used for Hermitian Gram matrices.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(std::size_t n) : n_(n), data_(n * n) {}

    std::size_t size() const { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    double frobenius_norm() const;
    /// max |A_ij - conj(A_ji)|
    double hermitian_defect() const;

private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

struct EigenOptions {
    double relative_tolerance = 1e-14;
    int max_sweeps = 60;
};

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, in
/// ascending order. Stops once the off-diagonal Frobenius norm falls below
/// relative_tolerance * ||A||_F; throws NumericalError after max_sweeps.
std::vector<double> jacobi_eigenvalues(HermitianMatrix a, const EigenOptions& options = {});

/// Eigenvalues of the real symmetric tridiagonal matrix with the given
/// diagonal and sub-diagonal (implicit QL with Wilkinson shifts), ascending.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diagonal,
                                            std::span<const double> off_diagonal);

} // namespace hankel_lab

#endif
