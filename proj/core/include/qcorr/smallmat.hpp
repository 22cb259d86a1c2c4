#pragma once

#include <array>
#include <complex>

#include "qcorr/errors.hpp"

namespace qcorr {

using cplx = std::complex<double>;

// Dense complex 2x2 matrix, row major.
struct CMat2 {
    std::array<cplx, 4> e{};

    cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
    const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

    static CMat2 identity();
    static CMat2 zero() { return {}; }

    CMat2 adjoint() const;
    cplx trace() const { return e[0] + e[3]; }
};

CMat2 operator*(const CMat2& a, const CMat2& b);
CMat2 operator+(const CMat2& a, const CMat2& b);
CMat2 operator-(const CMat2& a, const CMat2& b);
CMat2 operator*(cplx s, const CMat2& a);

// Dense complex 4x4 matrix, row major.
struct CMat4 {
    std::array<cplx, 16> e{};

    cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
    const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

    static CMat4 identity();
    static CMat4 zero() { return {}; }

    CMat4 adjoint() const;
    cplx trace() const { return e[0] + e[5] + e[10] + e[15]; }
};

CMat4 operator*(const CMat4& a, const CMat4& b);
CMat4 operator+(const CMat4& a, const CMat4& b);
CMat4 operator-(const CMat4& a, const CMat4& b);
CMat4 operator*(cplx s, const CMat4& a);

// Largest |a(i,j) - b(i,j)| over all entries.
double max_abs_diff(const CMat2& a, const CMat2& b);
double max_abs_diff(const CMat4& a, const CMat4& b);

// Eigendecomposition m = vectors * diag(values) * adjoint(vectors) with
// eigenvalues ascending and eigenvectors in the corresponding columns.
struct HermitianEigen {
    std::array<double, 4> values{};
    CMat4 vectors{};
};

// Cyclic Jacobi diagonalization for a Hermitian 4x4 matrix.
// Throws NotHermitian when max |m - adjoint(m)| exceeds 1e-10.
HermitianEigen hermitian_eigen(const CMat4& m);

// Principal square root of a positive semidefinite Hermitian matrix.
// Eigenvalues in [-1e-10, 0) are clamped to zero; anything below throws NotPSD.
CMat4 psd_sqrt(const CMat4& m);

// Largest entrywise deviation of u * adjoint(u) from the identity.
double unitary_check(const CMat2& u);
double unitary_check(const CMat4& u);

} // namespace qcorr
