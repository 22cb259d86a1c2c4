#include "qcorr/smallmat.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace qcorr {

CMat2 CMat2::identity() {
    CMat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

CMat2 CMat2::adjoint() const {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = std::conj((*this)(j, i));
    return r;
}

CMat2 operator*(const CMat2& a, const CMat2& b) {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 2; ++k)
                s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

CMat2 operator+(const CMat2& a, const CMat2& b) {
    CMat2 r;
    for (std::size_t i = 0; i < 4; ++i)
        r.e[i] = a.e[i] + b.e[i];
    return r;
}

CMat2 operator-(const CMat2& a, const CMat2& b) {
    CMat2 r;
    for (std::size_t i = 0; i < 4; ++i)
        r.e[i] = a.e[i] - b.e[i];
    return r;
}

CMat2 operator*(cplx s, const CMat2& a) {
    CMat2 r;
    for (std::size_t i = 0; i < 4; ++i)
        r.e[i] = s * a.e[i];
    return r;
}

CMat4 CMat4::identity() {
    CMat4 m;
    for (int i = 0; i < 4; ++i)
        m(i, i) = 1.0;
    return m;
}

CMat4 CMat4::adjoint() const {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = std::conj((*this)(j, i));
    return r;
}

CMat4 operator*(const CMat4& a, const CMat4& b) {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

CMat4 operator+(const CMat4& a, const CMat4& b) {
    CMat4 r;
    for (std::size_t i = 0; i < 16; ++i)
        r.e[i] = a.e[i] + b.e[i];
    return r;
}

CMat4 operator-(const CMat4& a, const CMat4& b) {
    CMat4 r;
    for (std::size_t i = 0; i < 16; ++i)
        r.e[i] = a.e[i] - b.e[i];
    return r;
}

CMat4 operator*(cplx s, const CMat4& a) {
    CMat4 r;
    for (std::size_t i = 0; i < 16; ++i)
        r.e[i] = s * a.e[i];
    return r;
}

double max_abs_diff(const CMat2& a, const CMat2& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        m = std::max(m, std::abs(a.e[i] - b.e[i]));
    return m;
}

double max_abs_diff(const CMat4& a, const CMat4& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 16; ++i)
        m = std::max(m, std::abs(a.e[i] - b.e[i]));
    return m;
}

namespace {

double hermiticity_defect(const CMat4& m) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

double max_offdiag(const CMat4& m) {
    double v = 0.0;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            if (p != q)
                v = std::max(v, std::abs(m(p, q)));
    return v;
}

// One complex Jacobi rotation zeroing a(p,q). The phase of a(p,q) is folded
// into the rotation so the reduced 2x2 problem is real symmetric.
void jacobi_rotate(CMat4& a, CMat4& v, int p, int q) {
    const cplx apq = a(p, q);
    const double mod = std::abs(apq);
    if (mod == 0.0)
        return;

    const cplx phase = apq / mod;           // e^{i arg apq}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double zeta = (aqq - app) / (2.0 * mod);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    CMat4 j = CMat4::identity();
    j(p, p) = c;
    j(p, q) = s;
    j(q, p) = -s * std::conj(phase);
    j(q, q) = c * std::conj(phase);

    a = j.adjoint() * a * j;
    v = v * j;

    // Re-symmetrize to suppress round-off drift; diagonal stays real.
    for (int i = 0; i < 4; ++i) {
        a(i, i) = cplx(a(i, i).real(), 0.0);
        for (int k = i + 1; k < 4; ++k) {
            const cplx avg = 0.5 * (a(i, k) + std::conj(a(k, i)));
            a(i, k) = avg;
            a(k, i) = std::conj(avg);
        }
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

} // namespace

HermitianEigen hermitian_eigen(const CMat4& m) {
    if (hermiticity_defect(m) > 1e-10)
        throw NotHermitian("hermitian_eigen: matrix deviates from its adjoint beyond 1e-10");

    // Work on the exactly Hermitian average of m and its adjoint.
    CMat4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    CMat4 v = CMat4::identity();

    double scale = 0.0;
    for (const cplx& x : a.e)
        scale = std::max(scale, std::abs(x));
    const double stop = std::max(scale, 1.0) * 1e-15;

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (max_offdiag(a) <= stop)
            break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q)
                jacobi_rotate(a, v, p, q);
    }

    HermitianEigen out;
    std::array<int, 4> idx{0, 1, 2, 3};
    std::array<double, 4> diag{};
    for (int i = 0; i < 4; ++i)
        diag[static_cast<std::size_t>(i)] = a(i, i).real();
    std::sort(idx.begin(), idx.end(),
              [&diag](int x, int y) { return diag[static_cast<std::size_t>(x)] < diag[static_cast<std::size_t>(y)]; });

    for (int col = 0; col < 4; ++col) {
        out.values[static_cast<std::size_t>(col)] = diag[static_cast<std::size_t>(idx[static_cast<std::size_t>(col)])];
        for (int row = 0; row < 4; ++row)
            out.vectors(row, col) = v(row, idx[static_cast<std::size_t>(col)]);
    }
    return out;
}

CMat4 psd_sqrt(const CMat4& m) {
    const HermitianEigen eig = hermitian_eigen(m);

    std::array<double, 4> roots{};
    for (std::size_t i = 0; i < 4; ++i) {
        double lam = eig.values[i];
        if (lam < -1e-10)
            throw NotPSD("psd_sqrt: eigenvalue below -1e-10");
        if (lam < 0.0)
            lam = 0.0;
        roots[i] = std::sqrt(lam);
    }

    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += eig.vectors(i, k) * roots[static_cast<std::size_t>(k)] * std::conj(eig.vectors(j, k));
            r(i, j) = s;
        }
    return r;
}

double unitary_check(const CMat2& u) {
    return max_abs_diff(u * u.adjoint(), CMat2::identity());
}

double unitary_check(const CMat4& u) {
    return max_abs_diff(u * u.adjoint(), CMat4::identity());
}

} // namespace qcorr
