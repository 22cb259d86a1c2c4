#pragma once

// Shared test helpers: Pauli products, a trace-based Fano reference that
// bypasses the library's entry-level shortcuts, and seeded random state
// generators. Everything here is deliberately written against the dense
// matrix representation so the closed-form code paths are checked against
// independent arithmetic.

#include <array>
#include <cmath>
#include <random>

#include "qcorr/smallmat.hpp"
#include "qcorr/states.hpp"

namespace testsup {

using qcorr::CMat2;
using qcorr::CMat4;
using qcorr::cplx;

inline CMat2 pauli(int k) {
    CMat2 m;
    switch (k) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0); break;
    default: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    }
    return m;
}

inline CMat4 kron(const CMat2& a, const CMat2& b) {
    CMat4 k;
    for (int ra = 0; ra < 2; ++ra)
        for (int ca = 0; ca < 2; ++ca)
            for (int rb = 0; rb < 2; ++rb)
                for (int cb = 0; cb < 2; ++cb)
                    k(2 * ra + rb, 2 * ca + cb) = a(ra, ca) * b(rb, cb);
    return k;
}

struct FanoReference {
    std::array<double, 3> r{};
    std::array<double, 3> s{};
    std::array<std::array<double, 3>, 3> T{};
};

// r_m = tr(rho sigma_m (x) I), s_n = tr(rho I (x) sigma_n),
// T_mn = tr(rho sigma_m (x) sigma_n); imaginary parts vanish for Hermitian
// input and are dropped.
inline FanoReference fano_reference(const CMat4& rho) {
    FanoReference f;
    for (int m = 1; m <= 3; ++m) {
        f.r[m - 1] = (rho * kron(pauli(m), pauli(0))).trace().real();
        f.s[m - 1] = (rho * kron(pauli(0), pauli(m))).trace().real();
        for (int n = 1; n <= 3; ++n)
            f.T[m - 1][n - 1] = (rho * kron(pauli(m), pauli(n))).trace().real();
    }
    return f;
}

// Random X state with block determinants bounded away from zero; margin < 1
// shrinks the off-diagonal moduli below the positivity limit.
inline qcorr::XState random_xstate(std::mt19937_64& rng, double margin = 0.98) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::exponential_distribution<double> expo(1.0);
    std::array<double, 4> d{};
    double sum = 0.0;
    for (double& x : d) {
        x = expo(rng);
        sum += x;
    }
    for (double& x : d)
        x /= sum;
    const double m14 = std::sqrt(d[0] * d[3]) * uni(rng) * margin;
    const double m23 = std::sqrt(d[1] * d[2]) * uni(rng) * margin;
    const double p14 = 2.0 * M_PI * uni(rng);
    const double p23 = 2.0 * M_PI * uni(rng);
    return qcorr::XState(d[0], d[1], d[2], d[3], std::polar(m14, p14), std::polar(m23, p23));
}

// Random full-rank density matrix (normalized G G^dagger with Gaussian G).
inline CMat4 random_density(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat4 g;
    for (auto& x : g.e)
        x = cplx(gauss(rng), gauss(rng));
    CMat4 rho = g * g.adjoint();
    const double tr = rho.trace().real();
    for (auto& x : rho.e)
        x /= tr;
    return rho;
}

// Random Hermitian matrix with entries of order one.
inline CMat4 random_hermitian(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat4 g;
    for (auto& x : g.e)
        x = cplx(gauss(rng), gauss(rng));
    CMat4 h = g + g.adjoint();
    for (auto& x : h.e)
        x *= 0.5;
    return h;
}

inline std::array<cplx, 4> random_pure4(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<cplx, 4> v{};
    double n2 = 0.0;
    for (auto& x : v) {
        x = cplx(gauss(rng), gauss(rng));
        n2 += std::norm(x);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& x : v)
        x *= inv;
    return v;
}

// Fixed asymmetric X state used for frozen expected values across suites.
inline qcorr::XState reference_xstate() {
    return qcorr::XState(0.35, 0.28, 0.22, 0.15,
                         0.9 * std::sqrt(0.35 * 0.15) * std::polar(1.0, 0.7),
                         0.8 * std::sqrt(0.28 * 0.22) * std::polar(1.0, -1.9));
}

} // namespace testsup
