#include "qcorr/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace qcorr {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double xlog2x(double x) {
    if (x <= 0.0)
        return 0.0;
    return x * std::log2(x);
}

CMat4 hermitize(const CMat4& m) {
    CMat4 h;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

// Validates Hermiticity, positivity and unit trace at 1e-9 and returns the
// exactly Hermitian average used by all downstream linear algebra.
CMat4 require_density(const CMat4& rho, const char* who) {
    double defect = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            defect = std::max(defect, std::abs(rho(i, j) - std::conj(rho(j, i))));
    if (defect > 1e-9)
        throw NotDensityMatrix(std::string(who) + ": matrix is not Hermitian");

    const CMat4 h = hermitize(rho);
    if (std::abs(h.trace().real() - 1.0) > 1e-9)
        throw NotDensityMatrix(std::string(who) + ": trace deviates from 1");

    const HermitianEigen eig = hermitian_eigen(h);
    if (eig.values[0] < -1e-9)
        throw NotDensityMatrix(std::string(who) + ": negative eigenvalue");
    return h;
}

// sigma2 (x) sigma2, the two-qubit spin-flip matrix (real).
CMat4 spin_flip() {
    CMat4 y;
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

CMat4 conjugate_entries(const CMat4& m) {
    CMat4 c;
    for (std::size_t i = 0; i < 16; ++i)
        c.e[i] = std::conj(m.e[i]);
    return c;
}

// Eigenvalues of a Hermitian 2x2 matrix in closed form.
std::pair<double, double> eigen2(cplx m00, cplx m01, cplx m11) {
    const double mean = 0.5 * (m00.real() + m11.real());
    const double half = 0.5 * (m00.real() - m11.real());
    const double dev = std::sqrt(half * half + std::norm(m01));
    return {mean + dev, mean - dev};
}

double entropy2(cplx m00, cplx m01, cplx m11) {
    const auto [l1, l2] = eigen2(m00, m01, m11);
    return -xlog2x(l1) - xlog2x(l2);
}

// Conditional entropy of qubit A after projecting qubit B onto the
// direction (theta, phi), summed over both outcomes.
double conditional_entropy(const CMat4& rho, double theta, double phi) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);

    // Pi = (I + n.sigma)/2 and its complement.
    const cplx pp00(0.5 * (1.0 + nz), 0.0);
    const cplx pp11(0.5 * (1.0 - nz), 0.0);
    const cplx pp01(0.5 * nx, -0.5 * ny);

    double total = 0.0;
    for (int outcome = 0; outcome < 2; ++outcome) {
        const double sign = outcome == 0 ? 1.0 : -1.0;
        // Projector entries, with the complement given by I - Pi.
        const cplx q00 = outcome == 0 ? pp00 : cplx(1.0, 0.0) - pp00;
        const cplx q11 = outcome == 0 ? pp11 : cplx(1.0, 0.0) - pp11;
        const cplx q01 = sign * pp01;
        const cplx q10 = std::conj(q01);

        // M_A[a,a'] = sum_{b,b'} rho[2a+b, 2a'+b'] Pi[b',b]
        cplx m00 = 0.0, m01 = 0.0, m11 = 0.0;
        const cplx pi[2][2] = {{q00, q01}, {q10, q11}};
        for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp) {
                m00 += rho(b, bp) * pi[bp][b];
                m01 += rho(b, 2 + bp) * pi[bp][b];
                m11 += rho(2 + b, 2 + bp) * pi[bp][b];
            }

        const double p = (m00 + m11).real();
        if (p <= 1e-15)
            continue;
        // p * S(M/p) = -sum lambda log2(lambda/p)
        const auto [l1, l2] = eigen2(m00, m01, m11);
        const auto term = [p](double lam) {
            if (lam <= 0.0)
                return 0.0;
            return -lam * std::log2(lam / p);
        };
        total += term(l1) + term(l2);
    }
    return total;
}

} // namespace

double concurrence_wootters(const CMat4& rho) {
    const CMat4 h = require_density(rho, "concurrence_wootters");

    const CMat4 y = spin_flip();
    const CMat4 flipped = y * conjugate_entries(h) * y;
    const CMat4 sr = psd_sqrt(h);
    const CMat4 m = hermitize(sr * flipped * sr);

    const HermitianEigen eig = hermitian_eigen(m);
    std::array<double, 4> roots{};
    for (std::size_t i = 0; i < 4; ++i)
        roots[i] = std::sqrt(std::max(0.0, eig.values[i]));
    std::sort(roots.begin(), roots.end(), std::greater<double>());
    return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

double discord_bruteforce(const CMat4& rho, const MeasurementGrid& grid) {
    if (grid.n_theta < 2 || grid.n_phi < 2 || grid.refinement_rounds < 0)
        throw ConfigInvalid("discord_bruteforce: grid too small");
    const CMat4 h = require_density(rho, "discord_bruteforce");

    // Marginals.
    cplx a00 = 0.0, a01 = 0.0, a11 = 0.0;
    cplx b00 = 0.0, b01 = 0.0, b11 = 0.0;
    for (int b = 0; b < 2; ++b) {
        a00 += h(b, b);
        a01 += h(b, 2 + b);
        a11 += h(2 + b, 2 + b);
    }
    for (int a = 0; a < 2; ++a) {
        b00 += h(2 * a, 2 * a);
        b01 += h(2 * a, 2 * a + 1);
        b11 += h(2 * a + 1, 2 * a + 1);
    }
    const double entropy_a = entropy2(a00, a01, a11);
    const double entropy_b = entropy2(b00, b01, b11);

    double entropy_ab = 0.0;
    for (double lam : hermitian_eigen(h).values)
        entropy_ab -= xlog2x(std::max(0.0, lam));

    const double mutual_info = entropy_a + entropy_b - entropy_ab;

    // Coarse scan.
    double best = std::numeric_limits<double>::infinity();
    double best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i < grid.n_theta; ++i) {
        const double theta = std::numbers::pi * i / (grid.n_theta - 1);
        for (int j = 0; j < grid.n_phi; ++j) {
            const double phi = two_pi * j / grid.n_phi;
            const double v = conditional_entropy(h, theta, phi);
            if (v < best) {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    // Local refinement, window shrinking by 4 around the incumbent. The
    // incumbent is never discarded, so the bound is monotone in rounds.
    double win_theta = std::numbers::pi;
    double win_phi = two_pi;
    constexpr int local = 17;
    for (int round = 0; round < grid.refinement_rounds; ++round) {
        win_theta /= 4.0;
        win_phi /= 4.0;
        const double t0 = std::clamp(best_theta - win_theta / 2.0, 0.0, std::numbers::pi - win_theta);
        double next_best = best, next_theta = best_theta, next_phi = best_phi;
        for (int i = 0; i < local; ++i) {
            const double theta = t0 + win_theta * i / (local - 1);
            for (int j = 0; j < local; ++j) {
                double phi = best_phi - win_phi / 2.0 + win_phi * j / (local - 1);
                phi = std::fmod(phi + two_pi, two_pi);
                const double v = conditional_entropy(h, theta, phi);
                if (v < next_best) {
                    next_best = v;
                    next_theta = theta;
                    next_phi = phi;
                }
            }
        }
        best = next_best;
        best_theta = next_theta;
        best_phi = next_phi;
    }

    const double classical = entropy_a - best;
    return mutual_info - classical;
}

double fidelity_uhlmann(const CMat4& rho1, const CMat4& rho2) {
    const CMat4 h1 = require_density(rho1, "fidelity_uhlmann");
    const CMat4 h2 = require_density(rho2, "fidelity_uhlmann");

    const CMat4 s = psd_sqrt(h1);
    const CMat4 m = hermitize(s * h2 * s);
    double tr = 0.0;
    for (double lam : hermitian_eigen(m).values)
        tr += std::sqrt(std::max(0.0, lam));
    return tr * tr;
}

CMat4 dense_propagate(const CMat4& rho, const EvolutionParams& p, double gamma33_t_over_hbar) {
    const double def_plus = std::abs(p.a_plus.mod * p.a_plus.mod + p.b_plus.mod * p.b_plus.mod - 1.0);
    const double def_minus = std::abs(p.a_minus.mod * p.a_minus.mod + p.b_minus.mod * p.b_minus.mod - 1.0);
    if (def_plus > 1e-10 || def_minus > 1e-10)
        throw NotUnitary("dense_propagate: |a|^2 + |b|^2 deviates from 1");

    const cplx ep = std::polar(1.0, -gamma33_t_over_hbar);
    const cplx em = std::polar(1.0, gamma33_t_over_hbar);
    const cplx ap = p.a_plus.value();
    const cplx bp = p.b_plus.value();
    const cplx am = p.a_minus.value();
    const cplx bm = p.b_minus.value();

    CMat4 u;
    u(0, 0) = ep * ap;
    u(0, 3) = ep * bp;
    u(1, 1) = em * am;
    u(1, 2) = em * bm;
    u(2, 1) = -em * std::conj(bm);
    u(2, 2) = em * std::conj(am);
    u(3, 0) = -ep * std::conj(bp);
    u(3, 3) = ep * std::conj(ap);

    return u * rho * u.adjoint();
}

} // namespace qcorr
