#include "qcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace qcorr {

namespace {

// x log2 x with the 0 log 0 := 0 convention; tiny negatives from round-off
// are treated as 0.
double xlog2x(double x) {
    if (x <= 0.0)
        return 0.0;
    return x * std::log2(x);
}

double check_alpha(double alpha, const char* who) {
    if (alpha < -1.0 / 3.0 || alpha > 1.0)
        throw ParamOutOfRange(std::string(who) + ": alpha outside [-1/3, 1]");
    return alpha;
}

// max{0, |alpha| * envelope - (1-alpha)/2}
double werner_concurrence_from_envelope(double alpha, double envelope) {
    return std::max(0.0, std::abs(alpha) * envelope - (1.0 - alpha) / 2.0);
}

} // namespace

double entropy_u(double x) {
    return -0.5 * (xlog2x(1.0 - x) + xlog2x(1.0 + x));
}

double concurrence_pure(cplx a, cplx b, cplx c, cplx d) {
    const double norm = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    if (std::abs(norm - 1.0) > 1e-10)
        throw NotNormalized("concurrence_pure: amplitudes are not normalized");
    return 2.0 * std::abs(a * d - b * c);
}

double concurrence_x(const XState& state) {
    const double inner = std::abs(state.rho23()) - std::sqrt(state.rho11() * state.rho44());
    const double outer = std::abs(state.rho14()) - std::sqrt(state.rho22() * state.rho33());
    return 2.0 * std::max({0.0, inner, outer});
}

double concurrence_eta(double alpha, double mu_abs) {
    check_alpha(alpha, "concurrence_eta");
    if (mu_abs < 0.0 || mu_abs > 1.0)
        throw ParamOutOfRange("concurrence_eta: |mu| outside [0, 1]");
    const double envelope = 2.0 * mu_abs * std::sqrt(1.0 - mu_abs * mu_abs);
    return werner_concurrence_from_envelope(alpha, envelope);
}

double separability_boundary(double mu_abs) {
    return 1.0 / (1.0 + 4.0 * mu_abs * std::sqrt(1.0 - mu_abs * mu_abs));
}

double concurrence_case1(double alpha, double tau_minus) {
    const double th = std::tanh(2.0 * tau_minus);
    const double sn = std::sin(2.0 * tau_minus);
    const double envelope = std::sqrt(1.0 - th * th * sn * sn);
    return werner_concurrence_from_envelope(alpha, envelope);
}

double concurrence_case2(double alpha, double tau_minus) {
    const double th = std::tanh(tau_minus);
    const double sh = 1.0 / std::cosh(tau_minus);
    const double sn = std::sin(std::sinh(tau_minus));
    const double envelope = std::sqrt(1.0 - 4.0 * th * th * sh * sh * sn * sn);
    return werner_concurrence_from_envelope(alpha, envelope);
}

double concurrence_constant(double alpha, double beta, double tau_minus) {
    const double w = beta * beta + 4.0;
    const double sn = std::sin(tau_minus);
    const double s2 = sn * sn;
    const double envelope = std::sqrt(1.0 - (16.0 * beta * beta / (w * w)) * s2 * s2);
    return werner_concurrence_from_envelope(alpha, envelope);
}

DiscordResult discord_x(const XState& state) {
    const FanoParams f = fano_canonical(state);
    const double r = f.r;
    const double s = f.s;
    const double c1 = f.c1;
    const double c2 = f.c2;
    const double c3 = f.c3;

    DiscordIntermediates w;

    const double root12 = std::sqrt((r - s) * (r - s) + (c1 + c2) * (c1 + c2));
    const double root34 = std::sqrt((r + s) * (r + s) + (c1 - c2) * (c1 - c2));
    w.lambda = {0.25 * (1.0 - c3 + root12),
                0.25 * (1.0 - c3 - root12),
                0.25 * (1.0 + c3 + root34),
                0.25 * (1.0 + c3 - root34)};
    std::sort(w.lambda.begin(), w.lambda.end(), std::greater<double>());
    for (double& lam : w.lambda) {
        if (lam < -1e-10)
            throw StateInvalid("discord_x: eigenvalue below -1e-10");
        if (lam < 0.0)
            lam = 0.0;
    }

    w.u_r = entropy_u(r);
    w.u_s = entropy_u(s);

    double joint = 0.0;
    for (double lam : w.lambda)
        joint += xlog2x(lam);
    w.mutual_info = 2.0 + w.u_r + w.u_s + joint;

    // z-basis measurement of B: four conditional weights are the canonical
    // diagonal entries, grouped by the outcome probabilities (1 +- s)/2.
    const auto cond_term = [](double q, double p) {
        if (q <= 0.0)
            return 0.0;
        return -q * std::log2(q / p);
    };
    const double p0 = (1.0 + s) / 2.0;
    const double p1 = (1.0 - s) / 2.0;
    w.f1 = cond_term(0.25 * (1.0 + r + s + c3), p0)
         + cond_term(0.25 * (1.0 - r + s - c3), p0)
         + cond_term(0.25 * (1.0 + r - s - c3), p1)
         + cond_term(0.25 * (1.0 - r - s + c3), p1);
    w.f2 = 1.0 + entropy_u(std::sqrt(r * r + c1 * c1));
    w.f3 = 1.0 + entropy_u(std::sqrt(r * r + c2 * c2));

    const double entropy_a = 1.0 + w.u_r;
    w.classical_corr = entropy_a - std::min({w.f1, w.f2, w.f3});
    w.discord = w.mutual_info - w.classical_corr;

    DiscordResult out;
    out.intermediates = w;
    out.value = std::max(0.0, w.discord);
    return out;
}

double fidelity_pure_evolved(const EvolutionParams& p) {
    const double ca = std::cos(p.a_minus.phase);
    const double sb = std::sin(p.b_minus.phase);
    return p.a_minus.mod * p.a_minus.mod * ca * ca
         + p.b_minus.mod * p.b_minus.mod * sb * sb;
}

FidelityResult fidelity_werner_eta(double alpha, cplx mu, cplx nu) {
    if (alpha < -1.0 / 3.0 || alpha > 1.0)
        throw SpecInvalid("fidelity_werner_eta: alpha outside [-1/3, 1]");
    if (std::abs(std::norm(mu) + std::norm(nu) - 1.0) > 1e-10)
        throw SpecInvalid("fidelity_werner_eta: |mu|^2 + |nu|^2 != 1");

    const double a = alpha;
    const double sum2 = std::norm(mu + nu);
    const double diff2 = std::norm(mu - nu);

    FidelityIntermediates w;
    w.p = (1.0 - a * a) / 8.0
        + a * (1.0 - a) * sum2 / 8.0
        + a * (1.0 + 3.0 * a) * diff2 / 8.0;
    w.q = std::pow(1.0 - a, 3) * (1.0 + 3.0 * a) / 256.0
        + a * (1.0 + 3.0 * a) * (1.0 - a) * (1.0 - a) * (sum2 + diff2) / 128.0;

    // P^2 - 4Q >= 0 up to round-off; clamp the tiny negative excursions.
    double disc = w.p * w.p - 4.0 * w.q;
    if (disc < 0.0) {
        if (disc < -1e-10)
            throw StateInvalid("fidelity_werner_eta: discriminant below -1e-10");
        disc = 0.0;
    }
    const double root = std::sqrt(disc);

    const double corner = (1.0 - a) * (1.0 - a) / 16.0;
    w.zeta = {corner, corner, 0.5 * (w.p + root), 0.5 * (w.p - root)};

    const double z3 = std::max(0.0, w.zeta[2]);
    const double z4 = std::max(0.0, w.zeta[3]);
    const double amplitude = (1.0 - a) / 2.0 + std::sqrt(z3) + std::sqrt(z4);

    FidelityResult out;
    out.intermediates = w;
    out.value = amplitude * amplitude;
    return out;
}

} // namespace qcorr
