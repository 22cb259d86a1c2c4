#pragma once

#include <array>

#include "qcorr/dynamics.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// u(x) = -((1-x)/2) log2(1-x) - ((1+x)/2) log2(1+x) on [-1, 1], even in x,
// with u(0) = 0 and u(1) = -1; the 0 log 0 limit is taken as 0.
double entropy_u(double x);

// Concurrence of a pure two-qubit state a|00> + b|01> + c|10> + d|11>:
// C = 2|ad - bc|. Throws NotNormalized when the amplitudes deviate from unit
// norm beyond 1e-10.
double concurrence_pure(cplx a, cplx b, cplx c, cplx d);

// Concurrence of an X state:
// C = 2 max{0, |rho23| - sqrt(rho11 rho44), |rho14| - sqrt(rho22 rho33)}.
double concurrence_x(const XState& state);

// Concurrence of the generalized Werner state as a function of alpha and
// |mu|: C = max{0, 2|alpha||mu|sqrt(1-|mu|^2) - (1-alpha)/2}.
// Throws ParamOutOfRange for alpha outside [-1/3, 1] or |mu| outside [0, 1].
double concurrence_eta(double alpha, double mu_abs);

// Critical mixing parameter below which the generalized Werner state is
// separable: alpha* = 1 / (1 + 4|mu|sqrt(1-|mu|^2)).
double separability_boundary(double mu_abs);

// Closed-form concurrence of the evolved Werner state.
//   Case1: max{0, |alpha| sqrt(1 - tanh^2(2 tau) sin^2(2 tau)) - (1-alpha)/2}
//   Case2: max{0, |alpha| sqrt(1 - 4 tanh^2(tau) sech^2(tau) sin^2(sinh tau))
//              - (1-alpha)/2}
double concurrence_case1(double alpha, double tau_minus);
double concurrence_case2(double alpha, double tau_minus);

// Constant-field concurrence of the evolved Werner state. Equal to the
// propagator pipeline (params_constant -> evolve_xstate -> concurrence_x):
//   max{0, |alpha| sqrt(1 - (16 beta^2/(beta^2+4)^2) sin^4(tau)) - (1-alpha)/2}.
double concurrence_constant(double alpha, double beta, double tau_minus);

// Intermediate quantities of the X-state discord evaluation, in the
// canonical-form variables (r, s, c1, c2, c3).
struct DiscordIntermediates {
    std::array<double, 4> lambda{}; // eigenvalues, descending
    double u_r = 0.0;
    double u_s = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;
    double mutual_info = 0.0;
    double classical_corr = 0.0;
    double discord = 0.0;
};

struct DiscordResult {
    double value = 0.0;
    DiscordIntermediates intermediates{};
};

// Quantum discord of an X state under projective measurements of qubit B:
//   lambda_{1,2} = (1/4)[1 - c3 +- sqrt((r-s)^2 + (c1+c2)^2)]
//   lambda_{3,4} = (1/4)[1 + c3 +- sqrt((r+s)^2 + (c1-c2)^2)]
//   I = 2 + u(r) + u(s) + sum_j lambda_j log2 lambda_j
//   f1 = z-basis conditional entropy, f2 = 1 + u(sqrt(r^2+c1^2)),
//   f3 = 1 + u(sqrt(r^2+c2^2))
//   D = I - (S(rho_A) - min{f1, f2, f3}),  S(rho_A) = 1 + u(r).
DiscordResult discord_x(const XState& state);

// Fidelity between the initial singlet and the evolved pure state:
// F = |a-|^2 cos^2(phi_a-) + |b-|^2 sin^2(phi_b-).
double fidelity_pure_evolved(const EvolutionParams& p);

// Intermediates of the closed-form Werner/eta fidelity.
struct FidelityIntermediates {
    double p = 0.0;
    double q = 0.0;
    std::array<double, 4> zeta{}; // zeta1 = zeta2 = (1-alpha)^2/16, zeta3 >= zeta4
};

struct FidelityResult {
    double value = 0.0;
    FidelityIntermediates intermediates{};
};

// Uhlmann fidelity between the Werner state of parameter alpha and the
// generalized Werner state eta(alpha, mu, nu), in closed form:
//   P = (1/8)(1-alpha^2) + (1/8)alpha(1-alpha)|mu+nu|^2
//       + (1/8)alpha(1+3alpha)|mu-nu|^2
//   Q = (1/256)(1-alpha)^3(1+3alpha)
//       + (1/128)alpha(1+3alpha)(1-alpha)^2 (|mu+nu|^2 + |mu-nu|^2)
//   zeta_{3,4} = (P +- sqrt(P^2 - 4Q))/2,  F = ((1-alpha)/2 + sqrt(zeta3)
//       + sqrt(zeta4))^2.
// Throws SpecInvalid for alpha outside [-1/3, 1] or non-unit (mu, nu).
FidelityResult fidelity_werner_eta(double alpha, cplx mu, cplx nu);

// One sweep sample: correlation measures of the evolved Werner state at a
// given tau_minus.
struct CorrelationReport {
    double tau_minus = 0.0;
    double concurrence = 0.0;
    double discord = 0.0;
    double fidelity = 0.0;
};

} // namespace qcorr
