#pragma once

#include <complex>

#include "qcorr/states.hpp"

namespace qcorr {

// Spin-spin coupling constants of the two-qubit Hamiltonian
//   H = hw_A sigma3(x)I + hw_B I(x)sigma3 + sum_mn gamma_mn sigma_m(x)sigma_n
// restricted to the gamma11, gamma22, gamma33, gamma12, gamma21 entries that
// keep the propagator X shaped. The dynamics splits into two 2x2 blocks with
// effective couplings Gamma_pm = (gamma11 -+ gamma22) - i(+-gamma12 + gamma21).
struct Couplings {
    double gamma11 = 0.0;
    double gamma22 = 0.0;
    double gamma33 = 0.0;
    double gamma12 = 0.0;
    double gamma21 = 0.0;

    cplx gamma_plus() const;
    cplx gamma_minus() const;
    double abs_gamma_plus() const;
    double abs_gamma_minus() const;
    // Phases via atan2(-(+-gamma12 + gamma21), gamma11 -+ gamma22).
    double phi_gamma_plus() const;
    double phi_gamma_minus() const;
};

// Complex number stored as modulus and phase.
struct Polar {
    double mod = 0.0;
    double phase = 0.0;

    cplx value() const { return std::polar(mod, phase); }
};

// Propagator entries of the X-shaped evolution operator
//
//     [ a+    0     0    b+  ]
//     [ 0     a-    b-   0   ]
//     [ 0    -b-*   a-*  0   ]
//     [-b+*   0     0    a+* ]
//
// in SU(2) form: |a_pm|^2 + |b_pm|^2 = 1 and at tau_pm = 0 the entries are
// a_pm = 1, b_pm = 0. The block phases exp(-+i gamma33 t) drop out of density
// matrix evolution and are supplied separately where amplitudes need them.
struct EvolutionParams {
    Polar a_plus;
    Polar a_minus;
    Polar b_plus;
    Polar b_minus;
    double tau_plus = 0.0;
    double tau_minus = 0.0;
};

enum class ScenarioKind { Case1, Case2, ConstantField };

// A runnable field configuration. For ConstantField the couplings must
// satisfy gamma11 == gamma22 == c > 0 and gamma12 == gamma21, with the
// detuning set through Omega_minus = beta * c (and Omega_plus = 0, i.e. the
// two local fields are equal and opposite).
struct Scenario {
    ScenarioKind kind = ScenarioKind::Case1;
    Couplings couplings{};
    double beta = 1.0;

    // Throws ConfigInvalid when the couplings are unusable for this kind.
    void validate() const;
};

// Exactly solvable driving, first family:
//   |a_pm| = sqrt((cosh 2tau_pm + 1)/(2 cosh 2tau_pm)),
//   |b_pm| = sqrt((cosh 2tau_pm - 1)/(2 cosh 2tau_pm)),
//   phi_a pm = -arctan(tanh tau_pm) - tau_pm,
//   phi_b pm = phi_Gamma pm - arctan(tanh tau_pm) + tau_pm - pi/2,
// with tau_pm = |Gamma_pm| t. Throws ParamOutOfRange for negative tau.
EvolutionParams params_case1(double tau_plus, double tau_minus, const Couplings& couplings);

// Exactly solvable driving, second family: the plus branch coincides with
// params_case1; the minus branch is
//   |a-| = 1/cosh tau-, |b-| = tanh tau-,
//   phi_a- = -arctan(tanh(tau-/2)) - sinh(tau-)/2,
//   phi_b- = phi_Gamma- - arctan(tanh(tau-/2)) + sinh(tau-)/2 - pi/2.
EvolutionParams params_case2(double tau_plus, double tau_minus, const Couplings& couplings);

// Constant fields: a_pm = cos(tau_pm) - i (Omega_pm/nu_pm) sin(tau_pm),
// b_pm = -i (Gamma_pm/nu_pm) sin(tau_pm) with nu_pm = sqrt(Omega_pm^2 +
// |Gamma_pm|^2) and tau_pm = nu_pm t; stored without the global block phase.
// With Omega- = beta*c and |Gamma-| = 2c this gives Omega-/nu- =
// beta/sqrt(beta^2+4) and |Gamma-|/nu- = 2/sqrt(beta^2+4).
// Throws WrongScenarioKind unless scenario.kind == ConstantField.
EvolutionParams params_constant(double t, const Scenario& scenario);

// Conjugates an X state by the X-shaped propagator:
//   rho11' = |a+|^2 rho11 + |b+|^2 rho44 + 2Re[a+ b+* rho14]
//   rho14' = a+^2 rho14 - b+^2 rho14* - a+ b+ (rho11 - rho44)
//   rho22' = |a-|^2 rho22 + |b-|^2 rho33 + 2Re[a- b-* rho23]
//   rho23' = a-^2 rho23 - b-^2 rho23* - a- b- (rho22 - rho33)
//   rho33' = |b-|^2 rho22 + |a-|^2 rho33 - 2Re[a- b-* rho23]
//   rho44' = |b+|^2 rho11 + |a+|^2 rho44 - 2Re[a+ b+* rho14]
// The result is validated at a 1e-9 tolerance; violations throw StateInvalid
// and indicate an implementation bug rather than user error.
XState evolve_xstate(const XState& state, const EvolutionParams& p);

struct SingletAmplitudes {
    cplx c01;
    cplx c10;
};

// Amplitudes of the evolved singlet (|01> - |10>)/sqrt(2):
//   c01 = e^{i gamma33 t} (a- - b-)/sqrt(2),
//   c10 = -e^{i gamma33 t} (a-* + b-*)/sqrt(2).
SingletAmplitudes evolved_singlet(const EvolutionParams& p, double gamma33_t_over_hbar);

struct BellAmplitudes {
    cplx psi_plus;
    cplx psi_minus;
};

// Large-tau limit of the evolved singlet in the Bell basis
// |Psi_pm> = (|01> +- |10>)/sqrt(2).
//   Case1: (-i e^{-2i tau}|Psi+> + |Psi->)/sqrt(2)
//   Case2: -cos(theta)|Psi+> - i sin(theta)|Psi->, theta = sinh(tau)/2 - 3pi/4
// Throws WrongScenarioKind for ConstantField (no nontrivial limit).
BellAmplitudes asymptotic_state(ScenarioKind kind, double tau_minus);

struct FieldPair {
    double omega_a = 0.0;
    double omega_b = 0.0;
};

// Local field profiles that generate the exactly solvable propagators,
// evaluated at tau (= tau_minus, with tau_plus scaled by |Gamma+|/|Gamma-|).
//   Case1: hw_{A,B} = |Gamma+| sech(2 tau+) +- |Gamma-| sech(2 tau-)
//   Case2: hw_{A,B} = |Gamma+| sech(2 tau+) +- (|Gamma-|/4)(3 sech tau- - cosh tau-)
// Values are in hbar = 1 units. Throws WrongScenarioKind for ConstantField.
FieldPair field_profiles(ScenarioKind kind, double tau, const Couplings& couplings);

// Convenience used by sweep drivers: propagator parameters at a given
// tau_minus for any scenario kind (tau_plus and physical t derived from the
// couplings), and the accumulated gamma33 phase at that tau_minus.
EvolutionParams params_for_tau(const Scenario& scenario, double tau_minus);
double gamma33_phase(const Scenario& scenario, double tau_minus);

} // namespace qcorr
