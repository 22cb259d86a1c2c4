#include "qcorr/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace qcorr {

namespace {

constexpr double pi = std::numbers::pi;

Polar to_polar(cplx z) {
    const double mod = std::abs(z);
    return {mod, mod == 0.0 ? 0.0 : std::arg(z)};
}

// Minus-branch entries shared by both exactly solvable families, branch
// selected by the caller through tau and phi_gamma.
Polar case1_a(double tau) {
    const double c2t = std::cosh(2.0 * tau);
    const double mod = std::sqrt(0.5 * (1.0 + 1.0 / c2t));
    return {mod, -std::atan(std::tanh(tau)) - tau};
}

Polar case1_b(double tau, double phi_gamma) {
    const double c2t = std::cosh(2.0 * tau);
    const double mod = std::sqrt(0.5 * (1.0 - 1.0 / c2t));
    if (mod == 0.0)
        return {0.0, 0.0};
    return {mod, phi_gamma - std::atan(std::tanh(tau)) + tau - pi / 2.0};
}

void require_nonnegative_tau(double tau_plus, double tau_minus) {
    if (tau_plus < 0.0 || tau_minus < 0.0)
        throw ParamOutOfRange("propagator parameters require tau >= 0");
}

} // namespace

cplx Couplings::gamma_plus() const {
    return {gamma11 - gamma22, -(gamma12 + gamma21)};
}

cplx Couplings::gamma_minus() const {
    return {gamma11 + gamma22, -(-gamma12 + gamma21)};
}

double Couplings::abs_gamma_plus() const {
    return std::abs(gamma_plus());
}

double Couplings::abs_gamma_minus() const {
    return std::abs(gamma_minus());
}

double Couplings::phi_gamma_plus() const {
    return std::atan2(-(gamma12 + gamma21), gamma11 - gamma22);
}

double Couplings::phi_gamma_minus() const {
    return std::atan2(-(-gamma12 + gamma21), gamma11 + gamma22);
}

void Scenario::validate() const {
    if (!std::isfinite(couplings.gamma11) || !std::isfinite(couplings.gamma22) ||
        !std::isfinite(couplings.gamma33) || !std::isfinite(couplings.gamma12) ||
        !std::isfinite(couplings.gamma21) || !std::isfinite(beta))
        throw ConfigInvalid("Scenario: couplings must be finite");
    if (couplings.abs_gamma_minus() == 0.0)
        throw ConfigInvalid("Scenario: |Gamma-| must be positive");
    if (kind == ScenarioKind::ConstantField) {
        if (couplings.gamma11 != couplings.gamma22)
            throw ConfigInvalid("Scenario: constant fields require gamma11 == gamma22");
        if (couplings.gamma12 != couplings.gamma21)
            throw ConfigInvalid("Scenario: constant fields require gamma12 == gamma21");
        if (couplings.gamma11 <= 0.0)
            throw ConfigInvalid("Scenario: constant fields require gamma11 = gamma22 = c > 0");
    }
}

EvolutionParams params_case1(double tau_plus, double tau_minus, const Couplings& couplings) {
    require_nonnegative_tau(tau_plus, tau_minus);
    EvolutionParams p;
    p.tau_plus = tau_plus;
    p.tau_minus = tau_minus;
    p.a_plus = case1_a(tau_plus);
    p.b_plus = case1_b(tau_plus, couplings.phi_gamma_plus());
    p.a_minus = case1_a(tau_minus);
    p.b_minus = case1_b(tau_minus, couplings.phi_gamma_minus());
    return p;
}

EvolutionParams params_case2(double tau_plus, double tau_minus, const Couplings& couplings) {
    require_nonnegative_tau(tau_plus, tau_minus);
    EvolutionParams p;
    p.tau_plus = tau_plus;
    p.tau_minus = tau_minus;
    p.a_plus = case1_a(tau_plus);
    p.b_plus = case1_b(tau_plus, couplings.phi_gamma_plus());

    const double half_angle = std::atan(std::tanh(tau_minus / 2.0));
    const double swing = std::sinh(tau_minus) / 2.0;
    p.a_minus = {1.0 / std::cosh(tau_minus), -half_angle - swing};
    const double mb = std::tanh(tau_minus);
    p.b_minus = mb == 0.0
                    ? Polar{0.0, 0.0}
                    : Polar{mb, couplings.phi_gamma_minus() - half_angle + swing - pi / 2.0};
    return p;
}

EvolutionParams params_constant(double t, const Scenario& scenario) {
    if (scenario.kind != ScenarioKind::ConstantField)
        throw WrongScenarioKind("params_constant: scenario kind is not ConstantField");
    scenario.validate();
    if (t < 0.0)
        throw ParamOutOfRange("params_constant: t must be >= 0");

    const double c = scenario.couplings.gamma11;
    const double omega_minus = scenario.beta * c;
    const double omega_plus = 0.0;

    const auto branch = [t](double omega, cplx gamma) -> std::pair<Polar, Polar> {
        const double nu = std::sqrt(omega * omega + std::norm(gamma));
        if (nu == 0.0)
            return {Polar{1.0, 0.0}, Polar{0.0, 0.0}};
        const double tau = nu * t;
        const cplx a = cplx(std::cos(tau), 0.0) - cplx(0.0, 1.0) * (omega / nu) * std::sin(tau);
        const cplx b = -cplx(0.0, 1.0) * (gamma / nu) * std::sin(tau);
        return {to_polar(a), to_polar(b)};
    };

    EvolutionParams p;
    const auto [ap, bp] = branch(omega_plus, scenario.couplings.gamma_plus());
    const auto [am, bm] = branch(omega_minus, scenario.couplings.gamma_minus());
    p.a_plus = ap;
    p.b_plus = bp;
    p.a_minus = am;
    p.b_minus = bm;
    p.tau_plus = std::sqrt(omega_plus * omega_plus + std::norm(scenario.couplings.gamma_plus())) * t;
    p.tau_minus = std::sqrt(omega_minus * omega_minus + std::norm(scenario.couplings.gamma_minus())) * t;
    return p;
}

XState evolve_xstate(const XState& state, const EvolutionParams& p) {
    const cplx ap = p.a_plus.value();
    const cplx bp = p.b_plus.value();
    const cplx am = p.a_minus.value();
    const cplx bm = p.b_minus.value();

    const double nap = std::norm(ap), nbp = std::norm(bp);
    const double nam = std::norm(am), nbm = std::norm(bm);

    const double outer_mix = 2.0 * (ap * std::conj(bp) * state.rho14()).real();
    const double inner_mix = 2.0 * (am * std::conj(bm) * state.rho23()).real();

    const double rho11 = nap * state.rho11() + nbp * state.rho44() + outer_mix;
    const double rho44 = nbp * state.rho11() + nap * state.rho44() - outer_mix;
    const double rho22 = nam * state.rho22() + nbm * state.rho33() + inner_mix;
    const double rho33 = nbm * state.rho22() + nam * state.rho33() - inner_mix;

    const cplx rho14 = ap * ap * state.rho14() - bp * bp * std::conj(state.rho14())
                       - ap * bp * (state.rho11() - state.rho44());
    const cplx rho23 = am * am * state.rho23() - bm * bm * std::conj(state.rho23())
                       - am * bm * (state.rho22() - state.rho33());

    // Unitary conjugation preserves all X-state invariants exactly; the loose
    // 1e-9 tolerance only flags genuine implementation bugs.
    return XState(rho11, rho22, rho33, rho44, rho14, rho23, 1e-9);
}

SingletAmplitudes evolved_singlet(const EvolutionParams& p, double gamma33_t_over_hbar) {
    const cplx am = p.a_minus.value();
    const cplx bm = p.b_minus.value();
    const cplx phase = std::polar(1.0, gamma33_t_over_hbar);
    const double inv_sqrt2 = std::sqrt(0.5);
    return {phase * (am - bm) * inv_sqrt2,
            -phase * (std::conj(am) + std::conj(bm)) * inv_sqrt2};
}

BellAmplitudes asymptotic_state(ScenarioKind kind, double tau_minus) {
    if (tau_minus < 0.0)
        throw ParamOutOfRange("asymptotic_state: tau_minus must be >= 0");
    const double inv_sqrt2 = std::sqrt(0.5);
    switch (kind) {
    case ScenarioKind::Case1:
        return {cplx(0.0, -1.0) * std::polar(1.0, -2.0 * tau_minus) * inv_sqrt2,
                cplx(inv_sqrt2, 0.0)};
    case ScenarioKind::Case2: {
        const double theta = std::sinh(tau_minus) / 2.0 - 3.0 * pi / 4.0;
        return {cplx(-std::cos(theta), 0.0), cplx(0.0, -std::sin(theta))};
    }
    default:
        throw WrongScenarioKind("asymptotic_state: constant fields have no trapping limit");
    }
}

FieldPair field_profiles(ScenarioKind kind, double tau, const Couplings& couplings) {
    if (tau < 0.0)
        throw ParamOutOfRange("field_profiles: tau must be >= 0");
    const double gm = couplings.abs_gamma_minus();
    if (gm == 0.0)
        throw ParamOutOfRange("field_profiles: |Gamma-| must be positive");
    const double gp = couplings.abs_gamma_plus();
    const double tau_plus = (gp / gm) * tau;

    const double common = gp / std::cosh(2.0 * tau_plus);
    double split = 0.0;
    switch (kind) {
    case ScenarioKind::Case1:
        split = gm / std::cosh(2.0 * tau);
        break;
    case ScenarioKind::Case2:
        split = (gm / 4.0) * (3.0 / std::cosh(tau) - std::cosh(tau));
        break;
    default:
        throw WrongScenarioKind("field_profiles: defined for Case1 and Case2 only");
    }
    return {common + split, common - split};
}

EvolutionParams params_for_tau(const Scenario& scenario, double tau_minus) {
    scenario.validate();
    switch (scenario.kind) {
    case ScenarioKind::Case1:
    case ScenarioKind::Case2: {
        const double ratio = scenario.couplings.abs_gamma_plus() / scenario.couplings.abs_gamma_minus();
        const double tau_plus = ratio * tau_minus;
        return scenario.kind == ScenarioKind::Case1
                   ? params_case1(tau_plus, tau_minus, scenario.couplings)
                   : params_case2(tau_plus, tau_minus, scenario.couplings);
    }
    default: {
        const double c = scenario.couplings.gamma11;
        const double nu_minus = c * std::sqrt(scenario.beta * scenario.beta + 4.0);
        return params_constant(tau_minus / nu_minus, scenario);
    }
    }
}

double gamma33_phase(const Scenario& scenario, double tau_minus) {
    scenario.validate();
    double t = 0.0;
    if (scenario.kind == ScenarioKind::ConstantField) {
        const double c = scenario.couplings.gamma11;
        t = tau_minus / (c * std::sqrt(scenario.beta * scenario.beta + 4.0));
    } else {
        t = tau_minus / scenario.couplings.abs_gamma_minus();
    }
    return scenario.couplings.gamma33 * t;
}

} // namespace qcorr
