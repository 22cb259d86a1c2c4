#include "qcorr/states.hpp"

#include <cmath>

namespace qcorr {

namespace {

// arg z with the zero-modulus convention arg 0 = 0.
double safe_arg(cplx z) {
    if (z.real() == 0.0 && z.imag() == 0.0)
        return 0.0;
    return std::arg(z);
}

} // namespace

XState::XState(double rho11, double rho22, double rho33, double rho44,
               cplx rho14, cplx rho23, double tol)
    : rho11_(rho11), rho22_(rho22), rho33_(rho33), rho44_(rho44),
      rho14_(rho14), rho23_(rho23) {
    const double trace = rho11 + rho22 + rho33 + rho44;
    if (std::abs(trace - 1.0) > tol)
        throw StateInvalid("XState: trace deviates from 1");
    if (rho11 < -tol || rho22 < -tol || rho33 < -tol || rho44 < -tol)
        throw StateInvalid("XState: negative diagonal entry");
    if (rho11 * rho44 - std::norm(rho14) < -tol)
        throw StateInvalid("XState: outer block violates positivity");
    if (rho22 * rho33 - std::norm(rho23) < -tol)
        throw StateInvalid("XState: inner block violates positivity");
}

CMat4 XState::dense() const {
    CMat4 m;
    m(0, 0) = rho11_;
    m(1, 1) = rho22_;
    m(2, 2) = rho33_;
    m(3, 3) = rho44_;
    m(0, 3) = rho14_;
    m(3, 0) = std::conj(rho14_);
    m(1, 2) = rho23_;
    m(2, 1) = std::conj(rho23_);
    return m;
}

XState make_werner(double alpha) {
    if (alpha < -1.0 / 3.0 || alpha > 1.0)
        throw AlphaOutOfRange("make_werner: alpha outside [-1/3, 1]");
    // Route through the generalized family with mu = -nu = sqrt(1/2) so the
    // two constructors produce bit-identical entries.
    const double inv_sqrt2 = std::sqrt(0.5);
    return make_generalized_werner({alpha, cplx(inv_sqrt2, 0.0), cplx(-inv_sqrt2, 0.0)});
}

XState make_generalized_werner(const GeneralizedWernerSpec& spec) {
    if (spec.alpha < -1.0 / 3.0 || spec.alpha > 1.0)
        throw SpecInvalid("make_generalized_werner: alpha outside [-1/3, 1]");
    const double mu2 = std::norm(spec.mu);
    const double nu2 = std::norm(spec.nu);
    if (std::abs(mu2 + nu2 - 1.0) > 1e-12)
        throw SpecInvalid("make_generalized_werner: |mu|^2 + |nu|^2 != 1");

    const double a = spec.alpha;
    const double corner = (1.0 - a) / 4.0;
    return XState(corner,
                  corner + a * mu2,
                  corner + a * nu2,
                  corner,
                  cplx(0.0, 0.0),
                  a * spec.mu * std::conj(spec.nu));
}

FanoParams fano_decompose(const XState& state) {
    FanoParams f;
    const cplx r23 = state.rho23();
    const cplx r14 = state.rho14();

    f.r = state.rho11() + state.rho22() - state.rho33() - state.rho44();
    f.s = state.rho11() - state.rho22() + state.rho33() - state.rho44();
    f.T[0][0] = 2.0 * (r23 + r14).real();
    f.T[1][1] = 2.0 * (r23 - r14).real();
    f.T[0][1] = 2.0 * (r23 - r14).imag();
    f.T[1][0] = -2.0 * (r23 + r14).imag();
    f.T[2][2] = state.rho11() - state.rho22() - state.rho33() + state.rho44();
    f.canonical = false;
    return f;
}

CanonicalizeResult canonicalize(const XState& state) {
    const double phi14 = safe_arg(state.rho14());
    const double phi23 = safe_arg(state.rho23());

    XState canonical(state.rho11(), state.rho22(), state.rho33(), state.rho44(),
                     cplx(std::abs(state.rho14()), 0.0),
                     cplx(std::abs(state.rho23()), 0.0));
    return {canonical, (phi14 + phi23) / 2.0, (phi14 - phi23) / 2.0};
}

FanoParams fano_canonical(const XState& state) {
    const double m23 = std::abs(state.rho23());
    const double m14 = std::abs(state.rho14());

    FanoParams f = fano_decompose(canonicalize(state).canonical);
    f.canonical = true;
    f.c1 = 2.0 * (m23 + m14);
    f.c2 = 2.0 * (m23 - m14);
    f.c3 = f.T[2][2];
    return f;
}

} // namespace qcorr
