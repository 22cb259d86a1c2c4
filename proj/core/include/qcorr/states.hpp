#pragma once

#include <array>
#include <complex>

#include "qcorr/smallmat.hpp"

namespace qcorr {

// Two-qubit X state in the ordered product basis |00>, |01>, |10>, |11>.
// Only the main diagonal and the anti-diagonal may be populated:
//
//     [ rho11   0      0     rho14 ]
//     [ 0      rho22  rho23  0     ]
//     [ 0      rho23* rho33  0     ]
//     [ rho14*  0      0     rho44 ]
//
// Construction validates unit trace, nonnegative diagonals and the two
// block-positivity conditions rho11*rho44 >= |rho14|^2 and
// rho22*rho33 >= |rho23|^2 within `tol` and throws StateInvalid otherwise.
class XState {
public:
    XState(double rho11, double rho22, double rho33, double rho44,
           cplx rho14, cplx rho23, double tol = 1e-12);

    double rho11() const { return rho11_; }
    double rho22() const { return rho22_; }
    double rho33() const { return rho33_; }
    double rho44() const { return rho44_; }
    cplx rho14() const { return rho14_; }
    cplx rho23() const { return rho23_; }

    CMat4 dense() const;

private:
    double rho11_, rho22_, rho33_, rho44_;
    cplx rho14_, rho23_;
};

// Bloch vectors and correlation matrix of rho =
// (1/4)(I(x)I + r.sigma(x)I + I(x)s.sigma + sum_mn T_mn sigma_m(x)sigma_n).
// For canonical == true the surviving correlation entries are c1, c2, c3.
struct FanoParams {
    double r = 0.0;
    double s = 0.0;
    std::array<std::array<double, 3>, 3> T{};
    bool canonical = false;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

// Parameters of the generalized Werner family
//   eta = (1-alpha)/4 I + alpha |xi><xi|,  |xi> = mu|01> + nu|10>,
// with alpha in [-1/3, 1] and |mu|^2 + |nu|^2 = 1 (within 1e-12).
struct GeneralizedWernerSpec {
    double alpha = 0.0;
    cplx mu{};
    cplx nu{};
};

// Werner state: rho11 = rho44 = (1-alpha)/4, rho22 = rho33 = (1+alpha)/4,
// rho23 = -alpha/2. Throws AlphaOutOfRange outside [-1/3, 1].
XState make_werner(double alpha);

// Generalized Werner state: rho11 = rho44 = (1-alpha)/4,
// rho22 = (1-alpha)/4 + alpha|mu|^2, rho33 = (1-alpha)/4 + alpha|nu|^2,
// rho23 = alpha mu nu*. Throws SpecInvalid for invalid parameters.
XState make_generalized_werner(const GeneralizedWernerSpec& spec);

// Fano parameters of an X state:
//   r = rho11+rho22-rho33-rho44, s = rho11-rho22+rho33-rho44,
//   T11 = 2Re[rho23+rho14], T22 = 2Re[rho23-rho14],
//   T12 = 2Im[rho23-rho14], T21 = -2Im[rho23+rho14],
//   T33 = rho11-rho22-rho33+rho44, all other entries zero.
FanoParams fano_decompose(const XState& state);

struct CanonicalizeResult {
    XState canonical;
    double phase_a = 0.0; // (arg rho14 + arg rho23) / 2
    double phase_b = 0.0; // (arg rho14 - arg rho23) / 2
};

// Local unitary exp(-i phase_a sigma3/2) (x) exp(-i phase_b sigma3/2) turning
// rho14 and rho23 real nonnegative; diagonals are untouched. Reapplying the
// inverse rotation to the canonical state reproduces the input.
CanonicalizeResult canonicalize(const XState& state);

// Fano parameters of the canonical form: r and s as in fano_decompose,
// c1 = 2(|rho23|+|rho14|), c2 = 2(|rho23|-|rho14|), c3 = T33.
FanoParams fano_canonical(const XState& state);

} // namespace qcorr
