#pragma once

#include "qcorr/dynamics.hpp"
#include "qcorr/smallmat.hpp"

namespace qcorr {

// Measurement-direction grid for the brute-force discord search:
// theta in [0, pi], phi in [0, 2 pi), refined `refinement_rounds` times by
// shrinking the search window by a factor of 4 around the incumbent minimum.
struct MeasurementGrid {
    int n_theta = 64;
    int n_phi = 128;
    int refinement_rounds = 3;
    double tolerance = 1e-3;
};

// Spin-flip concurrence of an arbitrary two-qubit density matrix:
// rho' = (sigma2 (x) sigma2) rho* (sigma2 (x) sigma2), nu_j the squared
// eigenvalues of sqrt(sqrt(rho) rho' sqrt(rho)) sorted descending,
// C = max{0, sqrt(nu1) - sqrt(nu2) - sqrt(nu3) - sqrt(nu4)}.
// Throws NotDensityMatrix for invalid input.
double concurrence_wootters(const CMat4& rho);

// Discord from an explicit minimization of the conditional entropy of A over
// projective measurements of B on the (theta, phi) grid. Upper-bounds the
// true discord; the bound is monotone non-increasing in refinement_rounds.
double discord_bruteforce(const CMat4& rho, const MeasurementGrid& grid);

// Uhlmann fidelity F = [tr sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2.
double fidelity_uhlmann(const CMat4& rho1, const CMat4& rho2);

// Dense conjugation rho -> U rho U^dagger with U assembled from the
// propagator entries and the block phases exp(-+i gamma33 t):
//
//     [ e a+    0       0      e b+  ]         e = exp(-i gamma33 t)
//     [ 0       f a-    f b-   0     ]         f = exp(+i gamma33 t)
//     [ 0      -f b-*   f a-*  0     ]
//     [-e b+*   0       0      e a+* ]
//
// Throws NotUnitary when |a_pm|^2 + |b_pm|^2 deviates from 1 beyond 1e-10.
CMat4 dense_propagate(const CMat4& rho, const EvolutionParams& p, double gamma33_t_over_hbar);

} // namespace qcorr
