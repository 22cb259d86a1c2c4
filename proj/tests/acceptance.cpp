// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
// Each criterion carries a wall-clock budget that is part of the check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/oracles.hpp"
#include "qcorr/states.hpp"

#include "support.hpp"

using namespace qcorr;

namespace {

const Couplings kSymmetric{0.5, 0.5, 0.0, 0.5, 0.5};

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<bool(std::string&)> check;
};

std::string fmt(const char* pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, value);
    return buf;
}

// 1: Werner concurrence equals the threshold form.
bool criterion_werner(std::string& detail) {
    double worst = 0.0;
    for (double alpha : {-1.0 / 3.0, 0.0, 1.0 / 3.0, 0.55, 1.0}) {
        const double expected = std::max(0.0, (3.0 * alpha - 1.0) / 2.0);
        worst = std::max(worst, std::abs(concurrence_x(make_werner(alpha)) - expected));
    }
    detail = "max dev " + fmt("%.2e", worst) + " (tol 1e-12)";
    return worst <= 1e-12;
}

// 2: evolved-singlet concurrence follows the first-family envelope and
// never vanishes.
bool criterion_case1_envelope(std::string& detail) {
    double worst = 0.0;
    double min_c = 1.0;
    for (int k = 0; k < 1000; ++k) {
        const double tau = 10.0 * k / 999.0;
        const SingletAmplitudes a = evolved_singlet(params_case1(tau, tau, kSymmetric), 0.0);
        const double c = concurrence_pure(0.0, a.c01, a.c10, 0.0);
        const double envelope =
            std::sqrt(1.0 - std::pow(std::tanh(2.0 * tau) * std::sin(2.0 * tau), 2));
        worst = std::max(worst, std::abs(c - envelope));
        min_c = std::min(min_c, c);
    }
    detail = "max dev " + fmt("%.2e", worst) + " (tol 1e-10), min C " + fmt("%.3e", min_c);
    return worst <= 1e-10 && min_c > 0.0;
}

// 3: second family shows sudden death with discord alive on the plateau,
// no death at alpha = 0.9, and the shallow revival near tau = 1.115 sits
// where it should for alpha = 0.582.
bool criterion_case2_death_rebirth(std::string& detail) {
    const double step = 1e-3;

    // alpha = 0.55: maximal zero runs on [0, 3].
    std::vector<double> c055;
    for (int k = 0; k <= 3000; ++k)
        c055.push_back(concurrence_x(
            evolve_xstate(make_werner(0.55), params_case2(k * step, k * step, kSymmetric))));
    bool plateau_ok = false;
    double plateau_lo = 0.0, plateau_hi = 0.0, plateau_min_d = 0.0;
    for (size_t k = 0; k < c055.size();) {
        if (c055[k] != 0.0) {
            ++k;
            continue;
        }
        size_t end = k;
        while (end + 1 < c055.size() && c055[end + 1] == 0.0)
            ++end;
        if (end > k) { // at least two grid points: positive tau-length
            double min_d = 1.0;
            for (size_t j = k; j <= end; ++j) {
                const XState e = evolve_xstate(
                    make_werner(0.55),
                    params_case2(static_cast<double>(j) * step,
                                 static_cast<double>(j) * step, kSymmetric));
                min_d = std::min(min_d, discord_x(e).value);
            }
            if (min_d > 1e-3) {
                plateau_ok = true;
                plateau_lo = static_cast<double>(k) * step;
                plateau_hi = static_cast<double>(end) * step;
                plateau_min_d = min_d;
                break;
            }
        }
        k = end + 1;
    }

    // alpha = 0.9: concurrence stays positive.
    double min09 = 1.0;
    for (int k = 0; k <= 3000; ++k)
        min09 = std::min(min09, concurrence_x(evolve_xstate(
                                    make_werner(0.9),
                                    params_case2(k * step, k * step, kSymmetric))));

    // Scan the shallow-revival window for three nearby mixing parameters.
    bool scan_ok = true;
    double argmin582 = 0.0, discord582 = 0.0, min582 = 0.0;
    for (double alpha : {0.580, 0.582, 0.584}) {
        double best_c = 1.0, best_tau = 0.0;
        for (int k = 0; k <= 250; ++k) {
            const double tau = 1.0 + k * step;
            const double c = concurrence_x(
                evolve_xstate(make_werner(alpha), params_case2(tau, tau, kSymmetric)));
            if (c < best_c) {
                best_c = c;
                best_tau = tau;
            }
        }
        scan_ok = scan_ok && best_c <= 2e-3;
        if (alpha == 0.582) {
            argmin582 = best_tau;
            min582 = best_c;
            discord582 = discord_x(evolve_xstate(make_werner(alpha),
                                                 params_case2(best_tau, best_tau, kSymmetric)))
                             .value;
            scan_ok = scan_ok && std::abs(best_tau - 1.115) <= 0.02 &&
                      std::abs(discord582 - 0.049) <= 0.005;
        }
    }

    detail = "plateau [" + fmt("%.3f", plateau_lo) + ", " + fmt("%.3f", plateau_hi) +
             "] min discord " + fmt("%.4f", plateau_min_d) + "; min C(0.9) " +
             fmt("%.3f", min09) + "; revival min " + fmt("%.2e", min582) + " at tau " +
             fmt("%.4f", argmin582) + " discord " + fmt("%.4f", discord582);
    return plateau_ok && min09 > 0.0 && scan_ok;
}

// 4: separability region of the generalized Werner family.
bool criterion_separability(std::string& detail) {
    double worst = 0.0;
    int mismatches = 0;
    for (int i = 0; i < 50; ++i) {
        const double alpha = -1.0 / 3.0 + (4.0 / 3.0) * i / 49.0;
        for (int j = 0; j < 50; ++j) {
            const double mu = (j + 1) / 51.0;
            const double c = concurrence_eta(alpha, mu);
            const double piecewise =
                std::max(0.0, 2.0 * std::abs(alpha) * mu * std::sqrt(1.0 - mu * mu) -
                                  (1.0 - alpha) / 2.0);
            worst = std::max(worst, std::abs(c - piecewise));
            if (alpha <= 1.0 / 3.0) {
                if (c != 0.0)
                    ++mismatches;
                continue;
            }
            const double half_width = std::sqrt(3.0 * alpha * alpha + 2.0 * alpha - 1.0) /
                                      (4.0 * alpha);
            const bool inside = mu * mu > 0.5 - half_width && mu * mu < 0.5 + half_width;
            if (inside != (c > 0.0))
                ++mismatches;
            if ((c > 0.0) != (alpha > separability_boundary(mu)))
                ++mismatches;
        }
    }
    detail = "max dev " + fmt("%.2e", worst) + " (tol 1e-12), band mismatches " +
             std::to_string(mismatches);
    return worst <= 1e-12 && mismatches == 0;
}

// 5: closed-form discord against the measurement minimization.
bool criterion_discord_oracle(std::string& detail) {
    const MeasurementGrid grid;
    double worst = 0.0;
    double worst_signed = -1.0; // max of closed - brute
    for (double alpha : {0.2, 0.55, 0.9}) {
        const XState w = make_werner(alpha);
        const double closed = discord_x(w).value;
        const double brute = discord_bruteforce(w.dense(), grid);
        worst = std::max(worst, std::abs(closed - brute));
        worst_signed = std::max(worst_signed, closed - brute);
    }
    std::mt19937_64 rng(42);
    for (int k = 0; k < 100; ++k) {
        const XState x = testsup::random_xstate(rng);
        const double closed = discord_x(x).value;
        const double brute = discord_bruteforce(x.dense(), grid);
        worst = std::max(worst, std::abs(closed - brute));
        worst_signed = std::max(worst_signed, closed - brute);
    }
    detail = "max |closed - brute| " + fmt("%.2e", worst) + " (tol 1e-3), max closed - brute " +
             fmt("%.2e", worst_signed);
    return worst <= 1e-3 && worst_signed <= 1e-3;
}

// 6: fidelity asymptotics of both driving families.
bool criterion_fidelity_asymptotics(std::string& detail) {
    double sum = 0.0;
    const int n1 = 2001;
    for (int k = 0; k < n1; ++k) {
        const double tau = 8.0 + 2.0 * k / (n1 - 1);
        sum += fidelity_pure_evolved(params_case1(tau, tau, kSymmetric));
    }
    const double mean = sum / n1;

    double sup = 0.0, inf = 1.0;
    const int n2 = 20001;
    for (int k = 0; k < n2; ++k) {
        const double tau = 6.0 + 2.0 * k / (n2 - 1);
        const double f = fidelity_pure_evolved(params_case2(tau, tau, kSymmetric));
        sup = std::max(sup, f);
        inf = std::min(inf, f);
    }
    detail = "first-family mean " + fmt("%.4f", mean) + " (0.5 +- 0.02); second-family sup " +
             fmt("%.4f", sup) + " inf " + fmt("%.4f", inf);
    return std::abs(mean - 0.5) <= 0.02 && sup >= 0.99 && inf <= 0.01;
}

// 7: closed-form mixed fidelity against the matrix-square-root definition.
bool criterion_fidelity_oracle(std::string& detail) {
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double alpha = -1.0 / 3.0 + (4.0 / 3.0) * uni(rng);
        cplx mu(sym(rng), sym(rng));
        cplx nu(sym(rng), sym(rng));
        const double norm = std::sqrt(std::norm(mu) + std::norm(nu));
        mu /= norm;
        nu /= norm;
        const double closed = fidelity_werner_eta(alpha, mu, nu).value;
        const double brute = fidelity_uhlmann(make_werner(alpha).dense(),
                                              make_generalized_werner({alpha, mu, nu}).dense());
        worst = std::max(worst, std::abs(closed - brute));
    }
    detail = "max dev " + fmt("%.2e", worst) + " (tol 1e-8)";
    return worst <= 1e-8;
}

// 8: first-family asymptotic state and convergence towards it.
bool criterion_asymptotic_state(std::string& detail) {
    const double is2 = std::sqrt(0.5);
    double worst_exact = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double tau = 10.0 * k / 999.0;
        const BellAmplitudes b = asymptotic_state(ScenarioKind::Case1, tau);
        const cplx c01 = is2 * (b.psi_plus + b.psi_minus);
        const cplx c10 = is2 * (b.psi_plus - b.psi_minus);
        const double c = concurrence_pure(0.0, c01, c10, 0.0);
        worst_exact = std::max(worst_exact, std::abs(c - std::abs(std::cos(2.0 * tau))));
    }

    double worst_conv = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double tau = 8.0 + 2.0 * k / 999.0;
        const SingletAmplitudes a = evolved_singlet(params_case1(tau, tau, kSymmetric), 0.0);
        const double c = concurrence_pure(0.0, a.c01, a.c10, 0.0);
        worst_conv = std::max(worst_conv, std::abs(c - std::abs(std::cos(2.0 * tau))));
    }
    detail = "max dev vs |cos 2 tau| " + fmt("%.2e", worst_exact) +
             " (tol 1e-12); late-time gap " + fmt("%.2e", worst_conv) + " (tol 5e-3)";
    return worst_exact <= 1e-12 && worst_conv <= 5e-3;
}

// 9: structural invariants of the x-structure evolution.
bool criterion_structure(std::string& detail) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const Couplings couplings{0.5, 0.5, 0.3, 0.5, 0.5};
    Scenario scenarios[3];
    scenarios[0] = Scenario{ScenarioKind::Case1, couplings, 1.0};
    scenarios[1] = Scenario{ScenarioKind::Case2, couplings, 1.0};
    scenarios[2] = Scenario{ScenarioKind::ConstantField, couplings, 2.0};

    double worst_trace = 0.0, worst_det = 0.0, worst_dense = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const XState x = testsup::random_xstate(rng);
        const Scenario& s = scenarios[k % 3];
        const double tau = 10.0 * uni(rng);
        const EvolutionParams p = params_for_tau(s, tau);
        const XState e = evolve_xstate(x, p);

        const double trace = e.rho11() + e.rho22() + e.rho33() + e.rho44();
        worst_trace = std::max(worst_trace, std::abs(trace - 1.0));

        const double det_outer = e.rho11() * e.rho44() - std::norm(e.rho14());
        const double det_inner = e.rho22() * e.rho33() - std::norm(e.rho23());
        worst_det = std::max(worst_det, std::max(-det_outer, -det_inner));

        worst_dense = std::max(
            worst_dense,
            max_abs_diff(e.dense(), dense_propagate(x.dense(), p, gamma33_phase(s, tau))));
    }
    detail = "trace dev " + fmt("%.2e", worst_trace) + " (tol 1e-12), worst -det " +
             fmt("%.2e", worst_det) + " (tol 1e-9), dense dev " + fmt("%.2e", worst_dense) +
             " (tol 1e-10)";
    return worst_trace <= 1e-12 && worst_det <= 1e-9 && worst_dense <= 1e-10;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "werner concurrence threshold form", 1.0, criterion_werner},
        {2, "first-family envelope, no sudden death", 1.0, criterion_case1_envelope},
        {3, "second-family death, rebirth and revival window", 30.0, criterion_case2_death_rebirth},
        {4, "generalized-werner separability region", 1.0, criterion_separability},
        {5, "discord closed form vs measurement minimization", 120.0, criterion_discord_oracle},
        {6, "fidelity asymptotics of both families", 5.0, criterion_fidelity_asymptotics},
        {7, "mixed fidelity closed form vs square-root form", 10.0, criterion_fidelity_oracle},
        {8, "asymptotic-state concurrence and convergence", 1.0, criterion_asymptotic_state},
        {9, "evolution invariants vs dense conjugation", 30.0, criterion_structure},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = elapsed <= c.budget_s;
        ok = ok && in_budget;
        if (!ok)
            ++failures;
        std::printf("[%s] criterion %d: %s; %s; %.2f s (budget %.0f s)%s\n",
                    ok ? "PASS" : "FAIL", c.id, c.name, detail.c_str(), elapsed, c.budget_s,
                    in_budget ? "" : " EXCEEDED");
    }
    std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
