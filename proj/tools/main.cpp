// qcorr: sweeps, boundary tables, oracle cross-checks and one-shot state
// reports for the two-qubit X-state correlation engine.
//
// Exit codes: 0 success, 1 verification failure, 2 bad configuration.

#include <algorithm>
#include <clocale>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcorr/correlations.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/oracles.hpp"
#include "qcorr/serialization.hpp"
#include "qcorr/states.hpp"

namespace {

using nlohmann::json;
using namespace qcorr;

// 17 significant digits round-trip a double exactly.
std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Scenario builtin_scenario(ScenarioKind kind) {
    Scenario s;
    s.kind = kind;
    s.couplings = Couplings{0.5, 0.5, 0.0, 0.5, 0.5};
    s.beta = 1.0;
    return s;
}

ScenarioKind parse_kind(const std::string& text) {
    if (text == "case1") return ScenarioKind::Case1;
    if (text == "case2") return ScenarioKind::Case2;
    if (text == "constant") return ScenarioKind::ConstantField;
    throw ConfigInvalid("scenario kind must be one of case1|case2|constant, got '" + text + "'");
}

// --scenario accepts a builtin name (case1|case2|constant with symmetric
// couplings 0.5 and beta 1) or a path to a JSON file with keys
// kind, gamma11, gamma22, gamma33, gamma12, gamma21, beta. Omitted couplings
// mirror their partner (gamma22 from gamma11, gamma21 from gamma12 and vice
// versa) and otherwise default to the builtin values.
Scenario load_scenario(const std::string& spec_text) {
    if (spec_text == "case1" || spec_text == "case2" || spec_text == "constant")
        return builtin_scenario(parse_kind(spec_text));

    std::ifstream in(spec_text);
    if (!in)
        throw ConfigInvalid("cannot open scenario file '" + spec_text + "'");
    std::stringstream buf;
    buf << in.rdbuf();

    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::exception& e) {
        throw ConfigInvalid("scenario file '" + spec_text + "': " + e.what());
    }
    if (!j.is_object())
        throw ConfigInvalid("scenario file '" + spec_text + "': top level must be an object");

    static const char* known[] = {"kind", "gamma11", "gamma22", "gamma33",
                                  "gamma12", "gamma21", "beta"};
    for (const auto& item : j.items()) {
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return item.key() == k; }) == std::end(known))
            throw ConfigInvalid("scenario field '" + item.key() + "' is not recognized");
    }
    if (!j.contains("kind"))
        throw ConfigInvalid("scenario field 'kind' is required");

    auto get_num = [&](const char* key, std::optional<double> fallback) -> double {
        if (!j.contains(key)) {
            if (!fallback)
                throw ConfigInvalid(std::string("scenario field '") + key + "' is required");
            return *fallback;
        }
        if (!j[key].is_number())
            throw ConfigInvalid(std::string("scenario field '") + key + "' must be a number");
        return j[key].get<double>();
    };

    Scenario s;
    s.kind = parse_kind(j["kind"].get<std::string>());

    const bool has11 = j.contains("gamma11"), has22 = j.contains("gamma22");
    const bool has12 = j.contains("gamma12"), has21 = j.contains("gamma21");
    s.couplings.gamma11 = get_num("gamma11", has22 ? std::optional<double>(get_num("gamma22", 0.5)) : 0.5);
    s.couplings.gamma22 = get_num("gamma22", has11 ? std::optional<double>(s.couplings.gamma11) : 0.5);
    s.couplings.gamma12 = get_num("gamma12", has21 ? std::optional<double>(get_num("gamma21", 0.5)) : 0.5);
    s.couplings.gamma21 = get_num("gamma21", has12 ? std::optional<double>(s.couplings.gamma12) : 0.5);
    s.couplings.gamma33 = get_num("gamma33", 0.0);
    s.beta = get_num("beta", 1.0);
    s.validate();
    return s;
}

std::vector<double> parse_alpha_list(const std::string& text) {
    std::vector<double> alphas;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            double a = std::stod(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            alphas.push_back(a);
        } catch (const std::exception&) {
            throw ConfigInvalid("--alpha entry '" + item + "' is not a number");
        }
    }
    if (alphas.empty())
        throw ConfigInvalid("--alpha must list at least one value");
    for (double a : alphas)
        if (!(a >= -1.0 / 3.0 && a <= 1.0))
            throw ConfigInvalid("--alpha value " + fmt17(a) + " outside [-1/3, 1]");
    std::sort(alphas.begin(), alphas.end());
    return alphas;
}

struct OutputSelection {
    bool concurrence = true;
    bool discord = true;
    bool fidelity = true;
    bool fields = true;
};

OutputSelection parse_outputs(const std::string& text) {
    OutputSelection sel{false, false, false, false};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "concurrence") sel.concurrence = true;
        else if (item == "discord") sel.discord = true;
        else if (item == "fidelity") sel.fidelity = true;
        else if (item == "fields") sel.fields = true;
        else throw ConfigInvalid("--outputs entry '" + item +
                                 "' is not one of concurrence|discord|fidelity|fields");
    }
    if (!sel.concurrence && !sel.discord && !sel.fidelity && !sel.fields)
        throw ConfigInvalid("--outputs must select at least one column group");
    return sel;
}

// Writes to --out when given, else to stdout.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ConfigInvalid("cannot open output file '" + out_path + "'");
    out << text;
}

FieldPair fields_at(const Scenario& scenario, double tau) {
    if (scenario.kind == ScenarioKind::ConstantField) {
        // Omega_plus = 0 and Omega_minus = beta*c: equal and opposite fields.
        const double half = scenario.beta * scenario.couplings.gamma11 / 2.0;
        return {half, -half};
    }
    return field_profiles(scenario.kind, tau, scenario.couplings);
}

int run_sweep(const Scenario& scenario, const std::vector<double>& alphas, double tau_max,
              int steps, const OutputSelection& sel, const std::string& format,
              const std::string& out_path) {
    if (steps < 2)
        throw ConfigInvalid("--steps must be at least 2");
    if (!(tau_max > 0.0) || !std::isfinite(tau_max))
        throw ConfigInvalid("--tau-max must be positive and finite");

    std::vector<std::string> columns = {"tau_minus", "alpha"};
    if (sel.concurrence) columns.push_back("concurrence");
    if (sel.discord) columns.push_back("discord");
    if (sel.fidelity) columns.push_back("fidelity");
    if (sel.fields) {
        columns.push_back("omega_A");
        columns.push_back("omega_B");
    }

    std::vector<std::vector<double>> rows;
    rows.reserve(alphas.size() * static_cast<size_t>(steps));
    for (double alpha : alphas) {
        const XState initial = make_werner(alpha);
        for (int k = 0; k < steps; ++k) {
            const double tau = tau_max * k / (steps - 1);
            const EvolutionParams p = params_for_tau(scenario, tau);
            std::vector<double> row = {tau, alpha};
            if (sel.concurrence || sel.discord) {
                const XState evolved = evolve_xstate(initial, p);
                if (sel.concurrence) row.push_back(concurrence_x(evolved));
                if (sel.discord) row.push_back(discord_x(evolved).value);
            }
            if (sel.fidelity) {
                const SingletAmplitudes amps = evolved_singlet(p, gamma33_phase(scenario, tau));
                row.push_back(fidelity_werner_eta(alpha, amps.c01, amps.c10).value);
            }
            if (sel.fields) {
                const FieldPair f = fields_at(scenario, tau);
                row.push_back(f.omega_a);
                row.push_back(f.omega_b);
            }
            rows.push_back(std::move(row));
        }
    }

    std::string text;
    if (format == "csv") {
        std::string line;
        for (size_t c = 0; c < columns.size(); ++c)
            line += (c ? "," : "") + columns[c];
        text = line + "\n";
        for (const auto& row : rows) {
            line.clear();
            for (size_t c = 0; c < row.size(); ++c)
                line += (c ? "," : "") + fmt17(row[c]);
            text += line + "\n";
        }
    } else {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (size_t c = 0; c < row.size(); ++c)
                obj[columns[c]] = row[c];
            arr.push_back(obj);
        }
        text = arr.dump(2) + "\n";
    }
    emit(text, out_path);
    return 0;
}

int run_boundary(int points, const std::string& format, const std::string& out_path) {
    if (points < 2)
        throw ConfigInvalid("--steps must be at least 2 for boundary");
    std::string text;
    if (format == "csv") {
        text = "mu,alpha\n";
        for (int k = 1; k <= points; ++k) {
            const double mu = static_cast<double>(k) / (points + 1);
            text += fmt17(mu) + "," + fmt17(separability_boundary(mu)) + "\n";
        }
    } else {
        json arr = json::array();
        for (int k = 1; k <= points; ++k) {
            const double mu = static_cast<double>(k) / (points + 1);
            arr.push_back({{"mu", mu}, {"alpha", separability_boundary(mu)}});
        }
        text = arr.dump(2) + "\n";
    }
    emit(text, out_path);
    return 0;
}

// Random X state with strictly positive block determinants so that evolved
// copies stay comfortably inside the validity region.
XState random_xstate(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::exponential_distribution<double> expo(1.0);
    double d[4];
    double sum = 0.0;
    for (double& x : d) {
        x = expo(rng);
        sum += x;
    }
    for (double& x : d)
        x /= sum;
    const double m14 = std::sqrt(d[0] * d[3]) * uni(rng) * 0.98;
    const double m23 = std::sqrt(d[1] * d[2]) * uni(rng) * 0.98;
    const double p14 = 2.0 * M_PI * uni(rng);
    const double p23 = 2.0 * M_PI * uni(rng);
    return XState(d[0], d[1], d[2], d[3], std::polar(m14, p14), std::polar(m23, p23));
}

int run_verify(unsigned long long seed, int cases) {
    if (cases < 1)
        throw ConfigInvalid("--cases must be at least 1");

    struct Check {
        const char* name;
        double tolerance;
        double worst = 0.0;
    };
    Check checks[] = {
        {"concurrence closed form vs spin-flip construction", 1e-9},
        {"discord closed form vs measurement minimization", 1e-3},
        {"fidelity closed form vs matrix-square-root form", 1e-8},
        {"x-structure evolution vs dense conjugation", 1e-10},
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    std::uniform_real_distribution<double> alpha_dist(-1.0 / 3.0, 1.0);
    const Couplings couplings{0.5, 0.5, 0.3, 0.5, 0.5};
    const MeasurementGrid grid;

    for (int k = 0; k < cases; ++k) {
        const XState x = random_xstate(rng);
        checks[0].worst = std::max(checks[0].worst,
                                   std::abs(concurrence_wootters(x.dense()) - concurrence_x(x)));
        checks[1].worst = std::max(checks[1].worst,
                                   std::abs(discord_x(x).value - discord_bruteforce(x.dense(), grid)));

        const double alpha = alpha_dist(rng);
        cplx mu(sym(rng), sym(rng));
        cplx nu(sym(rng), sym(rng));
        const double norm = std::sqrt(std::norm(mu) + std::norm(nu));
        mu /= norm;
        nu /= norm;
        const double fc = fidelity_werner_eta(alpha, mu, nu).value;
        const double fu = fidelity_uhlmann(make_werner(alpha).dense(),
                                           make_generalized_werner({alpha, mu, nu}).dense());
        checks[2].worst = std::max(checks[2].worst, std::abs(fc - fu));

        const double tau = 10.0 * uni(rng);
        EvolutionParams p;
        switch (k % 3) {
        case 0: p = params_case1(tau, tau, couplings); break;
        case 1: p = params_case2(tau, tau, couplings); break;
        default:
            p = params_for_tau(Scenario{ScenarioKind::ConstantField, couplings, 2.0}, tau);
            break;
        }
        const XState evolved = evolve_xstate(x, p);
        checks[3].worst = std::max(checks[3].worst,
                                   max_abs_diff(evolved.dense(),
                                                dense_propagate(x.dense(), p, couplings.gamma33 * tau)));
    }

    bool all_ok = true;
    std::printf("verify: seed %llu, %d cases per check\n", seed, cases);
    for (const Check& c : checks) {
        const bool ok = c.worst <= c.tolerance;
        all_ok = all_ok && ok;
        std::printf("  [%s] %-52s max dev %.3e (tol %.0e)\n", ok ? "PASS" : "FAIL", c.name,
                    c.worst, c.tolerance);
    }
    std::printf("verify: %s\n", all_ok ? "all checks passed" : "FAILURE");
    return all_ok ? 0 : 1;
}

int run_state(const std::string& in_path, const std::string& out_path) {
    std::string text;
    if (in_path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(in_path);
        if (!in)
            throw ConfigInvalid("cannot open state file '" + in_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    const XState x = xstate_from_json_string(text);
    const DiscordResult d = discord_x(x);
    const FanoParams fano = fano_canonical(x);

    json out = {
        {"concurrence", concurrence_x(x)},
        {"discord", d.value},
        {"mutual_info", d.intermediates.mutual_info},
        {"classical_correlation", d.intermediates.classical_corr},
        {"fano", {{"r", fano.r}, {"s", fano.s}, {"c1", fano.c1}, {"c2", fano.c2}, {"c3", fano.c3}}},
    };
    emit(out.dump(2) + "\n", out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_NUMERIC, "C");

    CLI::App app{"two-qubit correlation engine: sweeps, separability tables, oracle checks"};
    app.require_subcommand(1);

    std::string scenario_text = "case1";
    std::string alpha_text = "0.55";
    double tau_max = 5.0;
    int steps = 501;
    std::string outputs_text = "concurrence,discord,fidelity,fields";
    std::string format = "csv";
    std::string out_path;
    unsigned long long seed = 42;
    int cases = 100;
    std::string state_path;

    CLI::App* sweep = app.add_subcommand(
        "sweep", "evolve Werner states on a uniform tau grid and emit correlation columns");
    sweep->add_option("--scenario", scenario_text,
                      "builtin name (case1|case2|constant) or scenario JSON file");
    sweep->add_option("--alpha", alpha_text, "comma-separated mixing parameters in [-1/3, 1]");
    sweep->add_option("--tau-max", tau_max, "end of the tau_minus grid (starts at 0)");
    sweep->add_option("--steps", steps, "number of grid points, at least 2");
    sweep->add_option("--outputs", outputs_text,
                      "comma-separated subset of concurrence,discord,fidelity,fields");
    sweep->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", out_path, "write to this file instead of stdout");

    CLI::App* boundary = app.add_subcommand(
        "boundary", "tabulate the separability threshold alpha*(|mu|) on a uniform grid in (0,1)");
    boundary->add_option("--steps", steps, "number of grid points, at least 2");
    boundary->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    boundary->add_option("--out", out_path, "write to this file instead of stdout");

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check every closed form against its brute-force reference");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--cases", cases, "number of random cases per check, at least 1");

    CLI::App* state = app.add_subcommand(
        "state", "compute all measures for one X state given as JSON ('-' reads stdin)");
    state->add_option("file", state_path, "path to the state JSON")->required();
    state->add_option("--out", out_path, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (sweep->parsed())
            return run_sweep(load_scenario(scenario_text), parse_alpha_list(alpha_text), tau_max,
                             steps, parse_outputs(outputs_text), format, out_path);
        if (boundary->parsed())
            return run_boundary(steps, format, out_path);
        if (verify->parsed())
            return run_verify(seed, cases);
        if (state->parsed())
            return run_state(state_path, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
