// Command-line front end: spectra, effective-potential curves, wavefunctions,
// ladder demonstrations, diagram data, and the self-check suite, as JSON/CSV.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sga/grids.hpp"
#include "sga/numerics.hpp"
#include "sga/serialize.hpp"
#include "sga/spectra.hpp"
#include "sga/verify.hpp"
#include "sga/wavefunctions.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct RunConfig {
    std::string system = "morse";
    // Morse, dimensionless mode (default): energies in cal_E, lengths in a.
    std::optional<double> k0;
    double r0_over_a = 3.0;
    // Morse, dimensional mode: all four required, exclusive with --k0.
    std::optional<double> v0;
    std::optional<double> r0;
    std::optional<double> a;
    std::optional<double> hbar2_over_2m;
    // Oscillator block.
    int k_sign = 1;
    double hbar_omega = 1.0;
    double epsilon = 0.0;
    int ell = 0;
    // Grid overrides.
    std::optional<double> grid_min;
    std::optional<double> grid_max;
    std::optional<int> grid_points;
    std::vector<int> refine_points{2001, 4001, 8001};
    // Common output/run controls.
    std::uint32_t seed = 12345;
    std::string format;  // empty = per-command default
    std::string output;
    bool oracle = false;
    std::optional<int> m;
    std::optional<int> nu;
    std::string suite = "all";
    double threshold = sga::ladder_overlap_floor;
    std::string config_path;
    std::string n_points_arg;
};

void parse_n_points(RunConfig& rc, const std::string& arg) {
    std::vector<int> values;
    size_t start = 0;
    while (start <= arg.size()) {
        const size_t comma = arg.find(',', start);
        const std::string token =
            arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size() || v < 3) throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw sga::DomainError("--n-points expects integers >= 3, got '" + token + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    rc.grid_points = values.front();
    if (values.size() >= 2) rc.refine_points = values;
}

void apply_env_grid(RunConfig& rc) {
    const char* env = std::getenv("SGA_SPECTRA_DEFAULT_GRID");
    if (!env || *env == '\0') return;
    double r_min = 0.0, r_max = 0.0;
    int n = 0;
    char tail = '\0';
    if (std::sscanf(env, "%lf,%lf,%d%c", &r_min, &r_max, &n, &tail) != 3) {
        throw sga::DomainError("SGA_SPECTRA_DEFAULT_GRID must be 'r_min,r_max,n_points'");
    }
    rc.grid_min = r_min;
    rc.grid_max = r_max;
    rc.grid_points = n;
}

std::string find_config_path(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return argv[i + 1];
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    return {};
}

void apply_config_file(RunConfig& rc, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sga::DomainError("cannot read config file: " + path);
    sga::json cfg;
    try {
        cfg = sga::json::parse(in);
    } catch (const std::exception& e) {
        throw sga::DomainError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (cfg.contains("system")) rc.system = cfg["system"].get<std::string>();
    if (cfg.contains("seed")) rc.seed = cfg["seed"].get<std::uint32_t>();
    if (cfg.contains("morse")) {
        const sga::json& mj = cfg["morse"];
        if (mj.contains("k0")) rc.k0 = mj["k0"].get<double>();
        if (mj.contains("r0_over_a")) rc.r0_over_a = mj["r0_over_a"].get<double>();
        if (mj.contains("V0")) rc.v0 = mj["V0"].get<double>();
        if (mj.contains("r0")) rc.r0 = mj["r0"].get<double>();
        if (mj.contains("a")) rc.a = mj["a"].get<double>();
        if (mj.contains("hbar2_over_2M")) rc.hbar2_over_2m = mj["hbar2_over_2M"].get<double>();
    }
    if (cfg.contains("oscillator")) {
        const sga::json& oj = cfg["oscillator"];
        if (oj.contains("k_sign")) rc.k_sign = oj["k_sign"].get<int>();
        if (oj.contains("hbar_omega")) rc.hbar_omega = oj["hbar_omega"].get<double>();
        if (oj.contains("epsilon")) rc.epsilon = oj["epsilon"].get<double>();
        if (oj.contains("ell")) rc.ell = oj["ell"].get<int>();
    }
    if (cfg.contains("grid")) {
        const sga::json& gj = cfg["grid"];
        if (gj.contains("r_min")) rc.grid_min = gj["r_min"].get<double>();
        if (gj.contains("r_max")) rc.grid_max = gj["r_max"].get<double>();
        if (gj.contains("n_points")) rc.grid_points = gj["n_points"].get<int>();
    }
    if (cfg.contains("output")) {
        const sga::json& out = cfg["output"];
        if (out.contains("format")) rc.format = out["format"].get<std::string>();
        if (out.contains("path")) rc.output = out["path"].get<std::string>();
    }
}

sga::MorseParams make_morse(const RunConfig& rc) {
    const bool any_dimensional = rc.v0 || rc.r0 || rc.a || rc.hbar2_over_2m;
    if (any_dimensional) {
        if (rc.k0) {
            throw sga::DomainError(
                "dimensionless (--k0) and dimensional (--V0/--r0/--a/--hbar2-over-2M) Morse "
                "inputs are mutually exclusive");
        }
        if (!(rc.v0 && rc.r0 && rc.a && rc.hbar2_over_2m)) {
            throw sga::DomainError(
                "dimensional Morse mode needs all of --V0, --r0, --a, --hbar2-over-2M");
        }
        return sga::MorseParams::dimensional(*rc.v0, *rc.r0, *rc.a, *rc.hbar2_over_2m);
    }
    return sga::MorseParams::dimensionless(rc.k0.value_or(5.7), rc.r0_over_a);
}

sga::OscParams make_oscillator(const RunConfig& rc) {
    if (rc.k_sign != 1 && rc.k_sign != -1) {
        throw sga::DomainError("--k-sign must be 1 or -1");
    }
    return sga::OscParams::from_hbar_omega(rc.hbar_omega, 1.0, rc.epsilon, rc.ell, rc.k_sign);
}

sga::Grid override_grid(const RunConfig& rc, const sga::Grid& base) {
    if (!rc.grid_min && !rc.grid_max) return base;
    return sga::Grid(rc.grid_min.value_or(base.x_min()), rc.grid_max.value_or(base.x_max()),
                     base.n_points(), base.tag());
}

sga::Grid resolve_morse_grid(const RunConfig& rc, const sga::MorseParams& p, bool extended) {
    return override_grid(rc, sga::default_morse_grid(p, extended, rc.grid_points.value_or(0)));
}

sga::Grid resolve_oscillator_grid(const RunConfig& rc, const sga::OscParams& p, int count) {
    return override_grid(rc,
                         sga::default_oscillator_grid(p, count, rc.grid_points.value_or(6000)));
}

std::string pick_format(const RunConfig& rc, const char* fallback) {
    return rc.format.empty() ? std::string(fallback) : rc.format;
}

void emit_json(const RunConfig& rc, const sga::json& doc) {
    sga::write_text(rc.output, doc.dump(2) + "\n");
}

void require_json_format(const RunConfig& rc, const char* command) {
    if (!rc.format.empty() && rc.format != "json") {
        throw sga::DomainError(std::string(command) + " emits JSON only");
    }
}

/// FD oracle state for the oscillator: eigenvector nu of the discretized
/// radial problem, turned into a normalized full wavefunction Psi = u/r.
std::pair<double, sga::GridFunction> oscillator_oracle_state(const sga::OscParams& p, int nu,
                                                             const sga::Grid& grid) {
    const auto potential = [&p](double r) { return 0.5 * p.k_stiff * r * r; };
    const sga::TridiagonalOperator T = sga::discretize(
        potential, p.inv_mass_scale, grid, sga::Centrifugal{p.ell, p.epsilon});
    const sga::EigenResult solved = sga::eigen_lowest(T, nu + 1, true);
    const int n = grid.n_points();
    std::vector<double> u(static_cast<size_t>(n), 0.0);
    const std::vector<double>& interior = solved.vectors[static_cast<size_t>(nu)];
    for (size_t i = 0; i < interior.size(); ++i) u[i + 1] = interior[i];
    std::vector<double> u2(u.size());
    for (size_t i = 0; i < u.size(); ++i) u2[i] = u[i] * u[i];
    const double norm = std::sqrt(sga::integrate_simpson(u2, grid.spacing()));
    std::vector<std::complex<double>> psi(u.size());
    for (int i = 0; i < n; ++i) {
        psi[static_cast<size_t>(i)] = u[static_cast<size_t>(i)] / (norm * grid.point(i));
    }
    sga::GridFunction state(grid, std::move(psi));
    sga::fix_phase_first_nonzero(state);
    return {solved.values[static_cast<size_t>(nu)], state};
}

int cmd_spectrum(const RunConfig& rc) {
    if (rc.system == "oscillator") {
        const sga::OscParams p = make_oscillator(rc);
        const int count = rc.nu.value_or(5) + 1;
        if (count < 1) throw sga::DomainError("--nu must be >= 0");
        const sga::SpectrumTable table = sga::oscillator_spectrum(p, count);
        std::vector<double> oracle;
        if (rc.oracle) {
            const sga::Grid grid = resolve_oscillator_grid(rc, p, count);
            const auto potential = [&p](double r) { return 0.5 * p.k_stiff * r * r; };
            const sga::TridiagonalOperator T = sga::discretize(
                potential, p.inv_mass_scale, grid, sga::Centrifugal{p.ell, p.epsilon});
            oracle = sga::eigen_lowest(T, count, false).values;
        }
        if (pick_format(rc, "json") == "csv") {
            sga::write_text(rc.output,
                            sga::spectrum_csv(table, p.cal_E, rc.oracle ? &oracle : nullptr));
        } else {
            emit_json(rc, sga::spectrum_json(table, sga::params_json(p),
                                             rc.oracle ? &oracle : nullptr));
        }
        return kExitOk;
    }

    const sga::MorseParams p = make_morse(rc);
    const sga::EffectivePotential member = sga::effective_potential(rc.m.value_or(0), p);
    const sga::SpectrumTable table = sga::effective_spectrum(member);
    std::vector<double> oracle;
    if (rc.oracle) {
        const sga::MorseParams mp = member.member_params();
        const sga::Grid grid = resolve_morse_grid(rc, mp, sga::needs_extended_grid(mp));
        const auto potential = [&member](double r) { return member(r); };
        oracle = sga::bound_states(potential, p.inv_mass_scale, 0.0, grid,
                                   static_cast<int>(table.levels.size()) + 2)
                     .energies;
    }
    if (pick_format(rc, "json") == "csv") {
        sga::write_text(rc.output,
                        sga::spectrum_csv(table, p.cal_E, rc.oracle ? &oracle : nullptr));
    } else {
        emit_json(rc,
                  sga::spectrum_json(table, sga::params_json(p), rc.oracle ? &oracle : nullptr));
    }
    return kExitOk;
}

int cmd_potential(const RunConfig& rc) {
    if (rc.system != "morse") {
        throw sga::DomainError("potential curves describe the Morse family; use --system morse");
    }
    const sga::MorseParams p = make_morse(rc);
    const sga::EffectivePotential member = sga::effective_potential(rc.m.value_or(0), p);
    const sga::Grid grid = resolve_morse_grid(rc, p, false);
    if (pick_format(rc, "csv") == "json") {
        emit_json(rc, sga::potential_json(member, grid));
    } else {
        sga::write_text(rc.output, sga::potential_csv(member, grid));
    }
    return kExitOk;
}

int cmd_wavefunction(const RunConfig& rc) {
    const int nu = rc.nu.value_or(0);
    if (nu < 0) throw sga::DomainError("--nu must be >= 0");
    if (rc.system == "oscillator") {
        if (!rc.oracle) {
            throw sga::DomainError(
                "oscillator wavefunctions come from the solver only; pass --oracle");
        }
        const sga::OscParams p = make_oscillator(rc);
        if (!(p.k_stiff > 0.0)) {
            throw sga::DomainError("the inverted oscillator has no bound states to sample");
        }
        const sga::Grid grid = resolve_oscillator_grid(rc, p, nu + 1);
        const auto [energy, psi] = oscillator_oracle_state(p, nu, grid);
        if (pick_format(rc, "json") == "csv") {
            sga::write_text(rc.output, sga::oscillator_wavefunction_csv(nu, energy, psi));
        } else {
            emit_json(rc, sga::oscillator_wavefunction_json(p, nu, energy, psi));
        }
        return kExitOk;
    }

    const sga::MorseParams p = make_morse(rc);
    const sga::EffectivePotential member = sga::effective_potential(rc.m.value_or(0), p);
    const sga::MorseParams mp = member.member_params();
    const sga::Grid grid = resolve_morse_grid(rc, mp, sga::needs_extended_grid(mp));
    const sga::MorseEigenstate state = sga::morse_state(nu, member, grid);
    if (!rc.oracle) {
        if (pick_format(rc, "json") == "csv") {
            sga::write_text(rc.output, sga::wavefunction_csv(state));
        } else {
            emit_json(rc, sga::wavefunction_json(state));
        }
        return kExitOk;
    }
    const auto potential = [&member](double r) { return member(r); };
    const sga::BoundStates oracle =
        sga::bound_states(potential, p.inv_mass_scale, 0.0, grid, nu + 2);
    if (static_cast<int>(oracle.energies.size()) <= nu) {
        throw sga::ConvergenceFailure("oracle found no level at the requested index", nu);
    }
    const sga::GridFunction& oracle_psi = oracle.states[static_cast<size_t>(nu)];
    const sga::Overlap ov =
        sga::overlap(state.sample_psi(), oracle_psi, sga::OverlapWeight::r2_dr);
    const sga::WavefunctionOracle summary{
        oracle.energies[static_cast<size_t>(nu)],
        std::abs(oracle.energies[static_cast<size_t>(nu)] - state.energy),
        std::abs(ov.value)};
    if (pick_format(rc, "json") == "csv") {
        sga::write_text(rc.output, sga::wavefunction_csv(state, &oracle_psi));
    } else {
        emit_json(rc, sga::wavefunction_json(state, &summary));
    }
    return kExitOk;
}

int cmd_ladder(const RunConfig& rc) {
    if (rc.system != "morse") {
        throw sga::DomainError("the ladder demonstration runs on the Morse family");
    }
    require_json_format(rc, "ladder");
    const sga::MorseParams p = make_morse(rc);
    if (!rc.nu) throw sga::DomainError("ladder needs --nu (level to rebuild, >= 1)");
    const int nu = *rc.nu;
    const auto top = sga::nu_max(p.k0);
    if (nu < 1 || !top || nu > *top) {
        throw sga::DomainError("ladder needs 1 <= nu <= nu_max = " +
                               (top ? std::to_string(*top) : std::string("none")));
    }
    const sga::Grid grid = resolve_morse_grid(rc, p, true);
    const sga::LadderResult result = sga::susy_ladder(nu, p, grid);
    emit_json(rc, sga::ladder_json(result, nu, p, rc.threshold));
    return std::abs(result.overlap.value) >= rc.threshold ? kExitOk : kExitRuntime;
}

int cmd_diagram(const RunConfig& rc) {
    require_json_format(rc, "diagram");
    if (rc.system == "oscillator") {
        const sga::OscParams p = make_oscillator(rc);
        const int ell_max = rc.ell > 0 ? rc.ell : 2;
        const int per_ell = rc.nu.value_or(3) + 1;
        if (per_ell < 1) throw sga::DomainError("--nu must be >= 0");
        emit_json(rc, sga::diagram_json(sga::oscillator_levels(p, ell_max, per_ell), p));
        return kExitOk;
    }
    const sga::MorseParams p = make_morse(rc);
    const long leftmost = -sga::floor_minus(p.k0);
    const int m_min = static_cast<int>(std::max<long>(rc.m.value_or(-5), leftmost));
    emit_json(rc, sga::diagram_json(sga::morse_lattice(p, m_min), p));
    return kExitOk;
}

int cmd_verify(const RunConfig& rc) {
    require_json_format(rc, "verify");
    sga::VerifyOptions options;
    options.morse = make_morse(rc);
    options.oscillator = make_oscillator(rc);
    options.seed = rc.seed;
    options.n_points = rc.refine_points;
    const sga::VerifySuite suite = sga::parse_suite(rc.suite);
    const std::vector<sga::CheckResult> results = sga::run_verify(suite, options);
    emit_json(rc, sga::verify_json(suite, rc.seed, results));
    return sga::all_passed(results) ? kExitOk : kExitVerifyFailed;
}

void add_common_options(CLI::App& app, RunConfig& rc) {
    app.add_option("--system", rc.system, "System family: morse or oscillator")
        ->check(CLI::IsMember({"morse", "oscillator"}));
    app.add_option("--k0", rc.k0, "Morse depth index (dimensionless mode)");
    app.add_option("--r0-over-a", rc.r0_over_a, "Morse minimum position in units of a")
        ->capture_default_str();
    app.add_option("--V0", rc.v0, "Morse well depth (dimensional mode)");
    app.add_option("--r0", rc.r0, "Morse minimum position (dimensional mode)");
    app.add_option("--a", rc.a, "Morse length scale (dimensional mode)");
    app.add_option("--hbar2-over-2M", rc.hbar2_over_2m, "hbar^2 / 2M (dimensional mode)");
    app.add_option("--k-sign", rc.k_sign, "Oscillator stiffness sign: 1 or -1");
    app.add_option("--hbar-omega", rc.hbar_omega, "Oscillator level spacing / 2")
        ->capture_default_str();
    app.add_option("--epsilon", rc.epsilon, "Centrifugal perturbation strength")
        ->capture_default_str();
    app.add_option("--ell", rc.ell, "Partial wave")->capture_default_str();
    app.add_option("--m", rc.m, "Family member index (Morse)");
    app.add_option("--nu", rc.nu, "Level index");
    app.add_option("--grid-min", rc.grid_min, "Left grid edge override");
    app.add_option("--grid-max", rc.grid_max, "Right grid edge override");
    app.add_option("--n-points", rc.n_points_arg,
                   "Grid size; verify accepts a comma list for refinement fits");
    app.add_option("--seed", rc.seed, "Seed for randomized test functions")
        ->capture_default_str();
    app.add_option("--format", rc.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", rc.output, "Output path (default: stdout)");
    app.add_flag("--oracle", rc.oracle, "Add the finite-difference solver comparison");
    app.add_option("--config", rc.config_path, "JSON config file; flags override its values");
}

int run(int argc, char** argv) {
    RunConfig rc;
    apply_env_grid(rc);
    const std::string config_path = find_config_path(argc, argv);
    if (!config_path.empty()) apply_config_file(rc, config_path);

    CLI::App app{"Closed-form and solver spectra for the Morse family and radial oscillator"};
    app.require_subcommand(1);
    add_common_options(app, rc);

    CLI::App* spectrum = app.add_subcommand("spectrum", "Bound-level table");
    CLI::App* potential = app.add_subcommand("potential", "Sampled effective-potential curve");
    CLI::App* wavefunction = app.add_subcommand("wavefunction", "Sampled bound state");
    CLI::App* ladder =
        app.add_subcommand("ladder", "Rebuild level nu from the partner ground state");
    CLI::App* diagram = app.add_subcommand("diagram", "Level lattice with ladder edges");
    CLI::App* verify = app.add_subcommand("verify", "Run the self-check suites");
    for (CLI::App* sub : {spectrum, potential, wavefunction, ladder, diagram, verify}) {
        add_common_options(*sub, rc);
    }
    ladder->add_option("--threshold", rc.threshold, "Overlap acceptance floor")
        ->capture_default_str();
    verify->add_option("--suite", rc.suite, "algebra, spectra, ladder, oracle, or all")
        ->check(CLI::IsMember({"algebra", "spectra", "ladder", "oracle", "all"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (!rc.n_points_arg.empty()) parse_n_points(rc, rc.n_points_arg);

    if (spectrum->parsed()) return cmd_spectrum(rc);
    if (potential->parsed()) return cmd_potential(rc);
    if (wavefunction->parsed()) return cmd_wavefunction(rc);
    if (ladder->parsed()) return cmd_ladder(rc);
    if (diagram->parsed()) return cmd_diagram(rc);
    if (verify->parsed()) return cmd_verify(rc);
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
