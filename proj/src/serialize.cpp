#include "sga/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

namespace sga {

namespace {

json grid_json(const Grid& grid) {
    json g;
    g["x_min"] = grid.x_min();
    g["x_max"] = grid.x_max();
    g["n_points"] = grid.n_points();
    g["coordinate"] = grid.tag() == Coordinate::radial ? "radial" : "scaled";
    return g;
}

const char* system_name(SystemKind system) {
    return system == SystemKind::morse ? "morse" : "oscillator";
}

const char* source_name(SpectrumSource source) {
    return source == SpectrumSource::closed_form ? "closed_form" : "oracle";
}

void append_row(std::string& out, std::initializer_list<double> cells) {
    bool first = true;
    for (double c : cells) {
        if (!first) out.push_back(',');
        out += format_double(c);
        first = false;
    }
    out.push_back('\n');
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    if (res.ec != std::errc()) return "nan";
    return std::string(buf, res.ptr);
}

json params_json(const MorseParams& p) {
    json j;
    j["k0"] = p.k0;
    j["r0_over_a"] = p.r0 / p.a;
    j["V0"] = p.V0;
    j["r0"] = p.r0;
    j["a"] = p.a;
    j["hbar2_over_2M"] = p.inv_mass_scale;
    j["cal_E"] = p.cal_E;
    return j;
}

json params_json(const OscParams& p) {
    json j;
    j["k_stiff"] = p.k_stiff;
    j["hbar2_over_2M"] = p.inv_mass_scale;
    j["hbar_omega"] = p.hbar_omega;
    j["epsilon"] = p.epsilon;
    j["ell"] = p.ell;
    j["alpha_ell"] = p.alpha_ell;
    j["cal_E"] = p.cal_E;
    return j;
}

json spectrum_json(const SpectrumTable& table, const json& params,
                   const std::vector<double>* oracle_energies) {
    const double cal_E =
        params.contains("cal_E") ? params["cal_E"].get<double>() : 1.0;
    json out;
    out["system"] = system_name(table.system);
    out["params"] = params;
    if (table.system == SystemKind::morse) {
        out["m"] = table.index;
    } else {
        out["ell"] = table.index;
    }
    json levels = json::array();
    for (size_t i = 0; i < table.levels.size(); ++i) {
        const SpectrumLevel& level = table.levels[i];
        json row;
        row["nu"] = level.nu;
        row["energy"] = level.energy;
        if (table.system == SystemKind::morse) {
            row["lambda_nu"] = std::sqrt(-level.energy / cal_E) + 0.5;
        }
        if (oracle_energies && i < oracle_energies->size()) {
            row["oracle_energy"] = (*oracle_energies)[i];
            row["abs_delta"] = std::abs((*oracle_energies)[i] - level.energy);
        }
        levels.push_back(std::move(row));
    }
    out["levels"] = std::move(levels);
    out["source"] = source_name(table.source);
    return out;
}

std::string spectrum_csv(const SpectrumTable& table, double cal_E,
                         const std::vector<double>* oracle_energies) {
    std::string out;
    const bool morse = table.system == SystemKind::morse;
    out += "nu,energy";
    if (morse) out += ",lambda_nu";
    if (oracle_energies) out += ",oracle_energy,abs_delta";
    out.push_back('\n');
    for (size_t i = 0; i < table.levels.size(); ++i) {
        const SpectrumLevel& level = table.levels[i];
        out += std::to_string(level.nu);
        out.push_back(',');
        out += format_double(level.energy);
        if (morse) {
            out.push_back(',');
            out += format_double(std::sqrt(-level.energy / cal_E) + 0.5);
        }
        if (oracle_energies && i < oracle_energies->size()) {
            out.push_back(',');
            out += format_double((*oracle_energies)[i]);
            out.push_back(',');
            out += format_double(std::abs((*oracle_energies)[i] - level.energy));
        }
        out.push_back('\n');
    }
    return out;
}

std::string potential_csv(const EffectivePotential& member, const Grid& grid) {
    std::string out;
    out += "# m = " + std::to_string(member.m) + "\n";
    out += "# k_m = " + format_double(member.k_m) + "\n";
    out += "# r_m = " + format_double(member.r_m) + "\n";
    out += "# depth = " + format_double(member.depth) + "\n";
    out += "r,V_eff\n";
    for (int i = 0; i < grid.n_points(); ++i) {
        const double r = grid.point(i);
        append_row(out, {r, member(r)});
    }
    return out;
}

json potential_json(const EffectivePotential& member, const Grid& grid) {
    json out;
    out["system"] = "morse";
    out["params"] = params_json(member.base);
    out["m"] = member.m;
    out["k_m"] = member.k_m;
    out["r_m"] = member.r_m;
    out["depth"] = member.depth;
    out["grid"] = grid_json(grid);
    json r = json::array();
    json v = json::array();
    for (int i = 0; i < grid.n_points(); ++i) {
        const double x = grid.point(i);
        r.push_back(x);
        v.push_back(member(x));
    }
    out["r"] = std::move(r);
    out["V_eff"] = std::move(v);
    return out;
}

json wavefunction_json(const MorseEigenstate& state, const WavefunctionOracle* oracle) {
    json out;
    out["system"] = "morse";
    out["params"] = params_json(state.potential.base);
    out["m"] = state.potential.m;
    out["nu"] = state.nu;
    out["energy"] = state.energy;
    out["s"] = state.s;
    out["tail_ok"] = state.tail_ok;
    out["grid"] = grid_json(state.grid);
    json r = json::array();
    json psi = json::array();
    json r_psi = json::array();
    for (int i = 0; i < state.grid.n_points(); ++i) {
        const double x = state.grid.point(i);
        r.push_back(x);
        psi.push_back(state.psi(x));
        r_psi.push_back(state.r_psi(x));
    }
    out["r"] = std::move(r);
    out["psi"] = std::move(psi);
    out["r_psi"] = std::move(r_psi);
    if (oracle) {
        json o;
        o["energy"] = oracle->energy;
        o["abs_delta"] = oracle->abs_delta;
        o["overlap_abs"] = oracle->overlap_abs;
        out["oracle"] = std::move(o);
    }
    return out;
}

std::string wavefunction_csv(const MorseEigenstate& state, const GridFunction* oracle_psi) {
    std::string out;
    out += "# m = " + std::to_string(state.potential.m) + "\n";
    out += "# nu = " + std::to_string(state.nu) + "\n";
    out += "# energy = " + format_double(state.energy) + "\n";
    out += "# s = " + format_double(state.s) + "\n";
    out += oracle_psi ? "r,psi,r_psi,psi_oracle\n" : "r,psi,r_psi\n";
    for (int i = 0; i < state.grid.n_points(); ++i) {
        const double x = state.grid.point(i);
        if (oracle_psi) {
            append_row(out, {x, state.psi(x), state.r_psi(x), (*oracle_psi)[i].real()});
        } else {
            append_row(out, {x, state.psi(x), state.r_psi(x)});
        }
    }
    return out;
}

json oscillator_wavefunction_json(const OscParams& p, int nu, double energy,
                                  const GridFunction& psi) {
    json out;
    out["system"] = "oscillator";
    out["params"] = params_json(p);
    out["nu"] = nu;
    out["energy"] = energy;
    out["grid"] = grid_json(psi.grid());
    json r = json::array();
    json psi_col = json::array();
    json r_psi = json::array();
    for (int i = 0; i < psi.size(); ++i) {
        const double x = psi.grid().point(i);
        r.push_back(x);
        psi_col.push_back(psi[i].real());
        r_psi.push_back(x * psi[i].real());
    }
    out["r"] = std::move(r);
    out["psi"] = std::move(psi_col);
    out["r_psi"] = std::move(r_psi);
    return out;
}

std::string oscillator_wavefunction_csv(int nu, double energy, const GridFunction& psi) {
    std::string out;
    out += "# nu = " + std::to_string(nu) + "\n";
    out += "# energy = " + format_double(energy) + "\n";
    out += "r,psi,r_psi\n";
    for (int i = 0; i < psi.size(); ++i) {
        const double x = psi.grid().point(i);
        append_row(out, {x, psi[i].real(), x * psi[i].real()});
    }
    return out;
}

json ladder_json(const LadderResult& result, int nu, const MorseParams& p, double threshold) {
    json out;
    out["system"] = "morse";
    out["params"] = params_json(p);
    out["nu"] = nu;
    out["overlap_abs"] = std::abs(result.overlap.value);
    out["overlap_normalized_inputs"] = result.overlap.normalized;
    out["step_residuals"] = result.step_residuals;
    out["energy_analytic"] = result.energy;
    out["partner_ground_energy"] = result.partner_ground_energy;
    out["threshold"] = threshold;
    out["passed"] = std::abs(result.overlap.value) >= threshold;
    return out;
}

json diagram_json(const std::vector<LatticePoint>& lattice, const MorseParams& p) {
    json out;
    out["system"] = "morse";
    out["params"] = params_json(p);
    json nodes = json::array();
    for (size_t i = 0; i < lattice.size(); ++i) {
        const LatticePoint& pt = lattice[i];
        json node;
        node["id"] = static_cast<int>(i);
        node["m"] = pt.m;
        node["n"] = pt.n;
        node["lambda"] = pt.lambda;
        node["energy"] = pt.energy;
        node["marginal"] = pt.marginal;
        nodes.push_back(std::move(node));
    }
    json edges = json::array();
    for (size_t i = 0; i < lattice.size(); ++i) {
        if (lattice[i].marginal) continue;
        for (size_t j = 0; j < lattice.size(); ++j) {
            if (lattice[j].marginal) continue;
            if (lattice[j].m != lattice[i].m + 1 || lattice[j].n != lattice[i].n + 1) continue;
            json edge;
            edge["kind"] = "raise_across_potentials";
            edge["from"] = static_cast<int>(i);
            edge["to"] = static_cast<int>(j);
            edge["delta_energy"] = lattice[j].energy - lattice[i].energy;
            edges.push_back(std::move(edge));
        }
    }
    out["nodes"] = std::move(nodes);
    out["edges"] = std::move(edges);
    return out;
}

json diagram_json(const std::vector<OscLadderLevel>& levels, const OscParams& p) {
    json out;
    out["system"] = "oscillator";
    out["params"] = params_json(p);
    json nodes = json::array();
    for (size_t i = 0; i < levels.size(); ++i) {
        const OscLadderLevel& level = levels[i];
        json node;
        node["id"] = static_cast<int>(i);
        node["ell"] = level.ell;
        node["nu"] = level.nu;
        node["energy"] = level.energy;
        node["lambda_plus"] = level.lambda_plus;
        nodes.push_back(std::move(node));
    }
    json edges = json::array();
    for (size_t i = 0; i < levels.size(); ++i) {
        for (size_t j = 0; j < levels.size(); ++j) {
            if (levels[j].ell != levels[i].ell || levels[j].nu != levels[i].nu + 1) continue;
            json edge;
            edge["kind"] = "raise_within_potential";
            edge["from"] = static_cast<int>(i);
            edge["to"] = static_cast<int>(j);
            edge["delta_energy"] = levels[j].energy - levels[i].energy;
            edges.push_back(std::move(edge));
        }
    }
    out["nodes"] = std::move(nodes);
    out["edges"] = std::move(edges);
    return out;
}

json verify_json(VerifySuite suite, std::uint32_t seed,
                 const std::vector<CheckResult>& checks) {
    json out;
    out["suite"] = suite_name(suite);
    out["seed"] = seed;
    json rows = json::array();
    int passed = 0;
    for (const CheckResult& check : checks) {
        json row;
        row["name"] = check.name;
        row["status"] = check.passed ? "pass" : "fail";
        row["measured"] = check.measured;
        row["tolerance"] = check.tolerance;
        if (check.order) row["convergence_order"] = *check.order;
        rows.push_back(std::move(row));
        if (check.passed) ++passed;
    }
    out["checks"] = std::move(rows);
    json summary;
    summary["total"] = static_cast<int>(checks.size());
    summary["passed"] = passed;
    summary["failed"] = static_cast<int>(checks.size()) - passed;
    out["summary"] = std::move(summary);
    return out;
}

void write_text(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace sga
