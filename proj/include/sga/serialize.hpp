#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sga/grid.hpp"
#include "sga/quantities.hpp"
#include "sga/spectra.hpp"
#include "sga/verify.hpp"
#include "sga/wavefunctions.hpp"

namespace sga {

/// Keys keep insertion order so a fixed build sequence gives byte-identical
/// documents for identical inputs.
using json = nlohmann::ordered_json;

/// Shortest round-trip decimal form of x (std::to_chars), locale-free.
std::string format_double(double x);

json params_json(const MorseParams& p);
json params_json(const OscParams& p);

/// {system, params, levels, source}; each level carries nu, energy and, for
/// Morse tables, the tower index lambda_nu = k_m - nu. When oracle energies
/// are supplied, levels gain oracle_energy and abs_delta columns.
json spectrum_json(const SpectrumTable& table, const json& params,
                   const std::vector<double>* oracle_energies = nullptr);

/// One row per level, same columns as the JSON form. cal_E converts Morse
/// energies back to the tower index lambda_nu.
std::string spectrum_csv(const SpectrumTable& table, double cal_E = 1.0,
                         const std::vector<double>* oracle_energies = nullptr);

/// Sampled family-member curve; metadata k_m, r_m, depth in '#' header lines,
/// then a r,V_eff column pair.
std::string potential_csv(const EffectivePotential& member, const Grid& grid);
json potential_json(const EffectivePotential& member, const Grid& grid);

/// Closed-form bound state sampled on its grid, optional oracle comparison.
struct WavefunctionOracle {
    double energy;
    double abs_delta;
    double overlap_abs;
};
json wavefunction_json(const MorseEigenstate& state,
                       const WavefunctionOracle* oracle = nullptr);
std::string wavefunction_csv(const MorseEigenstate& state,
                             const GridFunction* oracle_psi = nullptr);

/// Solver-built oscillator state (there is no closed form to sample).
json oscillator_wavefunction_json(const OscParams& p, int nu, double energy,
                                  const GridFunction& psi);
std::string oscillator_wavefunction_csv(int nu, double energy, const GridFunction& psi);

/// Report for the ladder demonstration: headline overlap, per-step
/// eigencondition residuals, and the two energies that must agree.
json ladder_json(const LadderResult& result, int nu, const MorseParams& p, double threshold);

/// Lattice with typed edges. Nodes are indexed; edges reference node indices.
/// Morse: equal-energy raise_across_potentials edges (m,n) -> (m+1,n+1).
/// Oscillator: raise_within_potential edges stepping nu at fixed ell.
json diagram_json(const std::vector<LatticePoint>& lattice, const MorseParams& p);
json diagram_json(const std::vector<OscLadderLevel>& levels, const OscParams& p);

json verify_json(VerifySuite suite, std::uint32_t seed,
                 const std::vector<CheckResult>& checks);

/// Writes content to the path, or to stdout when the path is empty.
void write_text(const std::string& path, const std::string& content);

}  // namespace sga
