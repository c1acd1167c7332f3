#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leachate/engine.hpp"
#include "leachate/transport.hpp"

namespace leachate {

struct ErrorReport {
    double l2 = 0.0;        ///< RMS over compared nodes, mg/L
    double linf = 0.0;      ///< max abs, mg/L
    double rel_linf = 0.0;  ///< linf / C0 (0 when C0 == 0)
    std::size_t node_count = 0;
    std::string compared_axis;
};

ErrorReport error_norms(std::span<const double> numerical, std::span<const double> analytical, double C0,
                        std::string compared_axis = "z-profile");
ErrorReport error_norms(const ConcentrationField& numerical, const ConcentrationField& analytical, double C0);

/// Oracle sampled at the z nodes of `grid` (j * dz).
std::vector<double> oracle_z_profile(const GridSpec& grid, const TransportParams& params, double t);

/// sqrt(2 D t / R), cm.
double diffusion_length(const TransportParams& params, double t);

/// 1-D column (nx = 3, reflect sides, zero-gradient bottom, upwind) deep
/// enough that the truncated bottom does not reach the compared profile:
/// depth >= v t / R + 5 diffusion lengths.
SimulationConfig oracle_config(const SimulationConfig& base, double dz, double dt);

/// slope_k = log(e_k / e_{k+1}) / log(c_k / c_{k+1}). A zero error on either
/// side gives an empty entry (saturated) rather than an infinite slope.
std::vector<std::optional<double>> observed_order(std::span<const double> errors, std::span<const double> controls);

struct RefinementRun {
    double control = 0.0;
    SimulationConfig config;
    StabilityDiagnostics diagnostics;
    long negative_count = 0;
    std::vector<double> z;        ///< cm
    std::vector<double> profile;  ///< FD at the middle column, t_end
    std::vector<double> exact;    ///< oracle at the same nodes
};

struct RefinementStudy {
    std::vector<double> control_values;
    std::vector<ErrorReport> reports;  ///< vs oracle, one per control value
    std::vector<std::optional<double>> observed_orders;
    /// rel_linf between profiles k and k+1 (timestep study only).
    std::vector<double> successive_rel_linf;
    /// Self-convergence slopes from successive differences.
    std::vector<std::optional<double>> successive_orders;
    /// Coarser member of the first successive pair closer than tol.
    std::optional<double> independent_at;
    std::vector<RefinementRun> runs;
};

/// Runs `base` once per timestep (strictly decreasing, each <= t_end) and
/// compares the final middle-column profile to the oracle and to the next
/// finer run. Runs execute concurrently; results are ordered by dt.
RefinementStudy timestep_study(const SimulationConfig& base, std::span<const double> dt_list, double tol = 0.02);

struct MeshStudyOptions {
    /// dt_k = base.dt * (h_k / base.dz)^2, keeping the diffusion number fixed.
    bool scale_dt_with_h2 = false;
};

/// Rebuilds the grid at each spacing with the physical extent held fixed (a
/// 1-D base with nx = 3 keeps nx = 3). Spacings must be positive, strictly
/// decreasing, and divide both extents within 1e-9.
RefinementStudy mesh_study(const SimulationConfig& base, std::span<const double> h_list, MeshStudyOptions options = {});

struct SensitivityProfile {
    double D_m2_per_annum = 0.0;
    std::vector<double> z;
    std::vector<double> profile;
    bool monotone_non_increasing = false;
};

struct SensitivityStudy {
    std::vector<SensitivityProfile> profiles;  ///< sorted by D
    std::optional<double> max_deviation;       ///< mg/L, max over all pairs
    bool trend_preserved = false;              ///< every profile monotone
};

SensitivityStudy sensitivity_study(const SimulationConfig& base, std::span<const double> d_values_m2_per_annum);

bool is_monotone_non_increasing(std::span<const double> profile, double slack);

}  // namespace leachate
