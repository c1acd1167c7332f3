#pragma once

#include <optional>
#include <vector>

#include "leachate/field.hpp"
#include "leachate/transport.hpp"

namespace leachate {

struct StabilityDiagnostics {
    double r_x = 0.0;        ///< D dt / dx^2
    double r_z = 0.0;        ///< D dt / dz^2
    double courant_x = 0.0;  ///< v dt / dx
    double courant_z = 0.0;  ///< v dt / dz
    double peclet_x = 0.0;   ///< v dx / D
    double peclet_z = 0.0;   ///< v dz / D
    bool stable = true;

    bool operator==(const StabilityDiagnostics&) const = default;
};

StabilityDiagnostics stability_diagnostics(const GridSpec& grid, const TransportParams& params, double dt);
inline StabilityDiagnostics stability_diagnostics(const SimulationConfig& config) {
    return stability_diagnostics(config.grid, config.params, config.dt);
}

/// Background everywhere, then the surface row at C0.
ConcentrationField init_field(const GridSpec& grid, const TransportParams& params);

/// Re-imposes bottom, side, then top conditions in that order, so the surface
/// row (corners included) always ends at C0 under a Dirichlet top.
void apply_boundaries_in_place(ConcentrationField& field, const BoundaryConditionSet& bc,
                               const TransportParams& params);
ConcentrationField apply_boundaries(ConcentrationField field, const BoundaryConditionSet& bc,
                                    const TransportParams& params);

/// One forward-Euler step of length `dt` (defaults to config.dt). The input
/// is not modified. `step_index` only labels blow-up errors.
ConcentrationField step(const ConcentrationField& field, const SimulationConfig& config);
ConcentrationField step(const ConcentrationField& field, const SimulationConfig& config, double dt,
                        long step_index = 0);

struct NodeEvent {
    double t = 0.0;
    int i = 0;
    int j = 0;
    bool operator==(const NodeEvent&) const = default;
};

struct NegativeConcentrationEvents {
    long count = 0;  ///< node-steps with C < 0
    std::optional<NodeEvent> first;
    bool operator==(const NegativeConcentrationEvents&) const = default;
};

struct SimulationResult {
    std::vector<ConcentrationField> snapshots;
    StabilityDiagnostics diagnostics;
    SimulationConfig config_echo;
    NegativeConcentrationEvents negative_events;
    long steps_taken = 0;

    bool operator==(const SimulationResult&) const = default;
};

/// Marches from t = 0 to t_end, landing exactly on each snapshot time with a
/// shortened step where needed. Negative values are counted, never clamped.
SimulationResult run(const SimulationConfig& config);

/// Weighted node sum that the scheme conserves when no source or sink acts:
/// copied or pinned rows/columns carry weight 0 and nodes on a mirror wall
/// weight 1/2.
/// Multiplied by dx*dz (mg/L * cm^2).
double discrete_mass(const ConcentrationField& field, const BoundaryConditionSet& bc);

}  // namespace leachate
