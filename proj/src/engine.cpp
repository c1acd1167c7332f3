#include "leachate/engine.hpp"

#include <cmath>
#include <string>

#include "leachate/error.hpp"
#include "leachate/kernels.hpp"

namespace leachate {

StabilityDiagnostics stability_diagnostics(const GridSpec& grid, const TransportParams& params, double dt) {
    StabilityDiagnostics d;
    d.r_x = params.D * dt / (grid.dx * grid.dx);
    d.r_z = params.D * dt / (grid.dz * grid.dz);
    d.courant_x = params.v * dt / grid.dx;
    d.courant_z = params.v * dt / grid.dz;
    d.peclet_x = params.D > 0.0 ? params.v * grid.dx / params.D : 0.0;
    d.peclet_z = params.D > 0.0 ? params.v * grid.dz / params.D : 0.0;
    d.stable = (d.r_x + d.r_z <= 0.5) && (d.courant_z <= 1.0) && (d.courant_x <= 1.0);
    return d;
}

ConcentrationField init_field(const GridSpec& grid, const TransportParams& params) {
    grid.validate();
    params.validate();
    ConcentrationField field(grid, 0.0, params.background);
    for (int i = 0; i < grid.nx; ++i) field(i, 0) = params.C0;
    return field;
}

void apply_boundaries_in_place(ConcentrationField& field, const BoundaryConditionSet& bc,
                               const TransportParams& params) {
    const GridSpec& g = field.grid;
    if (field.values.size() != g.node_count()) throw ParameterError("field shape does not match grid");
    const int last_x = g.nx - 1;
    const int last_z = g.nz - 1;

    for (int i = 0; i < g.nx; ++i) {
        field(i, last_z) = bc.bottom == BottomBoundary::zero_gradient ? field(i, last_z - 1) : params.background;
    }

    // Reflect edges are live stencil nodes; only the Neumann copy touches them.
    if (bc.sides == SideBoundary::neumann_zero_flux) {
        for (int j = 0; j < g.nz; ++j) {
            field(0, j) = field(1, j);
            field(last_x, j) = field(last_x - 1, j);
        }
    }

    for (int i = 0; i < g.nx; ++i) {
        field(i, 0) = bc.top == TopBoundary::dirichlet ? params.C0 : field(i, 2);
    }
}

ConcentrationField apply_boundaries(ConcentrationField field, const BoundaryConditionSet& bc,
                                    const TransportParams& params) {
    apply_boundaries_in_place(field, bc, params);
    return field;
}

namespace {

ConcentrationField step_unchecked(const ConcentrationField& field, const SimulationConfig& config, double dt,
                                  long step_index) {
    ConcentrationField next = field;
    const auto k = make_coefficients(field.grid, config.params, dt, config.scheme, config.bc.sides);
    advance_interior_omp(k, field.grid, field.values, next.values);
    apply_boundaries_in_place(next, config.bc, config.params);
    next.t = field.t + dt;

    for (int i = 0; i < next.grid.nx; ++i) {
        for (int j = 0; j < next.grid.nz; ++j) {
            if (!std::isfinite(next(i, j))) {
                throw BlowUpError("non-finite concentration at step " + std::to_string(step_index) + ", node (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")",
                                  step_index, i, j);
            }
        }
    }
    return next;
}

void check_policy(const SimulationConfig& config, const StabilityDiagnostics& d) {
    if (config.stability_policy == StabilityPolicy::error && !d.stable) {
        throw StabilityError("explicit step unstable: r_x + r_z = " + std::to_string(d.r_x + d.r_z) +
                             ", courant_x = " + std::to_string(d.courant_x) +
                             ", courant_z = " + std::to_string(d.courant_z));
    }
}

void count_negatives(const ConcentrationField& field, NegativeConcentrationEvents& events) {
    for (int i = 0; i < field.grid.nx; ++i) {
        for (int j = 0; j < field.grid.nz; ++j) {
            if (field(i, j) < 0.0) {
                if (!events.first) events.first = NodeEvent{field.t, i, j};
                ++events.count;
            }
        }
    }
}

}  // namespace

ConcentrationField step(const ConcentrationField& field, const SimulationConfig& config) {
    return step(field, config, config.dt);
}

ConcentrationField step(const ConcentrationField& field, const SimulationConfig& config, double dt,
                        long step_index) {
    if (field.values.size() != field.grid.node_count()) throw ParameterError("field shape does not match grid");
    if (!field.all_finite()) throw ParameterError("field contains non-finite values");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ParameterError("dt must be > 0");
    check_policy(config, stability_diagnostics(field.grid, config.params, dt));
    return step_unchecked(field, config, dt, step_index);
}

SimulationResult run(const SimulationConfig& config) {
    config.validate();
    SimulationResult result;
    result.config_echo = config;
    result.diagnostics = stability_diagnostics(config);
    check_policy(config, result.diagnostics);

    const std::vector<double> targets = config.effective_snapshots();
    ConcentrationField field = init_field(config.grid, config.params);
    long steps = 0;

    auto advance_to = [&](double target) {
        while (field.t < target) {
            const double remaining = target - field.t;
            const bool last = remaining <= config.dt * (1.0 + 1e-9);
            const double h = last ? remaining : config.dt;
            ++steps;
            field = step_unchecked(field, config, h, steps);
            if (last) field.t = target;
            count_negatives(field, result.negative_events);
        }
    };

    for (const double target : targets) {
        advance_to(target);
        result.snapshots.push_back(field);
    }
    advance_to(config.t_end);

    result.steps_taken = steps;
    return result;
}

double discrete_mass(const ConcentrationField& field, const BoundaryConditionSet& bc) {
    const GridSpec& g = field.grid;
    auto x_weight = [&](int i) {
        const bool edge = i == 0 || i == g.nx - 1;
        if (bc.sides == SideBoundary::reflect) return edge ? 0.5 : 1.0;
        return edge ? 0.0 : 1.0;
    };
    auto z_weight = [&](int j) {
        if (j == 0 || j == g.nz - 1) return 0.0;
        if (bc.top == TopBoundary::reflect_test_only && j == 1) return 0.5;
        return 1.0;
    };
    double total = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        const double wx = x_weight(i);
        if (wx == 0.0) continue;
        double column = 0.0;
        for (int j = 0; j < g.nz; ++j) column += z_weight(j) * field(i, j);
        total += wx * column;
    }
    return total * g.dx * g.dz;
}

}  // namespace leachate
