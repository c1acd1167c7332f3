#include "leachate/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "leachate/analytical.hpp"
#include "leachate/error.hpp"

namespace leachate {

namespace {

// Independent runs in parallel; each slot is written by exactly one thread.
std::vector<SimulationResult> run_all(const std::vector<SimulationConfig>& configs) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(configs.size());
    std::vector<SimulationResult> results(configs.size());
    std::vector<std::exception_ptr> failures(configs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        try {
            results[k] = run(configs[k]);
        } catch (...) {
            failures[k] = std::current_exception();
        }
    }
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    return results;
}

std::vector<double> node_depths(const GridSpec& grid) {
    std::vector<double> z(grid.nz);
    for (int j = 0; j < grid.nz; ++j) z[j] = j * grid.dz;
    return z;
}

RefinementRun collect(double control, const SimulationConfig& cfg, const SimulationResult& result) {
    RefinementRun r;
    r.control = control;
    r.config = cfg;
    r.diagnostics = result.diagnostics;
    r.negative_count = result.negative_events.count;
    r.z = node_depths(cfg.grid);
    r.profile = z_profile(result.snapshots.back(), middle_column(cfg.grid));
    r.exact = oracle_z_profile(cfg.grid, cfg.params, cfg.t_end);
    return r;
}

void require_strictly_decreasing(std::span<const double> values, const char* what) {
    if (values.empty()) throw ParameterError(std::string(what) + " must not be empty");
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!std::isfinite(values[k]) || !(values[k] > 0.0)) {
            throw ParameterError(std::string(what) + " entries must be positive");
        }
        if (k > 0 && !(values[k] < values[k - 1])) {
            throw ParameterError(std::string(what) + " must be strictly decreasing");
        }
    }
}

int nodes_for_extent(double extent, double h, const char* axis) {
    const double cells = extent / h;
    const double rounded = std::round(cells);
    if (std::abs(cells - rounded) > 1e-9) {
        throw ParameterError(std::string("spacing ") + std::to_string(h) + " cm does not divide the " + axis +
                             " extent " + std::to_string(extent) + " cm");
    }
    const int nodes = static_cast<int>(rounded) + 1;
    if (nodes < 3) {
        throw ParameterError(std::string("spacing ") + std::to_string(h) + " cm leaves fewer than 3 " + axis +
                             " nodes");
    }
    return nodes;
}

}  // namespace

ErrorReport error_norms(std::span<const double> numerical, std::span<const double> analytical, double C0,
                        std::string compared_axis) {
    if (numerical.size() != analytical.size()) {
        throw ComparisonError("shape mismatch: " + std::to_string(numerical.size()) + " vs " +
                              std::to_string(analytical.size()) + " nodes");
    }
    ErrorReport rep;
    rep.node_count = numerical.size();
    rep.compared_axis = std::move(compared_axis);
    if (numerical.empty()) return rep;
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < numerical.size(); ++k) {
        if (!std::isfinite(numerical[k]) || !std::isfinite(analytical[k])) {
            throw ComparisonError("non-finite value at node " + std::to_string(k));
        }
        const double diff = std::abs(numerical[k] - analytical[k]);
        sum_sq += diff * diff;
        rep.linf = std::max(rep.linf, diff);
    }
    rep.l2 = std::sqrt(sum_sq / static_cast<double>(numerical.size()));
    // RMS can exceed max by rounding when all differences are equal.
    rep.l2 = std::min(rep.l2, rep.linf);
    rep.rel_linf = C0 > 0.0 ? rep.linf / C0 : 0.0;
    return rep;
}

ErrorReport error_norms(const ConcentrationField& numerical, const ConcentrationField& analytical, double C0) {
    if (!(numerical.grid == analytical.grid)) throw ComparisonError("shape mismatch: grids differ");
    return error_norms(numerical.values, analytical.values, C0, "full field");
}

std::vector<double> oracle_z_profile(const GridSpec& grid, const TransportParams& params, double t) {
    std::vector<double> out(grid.nz);
    const double R = params.retardation();
    for (int j = 0; j < grid.nz; ++j) out[j] = ogata_profile_1d(j * grid.dz, t, params, R);
    return out;
}

double diffusion_length(const TransportParams& params, double t) {
    return std::sqrt(2.0 * params.D * t / params.retardation());
}

SimulationConfig oracle_config(const SimulationConfig& base, double dz, double dt) {
    if (!(dz > 0.0) || !(dt > 0.0)) throw ParameterError("dz and dt must be > 0");
    SimulationConfig cfg = base;
    const double R = base.params.retardation();
    const double depth = base.params.v * base.t_end / R + 5.0 * diffusion_length(base.params, base.t_end);
    cfg.grid = GridSpec{3, std::max(3, static_cast<int>(std::ceil(depth / dz)) + 1), dz, dz};
    cfg.bc = BoundaryConditionSet{TopBoundary::dirichlet, BottomBoundary::zero_gradient, SideBoundary::reflect};
    cfg.scheme = Scheme::upwind;
    cfg.dt = dt;
    cfg.snapshot_times = {base.t_end};
    return cfg;
}

std::vector<std::optional<double>> observed_order(std::span<const double> errors, std::span<const double> controls) {
    if (errors.size() != controls.size()) throw ParameterError("errors and controls differ in length");
    if (errors.size() < 2) throw ParameterError("observed_order needs at least two entries");
    for (std::size_t k = 0; k < controls.size(); ++k) {
        if (!(controls[k] > 0.0)) throw ParameterError("controls must be positive");
        if (k > 0 && !(controls[k] < controls[k - 1])) throw ParameterError("controls must be strictly decreasing");
        if (!(errors[k] >= 0.0) || !std::isfinite(errors[k])) throw ParameterError("errors must be finite and >= 0");
    }
    std::vector<std::optional<double>> slopes;
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
        if (errors[k] == 0.0 || errors[k + 1] == 0.0) {
            slopes.emplace_back(std::nullopt);
            continue;
        }
        slopes.emplace_back(std::log(errors[k] / errors[k + 1]) / std::log(controls[k] / controls[k + 1]));
    }
    return slopes;
}

RefinementStudy timestep_study(const SimulationConfig& base, std::span<const double> dt_list, double tol) {
    require_strictly_decreasing(dt_list, "dt_list");
    for (const double dt : dt_list) {
        if (dt > base.t_end) throw ParameterError("every dt must be <= t_end");
    }

    std::vector<SimulationConfig> configs;
    for (const double dt : dt_list) {
        SimulationConfig cfg = base;
        cfg.dt = dt;
        cfg.snapshot_times = {base.t_end};
        configs.push_back(cfg);
    }
    const auto results = run_all(configs);

    RefinementStudy study;
    study.control_values.assign(dt_list.begin(), dt_list.end());
    for (std::size_t k = 0; k < configs.size(); ++k) {
        study.runs.push_back(collect(dt_list[k], configs[k], results[k]));
        const auto& r = study.runs.back();
        study.reports.push_back(error_norms(r.profile, r.exact, base.params.C0));
    }

    if (study.runs.size() >= 2) {
        std::vector<double> errs;
        for (const auto& rep : study.reports) errs.push_back(rep.linf);
        study.observed_orders = observed_order(errs, study.control_values);

        std::vector<double> diffs;
        for (std::size_t k = 0; k + 1 < study.runs.size(); ++k) {
            const auto rep = error_norms(study.runs[k].profile, study.runs[k + 1].profile, base.params.C0);
            study.successive_rel_linf.push_back(rep.rel_linf);
            diffs.push_back(rep.linf);
            if (!study.independent_at && rep.rel_linf < tol) study.independent_at = dt_list[k];
        }
        if (diffs.size() >= 2) {
            std::vector<double> controls(dt_list.begin(), dt_list.end() - 1);
            study.successive_orders = observed_order(diffs, controls);
        }
    }
    return study;
}

RefinementStudy mesh_study(const SimulationConfig& base, std::span<const double> h_list, MeshStudyOptions options) {
    require_strictly_decreasing(h_list, "h_list");
    const bool one_d = base.grid.nx == 3;

    std::vector<SimulationConfig> configs;
    for (const double h : h_list) {
        SimulationConfig cfg = base;
        const int nz = nodes_for_extent(base.grid.extent_z(), h, "z");
        const int nx = one_d ? 3 : nodes_for_extent(base.grid.extent_x(), h, "x");
        cfg.grid = GridSpec{nx, nz, h, h};
        if (options.scale_dt_with_h2) cfg.dt = base.dt * (h / base.grid.dz) * (h / base.grid.dz);
        cfg.snapshot_times = {base.t_end};
        configs.push_back(cfg);
    }
    const auto results = run_all(configs);

    RefinementStudy study;
    study.control_values.assign(h_list.begin(), h_list.end());
    for (std::size_t k = 0; k < configs.size(); ++k) {
        study.runs.push_back(collect(h_list[k], configs[k], results[k]));
        const auto& r = study.runs.back();
        study.reports.push_back(error_norms(r.profile, r.exact, base.params.C0));
    }
    if (study.runs.size() >= 2) {
        std::vector<double> errs;
        for (const auto& rep : study.reports) errs.push_back(rep.linf);
        study.observed_orders = observed_order(errs, study.control_values);
    }
    return study;
}

bool is_monotone_non_increasing(std::span<const double> profile, double slack) {
    for (std::size_t k = 1; k < profile.size(); ++k) {
        if (profile[k] > profile[k - 1] + slack) return false;
    }
    return true;
}

SensitivityStudy sensitivity_study(const SimulationConfig& base, std::span<const double> d_values_m2_per_annum) {
    if (d_values_m2_per_annum.empty()) throw ParameterError("d_values must not be empty");
    std::vector<double> sorted(d_values_m2_per_annum.begin(), d_values_m2_per_annum.end());
    std::stable_sort(sorted.begin(), sorted.end());

    std::vector<SimulationConfig> configs;
    for (const double d : sorted) {
        SimulationConfig cfg = base;
        cfg.params.D = convert_diffusion_m2a_to_cm2day(d);
        cfg.snapshot_times = {base.t_end};
        configs.push_back(cfg);
    }
    const auto results = run_all(configs);

    SensitivityStudy study;
    const double slack = 1e-12 * std::max(base.params.C0, 1.0);
    study.trend_preserved = true;
    for (std::size_t k = 0; k < configs.size(); ++k) {
        SensitivityProfile p;
        p.D_m2_per_annum = sorted[k];
        p.z = node_depths(configs[k].grid);
        p.profile = z_profile(results[k].snapshots.back(), middle_column(configs[k].grid));
        p.monotone_non_increasing = is_monotone_non_increasing(p.profile, slack);
        study.trend_preserved = study.trend_preserved && p.monotone_non_increasing;
        study.profiles.push_back(std::move(p));
    }
    for (std::size_t a = 0; a < study.profiles.size(); ++a) {
        for (std::size_t b = a + 1; b < study.profiles.size(); ++b) {
            const auto rep = error_norms(study.profiles[a].profile, study.profiles[b].profile, base.params.C0);
            study.max_deviation = std::max(study.max_deviation.value_or(0.0), rep.linf);
        }
    }
    return study;
}

}  // namespace leachate
