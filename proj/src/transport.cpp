#include "leachate/transport.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "leachate/error.hpp"

namespace leachate {

namespace {

void require_finite(double value, const char* field) {
    if (!std::isfinite(value)) {
        throw ParameterError(std::string(field) + " must be finite");
    }
}

template <class Enum, std::size_t N>
Enum lookup_enum(std::string_view s, const std::pair<std::string_view, Enum> (&table)[N], const char* what) {
    for (const auto& [name, value] : table) {
        if (name == s) return value;
    }
    std::string valid;
    for (const auto& [name, value] : table) {
        if (!valid.empty()) valid += ", ";
        valid += name;
    }
    throw LookupError("unknown " + std::string(what) + " '" + std::string(s) + "' (valid: " + valid + ")");
}

constexpr std::pair<std::string_view, Scheme> kSchemes[] = {
    {"paper_forward", Scheme::paper_forward},
    {"upwind", Scheme::upwind},
};
constexpr std::pair<std::string_view, StabilityPolicy> kPolicies[] = {
    {"error", StabilityPolicy::error},
    {"warn", StabilityPolicy::warn},
    {"silent", StabilityPolicy::silent},
};
constexpr std::pair<std::string_view, BottomBoundary> kBottoms[] = {
    {"zero_gradient", BottomBoundary::zero_gradient},
    {"frozen", BottomBoundary::frozen},
};
constexpr std::pair<std::string_view, SideBoundary> kSides[] = {
    {"reflect", SideBoundary::reflect},
    {"neumann_zero_flux", SideBoundary::neumann_zero_flux},
    {"neumann", SideBoundary::neumann_zero_flux},
};

}  // namespace

double retardation_factor(double theta, double rho, double kd) {
    require_finite(theta, "theta");
    require_finite(rho, "rho");
    require_finite(kd, "kd");
    if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("theta must lie in (0, 1)");
    if (rho < 0.0) throw ParameterError("rho must be >= 0");
    if (kd < 0.0) throw ParameterError("kd must be >= 0");
    const double sorbed = rho * kd;
    if (sorbed == 0.0) return 1.0;
    return 1.0 + sorbed / theta;
}

double convert_diffusion_m2a_to_cm2day(double d_m2_per_annum) {
    require_finite(d_m2_per_annum, "D");
    if (!(d_m2_per_annum > 0.0)) throw ParameterError("D must be > 0");
    return d_m2_per_annum * 1.0e4 / 365.0;
}

double Species::retardation(double theta) const {
    if (const auto* r = std::get_if<ExplicitRetardation>(&retardation_inputs)) {
        return r->R;
    }
    const auto& s = std::get<LinearSorption>(retardation_inputs);
    return retardation_factor(theta, s.rho, s.kd);
}

void Species::validate() const {
    if (const auto* r = std::get_if<ExplicitRetardation>(&retardation_inputs)) {
        require_finite(r->R, "R");
        if (r->R < 1.0) throw ParameterError("R must be >= 1");
        return;
    }
    const auto& s = std::get<LinearSorption>(retardation_inputs);
    require_finite(s.rho, "rho");
    require_finite(s.kd, "kd");
    if (s.rho < 0.0) throw ParameterError("rho must be >= 0");
    if (s.kd < 0.0) throw ParameterError("kd must be >= 0");
}

void TransportParams::validate() const {
    require_finite(D, "D");
    require_finite(v, "v");
    require_finite(theta, "theta");
    require_finite(C0, "C0");
    require_finite(background, "background");
    if (!(D > 0.0)) throw ParameterError("D must be > 0");
    if (v < 0.0) throw ParameterError("v must be >= 0 (downward-positive)");
    if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("theta must lie in (0, 1)");
    if (background < 0.0) throw ParameterError("background must be >= 0");
    if (C0 < background) throw ParameterError("C0 must be >= background");
    species.validate();
}

void GridSpec::validate() const {
    if (nx < 3) throw ParameterError("nx must be >= 3");
    if (nz < 3) throw ParameterError("nz must be >= 3");
    require_finite(dx, "dx");
    require_finite(dz, "dz");
    if (!(dx > 0.0)) throw ParameterError("dx must be > 0");
    if (!(dz > 0.0)) throw ParameterError("dz must be > 0");
}

std::vector<double> SimulationConfig::effective_snapshots() const {
    if (snapshot_times.empty()) return {t_end};
    return snapshot_times;
}

void SimulationConfig::validate() const {
    grid.validate();
    params.validate();
    require_finite(dt, "dt");
    require_finite(t_end, "t_end");
    if (!(dt > 0.0)) throw ParameterError("dt must be > 0");
    if (t_end < 0.0) throw ParameterError("t_end must be >= 0");
    if (t_end > 0.0 && dt > t_end) throw ParameterError("dt must be <= t_end");
    for (std::size_t k = 0; k < snapshot_times.size(); ++k) {
        const double t = snapshot_times[k];
        require_finite(t, "snapshot_times");
        if (t < 0.0 || t > t_end) throw ParameterError("snapshot_times must lie in [0, t_end]");
        if (k > 0 && !(t > snapshot_times[k - 1])) {
            throw ParameterError("snapshot_times must be strictly increasing");
        }
    }
}

std::vector<std::string> scenario_names() { return {"landfill-cl", "landfill-k"}; }

SimulationConfig load_scenario(std::string_view name) {
    SimulationConfig cfg;
    cfg.grid = GridSpec{9, 11, 1.0, 1.0};
    cfg.params.D = convert_diffusion_m2a_to_cm2day(0.02);
    cfg.params.v = kPresetVelocityCmPerDay;
    cfg.params.theta = 0.30;
    cfg.params.C0 = 675.0;
    cfg.params.background = 0.0;  // "Trace"
    cfg.bc = BoundaryConditionSet{};
    cfg.dt = 0.01;
    cfg.t_end = 100.0;
    cfg.snapshot_times = {1.0, 50.0, 100.0};
    cfg.scheme = Scheme::upwind;
    cfg.stability_policy = StabilityPolicy::warn;

    if (name == "landfill-cl") {
        cfg.params.species = Species{"Cl", "anion", ExplicitRetardation{1.0}};
    } else if (name == "landfill-k") {
        cfg.params.species = Species{"K", "cation", ExplicitRetardation{kPresetPotassiumRetardation}};
    } else {
        std::string valid;
        for (const auto& n : scenario_names()) {
            if (!valid.empty()) valid += ", ";
            valid += n;
        }
        throw LookupError("unknown preset '" + std::string(name) + "' (valid: " + valid + ")");
    }
    cfg.validate();
    return cfg;
}

std::string_view to_string(Scheme s) { return s == Scheme::upwind ? "upwind" : "paper_forward"; }

std::string_view to_string(StabilityPolicy p) {
    switch (p) {
        case StabilityPolicy::error: return "error";
        case StabilityPolicy::warn: return "warn";
        case StabilityPolicy::silent: return "silent";
    }
    return "warn";
}

std::string_view to_string(TopBoundary b) {
    return b == TopBoundary::dirichlet ? "dirichlet" : "reflect_test_only";
}

std::string_view to_string(BottomBoundary b) {
    return b == BottomBoundary::zero_gradient ? "zero_gradient" : "frozen";
}

std::string_view to_string(SideBoundary b) {
    return b == SideBoundary::reflect ? "reflect" : "neumann_zero_flux";
}

Scheme parse_scheme(std::string_view s) { return lookup_enum(s, kSchemes, "scheme"); }
StabilityPolicy parse_stability_policy(std::string_view s) { return lookup_enum(s, kPolicies, "stability policy"); }
BottomBoundary parse_bottom_boundary(std::string_view s) { return lookup_enum(s, kBottoms, "bottom boundary"); }
SideBoundary parse_side_boundary(std::string_view s) { return lookup_enum(s, kSides, "side boundary"); }

}  // namespace leachate
