#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace leachate {

/// Retardation given directly as R >= 1.
struct ExplicitRetardation {
    double R = 1.0;
    bool operator==(const ExplicitRetardation&) const = default;
};

/// Linear sorption: bulk density (g/cm3) and distribution coefficient
/// (cm3/g). Only the dimensionless product rho*kd enters the model.
struct LinearSorption {
    double rho = 0.0;
    double kd = 0.0;
    bool operator==(const LinearSorption&) const = default;
};

struct Species {
    std::string name;
    std::string charge_label;
    std::variant<ExplicitRetardation, LinearSorption> retardation_inputs{ExplicitRetardation{}};

    /// R for this species in a soil of porosity `theta`.
    double retardation(double theta) const;
    void validate() const;

    bool operator==(const Species&) const = default;
};

/// Physical parameters in canonical units (cm, day, mg/L).
struct TransportParams {
    double D = 0.0;           ///< cm2/day
    double v = 0.0;           ///< cm/day, positive downward
    double theta = 0.3;
    double C0 = 0.0;          ///< mg/L
    double background = 0.0;  ///< mg/L
    Species species;

    double retardation() const { return species.retardation(theta); }
    void validate() const;

    bool operator==(const TransportParams&) const = default;
};

struct GridSpec {
    int nx = 3;
    int nz = 3;
    double dx = 1.0;  ///< cm
    double dz = 1.0;  ///< cm

    double extent_x() const { return (nx - 1) * dx; }
    double extent_z() const { return (nz - 1) * dz; }
    std::size_t node_count() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(nz); }
    void validate() const;

    bool operator==(const GridSpec&) const = default;
};

enum class Scheme { paper_forward, upwind };
enum class StabilityPolicy { error, warn, silent };

enum class TopBoundary {
    dirichlet,
    /// Mirror about the first interior row. Removes the source so mass
    /// conservation can be checked; not reachable from config files.
    reflect_test_only,
};
enum class BottomBoundary { zero_gradient, frozen };
enum class SideBoundary { reflect, neumann_zero_flux };

struct BoundaryConditionSet {
    TopBoundary top = TopBoundary::dirichlet;
    BottomBoundary bottom = BottomBoundary::zero_gradient;
    SideBoundary sides = SideBoundary::neumann_zero_flux;

    bool operator==(const BoundaryConditionSet&) const = default;
};

struct SimulationConfig {
    GridSpec grid;
    TransportParams params;
    BoundaryConditionSet bc;
    double dt = 0.01;     ///< day
    double t_end = 100.0; ///< day
    std::vector<double> snapshot_times;  ///< day; empty means {t_end}
    Scheme scheme = Scheme::upwind;
    StabilityPolicy stability_policy = StabilityPolicy::warn;

    /// Snapshot times actually used by the solver.
    std::vector<double> effective_snapshots() const;
    void validate() const;

    bool operator==(const SimulationConfig&) const = default;
};

/// R = 1 + rho*kd/theta.
double retardation_factor(double theta, double rho, double kd);

/// m2/a to cm2/day with a 365-day year.
double convert_diffusion_m2a_to_cm2day(double d_m2_per_annum);

/// Velocity assumed by the landfill presets; the source data do not give one.
inline constexpr double kPresetVelocityCmPerDay = 0.01;
/// Retardation assumed for K+ in the landfill-k preset.
inline constexpr double kPresetPotassiumRetardation = 4.0;

std::vector<std::string> scenario_names();
SimulationConfig load_scenario(std::string_view name);

std::string_view to_string(Scheme s);
std::string_view to_string(StabilityPolicy p);
std::string_view to_string(TopBoundary b);
std::string_view to_string(BottomBoundary b);
std::string_view to_string(SideBoundary b);

Scheme parse_scheme(std::string_view s);
StabilityPolicy parse_stability_policy(std::string_view s);
BottomBoundary parse_bottom_boundary(std::string_view s);
SideBoundary parse_side_boundary(std::string_view s);

}  // namespace leachate
