#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "leachate/transport.hpp"

namespace leachate {

struct OutputSettings {
    std::string csv_path;
    std::string svg_path;
    /// Lateral position (cm) of the plotted z-profile; empty means the middle column.
    std::optional<double> profile_x;

    bool operator==(const OutputSettings&) const = default;
};

struct ParsedConfig {
    SimulationConfig config;
    OutputSettings output;
    std::optional<std::string> preset;
    /// True when the document set [time] scheme itself.
    bool scheme_explicit = false;
};

/// Parses the sectioned key-value format:
///
///     preset = landfill-cl        # optional, must precede any section
///     [grid]       nx, nz, dx, dz
///     [transport]  D, v, theta, C0, background
///     [species]    name, charge, R | (rho, kd)
///     [boundary]   top, sides, bottom
///     [time]       dt, t_end, snapshots, scheme, stability
///     [output]     csv, svg, profile_x
///
/// Dimensioned values need a unit suffix (`D = 0.02 m2/a`, `dt = 0.01 day`).
/// Unknown sections and keys are errors. Values are converted to cm, day
/// and mg/L and the result is validated.
ParsedConfig parse_config_document(std::string_view text);

inline SimulationConfig parse_config(std::string_view text) { return parse_config_document(text).config; }

/// Canonical dump in the same format; parsing it reproduces `config` exactly.
std::string render_config(const SimulationConfig& config, const OutputSettings& output = {});

// Single quantities with unit suffix, converted to canonical units. Used by
// the config parser and the CLI flags. Throw ConfigError.
double parse_length_cm(std::string_view text);
double parse_time_day(std::string_view text);
double parse_diffusion_cm2day(std::string_view text);
double parse_velocity_cmday(std::string_view text);
double parse_concentration_mgl(std::string_view text);

}  // namespace leachate
