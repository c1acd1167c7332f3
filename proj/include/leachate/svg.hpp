#pragma once

#include <span>
#include <string>
#include <vector>

namespace leachate {

struct ProfileSeries {
    std::string label;
    std::vector<double> z;  ///< cm
    std::vector<double> c;  ///< mg/L
};

struct SvgOptions {
    std::string title;
    int width = 640;
    int height = 480;
};

/// Standalone SVG line chart: concentration across, depth downward, one
/// polyline per series and a legend. Output depends only on the inputs.
/// Throws ParameterError for an empty series list or a series with fewer
/// than two points.
std::string render_profile_svg(std::span<const ProfileSeries> series, const SvgOptions& options = {});

}  // namespace leachate
