#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leachate/transport.hpp"

namespace leachate {

/// Node concentrations at one time. Storage is column-major in z:
/// value(i, j) lives at i * nz + j, j = 0 at the surface.
struct ConcentrationField {
    GridSpec grid;
    double t = 0.0;
    std::vector<double> values;

    ConcentrationField() = default;
    ConcentrationField(const GridSpec& g, double time, double fill);

    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(grid.nz) + static_cast<std::size_t>(j);
    }
    double& operator()(int i, int j) { return values[index(i, j)]; }
    double operator()(int i, int j) const { return values[index(i, j)]; }

    bool all_finite() const;
    /// Throws ParameterError on shape mismatch or non-finite values.
    void validate() const;

    bool operator==(const ConcentrationField&) const = default;
};

/// Concentrations down column `i`, surface first.
std::vector<double> z_profile(const ConcentrationField& field, int i);

/// Column index nearest the lateral midpoint.
inline int middle_column(const GridSpec& grid) { return (grid.nx - 1) / 2; }

}  // namespace leachate
