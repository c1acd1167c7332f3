#pragma once

#include <span>

#include "leachate/transport.hpp"

namespace leachate {

/// Per-step constants of the explicit update
///   C' = C + dt/R * (D (dxx C + dzz C) - v (dx C + dz C)).
struct StencilCoefficients {
    double dt_over_R = 0.0;
    double D = 0.0;
    double v = 0.0;
    double inv_dx = 0.0;
    double inv_dz = 0.0;
    double inv_dx2 = 0.0;
    double inv_dz2 = 0.0;
    Scheme scheme = Scheme::upwind;
    /// Reflect sides: columns 0 and nx-1 are live nodes whose missing
    /// neighbour mirrors the inner one (C[-1] = C[1], C[nx] = C[nx-2]).
    bool mirror_x_edges = false;
};

StencilCoefficients make_coefficients(const GridSpec& grid, const TransportParams& params, double dt, Scheme scheme,
                                      SideBoundary sides);

namespace detail {

/// One interior node. `w`/`e` are the x neighbours, `n`/`s` the z
/// neighbours (n toward the surface).
inline double update_node(const StencilCoefficients& k, double c, double w, double e, double n, double s) {
    const double diff_x = (e - 2.0 * c + w) * k.inv_dx2;
    const double diff_z = (s - 2.0 * c + n) * k.inv_dz2;
    double adv_x;
    double adv_z;
    if (k.scheme == Scheme::paper_forward) {
        adv_x = (e - c) * k.inv_dx;
        adv_z = (s - c) * k.inv_dz;
    } else {
        adv_x = (c - w) * k.inv_dx;
        adv_z = (c - n) * k.inv_dz;
    }
    return c + k.dt_over_R * (k.D * (diff_x + diff_z) - k.v * (adv_x + adv_z));
}

}  // namespace detail

/// Writes every stencil node of `out` from `in`: rows 1..nz-2 and columns
/// 1..nx-2, or 0..nx-1 when the x edges are mirrored. Other nodes of `out`
/// are left untouched. Reference implementation.
void advance_interior_serial(const StencilCoefficients& k, const GridSpec& grid, std::span<const double> in,
                             std::span<double> out);

/// Same contract as the serial kernel, split over OpenMP threads. Results are
/// bitwise identical to the serial kernel for any thread count.
void advance_interior_omp(const StencilCoefficients& k, const GridSpec& grid, std::span<const double> in,
                          std::span<double> out);

}  // namespace leachate
