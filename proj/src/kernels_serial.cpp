#include <cstddef>

#include "leachate/kernels.hpp"

namespace leachate {

StencilCoefficients make_coefficients(const GridSpec& grid, const TransportParams& params, double dt, Scheme scheme,
                                      SideBoundary sides) {
    StencilCoefficients k;
    k.dt_over_R = dt / params.retardation();
    k.D = params.D;
    k.v = params.v;
    k.inv_dx = 1.0 / grid.dx;
    k.inv_dz = 1.0 / grid.dz;
    k.inv_dx2 = 1.0 / (grid.dx * grid.dx);
    k.inv_dz2 = 1.0 / (grid.dz * grid.dz);
    k.scheme = scheme;
    k.mirror_x_edges = sides == SideBoundary::reflect;
    return k;
}

void advance_interior_serial(const StencilCoefficients& k, const GridSpec& grid, std::span<const double> in,
                             std::span<double> out) {
    const int nx = grid.nx;
    const std::ptrdiff_t nz = grid.nz;
    const int first = k.mirror_x_edges ? 0 : 1;
    const int last = k.mirror_x_edges ? nx - 1 : nx - 2;
    for (int i = first; i <= last; ++i) {
        const int west = i == 0 ? 1 : i - 1;
        const int east = i == nx - 1 ? nx - 2 : i + 1;
        const double* col = in.data() + i * nz;
        const double* wcol = in.data() + west * nz;
        const double* ecol = in.data() + east * nz;
        double* dst = out.data() + i * nz;
        for (std::ptrdiff_t j = 1; j < nz - 1; ++j) {
            dst[j] = detail::update_node(k, col[j], wcol[j], ecol[j], col[j - 1], col[j + 1]);
        }
    }
}

}  // namespace leachate
