#include <cstddef>

#include "leachate/kernels.hpp"

namespace leachate {

namespace {
// Below this many stencil nodes the fork/join cost dominates.
constexpr std::ptrdiff_t kParallelThreshold = 16384;
}

void advance_interior_omp(const StencilCoefficients& k, const GridSpec& grid, std::span<const double> in,
                          std::span<double> out) {
    const std::ptrdiff_t nx = grid.nx;
    const std::ptrdiff_t nz = grid.nz;
    const std::ptrdiff_t first = k.mirror_x_edges ? 0 : 1;
    const std::ptrdiff_t last = k.mirror_x_edges ? nx - 1 : nx - 2;
    const double* src = in.data();
    double* dst = out.data();
    if ((last - first + 1) * (nz - 2) < kParallelThreshold) {
        advance_interior_serial(k, grid, in, out);
        return;
    }

#pragma omp parallel for collapse(2) schedule(static)
    for (std::ptrdiff_t i = first; i <= last; ++i) {
        for (std::ptrdiff_t j = 1; j < nz - 1; ++j) {
            const std::ptrdiff_t west = i == 0 ? 1 : i - 1;
            const std::ptrdiff_t east = i == nx - 1 ? nx - 2 : i + 1;
            const std::ptrdiff_t at = i * nz + j;
            dst[at] = detail::update_node(k, src[at], src[west * nz + j], src[east * nz + j], src[at - 1],
                                          src[at + 1]);
        }
    }
}

}  // namespace leachate
