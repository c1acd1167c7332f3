#include "leachate/field.hpp"

#include <algorithm>
#include <cmath>

#include "leachate/error.hpp"

namespace leachate {

ConcentrationField::ConcentrationField(const GridSpec& g, double time, double fill)
    : grid(g), t(time), values(g.node_count(), fill) {}

bool ConcentrationField::all_finite() const {
    return std::all_of(values.begin(), values.end(), [](double c) { return std::isfinite(c); });
}

void ConcentrationField::validate() const {
    grid.validate();
    if (values.size() != grid.node_count()) throw ParameterError("field shape does not match grid");
    if (!all_finite()) throw ParameterError("field contains non-finite values");
}

std::vector<double> z_profile(const ConcentrationField& field, int i) {
    if (i < 0 || i >= field.grid.nx) throw ParameterError("profile column out of range");
    const auto first = field.values.begin() + static_cast<std::ptrdiff_t>(field.index(i, 0));
    return {first, first + field.grid.nz};
}

}  // namespace leachate
