#pragma once

#include <iosfwd>
#include <span>

#include "periodica/bounds.hpp"

namespace periodica {

// Self-contained line chart of every curve in the table on a fixed
// 800x600 viewBox: linear axes, polyline per column, legend labels equal
// to the CSV headers. No external assets, scripts or styles.
void write_bounds_svg(std::ostream& os, std::span<const BoundsRow> rows);

}  // namespace periodica
