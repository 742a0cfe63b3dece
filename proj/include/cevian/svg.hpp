#pragma once

// SVG figures. Geometry stays exact: conic points are produced by exact
// rational sampling and only converted to decimals (12 significant digits)
// when written out.

#include "cevian/plane.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cevian {

/// Cartesian positions of A, B, C.
struct Placement {
    std::array<std::array<double, 2>, 3> vertices;
};

/// A=(0, sqrt 3), B=(-1, 0), C=(1, 0).
Placement default_placement();
/// "ax,ay,bx,by,cx,cy"; throws ParseError or DegeneratePlacement.
Placement parse_placement(std::string_view text);
/// Throws DegeneratePlacement when A, B, C are (numerically) collinear.
void require_nondegenerate(const Placement &placement);

std::vector<std::string_view> figure_names();

/// locus | conics | special | section4. `point` is the P of the conics figure.
/// Throws BadParameter for an unknown figure.
std::string render_figure(std::string_view figure, const Placement &placement,
                          const std::optional<BaryPoint> &point = std::nullopt);

} // namespace cevian
