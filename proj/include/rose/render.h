#pragma once

#include <ostream>

#include "rose/radii.h"

namespace rose {

enum class RenderMode { Spiral, Petal };

struct RenderStats {
  int depth = 0;
  long triangles_per_sheet = 0;
  double cumulative_angle = 0.0;  // theta_sum(1, depth)
  double circle_radius = 0.0;
};

/// Writes an SVG 1.1 document.
///
/// Spiral mode presses the complex flat: every triangle of every petal is
/// drawn unfolded at its cumulative angle in the direction tree, one group
/// per sheet (the lower sheet mirrored), inside the bounding circle of
/// radius radius_sup(), with the first two arc angles annotated in degrees.
/// All copies are drawn up to depth 12 (2^(depth+1)-2 triangles per sheet);
/// beyond that only the extremal spiral arm is continued, one triangle per
/// level, up to the depth cap of 50.
///
/// Petal mode draws the single petal of the given level with its median,
/// borders and base labeled.
///
/// Output is deterministic: byte-identical for equal inputs.
RenderStats render_svg(const RadiiTable& table, int depth, RenderMode mode,
                       std::ostream& out);

}  // namespace rose
