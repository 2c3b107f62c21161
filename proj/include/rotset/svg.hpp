#pragma once

#include <string>

#include "rotset/report.hpp"

namespace rotset {

/// Renders a report to SVG 1.1: inner polygons filled, outer stroked, the
/// pulled-back infinity line and the image overlay when present, axis ticks.
/// Fixed 800x800 viewport in rotation-vector units with 10% padding.
/// Output bytes depend only on the report contents.
std::string render_report_svg(const Report& rep);

}  // namespace rotset
