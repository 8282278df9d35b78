#pragma once

#include <string>

#include "haulplan/scenario.hpp"

namespace haulplan {

/// Overlay of every solved trip: one polyline per route and variant (solid
/// with turntables, dashed without), cusp markers at reverse points and a
/// disc for each turntable. When the scenario is calibrated the drawing is
/// in image pixels over `image_ref`; otherwise in world meters, y flipped.
std::string render_svg(const Scenario& scenario, const ResultSet& result);

}  // namespace haulplan
