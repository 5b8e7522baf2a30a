#pragma once

#include <string>

#include "slicekit/slice.hpp"

namespace slicekit {

/// SVG 1.1 drawing of a tower: one column per nonzero slice degree, each
/// listing "H: invariant factors" for the nonzero levels (one per conjugacy
/// class). Output depends only on the tower.
std::string render_chart(const EMTower& t, const std::string& title = "");

/// Writes render_chart to path. Throws std::runtime_error when the file
/// cannot be written.
void write_chart(const EMTower& t, const std::string& path, const std::string& title = "");

}  // namespace slicekit
