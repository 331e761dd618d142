#pragma once

#include <string>

#include "otg/classify.hpp"
#include "otg/solver.hpp"
#include "otg/terrain.hpp"

namespace otg {

/// SVG 1.1 rendering of the chain with the four vertex classes colour-coded
/// (circle per vertex, class "vtx"), guard rings (class "guard") and, when a
/// solution is given, assignment arrows (class "assign"). y grows upward on
/// screen; output is byte-deterministic for identical inputs.
std::string render_svg(const Terrain& t, const GuardSolution* sol = nullptr);

}  // namespace otg
