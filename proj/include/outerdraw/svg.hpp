#pragma once

#include <string>

#include "outerdraw/construct.hpp"

namespace outerdraw {

/// Static SVG 1.1 picture of a wiring diagram: one column per event, curves
/// as polylines, red before their vertex and blue after it. Output depends
/// only on the diagram.
std::string render_svg(const WiringDiagram& d);

}  // namespace outerdraw
