#pragma once

#include <string>
#include <vector>

#include "cfp/simulator.hpp"

namespace cfp {

struct RenderOptions {
    double size = 640.0;    // canvas width and height, px
    double margin = 48.0;   // padding around the scene, px
    double dot_radius = 4.0;
};

/// One SVG 1.1 document: robots as dots, the classified circle(s) as strokes,
/// sector boundary radii dashed, and an arrow per (robot, target) pair.
std::string render_frame(const Configuration& config,
                         const std::vector<std::pair<int, Point>>& targets = {},
                         const RenderOptions& opts = {});

/// One frame per trace step plus the initial frame; a trace with no steps
/// renders as the single initial frame.
std::vector<std::string> render_trace(const Trace& trace, const RenderOptions& opts = {});

/// Writes <prefix>0000.svg, <prefix>0001.svg, ... and returns the paths.
std::vector<std::string> save_trace_svgs(const Trace& trace, const std::string& prefix,
                                         const RenderOptions& opts = {});

}  // namespace cfp
