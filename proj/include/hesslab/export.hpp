#pragma once

#include <string>

#include "hesslab/topology.hpp"

namespace hesslab {

// Standalone SVG, one closed path per component, stroke color by nesting
// depth, viewBox equal to the traced rectangle (y axis pointing up).
std::string trace_to_svg(const TraceResult& trace, const NestingForest& forest);

// Rows "component,depth,closed,vertex,x,y".
std::string trace_to_csv(const TraceResult& trace, const NestingForest& forest);

}  // namespace hesslab
