#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hesslab/calculus.hpp"
#include "hesslab/families.hpp"

namespace hesslab {

struct Rectangle {
  Rational xmin;
  Rational xmax;
  Rational ymin;
  Rational ymax;
};

struct PlanePoint {
  double x = 0;
  double y = 0;
};

struct BoundingBox {
  double xmin = 0;
  double xmax = 0;
  double ymin = 0;
  double ymax = 0;
};

struct TracedComponent {
  std::vector<PlanePoint> polyline;  // first == last when closed
  bool closed = true;
  BoundingBox bounding_box;
  int orientation = 0;  // +1 counterclockwise, -1 clockwise, 0 open
  int vertical_tangent_count = 0;

  double signed_area() const;
};

struct TraceOptions {
  int base_resolution = 128;
  int max_depth = 6;
  int threads = 0;  // 0: HESSLAB_THREADS, then hardware concurrency
};

struct TraceResult {
  std::vector<TracedComponent> components;
  Rectangle bbox;
  int resolution = 0;
  int zero_vertices = 0;        // exact zeros counted as positive
  int saddle_cells = 0;
  int subdivided_saddles = 0;   // decided by sub-grid connectivity
  int center_rule_saddles = 0;  // still ambiguous at max_depth

  bool has_open_chains() const;
};

// Worker count for a request: explicit value, else HESSLAB_THREADS (0 = auto).
int resolve_thread_count(int requested);

TraceResult trace_curve(const Polynomial& p, const Rectangle& bbox, const TraceOptions& options = {});

// Rectangle containing every bounded component of the family's Hessian curve.
Rectangle auto_bbox(const FamilySpec& spec);

// Throws Error(kPrecondition) when the trace contains open chains.
int count_components(const TraceResult& trace);

struct NestingForest {
  std::vector<std::optional<int>> parent;

  int edge_count() const;
  int depth(int component) const;  // roots have depth 0
  bool is_chain() const;           // a single root, each node with at most one child
};

NestingForest nesting_forest(const std::vector<TracedComponent>& components);

// Even-odd ray cast toward +x.
bool polygon_contains(const TracedComponent& component, const PlanePoint& point);

struct RegionSample {
  RationalPoint point;
  PointClass cls;
};

struct ComplementRegion {
  std::optional<int> boundary;  // innermost enclosing component; nullopt for the unbounded region
  std::vector<RegionSample> samples;
  std::optional<PointClass> verdict;  // set only when all samples agree
};

struct RegionClassification {
  std::vector<ComplementRegion> regions;  // one per component, then the unbounded one

  // No sampled region holds points of different classes.
  bool unanimous() const;
  int unsampled_regions() const;
  const ComplementRegion& unbounded() const { return regions.back(); }
};

// Samples rational points on random horizontal lines between curve crossings,
// plus far-field points on a box twice the size of the traced one.
RegionClassification classify_regions(const SurfaceFunction& f, const TraceResult& trace,
                                      int samples_per_region, std::uint64_t seed);

}  // namespace hesslab
