#include "hesslab/topology.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "hesslab/error.hpp"
#include "hesslab/realroots.hpp"

namespace hesslab {

namespace {

template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int k = next++; k < count; k = next++) fn(k);
    });
  }
  for (auto& worker : pool) worker.join();
}

// P(x0 + hx i, y0 + hy j) times a positive integer, as an integer polynomial
// in the grid indices i, j.
class IntegerGrid {
 public:
  IntegerGrid(const Polynomial& p, const Rational& x0, const Rational& y0, const Rational& hx,
              const Rational& hy) {
    const Polynomial q = substitute(p, Polynomial(x0) + Polynomial::x() * hx,
                                    Polynomial(y0) + Polynomial::y() * hy);
    Integer scale = 1;
    for (const auto& [e, c] : q.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    const int dx = std::max(0, q.degree_in(Variable::kX));
    const int dy = std::max(0, q.degree_in(Variable::kY));
    coef_.assign(dx + 1, std::vector<Integer>(dy + 1, 0));
    for (const auto& [e, c] : q.terms()) coef_[e.x][e.y] = c.get_num() * (scale / c.get_den());
  }

  // Values at (0, j), (1, j), ..., (count - 1, j).
  void row(long j, long count, std::vector<Integer>& out) const {
    std::vector<Integer> in_i(coef_.size());
    for (std::size_t k = 0; k < coef_.size(); ++k) {
      Integer acc = 0;
      for (auto it = coef_[k].rbegin(); it != coef_[k].rend(); ++it) acc = acc * j + *it;
      in_i[k] = acc;
    }
    out.resize(count);
    for (long i = 0; i < count; ++i) {
      Integer acc = 0;
      for (auto it = in_i.rbegin(); it != in_i.rend(); ++it) acc = acc * i + *it;
      out[i] = std::move(acc);
    }
  }

 private:
  std::vector<std::vector<Integer>> coef_;
};

int sign_with_zero_positive(const Integer& v) { return sgn(v) < 0 ? -1 : 1; }

// Signs on the (k+1) x (k+1) sub-grid of one cell, zero counted as positive.
std::vector<int> subgrid_signs(const Polynomial& p, const Rational& x0, const Rational& y0, const Rational& hx,
                               const Rational& hy, int k) {
  const IntegerGrid grid(p, x0, y0, hx / k, hy / k);
  std::vector<int> signs((k + 1) * (k + 1));
  std::vector<Integer> values;
  for (int j = 0; j <= k; ++j) {
    grid.row(j, k + 1, values);
    for (int i = 0; i <= k; ++i) signs[j * (k + 1) + i] = sign_with_zero_positive(values[i]);
  }
  return signs;
}

bool connected(const std::vector<int>& signs, int k, int from_i, int from_j, int to_i, int to_j) {
  const int side = k + 1;
  const int want = signs[from_j * side + from_i];
  std::vector<char> seen(signs.size(), 0);
  std::vector<int> stack{from_j * side + from_i};
  seen[stack.back()] = 1;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    if (cur == to_j * side + to_i) return true;
    const int ci = cur % side;
    const int cj = cur / side;
    const std::array<std::array<int, 2>, 4> steps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    for (const auto& [di, dj] : steps) {
      const int ni = ci + di;
      const int nj = cj + dj;
      if (ni < 0 || nj < 0 || ni > k || nj > k) continue;
      const int id = nj * side + ni;
      if (seen[id] || signs[id] != want) continue;
      seen[id] = 1;
      stack.push_back(id);
    }
  }
  return false;
}

struct SaddleDecision {
  bool lower_left_joins_upper_right = false;
  bool by_center_rule = false;
};

SaddleDecision decide_saddle(const Polynomial& p, const Rational& x0, const Rational& y0, const Rational& hx,
                             const Rational& hy, int max_depth) {
  for (int depth = 1; depth <= max_depth; ++depth) {
    const int k = 1 << depth;
    const auto signs = subgrid_signs(p, x0, y0, hx, hy, k);
    const bool diagonal = connected(signs, k, 0, 0, k, k);
    const bool anti = connected(signs, k, k, 0, 0, k);
    if (diagonal != anti) return {diagonal, false};
  }
  const auto coarse = subgrid_signs(p, x0, y0, hx, hy, 2);
  return {coarse[4] == coarse[0], true};
}

void finalize(TracedComponent& c) {
  const auto& pts = c.polyline;
  c.bounding_box = {pts.front().x, pts.front().x, pts.front().y, pts.front().y};
  for (const auto& q : pts) {
    c.bounding_box.xmin = std::min(c.bounding_box.xmin, q.x);
    c.bounding_box.xmax = std::max(c.bounding_box.xmax, q.x);
    c.bounding_box.ymin = std::min(c.bounding_box.ymin, q.y);
    c.bounding_box.ymax = std::max(c.bounding_box.ymax, q.y);
  }
  if (!c.closed) return;
  c.orientation = c.signed_area() > 0 ? 1 : -1;
  const double eps = 1e-12 * std::max(1.0, c.bounding_box.xmax - c.bounding_box.xmin);
  std::vector<int> directions;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double dx = pts[k].x - pts[k - 1].x;
    if (std::abs(dx) > eps) directions.push_back(dx > 0 ? 1 : -1);
  }
  int turns = 0;
  for (std::size_t k = 0; k < directions.size(); ++k) {
    if (directions[k] != directions[(k + 1) % directions.size()]) ++turns;
  }
  c.vertical_tangent_count = turns;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rectangle square_for_radius(const std::vector<UnivariatePolynomial>& radial) {
  Rational largest = 0;
  for (const auto& q : radial) {
    if (q.degree() < 1) continue;
    for (const auto& iv : positive_roots(q)) {
      largest = std::max(largest, refine_root(q, iv, Rational(1, 8)).hi);
    }
  }
  const Rational half(ceil_of(largest) + 1);
  return {-half, half, -half, half};
}

double distance_to_segment(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b) {
  const double vx = b.x - a.x;
  const double vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - a.x - t * vx, p.y - a.y - t * vy);
}

int innermost_container(const std::vector<TracedComponent>& components, const PlanePoint& point) {
  int best = -1;
  double best_area = 0;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (!components[k].closed || !polygon_contains(components[k], point)) continue;
    const double area = std::abs(components[k].signed_area());
    if (best < 0 || area < best_area) {
      best = static_cast<int>(k);
      best_area = area;
    }
  }
  return best;
}

}  // namespace

double TracedComponent::signed_area() const {
  double twice = 0;
  for (std::size_t k = 1; k < polyline.size(); ++k) {
    twice += polyline[k - 1].x * polyline[k].y - polyline[k].x * polyline[k - 1].y;
  }
  return twice / 2;
}

bool TraceResult::has_open_chains() const {
  return std::any_of(components.begin(), components.end(), [](const auto& c) { return !c.closed; });
}

int resolve_thread_count(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("HESSLAB_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return std::min(value, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

TraceResult trace_curve(const Polynomial& p, const Rectangle& bbox, const TraceOptions& options) {
  if (options.base_resolution < 16) fail(ErrorCode::kInvalidArgument, "trace resolution must be at least 16");
  if (options.max_depth < 0) fail(ErrorCode::kInvalidArgument, "max_depth must be non-negative");
  if (!(bbox.xmin < bbox.xmax) || !(bbox.ymin < bbox.ymax)) {
    fail(ErrorCode::kInvalidArgument, "trace rectangle is degenerate");
  }
  const int n = options.base_resolution;
  const int side = n + 1;
  const Rational hx = (bbox.xmax - bbox.xmin) / n;
  const Rational hy = (bbox.ymax - bbox.ymin) / n;
  const IntegerGrid grid(p, bbox.xmin, bbox.ymin, hx, hy);

  std::vector<signed char> sign(side * side);
  std::vector<double> value(side * side);
  std::vector<int> zeros_per_row(side, 0);
  parallel_for(side, resolve_thread_count(options.threads), [&](int j) {
    std::vector<Integer> row;
    grid.row(j, side, row);
    for (int i = 0; i < side; ++i) {
      const int s = sgn(row[i]);
      if (s == 0) ++zeros_per_row[j];
      sign[j * side + i] = static_cast<signed char>(s < 0 ? -1 : 1);
      value[j * side + i] = row[i].get_d();
    }
  });

  TraceResult result;
  result.bbox = bbox;
  result.resolution = n;
  for (int z : zeros_per_row) result.zero_vertices += z;

  // Crossing nodes: horizontal edge (i, j)-(i+1, j) is j*n + i, vertical edge
  // (i, j)-(i, j+1) is horizontal_count + j*side + i.
  const int horizontal_count = n * side;
  std::vector<std::array<int, 2>> adjacency(horizontal_count + n * side, {-1, -1});
  auto link = [&](int a, int b) {
    for (int node : {a, b}) {
      const int other = node == a ? b : a;
      auto& slots = adjacency[node];
      if (slots[0] < 0) {
        slots[0] = other;
      } else if (slots[1] < 0) {
        slots[1] = other;
      } else {
        fail(ErrorCode::kInternal, "crossing node with more than two neighbours");
      }
    }
  };

  const double x0 = bbox.xmin.get_d();
  const double y0 = bbox.ymin.get_d();
  const double dx = hx.get_d();
  const double dy = hy.get_d();

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int s00 = sign[j * side + i];
      const int s10 = sign[j * side + i + 1];
      const int s01 = sign[(j + 1) * side + i];
      const int s11 = sign[(j + 1) * side + i + 1];
      const int bottom = j * n + i;
      const int top = (j + 1) * n + i;
      const int left = horizontal_count + j * side + i;
      const int right = horizontal_count + j * side + i + 1;
      std::vector<int> crossings;
      if (s00 != s10) crossings.push_back(bottom);
      if (s10 != s11) crossings.push_back(right);
      if (s01 != s11) crossings.push_back(top);
      if (s00 != s01) crossings.push_back(left);
      if (crossings.empty()) continue;
      if (crossings.size() == 2) {
        link(crossings[0], crossings[1]);
        continue;
      }
      ++result.saddle_cells;
      const SaddleDecision decision =
          decide_saddle(p, bbox.xmin + hx * i, bbox.ymin + hy * j, hx, hy, options.max_depth);
      if (decision.by_center_rule) {
        ++result.center_rule_saddles;
      } else {
        ++result.subdivided_saddles;
      }
      if (decision.lower_left_joins_upper_right) {
        link(bottom, right);
        link(left, top);
      } else {
        link(left, bottom);
        link(top, right);
      }
    }
  }

  auto node_point = [&](int node) {
    auto fraction = [](double v0, double v1) {
      const double t = v0 / (v0 - v1);
      return std::isfinite(t) ? std::clamp(t, 0.0, 1.0) : 0.5;
    };
    if (node < horizontal_count) {
      const int i = node % n;
      const int j = node / n;
      const double t = fraction(value[j * side + i], value[j * side + i + 1]);
      return PlanePoint{x0 + dx * (i + t), y0 + dy * j};
    }
    const int local = node - horizontal_count;
    const int i = local % side;
    const int j = local / side;
    const double t = fraction(value[j * side + i], value[(j + 1) * side + i]);
    return PlanePoint{x0 + dx * i, y0 + dy * (j + t)};
  };

  std::vector<char> visited(adjacency.size(), 0);
  auto walk = [&](int start, bool closed) {
    TracedComponent c;
    c.closed = closed;
    int previous = -1;
    int current = start;
    for (;;) {
      visited[current] = 1;
      c.polyline.push_back(node_point(current));
      const auto& slots = adjacency[current];
      int next = slots[0] != previous ? slots[0] : slots[1];
      if (slots[0] == slots[1]) next = slots[0] == previous ? -1 : slots[0];
      if (next < 0 || next == start || visited[next]) break;
      previous = current;
      current = next;
    }
    if (closed) c.polyline.push_back(c.polyline.front());
    finalize(c);
    result.components.push_back(std::move(c));
  };
  for (std::size_t node = 0; node < adjacency.size(); ++node) {
    const auto& slots = adjacency[node];
    if (!visited[node] && slots[0] >= 0 && slots[1] < 0) walk(static_cast<int>(node), false);
  }
  for (std::size_t node = 0; node < adjacency.size(); ++node) {
    if (!visited[node] && adjacency[node][1] >= 0) walk(static_cast<int>(node), true);
  }
  std::stable_sort(result.components.begin(), result.components.end(), [](const auto& a, const auto& b) {
    if (a.bounding_box.xmin != b.bounding_box.xmin) return a.bounding_box.xmin < b.bounding_box.xmin;
    return a.bounding_box.ymin < b.bounding_box.ymin;
  });
  return result;
}

Rectangle auto_bbox(const FamilySpec& spec) {
  if (const auto* outer = std::get_if<OuterOvalParams>(&spec)) {
    validate(*outer);
    const Rational left = (outer->a_list.empty() ? Rational(0) : outer->a_list.back()) - 1;
    const Rational right = (outer->b_list.empty() ? Rational(0) : outer->b_list.back()) + 1;
    const std::array<Rational, 4> ys{outer->a * left, outer->a * right, outer->b * left, outer->b * right};
    const auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
    return {left, right, *lo - 1, *hi + 1};
  }
  if (const auto* even = std::get_if<EvenCircleParams>(&spec)) {
    const RadialPair pair = radial_even(*even);
    return square_for_radius({pair.s_tilde, pair.t_tilde});
  }
  const RadialPair pair = radial_odd(std::get<OddCircleParams>(spec));
  return square_for_radius({pair.s_tilde, pair.t_tilde});
}

int count_components(const TraceResult& trace) {
  if (trace.has_open_chains()) {
    fail(ErrorCode::kPrecondition, "traced curve reaches the rectangle boundary (open chain)");
  }
  return static_cast<int>(trace.components.size());
}

bool polygon_contains(const TracedComponent& component, const PlanePoint& point) {
  const auto& pts = component.polyline;
  bool inside = false;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const PlanePoint& a = pts[k - 1];
    const PlanePoint& b = pts[k];
    if ((a.y > point.y) != (b.y > point.y)) {
      const double x = a.x + (point.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x > point.x) inside = !inside;
    }
  }
  return inside;
}

NestingForest nesting_forest(const std::vector<TracedComponent>& components) {
  NestingForest forest;
  forest.parent.assign(components.size(), std::nullopt);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& pts = components[i].polyline;
    // A vertex far from every other component, so the ray cast is not degenerate.
    std::optional<PlanePoint> probe;
    for (std::size_t attempt = 0; attempt < pts.size() && !probe; attempt += std::max<std::size_t>(1, pts.size() / 16)) {
      const PlanePoint candidate = pts[attempt];
      bool clear = true;
      for (std::size_t j = 0; j < components.size() && clear; ++j) {
        if (j == i) continue;
        const auto& other = components[j].polyline;
        for (std::size_t k = 1; k < other.size() && clear; ++k) {
          if (distance_to_segment(candidate, other[k - 1], other[k]) < 1e-9) clear = false;
        }
      }
      if (clear) probe = candidate;
    }
    if (!probe) fail(ErrorCode::kInternal, "nesting test found no non-degenerate probe vertex");
    double best_area = 0;
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (j == i || !components[j].closed || !polygon_contains(components[j], *probe)) continue;
      const double area = std::abs(components[j].signed_area());
      if (!forest.parent[i] || area < best_area) {
        forest.parent[i] = static_cast<int>(j);
        best_area = area;
      }
    }
  }
  return forest;
}

int NestingForest::edge_count() const {
  return static_cast<int>(std::count_if(parent.begin(), parent.end(), [](const auto& p) { return p.has_value(); }));
}

int NestingForest::depth(int component) const {
  int d = 0;
  for (auto cur = parent.at(component); cur; cur = parent.at(*cur)) {
    if (++d > static_cast<int>(parent.size())) fail(ErrorCode::kInternal, "nesting relation has a cycle");
  }
  return d;
}

bool NestingForest::is_chain() const {
  if (parent.empty()) return true;
  std::vector<int> children(parent.size(), 0);
  int roots = 0;
  for (const auto& p : parent) {
    if (p) {
      ++children[*p];
    } else {
      ++roots;
    }
  }
  return roots == 1 && std::all_of(children.begin(), children.end(), [](int c) { return c <= 1; });
}

bool RegionClassification::unanimous() const {
  return std::all_of(regions.begin(), regions.end(),
                     [](const auto& r) { return r.samples.empty() || r.verdict.has_value(); });
}

int RegionClassification::unsampled_regions() const {
  return static_cast<int>(
      std::count_if(regions.begin(), regions.end(), [](const auto& r) { return r.samples.empty(); }));
}

RegionClassification classify_regions(const SurfaceFunction& f, const TraceResult& trace,
                                      int samples_per_region, std::uint64_t seed) {
  if (samples_per_region < 1) fail(ErrorCode::kInvalidArgument, "samples_per_region must be positive");
  if (trace.has_open_chains()) fail(ErrorCode::kPrecondition, "region classification needs closed components");
  const auto& comps = trace.components;
  const int exterior = static_cast<int>(comps.size());
  RegionClassification out;
  out.regions.resize(comps.size() + 1);
  for (int k = 0; k < exterior; ++k) out.regions[k].boundary = k;

  const Rectangle& box = trace.bbox;
  const double xmin = box.xmin.get_d();
  const double xmax = box.xmax.get_d();
  const double cell = std::max(Rational(box.xmax - box.xmin).get_d(), Rational(box.ymax - box.ymin).get_d()) / trace.resolution;
  constexpr long kSteps = 1L << 16;
  constexpr long kDyadic = 1L << 12;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(1, kSteps - 1);

  auto add = [&](int region, const RationalPoint& q) {
    out.regions[region].samples.push_back({q, classify_point(f, q)});
  };
  auto full = [&] {
    return std::all_of(out.regions.begin(), out.regions.end(),
                       [&](const auto& r) { return static_cast<int>(r.samples.size()) >= samples_per_region; });
  };

  for (int attempt = 0; attempt < 1000 && !full(); ++attempt) {
    const Rational y = box.ymin + (box.ymax - box.ymin) * Rational(pick(rng), kSteps);
    const double yd = y.get_d();
    std::vector<double> xs{xmin, xmax};
    for (const auto& c : comps) {
      for (std::size_t k = 1; k < c.polyline.size(); ++k) {
        const PlanePoint& a = c.polyline[k - 1];
        const PlanePoint& b = c.polyline[k];
        if ((a.y > yd) != (b.y > yd)) xs.push_back(a.x + (yd - a.y) * (b.x - a.x) / (b.y - a.y));
      }
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 1; k < xs.size(); ++k) {
      if (xs[k] - xs[k - 1] < 4 * cell) continue;
      const double mid = (xs[k] + xs[k - 1]) / 2;
      const RationalPoint q{Rational(static_cast<long>(std::lround(mid * kDyadic)), kDyadic), y};
      const PlanePoint qd{q.x.get_d(), yd};
      bool near_curve = false;
      for (const auto& c : comps) {
        for (std::size_t s = 1; s < c.polyline.size() && !near_curve; ++s) {
          near_curve = distance_to_segment(qd, c.polyline[s - 1], c.polyline[s]) < 2 * cell;
        }
      }
      if (near_curve) continue;
      const int container = innermost_container(comps, qd);
      const int region = container < 0 ? exterior : container;
      if (static_cast<int>(out.regions[region].samples.size()) < samples_per_region) add(region, q);
    }
  }

  const Rational cx = (box.xmin + box.xmax) / 2;
  const Rational cy = (box.ymin + box.ymax) / 2;
  const Rational wx = box.xmax - box.xmin;
  const Rational wy = box.ymax - box.ymin;
  for (int sx = -1; sx <= 1; ++sx) {
    for (int sy = -1; sy <= 1; ++sy) {
      if (sx == 0 && sy == 0) continue;
      add(exterior, {cx + wx * sx, cy + wy * sy});
    }
  }

  for (auto& region : out.regions) {
    if (region.samples.empty()) continue;
    const PointClass first = region.samples.front().cls;
    const bool agree = std::all_of(region.samples.begin(), region.samples.end(),
                                   [&](const auto& s) { return s.cls == first; });
    if (agree) region.verdict = first;
  }
  return out;
}

}  // namespace hesslab
