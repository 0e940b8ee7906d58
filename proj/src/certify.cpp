#include "hesslab/certify.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "hesslab/error.hpp"
#include "hesslab/realroots.hpp"

namespace hesslab {

namespace {

std::string interval_string(const IsolatingInterval& iv) {
  return "(" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

std::string point_string(const RationalPoint& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

OrderedJson contact_json(const ContactOrder& order) {
  return order ? OrderedJson(*order) : OrderedJson("infinite");
}

OrderedJson certificate_json(const SpecialPointCertificate& cert) {
  OrderedJson w;
  w["point"] = cert.point;
  w["hessian_vanishes"] = cert.hessian_vanishes;
  w["hessian_gradient_nonzero"] = cert.hessian_gradient_nonzero;
  w["asymptotic_direction"] = cert.unique_asymptotic_direction ? OrderedJson(*cert.unique_asymptotic_direction)
                                                               : OrderedJson(nullptr);
  w["contact_order"] = contact_json(cert.contact_order);
  w["jet4_not_square"] = cert.jet4_not_square;
  w["verdict"] = cert.verdict;
  return w;
}

class ReportBuilder {
 public:
  ReportBuilder(std::string theorem, FamilySpec family) {
    report_.theorem = std::move(theorem);
    report_.family = std::move(family);
  }

  void run(const std::function<Claim()>& make) {
    const auto start = std::chrono::steady_clock::now();
    Claim claim;
    try {
      claim = make();
    } catch (const Error& e) {
      // An exact step that throws is a failed claim, not a crashed report.
      claim.id = pending_id_;
      claim.pass = false;
      claim.observed = std::string("error: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.timings_ms.emplace_back(claim.id, ms);
    report_.claims.push_back(std::move(claim));
  }

  void expect_id(std::string id) { pending_id_ = std::move(id); }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  TheoremReport finish() {
    report_.overall = !report_.claims.empty();
    for (const auto& c : report_.claims) report_.overall = report_.overall && c.pass;
    return std::move(report_);
  }

 private:
  TheoremReport report_;
  std::string pending_id_;
};

struct TraceOutcome {
  int resolution = 0;
  TraceResult trace;
  NestingForest forest;
  int count = 0;
};

TraceOutcome trace_once(const Polynomial& p, const Rectangle& box, int resolution, const VerifyOptions& options) {
  TraceOutcome out;
  out.resolution = resolution;
  out.trace = trace_curve(p, box, {resolution, options.max_depth, options.threads});
  out.forest = nesting_forest(out.trace.components);
  out.count = static_cast<int>(out.trace.components.size());
  return out;
}

OrderedJson trace_json(const TraceOutcome& t) {
  OrderedJson w;
  w["resolution"] = t.resolution;
  w["components"] = t.count;
  w["open_chains"] = t.trace.has_open_chains();
  w["nesting_edges"] = t.forest.edge_count();
  w["nesting_chain"] = t.forest.is_chain();
  w["saddle_cells"] = t.trace.saddle_cells;
  w["center_rule_saddles"] = t.trace.center_rule_saddles;
  auto tangents = OrderedJson::array();
  for (const auto& c : t.trace.components) tangents.push_back(c.vertical_tangent_count);
  w["vertical_tangents"] = tangents;
  return w;
}

// Traces at the base resolution and at twice it; on any mismatch the pair is
// rerun at 512 and 1024 before the claim is declared failed.
struct TracedPair {
  TraceOutcome primary;
  TraceOutcome doubled;
  bool pass = false;
};

TracedPair traced_pair(const Polynomial& p, const Rectangle& box, const VerifyOptions& options,
                       const std::function<bool(const TraceOutcome&)>& acceptable) {
  auto attempt = [&](int resolution) {
    TracedPair pair{trace_once(p, box, resolution, options), trace_once(p, box, 2 * resolution, options)};
    pair.pass = acceptable(pair.primary) && acceptable(pair.doubled) && pair.primary.count == pair.doubled.count &&
                pair.primary.forest.edge_count() == pair.doubled.forest.edge_count();
    return pair;
  };
  TracedPair pair = attempt(options.resolution);
  if (!pair.pass && options.resolution < 512) pair = attempt(512);
  return pair;
}

Claim traced_claim(const std::string& id, const std::string& description, int expected, const TracedPair& pair) {
  Claim c;
  c.id = id;
  c.description = description;
  c.method = ClaimMethod::kTraced;
  c.expected = expected;
  c.observed = pair.primary.count;
  c.resolution = pair.primary.resolution;
  c.pass = pair.pass;
  c.witnesses.push_back(trace_json(pair.primary));
  c.witnesses.push_back(trace_json(pair.doubled));
  return c;
}

// Positive simple roots of a radial polynomial, as witness intervals.
struct RadialRoots {
  int count = 0;
  bool all_simple = true;
  OrderedJson witnesses = OrderedJson::array();
};

RadialRoots radial_roots(const UnivariatePolynomial& q) {
  RadialRoots out;
  if (q.degree() < 1) return out;
  for (const auto& iv : positive_roots(q)) {
    ++out.count;
    out.all_simple = out.all_simple && iv.multiplicity_one;
    const AlgebraicReal root = root_of(q, iv);
    OrderedJson w;
    w["radius_interval"] = interval_string(root.as_rational() ? IsolatingInterval{*root.as_rational(), *root.as_rational(), true}
                                                              : root.refined(Rational(1, 1 << 20)));
    w["radius"] = root.describe();
    w["simple"] = iv.multiplicity_one;
    out.witnesses.push_back(w);
  }
  return out;
}

bool coprime_and_square_free(const UnivariatePolynomial& s, const UnivariatePolynomial& t) {
  auto constant = [](const UnivariatePolynomial& p) { return p.degree() <= 0; };
  return constant(gcd(s, t)) && (s.degree() < 1 || constant(gcd(s, s.derivative()))) &&
         (t.degree() < 1 || constant(gcd(t, t.derivative())));
}

Claim far_field_claim(const SurfaceFunction& f, const RationalPoint& point, PointClass expected,
                      const TraceOutcome& traced, int samples, std::uint64_t seed, const std::string& description) {
  Claim c;
  c.id = "far_field";
  c.description = description;
  c.method = ClaimMethod::kSampled;
  c.expected = to_string(expected);
  const PointClass at_point = classify_point(f, point);
  const RegionClassification regions = classify_regions(f, traced.trace, samples, seed);
  const auto& outside = regions.unbounded();
  c.observed = outside.verdict && *outside.verdict == at_point ? to_string(at_point) : std::string("mixed");
  c.pass = at_point == expected && outside.verdict == expected;
  OrderedJson w;
  w["point"] = point_string(point);
  w["class"] = to_string(at_point);
  c.witnesses.push_back(w);
  for (const auto& s : outside.samples) {
    OrderedJson sample;
    sample["point"] = point_string(s.point);
    sample["class"] = to_string(s.cls);
    c.witnesses.push_back(sample);
  }
  return c;
}

Rational random_between(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
  constexpr long kSteps = 1L << 12;
  std::uniform_int_distribution<long> pick(0, kSteps);
  return lo + (hi - lo) * Rational(pick(rng), kSteps);
}

}  // namespace

std::string to_string(ClaimMethod method) {
  switch (method) {
    case ClaimMethod::kExact:
      return "exact";
    case ClaimMethod::kTraced:
      return "traced";
    case ClaimMethod::kSampled:
      return "sampled";
  }
  return "exact";
}

std::string TheoremReport::to_json(bool include_timings) const {
  OrderedJson out;
  out["theorem"] = theorem;
  out["family"] = OrderedJson::parse(family_to_json(family));
  auto claim_list = OrderedJson::array();
  for (const auto& c : claims) {
    OrderedJson entry;
    entry["id"] = c.id;
    entry["description"] = c.description;
    entry["expected"] = c.expected;
    entry["observed"] = c.observed;
    entry["method"] = to_string(c.method);
    entry["pass"] = c.pass;
    if (c.resolution) entry["resolution"] = *c.resolution;
    entry["witnesses"] = c.witnesses;
    claim_list.push_back(entry);
  }
  out["claims"] = claim_list;
  out["overall"] = overall;
  out["notes"] = notes;
  if (include_timings) {
    OrderedJson timings;
    for (const auto& [id, ms] : timings_ms) timings[id + "_ms"] = ms;
    out["timings"] = timings;
  }
  return out.dump(2);
}

TheoremReport verify_theorem1(const OuterOvalParams& params, const VerifyOptions& options) {
  validate(params);
  const GoodPositionResult position = check_good_position(params);
  if (!position.ok) {
    const auto& first = position.failures.front();
    fail(ErrorCode::kGoodPosition, "arrangement is not in good position: line " + first.line +
                                       " contains the critical point " + first.witness.describe() +
                                       " of the product of the other lines");
  }
  const int k = params.m() + params.n();
  const Polynomial f = build_outer_oval(params);
  const Polynomial hess = hessian_poly(f);
  const Rectangle box = auto_bbox(params);
  ReportBuilder report("theorem1", params);
  report.note("parameters are restricted to rationals; the statement is for real parameters");
  report.note("the abstract's family f_k is this construction with k = m + n + 2 = " + std::to_string(k + 2));
  if (params.m() == 0 || params.n() == 0) report.note("m = 0 or n = 0: the empty products and sums are used as written");
  if (k == 0) report.note("m = n = 0: f is quadratic, so every asymptotic line lies on the graph and the inflexion claim is checked in that form");
  report.note("special points are certified on the arrangement lines, where the proof locates them");

  report.expect_id("vertical_tangencies");
  report.run([&] {
    Claim c;
    c.id = "vertical_tangencies";
    c.description = "alpha(x) in Hess f(x, u + (a+b)x/2) = beta(x) u^2 + alpha(x) has 2(m+n) simple real roots";
    c.expected = 2 * k;
    const AlphaBeta ab = shifted_alpha_beta(params);
    const auto roots = ab.alpha.is_zero() ? std::vector<IsolatingInterval>{} : isolate_roots(ab.alpha);
    bool simple = true;
    for (const auto& iv : roots) {
      simple = simple && iv.multiplicity_one;
      c.witnesses.push_back(interval_string(iv));
    }
    c.observed = static_cast<int>(roots.size());
    c.pass = !ab.alpha.is_zero() && simple && static_cast<int>(roots.size()) == 2 * k;
    return c;
  });

  report.expect_id("outer_ovals");
  report.run([&] {
    const TracedPair pair = traced_pair(hess, box, options, [&](const TraceOutcome& t) {
      return !t.trace.has_open_chains() && t.count == k && t.forest.edge_count() == 0;
    });
    return traced_claim("outer_ovals", "Hessian curve traced as m+n closed components, none inside another", k, pair);
  });

  int vertical_certified = 0;
  report.expect_id("vertical_line_special_points");
  report.run([&] {
    Claim c;
    c.id = "vertical_line_special_points";
    c.description = "(c, (a+b)c/2) is a special parabolic point for every c among a_i and b_j";
    c.expected = k;
    std::vector<Rational> cs = params.a_list;
    cs.insert(cs.end(), params.b_list.begin(), params.b_list.end());
    for (const auto& x : cs) {
      const RationalPoint point{x, (params.a + params.b) * x / 2};
      try {
        const auto cert = certify_special_parabolic(SurfaceFunction{f}, point);
        if (cert.verdict) ++vertical_certified;
        c.witnesses.push_back(certificate_json(cert));
      } catch (const Error& e) {
        c.witnesses.push_back({{"point", point_string(point)}, {"error", e.what()}});
      }
    }
    c.observed = vertical_certified;
    c.pass = vertical_certified == k;
    return c;
  });

  int slanted_certified = 0;
  report.expect_id("slanted_line_special_points");
  report.run([&] {
    Claim c;
    c.id = "slanted_line_special_points";
    c.description = "Hess f on y = ax and on y = bx is -(a-b)^2 g'(x)^2; the m+n simple roots of g' on each line are special parabolic points";
    c.expected = 2 * k;
    const UnivariatePolynomial g_prime = arrangement_profile(params).derivative();
    const Rational spread = (params.a - params.b) * (params.a - params.b);
    bool structure = true;
    for (const Rational& slope : {params.a, params.b}) {
      const UnivariatePolynomial on_line = restrict_to_line(hess, {0, 0}, {1, slope});
      const bool identity = on_line == g_prime * g_prime * Rational(-spread);
      const auto roots = isolate_roots(g_prime);
      bool simple = true;
      for (const auto& iv : roots) simple = simple && iv.multiplicity_one;
      structure = structure && identity && simple && static_cast<int>(roots.size()) == k;
      OrderedJson line;
      line["line"] = "y = " + to_string(slope) + "*x";
      line["restriction_identity"] = identity;
      line["simple_roots"] = static_cast<int>(roots.size());
      auto certs = OrderedJson::array();
      for (const auto& iv : roots) {
        const AlgebraicReal theta = root_of(g_prime, iv);
        SpecialPointCertificate cert;
        if (auto x = theta.as_rational()) {
          cert = certify_special_parabolic(SurfaceFunction{f}, RationalPoint{*x, slope * *x});
        } else {
          const AlgebraicPoint point{theta, UnivariatePolynomial::identity(),
                                     UnivariatePolynomial::identity() * slope};
          cert = certify_special_parabolic(f, point);
        }
        if (cert.verdict) ++slanted_certified;
        OrderedJson w = certificate_json(cert);
        w["exact_rational"] = theta.as_rational().has_value();
        certs.push_back(w);
      }
      line["certificates"] = certs;
      c.witnesses.push_back(line);
    }
    c.observed = slanted_certified;
    c.pass = structure && slanted_certified == 2 * k;
    return c;
  });

  report.expect_id("special_point_total");
  report.run([&] {
    Claim c;
    c.id = "special_point_total";
    c.description = "certified special parabolic points total 3(m+n)";
    c.method = ClaimMethod::kExact;
    c.expected = 3 * k;
    c.observed = vertical_certified + slanted_certified;
    c.pass = vertical_certified + slanted_certified == 3 * k;
    c.witnesses.push_back({{"vertical_lines", vertical_certified}, {"slanted_lines", slanted_certified}});
    return c;
  });

  report.expect_id("inflexion_curve");
  report.run([&] {
    Claim c;
    c.id = "inflexion_curve";
    // With m = n = 0 the graph is a hyperbolic paraboloid: both asymptotic
    // lines lie on it at every point, so the expected contact is infinite.
    const bool quadric = k == 0;
    const ContactOrder wanted = quadric ? ContactOrder{} : ContactOrder{3};
    c.description = quadric ? "f is quadratic: sampled hyperbolic points have both asymptotic lines on the graph; "
                              "points of {f = 0} have an asymptotic line of infinite contact"
                            : "sampled hyperbolic points off {f = 0} have both asymptotic contact orders equal to 3; "
                              "points of {f = 0} have an asymptotic line of infinite contact";
    c.method = ClaimMethod::kSampled;
    c.expected = {{"off_lines_contact", contact_json(wanted)},
                  {"off_lines_matching", options.samples},
                  {"on_lines_infinite", true}};
    std::mt19937_64 rng(options.seed);
    const SurfaceFunction surface{f};
    int good = 0;
    int checked = 0;
    for (int attempt = 0; attempt < 50 * options.samples && checked < options.samples; ++attempt) {
      const RationalPoint q{random_between(rng, box.xmin, box.xmax), random_between(rng, box.ymin, box.ymax)};
      if (sgn(evaluate(f, q)) == 0 || classify_point(surface, q) != PointClass::kHyperbolic) continue;
      ++checked;
      const AsymptoticDirections dirs = asymptotic_directions(surface, q);
      bool both_three = dirs.kind == AsymptoticDirections::Kind::kTwo;
      auto orders = OrderedJson::array();
      for (const auto& d : dirs.directions) {
        const ContactOrder order = contact_order(surface, q, d);
        orders.push_back(contact_json(order));
        both_three = both_three && order == wanted;
      }
      if (both_three) {
        ++good;
      } else {
        c.witnesses.push_back({{"point", point_string(q)}, {"contact_orders", orders}});
      }
    }
    const auto lines = arrangement_lines(params);
    bool on_lines = true;
    int line_points = 0;
    for (const auto& line : lines) {
      for (int t = 0; t < 2; ++t) {
        const Rational s = random_between(rng, Rational(-3), Rational(3));
        const RationalPoint q{line.base.x + s * line.direction.x, line.base.y + s * line.direction.y};
        Polynomial others(1);
        for (const auto& l : lines) {
          if (l.label != line.label) others *= l.equation;
        }
        if (sgn(evaluate(others, q)) == 0 || classify_point(surface, q) != PointClass::kHyperbolic) continue;
        ++line_points;
        bool infinite = false;
        const AsymptoticDirections dirs = asymptotic_directions(surface, q);
        for (const auto& d : dirs.directions) {
          infinite = infinite || !contact_order(surface, q, d).has_value();
        }
        on_lines = on_lines && infinite;
        c.witnesses.push_back({{"point", point_string(q)}, {"line", line.label}, {"infinite_contact", infinite}});
      }
    }
    c.observed = {{"off_lines_contact", contact_json(wanted)},
                  {"off_lines_matching", good},
                  {"on_lines_infinite", on_lines}};
    c.pass = checked == options.samples && good == checked && on_lines && line_points > 0;
    return c;
  });

  report.expect_id("far_field");
  report.run([&] {
    // W: complement of the closed compact polygons of the arrangement.
    const Rational left = params.a_list.empty() ? Rational(0) : params.a_list.back();
    const Rational right = params.b_list.empty() ? Rational(0) : params.b_list.back();
    auto in_polygons = [&](const RationalPoint& q) {
      if (q.x < left || q.x > right) return false;
      const Rational y1 = params.a * q.x;
      const Rational y2 = params.b * q.x;
      return std::min(y1, y2) <= q.y && q.y <= std::max(y1, y2);
    };
    const TraceOutcome traced = trace_once(hess, box, options.resolution, options);
    const RationalPoint far{(box.xmax - box.xmin) * 5 + box.xmax, 0};
    Claim c = far_field_claim(SurfaceFunction{f}, far, PointClass::kHyperbolic, traced, 4, options.seed,
                              "points of W, outside the closed compact polygons, are hyperbolic; so is the "
                              "unbounded complement region of the traced Hessian curve");
    std::mt19937_64 rng(options.seed + 1);
    const Rational wx = box.xmax - box.xmin;
    const Rational wy = box.ymax - box.ymin;
    int in_w = 0;
    bool all_hyperbolic = true;
    for (int attempt = 0; attempt < 50 * options.samples && in_w < options.samples; ++attempt) {
      const RationalPoint q{random_between(rng, box.xmin - wx, box.xmax + wx),
                            random_between(rng, box.ymin - wy, box.ymax + wy)};
      if (in_polygons(q) || sgn(evaluate(f, q)) == 0) continue;
      ++in_w;
      const PointClass cls = classify_point(SurfaceFunction{f}, q);
      all_hyperbolic = all_hyperbolic && cls == PointClass::kHyperbolic;
      c.witnesses.push_back({{"point", point_string(q)}, {"class", to_string(cls)}, {"region", "W"}});
    }
    c.resolution = traced.resolution;
    c.pass = c.pass && all_hyperbolic && in_w == options.samples;
    if (!all_hyperbolic) c.observed = "mixed";
    return c;
  });

  return report.finish();
}

TheoremReport verify_theorem2(const EvenCircleParams& params, const VerifyOptions& options) {
  validate(params);
  const int n = params.n();
  const Polynomial f = build_even_circles(params);
  const Polynomial hess = hessian_poly(f);
  ReportBuilder report("theorem2", params);
  report.note("radii are restricted to rationals; the statement is for real radii");
  if (n == 1) report.note("n = 1: Hess f is a positive constant and the Hessian curve is empty");

  std::optional<RadialPair> pair;
  report.expect_id("factorization");
  report.run([&] {
    Claim c;
    c.id = "factorization";
    c.description = "Hess f = 4 s t with s(x, y) = s~(r), t(x, y) = t~(r), r^2 = x^2 + y^2";
    c.expected = "identity";
    pair = radial_even(params);
    c.observed = "identity";
    c.pass = true;
    c.witnesses.push_back({{"s_tilde", to_string(pair->s_tilde, "x")}, {"t_tilde", to_string(pair->t_tilde, "x")}});
    return c;
  });

  int sturm_total = -1;
  report.expect_id("radial_roots");
  report.run([&] {
    Claim c;
    c.id = "radial_roots";
    c.description = "s~ and t~ each have exactly n-1 simple positive roots";
    c.expected = {{"s_tilde", n - 1}, {"t_tilde", n - 1}};
    if (!pair) fail(ErrorCode::kPrecondition, "factorization unavailable");
    const RadialRoots s = radial_roots(pair->s_tilde);
    const RadialRoots t = radial_roots(pair->t_tilde);
    c.observed = {{"s_tilde", s.count}, {"t_tilde", t.count}};
    c.witnesses.push_back({{"s_tilde", s.witnesses}, {"t_tilde", t.witnesses}});
    c.pass = s.count == n - 1 && t.count == n - 1 && s.all_simple && t.all_simple;
    sturm_total = s.count + t.count;
    return c;
  });

  report.expect_id("non_singular");
  report.run([&] {
    Claim c;
    c.id = "non_singular";
    c.description = "gcd(s~, t~) is constant and s~, t~ are square-free, so the circles are distinct and smooth";
    c.expected = true;
    if (!pair) fail(ErrorCode::kPrecondition, "factorization unavailable");
    c.pass = coprime_and_square_free(pair->s_tilde, pair->t_tilde);
    c.observed = c.pass;
    c.witnesses.push_back({{"gcd", to_string(gcd(pair->s_tilde, pair->t_tilde), "x")}});
    return c;
  });

  std::optional<TraceOutcome> primary;
  report.expect_id("circles");
  report.run([&] {
    const Rectangle box = auto_bbox(params);
    const int expected = 2 * (n - 1);
    const TracedPair traced = traced_pair(hess, box, options, [&](const TraceOutcome& t) {
      return !t.trace.has_open_chains() && t.count == expected && t.forest.is_chain();
    });
    primary = traced.primary;
    Claim c = traced_claim("circles", "Hessian curve traced as 2(n-1) nested circles, matching the exact root count",
                           expected, traced);
    c.pass = c.pass && sturm_total == expected;
    c.witnesses.push_back({{"sturm_total", sturm_total}});
    return c;
  });

  report.expect_id("far_field");
  report.run([&] {
    if (!primary) fail(ErrorCode::kPrecondition, "trace unavailable");
    return far_field_claim(SurfaceFunction{f}, {Rational(2 * n + 5), 0}, PointClass::kElliptic, *primary, 4,
                           options.seed, "the unbounded complement region of the Hessian curve is elliptic");
  });
  return report.finish();
}

TheoremReport verify_theorem3(const OddCircleParams& params, const VerifyOptions& options) {
  validate(params);
  const int n = params.n;
  const PlaneRationalFunction f = build_odd_circles(params);
  const Polynomial curve = hessian_curve_polynomial(params);
  ReportBuilder report("theorem3", params);

  std::optional<RadialPair> pair;
  report.expect_id("factorization");
  report.run([&] {
    Claim c;
    c.id = "factorization";
    c.description = "Hess f = 4 s t / (x^2 + y^2 + 1)^(2n+3) with s, t radial";
    c.expected = "identity";
    pair = radial_odd(params);
    c.observed = "identity";
    c.pass = true;
    c.witnesses.push_back({{"s_tilde", to_string(pair->s_tilde, "x")},
                           {"t_tilde", to_string(pair->t_tilde, "x")},
                           {"denominator_exponent", pair->denominator_exponent}});
    return c;
  });

  int sturm_total = -1;
  report.expect_id("radial_roots");
  report.run([&] {
    Claim c;
    c.id = "radial_roots";
    c.description = "s~ has n-1 and t~ has n simple positive roots, with gcd(s~, t~) constant";
    c.expected = {{"s_tilde", n - 1}, {"t_tilde", n}};
    if (!pair) fail(ErrorCode::kPrecondition, "factorization unavailable");
    const RadialRoots s = radial_roots(pair->s_tilde);
    const RadialRoots t = radial_roots(pair->t_tilde);
    c.observed = {{"s_tilde", s.count}, {"t_tilde", t.count}};
    c.witnesses.push_back({{"s_tilde", s.witnesses}, {"t_tilde", t.witnesses}});
    c.pass = s.count == n - 1 && t.count == n && s.all_simple && t.all_simple &&
             coprime_and_square_free(pair->s_tilde, pair->t_tilde);
    sturm_total = s.count + t.count;
    return c;
  });

  report.expect_id("t_tilde_at_n_squared");
  report.run([&] {
    Claim c;
    c.id = "t_tilde_at_n_squared";
    c.description = "t~(n^2) < 0";
    c.expected = "negative";
    if (!pair) fail(ErrorCode::kPrecondition, "factorization unavailable");
    const Rational value = pair->t_tilde.evaluate(Rational(n * n));
    c.observed = sgn(value) < 0 ? "negative" : "non-negative";
    c.pass = sgn(value) < 0;
    c.witnesses.push_back({{"value", to_string(value)}});
    return c;
  });

  std::optional<TraceOutcome> primary;
  report.expect_id("circles");
  report.run([&] {
    const Rectangle box = auto_bbox(params);
    const int expected = 2 * n - 1;
    const TracedPair traced = traced_pair(curve, box, options, [&](const TraceOutcome& t) {
      return !t.trace.has_open_chains() && t.count == expected && t.forest.is_chain();
    });
    primary = traced.primary;
    Claim c = traced_claim("circles", "Hessian curve traced as 2n-1 nested circles, matching the exact root count",
                           expected, traced);
    c.pass = c.pass && sturm_total == expected;
    c.witnesses.push_back({{"sturm_total", sturm_total}});
    return c;
  });

  report.expect_id("far_field");
  report.run([&] {
    if (!primary) fail(ErrorCode::kPrecondition, "trace unavailable");
    return far_field_claim(SurfaceFunction{f}, {Rational(2 * n + 5), 0}, PointClass::kHyperbolic, *primary, 4,
                           options.seed, "the unbounded complement region of the Hessian curve is hyperbolic");
  });
  return report.finish();
}

bool verify_affine_invariance(const Polynomial& f, const AffineMap2& map) {
  const Polynomial lhs = hessian_poly(compose_affine(f, map) * (1 / map.jacobian()));
  const Polynomial rhs = compose_affine(hessian_poly(f), map);
  return lhs == rhs;
}

}  // namespace hesslab
