#include "hesslab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <type_traits>
#include <variant>

#include "hesslab/certify.hpp"
#include "hesslab/error.hpp"
#include "hesslab/export.hpp"

struct hl_polynomial {
  hesslab::Polynomial value;
};

struct hl_family {
  hesslab::FamilySpec spec;
};

struct hl_report {
  hesslab::TheoremReport report;
};

struct hl_trace {
  hesslab::TraceResult trace;
  hesslab::NestingForest forest;
};

namespace {

thread_local std::string last_error;

hl_status status_of(hesslab::ErrorCode code) {
  switch (code) {
    case hesslab::ErrorCode::kInvalidArgument:
      return HL_INVALID_ARGUMENT;
    case hesslab::ErrorCode::kParse:
      return HL_PARSE;
    case hesslab::ErrorCode::kPrecondition:
      return HL_PRECONDITION;
    case hesslab::ErrorCode::kGoodPosition:
      return HL_GOOD_POSITION;
    case hesslab::ErrorCode::kIo:
      return HL_IO;
    case hesslab::ErrorCode::kInternal:
      return HL_INTERNAL;
  }
  return HL_INTERNAL;
}

template <class Fn>
hl_status guarded(Fn&& fn) {
  try {
    fn();
    return HL_OK;
  } catch (const hesslab::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HL_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HL_INTERNAL;
  }
}

hl_status null_argument(const char* name) {
  last_error = std::string("null argument: ") + name;
  return HL_INVALID_ARGUMENT;
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

hesslab::Rational scalar(const char* text, const char* name) {
  if (text == nullptr) hesslab::fail(hesslab::ErrorCode::kInvalidArgument, std::string("null argument: ") + name);
  return hesslab::parse_rational(text);
}

hl_point_class class_of(hesslab::PointClass cls) {
  switch (cls) {
    case hesslab::PointClass::kElliptic:
      return HL_ELLIPTIC;
    case hesslab::PointClass::kParabolic:
      return HL_PARABOLIC;
    case hesslab::PointClass::kHyperbolic:
      return HL_HYPERBOLIC;
  }
  return HL_PARABOLIC;
}

}  // namespace

extern "C" {

const char* hl_version(void) { return "1.0.0"; }

const char* hl_last_error(void) { return last_error.c_str(); }

void hl_string_free(char* text) { std::free(text); }

hl_status hl_polynomial_parse(const char* text, hl_polynomial** out) {
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new hl_polynomial{hesslab::parse_polynomial(text)}; });
}

hl_status hl_polynomial_to_string(const hl_polynomial* p, char** out) {
  if (p == nullptr) return null_argument("p");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = copy_string(hesslab::to_string(p->value)); });
}

hl_status hl_polynomial_hessian(const hl_polynomial* p, hl_polynomial** out) {
  if (p == nullptr) return null_argument("p");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new hl_polynomial{hesslab::hessian_poly(p->value)}; });
}

hl_status hl_polynomial_equal(const hl_polynomial* a, const hl_polynomial* b, int* equal) {
  if (a == nullptr || b == nullptr) return null_argument("polynomial");
  if (equal == nullptr) return null_argument("equal");
  *equal = a->value == b->value ? 1 : 0;
  return HL_OK;
}

void hl_polynomial_free(hl_polynomial* p) { delete p; }

hl_status hl_family_from_json(const char* json, hl_family** out) {
  if (json == nullptr) return null_argument("json");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new hl_family{hesslab::family_from_json(json)}; });
}

hl_status hl_family_to_json(const hl_family* family, char** out) {
  if (family == nullptr) return null_argument("family");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = copy_string(hesslab::family_to_json(family->spec)); });
}

hl_status hl_family_kind_of(const hl_family* family, hl_family_kind* out) {
  if (family == nullptr) return null_argument("family");
  if (out == nullptr) return null_argument("out");
  *out = static_cast<hl_family_kind>(family->spec.index());
  return HL_OK;
}

hl_status hl_family_expand(const hl_family* family, char** out) {
  if (family == nullptr) return null_argument("family");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const hesslab::SurfaceFunction f = hesslab::build_surface(family->spec);
    *out = copy_string(std::visit([](const auto& g) { return hesslab::to_string(g); }, f));
  });
}

hl_status hl_family_hessian_curve(const hl_family* family, hl_polynomial** out) {
  if (family == nullptr) return null_argument("family");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new hl_polynomial{hesslab::hessian_curve_polynomial(family->spec)}; });
}

hl_status hl_family_check_good_position(const hl_family* family, int* ok, char** witness) {
  if (family == nullptr) return null_argument("family");
  if (ok == nullptr) return null_argument("ok");
  return guarded([&] {
    const auto* outer = std::get_if<hesslab::OuterOvalParams>(&family->spec);
    if (outer == nullptr) {
      hesslab::fail(hesslab::ErrorCode::kInvalidArgument, "good position applies to the outer family only");
    }
    const hesslab::GoodPositionResult result = hesslab::check_good_position(*outer);
    *ok = result.ok ? 1 : 0;
    if (witness != nullptr) {
      *witness = nullptr;
      if (!result.ok) {
        const auto& first = result.failures.front();
        *witness = copy_string(first.line + ": " + first.witness.describe());
      }
    }
  });
}

void hl_family_free(hl_family* family) { delete family; }

const char* hl_point_class_name(hl_point_class cls) {
  switch (cls) {
    case HL_ELLIPTIC:
      return "Elliptic";
    case HL_PARABOLIC:
      return "Parabolic";
    case HL_HYPERBOLIC:
      return "Hyperbolic";
  }
  return "Unknown";
}

hl_status hl_classify_family_point(const hl_family* family, const char* x, const char* y, hl_point_class* out) {
  if (family == nullptr) return null_argument("family");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const hesslab::RationalPoint at{scalar(x, "x"), scalar(y, "y")};
    *out = class_of(hesslab::classify_point(hesslab::build_surface(family->spec), at));
  });
}

hl_status hl_classify_polynomial_point(const hl_polynomial* f, const char* x, const char* y, hl_point_class* out) {
  if (f == nullptr) return null_argument("f");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const hesslab::RationalPoint at{scalar(x, "x"), scalar(y, "y")};
    *out = class_of(hesslab::classify_point(hesslab::SurfaceFunction{f->value}, at));
  });
}

void hl_verify_options_default(hl_verify_options* options) {
  if (options == nullptr) return;
  const hesslab::VerifyOptions defaults;
  options->resolution = defaults.resolution;
  options->max_depth = defaults.max_depth;
  options->seed = defaults.seed;
  options->threads = defaults.threads;
  options->samples = defaults.samples;
}

hl_status hl_verify(const hl_family* family, const hl_verify_options* options, hl_report** out) {
  if (family == nullptr) return null_argument("family");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    hesslab::VerifyOptions opts;
    if (options != nullptr) {
      opts.resolution = options->resolution;
      opts.max_depth = options->max_depth;
      opts.seed = options->seed;
      opts.threads = options->threads;
      opts.samples = options->samples;
    }
    if (opts.resolution < 16) hesslab::fail(hesslab::ErrorCode::kInvalidArgument, "resolution must be at least 16");
    if (opts.samples < 1) hesslab::fail(hesslab::ErrorCode::kInvalidArgument, "samples must be positive");
    auto report = std::visit(
        [&](const auto& params) -> hesslab::TheoremReport {
          using T = std::decay_t<decltype(params)>;
          if constexpr (std::is_same_v<T, hesslab::OuterOvalParams>) {
            return hesslab::verify_theorem1(params, opts);
          } else if constexpr (std::is_same_v<T, hesslab::EvenCircleParams>) {
            return hesslab::verify_theorem2(params, opts);
          } else {
            return hesslab::verify_theorem3(params, opts);
          }
        },
        family->spec);
    *out = new hl_report{std::move(report)};
  });
}

int hl_report_overall(const hl_report* report) { return report != nullptr && report->report.overall ? 1 : 0; }

hl_status hl_report_to_json(const hl_report* report, int include_timings, char** out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = copy_string(report->report.to_json(include_timings != 0)); });
}

void hl_report_free(hl_report* report) { delete report; }

hl_status hl_trace_family(const hl_family* family, int resolution, int max_depth, int threads, hl_trace** out) {
  if (family == nullptr) return null_argument("family");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    hesslab::TraceResult trace = hesslab::trace_curve(hesslab::hessian_curve_polynomial(family->spec),
                                                      hesslab::auto_bbox(family->spec),
                                                      {resolution, max_depth, threads});
    hesslab::NestingForest forest = hesslab::nesting_forest(trace.components);
    *out = new hl_trace{std::move(trace), std::move(forest)};
  });
}

hl_status hl_trace_polynomial(const hl_polynomial* p, const char* xmin, const char* xmax, const char* ymin,
                              const char* ymax, int resolution, int max_depth, int threads, hl_trace** out) {
  if (p == nullptr) return null_argument("p");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const hesslab::Rectangle box{scalar(xmin, "xmin"), scalar(xmax, "xmax"), scalar(ymin, "ymin"),
                                 scalar(ymax, "ymax")};
    hesslab::TraceResult trace = hesslab::trace_curve(p->value, box, {resolution, max_depth, threads});
    hesslab::NestingForest forest = hesslab::nesting_forest(trace.components);
    *out = new hl_trace{std::move(trace), std::move(forest)};
  });
}

int hl_trace_component_count(const hl_trace* trace) {
  return trace == nullptr ? -1 : static_cast<int>(trace->trace.components.size());
}

int hl_trace_has_open_chains(const hl_trace* trace) {
  return trace != nullptr && trace->trace.has_open_chains() ? 1 : 0;
}

hl_status hl_trace_to_svg(const hl_trace* trace, char** out) {
  if (trace == nullptr) return null_argument("trace");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = copy_string(hesslab::trace_to_svg(trace->trace, trace->forest)); });
}

hl_status hl_trace_to_csv(const hl_trace* trace, char** out) {
  if (trace == nullptr) return null_argument("trace");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = copy_string(hesslab::trace_to_csv(trace->trace, trace->forest)); });
}

void hl_trace_free(hl_trace* trace) { delete trace; }

hl_status hl_affine_check(const hl_polynomial* f, const char* const linear[4], const char* const translation[2],
                          int* holds) {
  if (f == nullptr) return null_argument("f");
  if (linear == nullptr || translation == nullptr) return null_argument("map");
  if (holds == nullptr) return null_argument("holds");
  return guarded([&] {
    const hesslab::AffineMap2 map({scalar(linear[0], "a11"), scalar(linear[1], "a12"), scalar(linear[2], "a21"),
                                   scalar(linear[3], "a22")},
                                  {scalar(translation[0], "t1"), scalar(translation[1], "t2")});
    *holds = hesslab::verify_affine_invariance(f->value, map) ? 1 : 0;
  });
}

}  // extern "C"
