// Exercises the shared library through the C header only.
#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>

#include "hesslab.h"

namespace {

std::string take(char* text) {
  std::string s = text ? text : "";
  hl_string_free(text);
  return s;
}

}  // namespace

TEST_CASE("polynomials") {
  hl_polynomial* p = nullptr;
  REQUIRE(hl_polynomial_parse("x^2 + y^2", &p) == HL_OK);
  hl_polynomial* h = nullptr;
  REQUIRE(hl_polynomial_hessian(p, &h) == HL_OK);
  char* text = nullptr;
  REQUIRE(hl_polynomial_to_string(h, &text) == HL_OK);
  CHECK(take(text) == "4");
  hl_polynomial* four = nullptr;
  REQUIRE(hl_polynomial_parse("4", &four) == HL_OK);
  int equal = 0;
  CHECK(hl_polynomial_equal(h, four, &equal) == HL_OK);
  CHECK(equal == 1);
  hl_point_class cls;
  CHECK(hl_classify_polynomial_point(p, "0", "0", &cls) == HL_OK);
  CHECK(cls == HL_ELLIPTIC);
  CHECK(std::string(hl_point_class_name(cls)) == "Elliptic");
  hl_polynomial_free(p);
  hl_polynomial_free(h);
  hl_polynomial_free(four);
  hl_polynomial_free(nullptr);

  hl_polynomial* bad = nullptr;
  CHECK(hl_polynomial_parse("0.5*x", &bad) == HL_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::strlen(hl_last_error()) > 0);
  CHECK(hl_polynomial_parse(nullptr, &bad) == HL_INVALID_ARGUMENT);
}

TEST_CASE("families and reports") {
  hl_family* fam = nullptr;
  REQUIRE(hl_family_from_json(R"({"family":"even","radii":["1","2","3"]})", &fam) == HL_OK);
  hl_family_kind kind;
  CHECK(hl_family_kind_of(fam, &kind) == HL_OK);
  CHECK(kind == HL_FAMILY_EVEN);
  hl_verify_options options;
  hl_verify_options_default(&options);
  CHECK(options.resolution == 128);
  hl_report* report = nullptr;
  REQUIRE(hl_verify(fam, &options, &report) == HL_OK);
  CHECK(hl_report_overall(report) == 1);
  char* json = nullptr;
  REQUIRE(hl_report_to_json(report, 0, &json) == HL_OK);
  std::string body = take(json);
  CHECK(body.find("\"observed\": 4") != std::string::npos);
  CHECK(body.find("timings") == std::string::npos);
  hl_report_free(report);

  hl_point_class cls;
  CHECK(hl_classify_family_point(fam, "10", "0", &cls) == HL_OK);
  CHECK(cls == HL_ELLIPTIC);
  int ok = 0;
  CHECK(hl_family_check_good_position(fam, &ok, nullptr) == HL_INVALID_ARGUMENT);

  hl_trace* trace = nullptr;
  REQUIRE(hl_trace_family(fam, 128, 6, 0, &trace) == HL_OK);
  CHECK(hl_trace_component_count(trace) == 4);
  CHECK(hl_trace_has_open_chains(trace) == 0);
  char* svg = nullptr;
  REQUIRE(hl_trace_to_svg(trace, &svg) == HL_OK);
  CHECK(take(svg).find("<path") != std::string::npos);
  hl_trace_free(trace);
  hl_family_free(fam);
}

TEST_CASE("good-position witness") {
  hl_family* fam = nullptr;
  REQUIRE(hl_family_from_json(R"({"family":"outer","a":"1","b":"-1","a_list":["-2","-3"],"b_list":[]})", &fam) ==
          HL_OK);
  int ok = 1;
  char* witness = nullptr;
  REQUIRE(hl_family_check_good_position(fam, &ok, &witness) == HL_OK);
  CHECK(ok == 0);
  CHECK(take(witness).find("(-2, 0)") != std::string::npos);
  hl_report* report = nullptr;
  CHECK(hl_verify(fam, nullptr, &report) == HL_GOOD_POSITION);
  CHECK(report == nullptr);
  hl_family_free(fam);

  CHECK(hl_family_from_json(R"({"family":"outer","a":"1","b":"-1","a_list":["1"],"b_list":[]})", &fam) ==
        HL_INVALID_ARGUMENT);
}

TEST_CASE("traces and affine checks") {
  hl_polynomial* circle = nullptr;
  REQUIRE(hl_polynomial_parse("x^2+y^2-1", &circle) == HL_OK);
  hl_trace* trace = nullptr;
  REQUIRE(hl_trace_polynomial(circle, "-2", "2", "-2", "2", 64, 6, 0, &trace) == HL_OK);
  CHECK(hl_trace_component_count(trace) == 1);
  char* csv = nullptr;
  REQUIRE(hl_trace_to_csv(trace, &csv) == HL_OK);
  CHECK(take(csv).rfind("component,depth,closed,vertex,x,y", 0) == 0);
  hl_trace_free(trace);
  CHECK(hl_trace_polynomial(circle, "2", "-2", "-2", "2", 64, 6, 0, &trace) != HL_OK);

  const char* linear[4] = {"2", "0", "0", "1"};
  const char* translation[2] = {"0", "0"};
  int holds = 0;
  CHECK(hl_affine_check(circle, linear, translation, &holds) == HL_OK);
  CHECK(holds == 1);
  const char* singular[4] = {"1", "2", "2", "4"};
  CHECK(hl_affine_check(circle, singular, translation, &holds) == HL_INVALID_ARGUMENT);
  hl_polynomial_free(circle);
}

TEST_CASE("errors are per thread") {
  hl_polynomial* p = nullptr;
  CHECK(hl_polynomial_parse("x^", &p) == HL_PARSE);
  std::string mine = hl_last_error();
  std::thread other([] {
    hl_polynomial* q = nullptr;
    hl_family* f = nullptr;
    CHECK(hl_family_from_json("{", &f) != HL_OK);
    (void)q;
  });
  other.join();
  CHECK(std::string(hl_last_error()) == mine);
  CHECK(std::string(hl_version()) == "1.0.0");
}
