// Command-line front end. Talks to the library only through hesslab.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hesslab.h"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int exit_code;
  std::string message;
};

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { hl_string_free(text); }
  std::string str() const { return text == nullptr ? std::string() : std::string(text); }
};

struct FamilyDeleter {
  void operator()(hl_family* f) const { hl_family_free(f); }
};
struct PolynomialDeleter {
  void operator()(hl_polynomial* p) const { hl_polynomial_free(p); }
};
struct ReportDeleter {
  void operator()(hl_report* r) const { hl_report_free(r); }
};
struct TraceDeleter {
  void operator()(hl_trace* t) const { hl_trace_free(t); }
};
using FamilyHandle = std::unique_ptr<hl_family, FamilyDeleter>;
using PolynomialHandle = std::unique_ptr<hl_polynomial, PolynomialDeleter>;
using ReportHandle = std::unique_ptr<hl_report, ReportDeleter>;
using TraceHandle = std::unique_ptr<hl_trace, TraceDeleter>;

void check(hl_status status) {
  if (status == HL_OK) return;
  const int code = status == HL_GOOD_POSITION ? kExitFailed : kExitUsage;
  throw CliError{status == HL_INTERNAL || status == HL_IO ? kExitFailed : code, hl_last_error()};
}

struct FamilyFlags {
  std::string family;
  std::string a;
  std::string b;
  std::vector<std::string> ai;
  std::vector<std::string> bj;
  std::vector<std::string> radii;
  std::optional<int> n;
  std::string instance;

  bool given() const { return !family.empty() || !a.empty() || !b.empty() || !radii.empty() || n || !instance.empty(); }
};

void add_family_flags(CLI::App* cmd, FamilyFlags& flags) {
  cmd->add_option("--family", flags.family, "Family: outer, even or odd")
      ->check(CLI::IsMember({"outer", "even", "odd"}));
  cmd->add_option("--a", flags.a, "Slope a of the line y = a x (outer family)");
  cmd->add_option("--b", flags.b, "Slope b of the line y = b x (outer family)");
  cmd->add_option("--ai", flags.ai, "Comma-separated a_1 > a_2 > ... (negative)")->delimiter(',');
  cmd->add_option("--bj", flags.bj, "Comma-separated 0 < b_1 < b_2 < ...")->delimiter(',');
  cmd->add_option("--radii", flags.radii, "Comma-separated radii of the even family")->delimiter(',');
  cmd->add_option("--n", flags.n, "Number of circles of the odd family");
  cmd->add_option("--instance", flags.instance, "JSON family instance file");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitUsage, "cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out || !(out << content)) throw CliError{kExitFailed, "cannot write " + path};
}

FamilyHandle make_family(const FamilyFlags& flags, const std::string& implied) {
  std::string json;
  if (!flags.instance.empty()) {
    json = read_file(flags.instance);
  } else {
    std::string kind = flags.family;
    if (kind.empty()) kind = implied;
    if (kind.empty()) {
      if (!flags.radii.empty()) kind = "even";
      else if (flags.n) kind = "odd";
      else if (!flags.a.empty() || !flags.b.empty()) kind = "outer";
    }
    if (!implied.empty() && kind != implied) {
      throw CliError{kExitUsage, "this command needs the " + implied + " family"};
    }
    nlohmann::ordered_json obj;
    obj["family"] = kind;
    if (kind == "outer") {
      if (flags.a.empty() || flags.b.empty()) throw CliError{kExitUsage, "the outer family needs --a and --b"};
      obj["a"] = flags.a;
      obj["b"] = flags.b;
      obj["a_list"] = flags.ai;
      obj["b_list"] = flags.bj;
    } else if (kind == "even") {
      if (flags.radii.empty()) throw CliError{kExitUsage, "the even family needs --radii"};
      obj["radii"] = flags.radii;
    } else if (kind == "odd") {
      if (!flags.n) throw CliError{kExitUsage, "the odd family needs --n"};
      obj["n"] = *flags.n;
    } else {
      throw CliError{kExitUsage, "no family given (use --family, --radii, --n, --a/--b or --instance)"};
    }
    json = obj.dump();
  }
  hl_family* raw = nullptr;
  check(hl_family_from_json(json.c_str(), &raw));
  FamilyHandle family(raw);
  if (!implied.empty()) {
    hl_family_kind kind{};
    check(hl_family_kind_of(family.get(), &kind));
    const char* names[] = {"outer", "even", "odd"};
    if (implied != names[kind]) throw CliError{kExitUsage, "this command needs the " + implied + " family"};
  }
  return family;
}

PolynomialHandle make_polynomial(const std::string& text) {
  hl_polynomial* raw = nullptr;
  check(hl_polynomial_parse(text.c_str(), &raw));
  return PolynomialHandle(raw);
}

std::vector<std::string> split(const std::string& text, std::size_t expected, const std::string& flag) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != expected) {
    throw CliError{kExitUsage, flag + " expects " + std::to_string(expected) + " comma-separated rationals"};
  }
  return parts;
}

int run_family(const FamilyFlags& flags, bool hessian, const std::string& json_path) {
  FamilyHandle family = make_family(flags, "");
  OwnedString text;
  check(hl_family_expand(family.get(), &text.text));
  std::cout << text.str() << '\n';
  if (hessian) {
    hl_polynomial* raw = nullptr;
    check(hl_family_hessian_curve(family.get(), &raw));
    PolynomialHandle curve(raw);
    OwnedString h;
    check(hl_polynomial_to_string(curve.get(), &h.text));
    std::cout << h.str() << '\n';
  }
  if (!json_path.empty()) {
    OwnedString json;
    check(hl_family_to_json(family.get(), &json.text));
    write_file(json_path, json.str() + "\n");
  }
  return 0;
}

int run_verify(const std::string& theorem, const FamilyFlags& flags, const hl_verify_options& options,
               const std::string& json_path, bool with_timings) {
  const std::string implied = theorem == "theorem1" ? "outer" : theorem == "theorem2" ? "even" : "odd";
  FamilyHandle family = make_family(flags, implied);
  hl_report* raw = nullptr;
  check(hl_verify(family.get(), &options, &raw));
  ReportHandle report(raw);
  OwnedString json;
  check(hl_report_to_json(report.get(), with_timings ? 1 : 0, &json.text));
  const auto parsed = nlohmann::ordered_json::parse(json.str());
  for (const auto& claim : parsed.at("claims")) {
    std::cout << (claim.at("pass").get<bool>() ? "PASS " : "FAIL ") << claim.at("id").get<std::string>()
              << ": expected " << claim.at("expected").dump() << ", observed " << claim.at("observed").dump()
              << " [" << claim.at("method").get<std::string>() << "]\n";
  }
  const bool overall = hl_report_overall(report.get()) == 1;
  std::cout << "overall: " << (overall ? "PASS" : "FAIL") << '\n';
  if (!json_path.empty()) write_file(json_path, json.str() + "\n");
  return overall ? 0 : kExitFailed;
}

int run_trace(const FamilyFlags& flags, const std::string& poly, const std::string& bbox, int resolution,
              int max_depth, int threads, const std::string& svg, const std::string& csv) {
  hl_trace* raw = nullptr;
  if (!poly.empty()) {
    if (bbox.empty()) throw CliError{kExitUsage, "--poly needs --bbox xmin,xmax,ymin,ymax"};
    const auto b = split(bbox, 4, "--bbox");
    PolynomialHandle p = make_polynomial(poly);
    check(hl_trace_polynomial(p.get(), b[0].c_str(), b[1].c_str(), b[2].c_str(), b[3].c_str(), resolution,
                              max_depth, threads, &raw));
  } else {
    FamilyHandle family = make_family(flags, "");
    check(hl_trace_family(family.get(), resolution, max_depth, threads, &raw));
  }
  TraceHandle trace(raw);
  std::cout << "components: " << hl_trace_component_count(trace.get()) << '\n';
  if (hl_trace_has_open_chains(trace.get())) std::cout << "warning: open chains reach the rectangle boundary\n";
  if (!svg.empty()) {
    OwnedString text;
    check(hl_trace_to_svg(trace.get(), &text.text));
    write_file(svg, text.str());
  }
  if (!csv.empty()) {
    OwnedString text;
    check(hl_trace_to_csv(trace.get(), &text.text));
    write_file(csv, text.str());
  }
  return 0;
}

int run_classify(const FamilyFlags& flags, const std::string& poly, const std::string& point) {
  const auto xy = split(point, 2, "--point");
  hl_point_class cls{};
  if (!poly.empty()) {
    PolynomialHandle p = make_polynomial(poly);
    check(hl_classify_polynomial_point(p.get(), xy[0].c_str(), xy[1].c_str(), &cls));
  } else {
    FamilyHandle family = make_family(flags, "");
    check(hl_classify_family_point(family.get(), xy[0].c_str(), xy[1].c_str(), &cls));
  }
  std::cout << hl_point_class_name(cls) << '\n';
  return 0;
}

int run_affine(const std::string& poly, const std::string& linear, const std::string& translation) {
  PolynomialHandle p = make_polynomial(poly);
  const auto l = split(linear, 4, "--linear");
  const auto t = split(translation.empty() ? std::string("0,0") : translation, 2, "--translation");
  const char* lin[4] = {l[0].c_str(), l[1].c_str(), l[2].c_str(), l[3].c_str()};
  const char* tr[2] = {t[0].c_str(), t[1].c_str()};
  int holds = 0;
  check(hl_affine_check(p.get(), lin, tr, &holds));
  std::cout << (holds ? "holds" : "fails") << ": Hess((f o T) / J) " << (holds ? "==" : "!=") << " (Hess f) o T\n";
  return holds ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hessian curves of graphs of polynomial and rational functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hl_version()));

  FamilyFlags flags;
  hl_verify_options options;
  hl_verify_options_default(&options);
  std::string json_path, svg_path, csv_path, poly, bbox, point, linear, translation;
  bool hessian = false;
  bool timings = false;

  auto* family_cmd = app.add_subcommand("family", "Print the expanded function of a family instance");
  add_family_flags(family_cmd, flags);
  family_cmd->add_flag("--hessian", hessian, "Also print the polynomial of the Hessian curve");
  family_cmd->add_option("--json", json_path, "Write the instance as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Certify a theorem on a family instance");
  std::string theorem;
  verify_cmd->add_option("theorem", theorem, "theorem1, theorem2 or theorem3")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "theorem3"}));
  add_family_flags(verify_cmd, flags);
  verify_cmd->add_option("--json", json_path, "Write the report as JSON");
  verify_cmd->add_flag("--timings", timings, "Include timings in the JSON report");
  verify_cmd->add_option("--resolution", options.resolution, "Base tracing resolution")->check(CLI::Range(16, 4096));
  verify_cmd->add_option("--max-depth", options.max_depth, "Saddle subdivision depth")->check(CLI::Range(0, 10));
  verify_cmd->add_option("--seed", options.seed, "Seed for sampled claims");
  verify_cmd->add_option("--samples", options.samples, "Points per sampled claim")->check(CLI::Range(1, 1000));
  verify_cmd->add_option("--threads", options.threads, "Worker threads (0: auto)")->check(CLI::Range(0, 64));

  int resolution = 128;
  int max_depth = 6;
  int threads = 0;
  auto* trace_cmd = app.add_subcommand("trace", "Trace a Hessian curve or any polynomial curve");
  add_family_flags(trace_cmd, flags);
  trace_cmd->add_option("--poly", poly, "Trace {P = 0} for this polynomial instead");
  trace_cmd->add_option("--bbox", bbox, "xmin,xmax,ymin,ymax for --poly");
  trace_cmd->add_option("--resolution", resolution, "Grid resolution")->check(CLI::Range(16, 4096));
  trace_cmd->add_option("--max-depth", max_depth, "Saddle subdivision depth")->check(CLI::Range(0, 10));
  trace_cmd->add_option("--threads", threads, "Worker threads (0: auto)")->check(CLI::Range(0, 64));
  trace_cmd->add_option("--svg", svg_path, "Write an SVG plot");
  trace_cmd->add_option("--csv", csv_path, "Write polyline vertices as CSV");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a point of the graph");
  add_family_flags(classify_cmd, flags);
  classify_cmd->add_option("--poly", poly, "Classify on the graph of this polynomial instead");
  classify_cmd->add_option("--point", point, "x,y as rationals")->required();

  auto* affine_cmd = app.add_subcommand("affine-check", "Check Hess((f o T)/J) = (Hess f) o T exactly");
  affine_cmd->add_option("--poly", poly, "The polynomial f")->required();
  affine_cmd->add_option("--linear", linear, "a11,a12,a21,a22")->required();
  affine_cmd->add_option("--translation", translation, "t1,t2 (default 0,0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*family_cmd) return run_family(flags, hessian, json_path);
    if (*verify_cmd) return run_verify(theorem, flags, options, json_path, timings);
    if (*trace_cmd) return run_trace(flags, poly, bbox, resolution, max_depth, threads, svg_path, csv_path);
    if (*classify_cmd) return run_classify(flags, poly, point);
    if (*affine_cmd) return run_affine(poly, linear, translation);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    if (e.exit_code == kExitUsage) std::cerr << "run with --help for usage\n";
    return e.exit_code;
  }
  return kExitUsage;
}
