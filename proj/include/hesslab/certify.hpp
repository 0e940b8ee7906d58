#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hesslab/families.hpp"
#include "hesslab/topology.hpp"

namespace hesslab {

using OrderedJson = nlohmann::ordered_json;

enum class ClaimMethod { kExact, kTraced, kSampled };

std::string to_string(ClaimMethod method);

struct Claim {
  std::string id;
  std::string description;
  OrderedJson expected;
  OrderedJson observed;
  ClaimMethod method = ClaimMethod::kExact;
  bool pass = false;
  OrderedJson witnesses = OrderedJson::array();
  std::optional<int> resolution;  // traced claims only
};

struct TheoremReport {
  std::string theorem;
  FamilySpec family;
  std::vector<Claim> claims;
  bool overall = false;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, double>> timings_ms;

  // Deterministic key order; timings omitted when include_timings is false.
  std::string to_json(bool include_timings = true) const;
};

struct VerifyOptions {
  int resolution = 128;
  int max_depth = 6;
  std::uint64_t seed = 1;
  int threads = 0;
  int samples = 20;  // sampled points per sampled claim
};

// Throws Error(kGoodPosition) carrying the witness when the arrangement is
// not in good position.
TheoremReport verify_theorem1(const OuterOvalParams& params, const VerifyOptions& options = {});
TheoremReport verify_theorem2(const EvenCircleParams& params, const VerifyOptions& options = {});
TheoremReport verify_theorem3(const OddCircleParams& params, const VerifyOptions& options = {});

// Hess((f o T) / J) == (Hess f) o T as an exact polynomial identity.
bool verify_affine_invariance(const Polynomial& f, const AffineMap2& map);

}  // namespace hesslab
