#ifndef EARPACK_JSON_IO_H_
#define EARPACK_JSON_IO_H_

#include <string>
#include <string_view>

#include <json.hpp>

#include "earpack/connectivity.h"
#include "earpack/constructions.h"
#include "earpack/ears.h"
#include "earpack/harness.h"
#include "earpack/matching.h"

namespace earpack {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kVersion = "0.1.0";

// Pretty-printed with two-space indent and a trailing newline.
std::string dump_json(const Json& j);

// kInfinity becomes the string "inf".
Json int_or_inf(long long value);

Json matching_json(const Matching& m);
// Accepts [[u, v], ...]; throws std::invalid_argument on any other shape.
Matching matching_from_json(const Json& j);
// "u-v,u-v,..." with 0-based indices; the empty string is the empty matching.
Matching parse_matching_text(std::string_view text);

Json barrier_json(const BarrierCertificate& cert);
BarrierCertificate barrier_from_json(const Json& j);

Json cut_json(const CutCertificate& cert);
Json connectivity_json(const ConnectivityValue& value);
// {"value": n | "inf" | "unknown", "upper_bound": ...}
Json estimate_json(const ConnectivityEstimate& estimate);

Json ear_json(const Ear& ear);
Json packing_json(const EarPacking& packing);
EarPacking packing_from_json(const Json& j);

Json extension_json(const ExtensionResult& result);
Json hypothesis_json(const HypothesisReport& report);
Json verdict_json(const TheoremVerdict& verdict);
Json lemma10_json(const Lemma10Result& result);
Json claims_json(const ClaimReport& report);
Json sweep_json(const SweepSummary& summary);

Json expectation_json(const Expectation& e);
Json expectations_json(const ExpectationReport& report);
Expectation expectation_from_json(const Json& j);
// {"family", "parameters", "r", "matching", "names", "expectations"} plus the
// designated sets the expectations refer to.
Json construction_sidecar_json(const ConstructionOutput& out);
// Inverse of the above for a given graph. Throws std::invalid_argument on a
// malformed sidecar.
ConstructionOutput construction_from_sidecar(const Graph& g, const Json& j);

}  // namespace earpack

#endif  // EARPACK_JSON_IO_H_
