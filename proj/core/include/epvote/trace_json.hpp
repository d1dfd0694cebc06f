#pragma once

#include <string>

#include "json.hpp"

#include "epvote/asymptotics.hpp"
#include "epvote/ep_method.hpp"
#include "epvote/proportionality.hpp"
#include "epvote/quota_explorer.hpp"
#include "epvote/rival_methods.hpp"

namespace epvote {

using Json = nlohmann::ordered_json;

// Rationals appear as {"num": "...", "den": "...", "approx": "..."} with the
// exact fields authoritative and a 6-place decimal for human reading.
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json config_to_json(const EpConfig& config);
EpConfig config_from_json(const Json& j);

Json trace_to_json(const AllocationTrace& trace);
AllocationTrace trace_from_json(const Json& j);
AllocationTrace trace_from_json_text(const std::string& text);

Json rival_trace_to_json(const RivalTrace& trace);
RivalTrace rival_trace_from_json(const Json& j);

Json report_to_json(const TheoremReport& report);
Json outcome_to_json(const AllocationOutcome& outcome);
Json uninominal_to_json(const UninominalReport& report);
Json monotonicity_to_json(const MonotonicityReport& report);
Json sweep_sample_to_json(const SweepSample& sample);
Json divisor_search_to_json(const DivisorSearchResult& result);
Json two_party_to_json(const TwoPartyResult& result);

}  // namespace epvote
