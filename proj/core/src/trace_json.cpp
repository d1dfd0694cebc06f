#include "epvote/trace_json.hpp"

#include "epvote/errors.hpp"

namespace epvote {

namespace {

Json rationals_to_json(const std::vector<Rational>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(rational_to_json(x));
    return arr;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    std::vector<Rational> xs;
    for (const auto& item : j) xs.push_back(rational_from_json(item));
    return xs;
}

std::string status_name(AllocationStatus status) {
    switch (status) {
        case AllocationStatus::Completed: return "completed";
        case AllocationStatus::StoppedByThreshold: return "stopped-by-threshold";
        case AllocationStatus::Underfilled: return "underfilled";
    }
    return "completed";
}

AllocationStatus status_from_name(const std::string& name) {
    if (name == "completed") return AllocationStatus::Completed;
    if (name == "stopped-by-threshold") return AllocationStatus::StoppedByThreshold;
    if (name == "underfilled") return AllocationStatus::Underfilled;
    throw ParseError("unknown allocation status: " + name);
}

}  // namespace

Json rational_to_json(const Rational& x) {
    return Json{{"num", x.get_num().get_str()},
                {"den", x.get_den().get_str()},
                {"approx", format_decimal(x, 6)}};
}

Rational rational_from_json(const Json& j) {
    std::string num = j.at("num").get<std::string>();
    std::string den = j.at("den").get<std::string>();
    return parse_rational(num + "/" + den);
}

Json config_to_json(const EpConfig& config) {
    Json rule;
    switch (config.quota_rule.kind) {
        case QuotaRule::Kind::Droop: rule["kind"] = "droop"; break;
        case QuotaRule::Kind::Hare: rule["kind"] = "hare"; break;
        case QuotaRule::Kind::Fixed:
            rule["kind"] = "fixed";
            rule["q"] = rational_to_json(config.quota_rule.fixed_q);
            break;
        case QuotaRule::Kind::UpdatedPerStep: rule["kind"] = "updated-per-step"; break;
    }
    std::string reduction;
    switch (config.reduction_rule) {
        case ReductionRule::Exact: reduction = "exact"; break;
        case ReductionRule::SimpleFractions: reduction = "simple-fractions"; break;
        case ReductionRule::NegativeAllowed: reduction = "negative-allowed"; break;
    }
    return Json{{"quota_rule", rule},
                {"reduction_rule", reduction},
                {"threshold_alpha", rational_to_json(config.threshold_alpha)},
                {"zero_empty_ballots", config.zero_empty_ballots}};
}

EpConfig config_from_json(const Json& j) {
    EpConfig config;
    const Json& rule = j.at("quota_rule");
    std::string kind = rule.at("kind").get<std::string>();
    if (kind == "droop")
        config.quota_rule = QuotaRule::droop();
    else if (kind == "hare")
        config.quota_rule = QuotaRule::hare();
    else if (kind == "fixed")
        config.quota_rule = QuotaRule::fixed(rational_from_json(rule.at("q")));
    else if (kind == "updated-per-step")
        config.quota_rule = QuotaRule::updated_per_step();
    else
        throw ParseError("unknown quota rule: " + kind);

    std::string reduction = j.at("reduction_rule").get<std::string>();
    if (reduction == "exact")
        config.reduction_rule = ReductionRule::Exact;
    else if (reduction == "simple-fractions")
        config.reduction_rule = ReductionRule::SimpleFractions;
    else if (reduction == "negative-allowed")
        config.reduction_rule = ReductionRule::NegativeAllowed;
    else
        throw ParseError("unknown reduction rule: " + reduction);

    config.threshold_alpha = rational_from_json(j.at("threshold_alpha"));
    config.zero_empty_ballots = j.at("zero_empty_ballots").get<bool>();
    return config;
}

Json trace_to_json(const AllocationTrace& trace) {
    Json steps = Json::array();
    for (const auto& st : trace.steps) {
        steps.push_back(Json{{"step", st.s},
                             {"chosen", st.chosen},
                             {"support_before", rational_to_json(st.support_before)},
                             {"quota_used", rational_to_json(st.quota_used)},
                             {"reduction_factor", rational_to_json(st.reduction_factor)},
                             {"reduction_denominator",
                              rational_to_json(st.reduction_denominator)},
                             {"exhausted", st.exhausted},
                             {"supports", rationals_to_json(st.supports_snapshot)},
                             {"residual_weights", rationals_to_json(st.residual_weights)}});
    }
    return Json{{"type", "allocation-trace"},
                {"config", config_to_json(trace.config)},
                {"n", trace.n},
                {"initial_quota", rational_to_json(trace.initial_quota)},
                {"steps", steps},
                {"elected", trace.elected},
                {"seats", trace.seats},
                {"status", status_name(trace.status)},
                {"stopped_at", trace.stopped_at},
                {"final_supports", rationals_to_json(trace.final_supports)}};
}

AllocationTrace trace_from_json(const Json& j) {
    try {
        AllocationTrace trace;
        trace.config = config_from_json(j.at("config"));
        trace.n = j.at("n").get<int>();
        trace.initial_quota = rational_from_json(j.at("initial_quota"));
        for (const auto& js : j.at("steps")) {
            StepRecord st;
            st.s = js.at("step").get<int>();
            st.chosen = js.at("chosen").get<int>();
            st.support_before = rational_from_json(js.at("support_before"));
            st.quota_used = rational_from_json(js.at("quota_used"));
            st.reduction_factor = rational_from_json(js.at("reduction_factor"));
            st.reduction_denominator = rational_from_json(js.at("reduction_denominator"));
            st.exhausted = js.at("exhausted").get<bool>();
            st.supports_snapshot = rationals_from_json(js.at("supports"));
            st.residual_weights = rationals_from_json(js.at("residual_weights"));
            trace.steps.push_back(std::move(st));
        }
        trace.elected = j.at("elected").get<std::vector<int>>();
        trace.seats = j.at("seats").get<std::vector<int>>();
        trace.status = status_from_name(j.at("status").get<std::string>());
        trace.stopped_at = j.at("stopped_at").get<int>();
        trace.final_supports = rationals_from_json(j.at("final_supports"));
        return trace;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed trace: ") + e.what());
    }
}

AllocationTrace trace_from_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return trace_from_json(j);
}

Json rival_trace_to_json(const RivalTrace& trace) {
    Json steps = Json::array();
    for (const auto& step : trace.step_scores) {
        Json row = Json::array();
        for (const auto& [candidate, score] : step)
            row.push_back(Json{{"candidate", candidate},
                               {"score", rational_to_json(score)}});
        steps.push_back(std::move(row));
    }
    return Json{{"type", "rival-trace"},
                {"method", trace.method},
                {"sequence", trace.sequence},
                {"step_scores", steps},
                {"seats", trace.seats}};
}

RivalTrace rival_trace_from_json(const Json& j) {
    try {
        RivalTrace trace;
        trace.method = j.at("method").get<std::string>();
        trace.sequence = j.at("sequence").get<std::vector<int>>();
        for (const auto& row : j.at("step_scores")) {
            std::vector<std::pair<int, Rational>> scores;
            for (const auto& item : row)
                scores.emplace_back(item.at("candidate").get<int>(),
                                    rational_from_json(item.at("score")));
            trace.step_scores.push_back(std::move(scores));
        }
        trace.seats = j.at("seats").get<std::vector<int>>();
        return trace;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed trace: ") + e.what());
    }
}

Json report_to_json(const TheoremReport& report) {
    std::string kind;
    switch (report.kind) {
        case GuaranteeKind::QuotaThreshold: kind = "quota-threshold"; break;
        case GuaranteeKind::JointThreshold: kind = "joint-threshold"; break;
        case GuaranteeKind::Majority: kind = "majority"; break;
    }
    return Json{{"type", "guarantee-report"},
                {"kind", kind},
                {"group", report.group},
                {"closure", report.closure},
                {"ell", report.ell},
                {"hypothesis_value", rational_to_json(report.hypothesis_value)},
                {"threshold", rational_to_json(report.threshold)},
                {"quota", rational_to_json(report.quota)},
                {"group_seats", report.group_seats},
                {"closure_seats", report.closure_seats},
                {"applies", report.applies},
                {"strict", report.strict},
                {"holds", report.holds},
                {"borderline_singular", report.borderline_singular},
                {"p", report.p},
                {"t", report.t},
                {"witness_steps", report.witness_steps}};
}

Json outcome_to_json(const AllocationOutcome& outcome) {
    std::string status = status_name(outcome.status);
    return Json{{"elected", outcome.elected},
                {"seats", outcome.seats},
                {"status", status}};
}

Json uninominal_to_json(const UninominalReport& report) {
    Json j{{"type", "uninominal-report"},
           {"unit_capacities", report.unit_capacities},
           {"seats", report.seats},
           {"elected", report.elected},
           {"equivalent", report.equivalent}};
    if (report.unit_capacities) {
        j["expected_top"] = report.expected_top;
    } else {
        Json allocations = Json::array();
        for (const auto& seats : report.remainder_allocations)
            allocations.push_back(seats);
        j["remainder_allocations"] = allocations;
    }
    return j;
}

Json monotonicity_to_json(const MonotonicityReport& report) {
    Json before = Json::array(), after = Json::array();
    for (const auto& o : report.before) before.push_back(outcome_to_json(o));
    for (const auto& o : report.after) after.push_back(outcome_to_json(o));
    return Json{{"type", "monotonicity-report"},
                {"candidate", report.candidate},
                {"elected_before", report.elected_before},
                {"elected_after", report.elected_after},
                {"monotone", report.monotone},
                {"before", before},
                {"after", after}};
}

Json sweep_sample_to_json(const SweepSample& sample) {
    return Json{{"q", rational_to_json(sample.q)},
                {"w_star_penultimate", rational_to_json(sample.w_star_penultimate)},
                {"w_star_final", rational_to_json(sample.w_star_final)},
                {"worst_deficit", rational_to_json(sample.worst_deficit)},
                {"seats", sample.seats},
                {"completed", sample.completed},
                {"any_exhausted", sample.any_exhausted},
                {"divisor_valid", sample.divisor_valid}};
}

Json divisor_search_to_json(const DivisorSearchResult& result) {
    Json j{{"type", "divisor-search"}, {"found", result.found}};
    Json intervals = Json::array();
    for (const auto& iv : result.intervals)
        intervals.push_back(Json{{"lo", rational_to_json(iv.lo)},
                                 {"hi", rational_to_json(iv.hi)},
                                 {"seats", iv.seats}});
    j["intervals"] = intervals;
    if (!result.intervals.empty())
        j["supremum"] = rational_to_json(result.supremum);
    if (!result.found)
        j["min_violation_gap"] = rational_to_json(result.min_violation_gap);
    return j;
}

Json two_party_to_json(const TwoPartyResult& result) {
    return Json{{"type", "two-party-result"},
                {"n", result.n},
                {"seats_a", result.seats_a},
                {"seats_b", result.seats_b},
                {"predicted_k", result.predicted_k},
                {"exact_limit", rational_to_json(result.exact_limit)},
                {"simulated_fraction", rational_to_json(result.simulated_fraction)},
                {"recipients", result.recipients}};
}

}  // namespace epvote
