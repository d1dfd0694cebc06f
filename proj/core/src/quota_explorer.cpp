#include "epvote/quota_explorer.hpp"

#include <algorithm>

#include "epvote/errors.hpp"

namespace epvote {

std::string allocation_label(const Profile& profile, const std::vector<int>& seats) {
    std::vector<int> holders;
    for (int i = 0; i < profile.candidate_count(); ++i)
        if (i < (int)seats.size() && seats[i] > 0) holders.push_back(i);
    std::stable_sort(holders.begin(), holders.end(),
                     [&](int a, int b) { return seats[a] > seats[b]; });
    if (holders.empty()) return "-";
    std::string out;
    for (int id : holders) {
        if (!out.empty()) out += ",";
        out += std::to_string(seats[id]) + profile.label(id);
    }
    return out;
}

AllocationTrace run_fixed_quota(const Profile& profile, int n, const Rational& q) {
    EpConfig config;
    config.quota_rule = QuotaRule::fixed(q);
    return allocate(profile, n, config);
}

Rational max_remaining_support(const Profile& profile, const AllocationTrace& trace) {
    Rational best(0);
    for (size_t i = 0; i < trace.final_supports.size(); ++i) {
        const auto& cap = profile.candidates()[i].capacity;
        bool eligible = !cap || trace.seats[i] < *cap;
        if (eligible && trace.final_supports[i] > best)
            best = trace.final_supports[i];
    }
    return best;
}

SweepSample evaluate_quota(const Profile& profile, int n, const Rational& q) {
    AllocationTrace trace = run_fixed_quota(profile, n, q);
    SweepSample sample;
    sample.q = q;
    sample.seats = trace.seats;
    sample.completed = trace.status == AllocationStatus::Completed;
    for (const auto& step : trace.steps)
        if (step.exhausted) sample.any_exhausted = true;
    if (!trace.steps.empty())
        sample.w_star_penultimate = trace.steps.back().support_before;
    for (const auto& step : trace.steps)
        if (step.exhausted && step.quota_used - step.support_before > sample.worst_deficit)
            sample.worst_deficit = step.quota_used - step.support_before;
    sample.w_star_final = max_remaining_support(profile, trace);
    sample.divisor_valid = sample.completed && !sample.any_exhausted &&
                           sample.w_star_penultimate >= q && q >= sample.w_star_final;
    return sample;
}

std::vector<SweepSample> sweep(const Profile& profile, int n, const Rational& q_lo,
                               const Rational& q_hi, int steps) {
    if (q_lo <= 0) throw BadRange("quota must be positive");
    if (q_lo > q_hi) throw BadRange("empty quota range");
    if (steps < 1 || (steps == 1 && q_lo != q_hi) || (steps >= 2 && q_lo == q_hi))
        throw BadRange("sample count does not fit the quota range");

    std::vector<SweepSample> samples;
    samples.reserve(static_cast<size_t>(steps));
    for (int j = 0; j < steps; ++j) {
        Rational q = steps == 1 ? q_lo : q_lo + (q_hi - q_lo) * j / (steps - 1);
        samples.push_back(evaluate_quota(profile, n, q));
    }
    return samples;
}

DivisorSearchResult find_divisor_quota(const Profile& profile, int n,
                                       const Rational& q_lo, const Rational& q_hi,
                                       const Rational& resolution) {
    if (q_lo <= 0) throw BadRange("quota must be positive");
    if (q_lo >= q_hi) throw BadRange("empty quota range");
    if (resolution <= 0) throw BadRange("resolution must be positive");

    // grid q_lo, q_lo+res, ..., capped by q_hi (always included)
    std::vector<SweepSample> samples;
    for (Rational q = q_lo; q < q_hi; q += resolution)
        samples.push_back(evaluate_quota(profile, n, q));
    samples.push_back(evaluate_quota(profile, n, q_hi));

    DivisorSearchResult result;
    bool any_valid = false;
    for (const auto& s : samples) {
        if (!s.divisor_valid) continue;
        any_valid = true;
        // the quota is exactly the last seat's support: the diagonal is attained
        if (s.w_star_penultimate == s.q) result.found = true;
    }

    // build maximal intervals, splitting at allocation-label changes
    size_t i = 0;
    while (i < samples.size()) {
        if (!samples[i].divisor_valid) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j + 1 < samples.size() && samples[j + 1].divisor_valid &&
               samples[j + 1].seats == samples[i].seats)
            ++j;
        result.intervals.push_back({samples[i].q, samples[j].q, samples[i].seats});
        i = j + 1;
    }
    if (any_valid) result.supremum = result.intervals.back().hi;
    if (!result.found) {
        // distance from the diagonal: over valid samples, how far the last
        // seat's support sat above the quota; with no valid sample, the
        // smallest shortfall from the validity conditions themselves
        bool have_gap = false;
        for (const auto& s : samples) {
            Rational gap;
            if (any_valid) {
                if (!s.divisor_valid) continue;
                gap = s.w_star_penultimate - s.q;
            } else {
                gap = s.worst_deficit;
                Rational under = s.q - s.w_star_penultimate;
                Rational over = s.w_star_final - s.q;
                if (under > gap) gap = under;
                if (over > gap) gap = over;
            }
            if (!have_gap || gap < result.min_violation_gap) {
                result.min_violation_gap = gap;
                have_gap = true;
            }
        }
    }
    return result;
}

std::pair<Rational, Rational> default_quota_range(const Profile& profile, int n) {
    if (n < 1) throw ZeroSeats("number of seats must be positive");
    Rational hi = profile.total_votes() / n;
    return {hi / 1000, hi};
}

}  // namespace epvote
