#include "epvote/ep_method.hpp"

#include <algorithm>
#include <set>

#include "epvote/errors.hpp"

namespace epvote {

Rational reduction_factor(const Rational& w_star, const Rational& q,
                          ReductionRule rule) {
    if (sgn(w_star) <= 0) throw NonPositiveSupport("support must be positive");
    if (sgn(q) <= 0) throw BadRange("quota must be positive");
    switch (rule) {
        case ReductionRule::Exact:
            if (w_star < q) return Rational(0);
            return 1 - q / w_star;
        case ReductionRule::SimpleFractions:
            return 1 - 1 / ceil_rational(w_star / q);
        case ReductionRule::NegativeAllowed:
            return 1 - q / w_star;
    }
    throw BadRange("unknown reduction rule");
}

namespace {

// Shared stepping core for allocate() and enumerate_allocations().
struct Engine {
    const Profile* profile = nullptr;
    int n = 0;
    EpConfig config;
    Rational v0;

    std::vector<Rational> weights;  // v_k[s]
    std::vector<int> seats;
    std::vector<bool> eligible;
    Rational v_current;
    int s = 0;

    void init(const Profile& p, int seats_wanted, const EpConfig& cfg) {
        if (seats_wanted < 1) throw ZeroSeats("need at least one seat");
        if (cfg.threshold_alpha < 0 || cfg.threshold_alpha > 1)
            throw BadRange("threshold must lie in [0,1]");
        if (cfg.zero_empty_ballots &&
            cfg.quota_rule.kind != QuotaRule::Kind::UpdatedPerStep)
            throw BadRange("zeroing exhausted ballots requires the updated quota");

        profile = &p;
        n = seats_wanted;
        config = cfg;
        v0 = p.total_votes();
        weights.clear();
        for (const BallotType& b : p.ballots()) weights.push_back(b.weight);
        seats.assign(p.candidate_count(), 0);
        eligible.assign(p.candidate_count(), true);
        v_current = v0;
        s = 0;

        long claimable = 0;
        std::vector<Rational> w = supports();
        for (int i = 0; i < p.candidate_count(); ++i) {
            if (sgn(w[i]) <= 0) continue;
            const auto& cap = p.candidates()[i].capacity;
            claimable += cap ? std::min((long)*cap, (long)n) : (long)n;
        }
        if (claimable < n)
            throw InsufficientCandidates(
                "supported candidates can absorb fewer than n seats");
    }

    std::vector<Rational> supports() const {
        std::vector<Rational> w(profile->candidate_count(), Rational(0));
        const auto& ballots = profile->ballots();
        for (size_t k = 0; k < ballots.size(); ++k)
            for (int id : ballots[k].approvals) w[id] += weights[k];
        return w;
    }

    // All eligible candidates sharing the maximum support, declaration order.
    std::vector<int> leaders(const std::vector<Rational>& w) const {
        std::vector<int> ids;
        for (int i = 0; i < (int)w.size(); ++i) {
            if (!eligible[i]) continue;
            if (ids.empty() || w[i] > w[ids.front()])
                ids.assign(1, i);
            else if (w[i] == w[ids.front()])
                ids.push_back(i);
        }
        return ids;
    }

    Rational step_quota() const {
        return quota_value(config.quota_rule, v0, n, s, v_current);
    }

    // Applies the seat for `chosen`; fills `record` when given.
    void apply(int chosen, const std::vector<Rational>& w, const Rational& q,
               StepRecord* record) {
        const Rational& w_star = w[chosen];
        Rational factor, r;
        bool exhausted = false;
        switch (config.reduction_rule) {
            case ReductionRule::Exact:
                if (w_star >= q) {
                    factor = 1 - q / w_star;
                    r = w_star / q;
                } else {
                    factor = 0;
                    r = 1;
                    exhausted = true;
                }
                break;
            case ReductionRule::SimpleFractions:
                r = ceil_rational(w_star / q);
                factor = 1 - 1 / r;
                exhausted = w_star < q;
                break;
            case ReductionRule::NegativeAllowed:
                factor = 1 - q / w_star;
                r = w_star / q;
                break;
        }

        seats[chosen] += 1;
        const auto& cap = (*profile).candidates()[chosen].capacity;
        if (cap && seats[chosen] >= *cap) eligible[chosen] = false;

        const auto& ballots = profile->ballots();
        for (size_t k = 0; k < ballots.size(); ++k) {
            const CandidateSet& a = ballots[k].approvals;
            if (!std::binary_search(a.begin(), a.end(), chosen)) continue;
            if (config.zero_empty_ballots &&
                std::none_of(a.begin(), a.end(), [&](int id) { return eligible[id]; })) {
                weights[k] = 0;
            } else if (sgn(factor) == 0) {
                weights[k] = 0;
            } else {
                weights[k] *= factor;
            }
        }
        v_current = 0;
        for (const Rational& wk : weights) v_current += wk;

        if (record) {
            record->s = s;
            record->chosen = chosen;
            record->support_before = w_star;
            record->quota_used = q;
            record->reduction_factor = factor;
            record->reduction_denominator = r;
            record->exhausted = exhausted;
            record->supports_snapshot = w;
            record->residual_weights = weights;
        }
        s += 1;
    }
};

}  // namespace

AllocationTrace allocate(const Profile& profile, int n, const EpConfig& config) {
    Engine engine;
    engine.init(profile, n, config);

    AllocationTrace trace;
    trace.config = config;
    trace.n = n;
    trace.initial_quota = quota_value(config.quota_rule, engine.v0, n, 0, engine.v0);
    trace.status = AllocationStatus::Completed;

    while (engine.s < n) {
        std::vector<Rational> w = engine.supports();
        std::vector<int> lead = engine.leaders(w);
        if (lead.empty() || sgn(w[lead.front()]) <= 0) {
            trace.status = AllocationStatus::Underfilled;
            trace.stopped_at = engine.s;
            trace.final_supports = std::move(w);
            break;
        }
        Rational q = engine.step_quota();
        if (sgn(config.threshold_alpha) > 0 &&
            w[lead.front()] < config.threshold_alpha * q) {
            trace.status = AllocationStatus::StoppedByThreshold;
            trace.stopped_at = engine.s;
            trace.final_supports = std::move(w);
            break;
        }
        StepRecord record;
        engine.apply(lead.front(), w, q, &record);
        trace.steps.push_back(std::move(record));
        trace.elected.push_back(lead.front());
    }
    if (trace.status == AllocationStatus::Completed)
        trace.final_supports = engine.supports();
    trace.seats = std::move(engine.seats);
    return trace;
}

namespace {

void enumerate_from(Engine engine, std::vector<int> elected, long& opened,
                    long cap, std::set<std::pair<std::vector<int>, std::vector<int>>>& seen,
                    std::vector<AllocationOutcome>& out) {
    while (engine.s < engine.n) {
        std::vector<Rational> w = engine.supports();
        std::vector<int> lead = engine.leaders(w);
        AllocationStatus halt = AllocationStatus::Completed;
        if (lead.empty() || sgn(w[lead.front()]) <= 0)
            halt = AllocationStatus::Underfilled;
        else if (sgn(engine.config.threshold_alpha) > 0 &&
                 w[lead.front()] < engine.config.threshold_alpha * engine.step_quota())
            halt = AllocationStatus::StoppedByThreshold;
        if (halt != AllocationStatus::Completed) {
            if (seen.emplace(elected, engine.seats).second)
                out.push_back({std::move(elected), engine.seats, halt});
            return;
        }

        if (lead.size() > 1) {
            opened += (long)lead.size() - 1;
            if (opened > cap)
                throw BranchCapExceeded("more than " + std::to_string(cap) +
                                        " tie branches");
            Rational q = engine.step_quota();
            for (int choice : lead) {
                Engine branch = engine;
                std::vector<int> path = elected;
                branch.apply(choice, w, q, nullptr);
                path.push_back(choice);
                enumerate_from(std::move(branch), std::move(path), opened, cap,
                               seen, out);
            }
            return;
        }
        engine.apply(lead.front(), w, engine.step_quota(), nullptr);
        elected.push_back(lead.front());
    }
    if (seen.emplace(elected, engine.seats).second)
        out.push_back({std::move(elected), engine.seats, AllocationStatus::Completed});
}

}  // namespace

std::vector<AllocationOutcome> enumerate_allocations(const Profile& profile, int n,
                                                     const EpConfig& config,
                                                     long branch_cap) {
    if (branch_cap < 1) throw BadRange("branch cap must be at least 1");
    Engine engine;
    engine.init(profile, n, config);
    long opened = 1;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<AllocationOutcome> out;
    enumerate_from(std::move(engine), {}, opened, branch_cap, seen, out);
    std::sort(out.begin(), out.end(),
              [](const AllocationOutcome& a, const AllocationOutcome& b) {
                  return a.elected < b.elected;
              });
    return out;
}

}  // namespace epvote
