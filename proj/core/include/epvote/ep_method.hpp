#pragma once

#include <vector>

#include "epvote/profile.hpp"

namespace epvote {

// Exact: supporters scale by 1 - q/w* when w* >= q, zero out below quota.
// SimpleFractions: supporters scale by 1 - 1/ceil(w*/q).
// NegativeAllowed: 1 - q/w* applied unconditionally; weights may go negative.
enum class ReductionRule { Exact, SimpleFractions, NegativeAllowed };

struct EpConfig {
    QuotaRule quota_rule{};
    ReductionRule reduction_rule = ReductionRule::Exact;
    Rational threshold_alpha{0};    // stop when w*/q < alpha; 0 disables
    bool zero_empty_ballots = false;  // only valid with UpdatedPerStep

    friend bool operator==(const EpConfig& a, const EpConfig& b) {
        return a.quota_rule == b.quota_rule && a.reduction_rule == b.reduction_rule &&
               a.threshold_alpha == b.threshold_alpha &&
               a.zero_empty_ballots == b.zero_empty_ballots;
    }
};

struct StepRecord {
    int s = 0;
    int chosen = -1;
    Rational support_before;        // w*[s]
    Rational quota_used;            // quota in force at this step
    Rational reduction_factor;      // multiplier applied to supporting types
    Rational reduction_denominator; // r: supporters lose 1/r of their value
    bool exhausted = false;         // w*[s] < q branch (all supporters consumed)
    std::vector<Rational> supports_snapshot;  // w_i[s] per candidate id
    std::vector<Rational> residual_weights;   // v_k[s+1] per ballot type
};

enum class AllocationStatus { Completed, StoppedByThreshold, Underfilled };

struct AllocationTrace {
    EpConfig config;
    int n = 0;
    Rational initial_quota;
    std::vector<StepRecord> steps;
    std::vector<int> elected;        // chosen candidate per step
    std::vector<int> seats;          // n_i per candidate id
    AllocationStatus status = AllocationStatus::Completed;
    int stopped_at = -1;             // step index for non-Completed statuses
    std::vector<Rational> final_supports;  // w_i after the last applied step
};

// Runs the sequential quota method: each step elects the eligible candidate
// with maximum support (declaration-order tie-break) and reduces supporting
// ballots per the configured rule.
AllocationTrace allocate(const Profile& profile, int n, const EpConfig& config);

Rational reduction_factor(const Rational& w_star, const Rational& q,
                          ReductionRule rule);

struct AllocationOutcome {
    std::vector<int> elected;
    std::vector<int> seats;
    AllocationStatus status = AllocationStatus::Completed;

    friend bool operator==(const AllocationOutcome& a, const AllocationOutcome& b) {
        return a.elected == b.elected && a.seats == b.seats && a.status == b.status;
    }
};

// Depth-first branching over every exact support tie; outcomes are distinct
// (elected sequence, seat map) pairs sorted by sequence. Throws
// BranchCapExceeded once more than branch_cap branches have been opened.
std::vector<AllocationOutcome> enumerate_allocations(const Profile& profile, int n,
                                                     const EpConfig& config,
                                                     long branch_cap);

}  // namespace epvote
