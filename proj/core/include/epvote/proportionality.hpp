#pragma once

#include <vector>

#include "epvote/ep_method.hpp"
#include "epvote/profile.hpp"

namespace epvote {

enum class GuaranteeKind {
    QuotaThreshold,  // exact-support groups: v_J > ell*q  =>  n_J >= ell
    JointThreshold,  // joint-support groups: y_J > ell*q  =>  n_{J*} >= ell
    Majority,        // v_J beyond half the votes => at least half the seats
};

// All checks measure against the quota q = v/(n+1) of the original profile,
// whatever produced the seats; this lets one harness audit every method.
struct TheoremReport {
    GuaranteeKind kind = GuaranteeKind::QuotaThreshold;
    CandidateSet group;         // J
    CandidateSet closure;       // J*; equals group for QuotaThreshold
    int ell = 0;                // seats the hypothesis demands
    Rational hypothesis_value;  // v_J, or y_J for JointThreshold
    Rational threshold;         // ell*q, or v/2 for Majority
    Rational quota;             // v/(n+1)
    int group_seats = 0;        // n_J
    int closure_seats = 0;      // n_{J*}
    bool applies = false;       // hypothesis met (>=, or > where strict is required)
    bool strict = false;        // hypothesis met strictly
    bool holds = true;
    // A borderline (equality) failure counts as singular when some
    // alternative tie branch of the same run satisfies the conclusion.
    bool borderline_singular = false;
    // First 1-based step whose winning support was <= quota (p) resp.
    // < quota (t); -1 when no step qualifies or no step data is available.
    int p = -1;
    int t = -1;
    // 1-based steps that elected members of the concluded-on set; filled
    // when the report does not hold, to show the shortfall.
    std::vector<int> witness_steps;
};

// Exact-support guarantee: holds = (v_J <= ell*q) or (n_J >= ell).
// Borderline equality failures trigger tie enumeration (see above).
TheoremReport check_quota_threshold(const Profile& profile, const AllocationTrace& trace,
                                    const CandidateSet& J, int ell, long branch_cap = 64);
TheoremReport check_quota_threshold(const Profile& profile, int n,
                                    const std::vector<int>& seats, const CandidateSet& J,
                                    int ell);

// Joint-support guarantee: holds = (y_J <= ell*q) or (n_{J*} >= ell).
TheoremReport check_pjr_threshold(const Profile& profile, const AllocationTrace& trace,
                                  const CandidateSet& J, int ell, long branch_cap = 64);
TheoremReport check_pjr_threshold(const Profile& profile, int n,
                                  const std::vector<int>& seats, const CandidateSet& J,
                                  int ell);

// Enumerates every nonempty subset J and every admissible ell for both
// guarantees and returns the strict-hypothesis violations only.
std::vector<TheoremReport> check_all_subsets(const Profile& profile,
                                             const AllocationTrace& trace,
                                             int max_candidates = 12);
std::vector<TheoremReport> check_all_subsets(const Profile& profile, int n,
                                             const std::vector<int>& seats,
                                             int max_candidates = 12);

// Odd n: v_J > v/2 => n_J > n/2; even n: v_J >= v/2 => n_J >= n/2;
// plus the same implication for y_J and n_{J*}. Requires the group to have
// enough capacity to take half the seats.
TheoremReport check_majority(const Profile& profile, const AllocationTrace& trace,
                             const CandidateSet& J);
TheoremReport check_majority(const Profile& profile, int n,
                             const std::vector<int>& seats, const CandidateSet& J);

// Single-approval profiles reduce to classical apportionments.
struct UninominalReport {
    bool unit_capacities = false;   // every candidate holds at most one seat
    std::vector<int> seats;         // quota-method seat vector
    std::vector<int> elected;       // quota-method elected set, sorted
    std::vector<int> expected_top;  // unit case: n most-voted candidates
    std::vector<std::vector<int>> remainder_allocations;  // unlimited case
    bool equivalent = false;
};

// Unit capacities: elected set must be the n most-voted candidates
// (declaration order breaking ties). Unlimited capacities: the seat vector
// must be one of the largest-remainders allocations at quota v/(n+1).
UninominalReport check_uninominal_equivalence(const Profile& profile, int n);

// weight moved from ballot type `ballot_index` to the same approval set
// plus the probed candidate; ballot_index -1 adds fresh ballots approving
// the probed candidate alone.
struct ApprovalDelta {
    int ballot_index = -1;
    Rational weight;
};

// The modified profile in which the probed candidate gains the approvals
// described by `deltas` and nothing else changes.
Profile apply_approval_delta(const Profile& profile, int candidate,
                             const std::vector<ApprovalDelta>& deltas);

struct MonotonicityReport {
    int candidate = -1;
    bool elected_before = false;  // in some allocation of the original profile
    bool elected_after = false;   // in some allocation of the modified profile
    bool monotone = true;         // elected_before implies elected_after
    std::vector<AllocationOutcome> before;
    std::vector<AllocationOutcome> after;
};

// Gaining approvals must never cost the candidate their seat (checked over
// all tie branches of both profiles).
MonotonicityReport probe_candidate_monotonicity(const Profile& profile, int n,
                                                const EpConfig& config, int candidate,
                                                const std::vector<ApprovalDelta>& deltas,
                                                long branch_cap = 64);

}  // namespace epvote
