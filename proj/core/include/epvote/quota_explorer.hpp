#pragma once

#include <string>
#include <vector>

#include "epvote/ep_method.hpp"
#include "epvote/profile.hpp"

namespace epvote {

// One fixed-quota evaluation. A quota behaves like a divisor when the run
// completes with every seat paid in full (no exhausted step) and
// w*[n-1] >= q >= w*[n]: the last seat was still worth a quota and no
// remaining candidate is owed one.
struct SweepSample {
    Rational q;
    Rational w_star_penultimate;  // winning support at the last seat
    Rational w_star_final;        // best remaining support afterwards
    Rational worst_deficit;       // largest unpaid part of any seat's quota
    std::vector<int> seats;       // allocation label
    bool completed = false;
    bool any_exhausted = false;
    bool divisor_valid = false;
};

// Compact allocation label for CSV rows and plots: seat counts joined as
// "<count><candidate>" in descending seat order (declaration order on ties),
// zero-seat candidates omitted; "-" when nobody holds a seat.
std::string allocation_label(const Profile& profile, const std::vector<int>& seats);

// allocate() with the Exact rule at externally fixed quota q.
AllocationTrace run_fixed_quota(const Profile& profile, int n, const Rational& q);

// Largest support among candidates that could still take a seat after the
// run (0 when none can).
Rational max_remaining_support(const Profile& profile, const AllocationTrace& trace);

SweepSample evaluate_quota(const Profile& profile, int n, const Rational& q);

// Evenly spaced samples over [q_lo, q_hi], ordered by q. A single-sample
// sweep requires q_lo == q_hi.
std::vector<SweepSample> sweep(const Profile& profile, int n, const Rational& q_lo,
                               const Rational& q_hi, int steps);

struct QuotaInterval {
    Rational lo;
    Rational hi;
    std::vector<int> seats;  // allocation label across the interval
};

struct DivisorSearchResult {
    bool found = false;
    // maximal valid intervals, ascending in q, split at label changes;
    // endpoints are exact sample points of the `resolution` grid
    std::vector<QuotaInterval> intervals;
    Rational supremum;           // largest valid q found (when intervals exist)
    Rational min_violation_gap;  // smallest observed shortfall when !found
};

// Scans [q_lo, q_hi] on a grid of spacing `resolution` (exact arithmetic at
// every sample), merging consecutive valid samples into intervals and
// splitting where the allocation label changes.
//
// `found` asks for more than a valid sample: a quota counts as a divisor
// quota only where the last seat's support meets the quota exactly
// (w*[n-1] == q at some sampled point), the "as large as possible" reading.
// A valid stretch whose last-seat support jumps from above the quota to an
// exhausted run without ever touching it is reported with found == false:
// its intervals are still listed, and min_violation_gap measures the
// closest approach. When no sample is valid at all, min_violation_gap is
// the smallest Eq-34 shortfall instead. No symbolic root-finding happens:
// equality is only detected at sampled rationals.
DivisorSearchResult find_divisor_quota(const Profile& profile, int n,
                                       const Rational& q_lo, const Rational& q_hi,
                                       const Rational& resolution);

// The search range that can possibly contain divisor-like quotas: above
// v/n some step must go unpaid.
std::pair<Rational, Rational> default_quota_range(const Profile& profile, int n);

}  // namespace epvote
