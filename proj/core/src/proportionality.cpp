#include "epvote/proportionality.hpp"

#include <algorithm>

#include "epvote/errors.hpp"
#include "epvote/rival_methods.hpp"

namespace epvote {

namespace {

CandidateSet normalized(CandidateSet J) {
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    return J;
}

void require_known(const Profile& profile, const CandidateSet& J) {
    for (int id : J)
        if (id < 0 || id >= profile.candidate_count())
            throw UnknownCandidate("unknown candidate id " + std::to_string(id));
}

long capacity_sum(const Profile& profile, const CandidateSet& J, int n) {
    long m = 0;
    for (int id : J) {
        const auto& cap = profile.candidates()[static_cast<size_t>(id)].capacity;
        m += cap ? std::min(*cap, n) : n;
    }
    return m;
}

int seats_in(const std::vector<int>& seats, const CandidateSet& J) {
    int total = 0;
    for (int id : J) total += seats[static_cast<size_t>(id)];
    return total;
}

void fill_step_data(TheoremReport& report, const AllocationTrace& trace,
                    const CandidateSet& concluded) {
    for (size_t s = 0; s < trace.steps.size(); ++s) {
        const auto& st = trace.steps[s];
        if (report.p < 0 && st.support_before <= st.quota_used)
            report.p = static_cast<int>(s) + 1;
        if (report.t < 0 && st.support_before < st.quota_used)
            report.t = static_cast<int>(s) + 1;
    }
    if (!report.holds)
        for (size_t s = 0; s < trace.steps.size(); ++s)
            if (std::binary_search(concluded.begin(), concluded.end(),
                                   trace.steps[s].chosen))
                report.witness_steps.push_back(static_cast<int>(s) + 1);
}

// Shared body of the two guarantee checks. `trace` may be null (seats-only
// audits of other methods); it supplies step data and tie enumeration for
// borderline failures.
TheoremReport threshold_report(GuaranteeKind kind, const Profile& profile, int n,
                               const std::vector<int>& seats,
                               const AllocationTrace* trace, const CandidateSet& J_in,
                               int ell, long branch_cap) {
    if (n < 1) throw ZeroSeats("number of seats must be positive");
    if (ell < 0) throw BadRange("required seat count must be non-negative");
    CandidateSet J = normalized(J_in);
    require_known(profile, J);
    long m_J = capacity_sum(profile, J, n);
    if (ell > std::min<long>(n, m_J))
        throw EllExceedsCapacity("required seats exceed the group's capacity");

    TheoremReport report;
    report.kind = kind;
    report.group = J;
    report.ell = ell;
    report.quota = profile.total_votes() / (n + 1);
    report.threshold = ell * report.quota;
    if (kind == GuaranteeKind::QuotaThreshold) {
        report.hypothesis_value = exact_support(profile, J);
        report.closure = J;
    } else {
        report.hypothesis_value = joint_support(profile, J);
        report.closure = star_closure(profile, J);
    }
    report.group_seats = seats_in(seats, J);
    report.closure_seats = seats_in(seats, report.closure);
    const CandidateSet& concluded =
        kind == GuaranteeKind::QuotaThreshold ? report.group : report.closure;
    int concluded_seats =
        kind == GuaranteeKind::QuotaThreshold ? report.group_seats : report.closure_seats;

    report.applies = report.hypothesis_value >= report.threshold;
    report.strict = report.hypothesis_value > report.threshold;
    if (report.strict) {
        report.holds = concluded_seats >= ell;
    } else if (report.applies && concluded_seats < ell) {
        // equality case: excused only when some tie branch reaches ell
        report.holds = false;
        if (trace != nullptr) {
            auto outcomes = enumerate_allocations(profile, n, trace->config, branch_cap);
            for (const auto& outcome : outcomes)
                if (seats_in(outcome.seats, concluded) >= ell) {
                    report.holds = true;
                    report.borderline_singular = true;
                    break;
                }
        }
    } else {
        report.holds = true;
    }
    if (trace != nullptr) fill_step_data(report, *trace, concluded);
    return report;
}

}  // namespace

TheoremReport check_quota_threshold(const Profile& profile, const AllocationTrace& trace,
                                    const CandidateSet& J, int ell, long branch_cap) {
    return threshold_report(GuaranteeKind::QuotaThreshold, profile, trace.n, trace.seats,
                            &trace, J, ell, branch_cap);
}

TheoremReport check_quota_threshold(const Profile& profile, int n,
                                    const std::vector<int>& seats, const CandidateSet& J,
                                    int ell) {
    return threshold_report(GuaranteeKind::QuotaThreshold, profile, n, seats, nullptr, J,
                            ell, 0);
}

TheoremReport check_pjr_threshold(const Profile& profile, const AllocationTrace& trace,
                                  const CandidateSet& J, int ell, long branch_cap) {
    return threshold_report(GuaranteeKind::JointThreshold, profile, trace.n, trace.seats,
                            &trace, J, ell, branch_cap);
}

TheoremReport check_pjr_threshold(const Profile& profile, int n,
                                  const std::vector<int>& seats, const CandidateSet& J,
                                  int ell) {
    return threshold_report(GuaranteeKind::JointThreshold, profile, n, seats, nullptr, J,
                            ell, 0);
}

namespace {

std::vector<TheoremReport> strict_violations(const Profile& profile, int n,
                                             const std::vector<int>& seats,
                                             const AllocationTrace* trace,
                                             int max_candidates) {
    if (n < 1) throw ZeroSeats("number of seats must be positive");
    int m = profile.candidate_count();
    if (m > max_candidates)
        throw TooManyCandidates("subset audit limited to " +
                                std::to_string(max_candidates) + " candidates");

    Rational q = profile.total_votes() / (n + 1);
    std::vector<TheoremReport> violations;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        CandidateSet J;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) J.push_back(i);
        long m_J = capacity_sum(profile, J, n);
        int max_ell = static_cast<int>(std::min<long>(n, m_J));

        Rational v_J = exact_support(profile, J);
        Rational y_J = joint_support(profile, J);
        if (y_J == 0) continue;  // implies v_J == 0: no hypothesis can be strict
        int n_J = seats_in(seats, J);
        CandidateSet closure = star_closure(profile, J);
        int n_closure = seats_in(seats, closure);

        for (int ell = 1; ell <= max_ell; ++ell) {
            Rational bar = ell * q;
            if (v_J > bar && n_J < ell)
                violations.push_back(
                    threshold_report(GuaranteeKind::QuotaThreshold, profile, n, seats,
                                     trace, J, ell, 1));
            if (y_J > bar && n_closure < ell)
                violations.push_back(
                    threshold_report(GuaranteeKind::JointThreshold, profile, n, seats,
                                     trace, J, ell, 1));
        }
    }
    return violations;
}

}  // namespace

std::vector<TheoremReport> check_all_subsets(const Profile& profile,
                                             const AllocationTrace& trace,
                                             int max_candidates) {
    return strict_violations(profile, trace.n, trace.seats, &trace, max_candidates);
}

std::vector<TheoremReport> check_all_subsets(const Profile& profile, int n,
                                             const std::vector<int>& seats,
                                             int max_candidates) {
    return strict_violations(profile, n, seats, nullptr, max_candidates);
}

namespace {

TheoremReport majority_report(const Profile& profile, int n,
                              const std::vector<int>& seats,
                              const AllocationTrace* trace, const CandidateSet& J_in) {
    if (n < 1) throw ZeroSeats("number of seats must be positive");
    CandidateSet J = normalized(J_in);
    require_known(profile, J);
    int required = (n % 2 == 1) ? (n + 1) / 2 : n / 2;
    if (capacity_sum(profile, J, n) < required)
        throw EllExceedsCapacity("group cannot hold half the seats");

    TheoremReport report;
    report.kind = GuaranteeKind::Majority;
    report.group = J;
    report.closure = star_closure(profile, J);
    report.ell = required;
    report.quota = profile.total_votes() / (n + 1);
    report.threshold = profile.total_votes() / 2;
    report.hypothesis_value = exact_support(profile, J);
    report.group_seats = seats_in(seats, J);
    report.closure_seats = seats_in(seats, report.closure);

    Rational y_J = joint_support(profile, J);
    bool odd = n % 2 == 1;
    bool exact_applies = odd ? report.hypothesis_value > report.threshold
                             : report.hypothesis_value >= report.threshold;
    bool joint_applies = odd ? y_J > report.threshold : y_J >= report.threshold;
    report.applies = exact_applies || joint_applies;
    report.strict = report.hypothesis_value > report.threshold;
    bool exact_ok = !exact_applies || report.group_seats >= required;
    bool joint_ok = !joint_applies || report.closure_seats >= required;
    report.holds = exact_ok && joint_ok;
    if (trace != nullptr)
        fill_step_data(report, *trace, exact_ok ? report.closure : report.group);
    return report;
}

}  // namespace

TheoremReport check_majority(const Profile& profile, const AllocationTrace& trace,
                             const CandidateSet& J) {
    return majority_report(profile, trace.n, trace.seats, &trace, J);
}

TheoremReport check_majority(const Profile& profile, int n,
                             const std::vector<int>& seats, const CandidateSet& J) {
    return majority_report(profile, n, seats, nullptr, J);
}

UninominalReport check_uninominal_equivalence(const Profile& profile, int n) {
    for (const auto& b : profile.ballots())
        if (b.approvals.size() != 1)
            throw NotUninominal("every ballot must approve exactly one candidate");

    bool all_unit = true, all_unlimited = true;
    for (const auto& c : profile.candidates()) {
        if (c.capacity) {
            all_unlimited = false;
            if (*c.capacity != 1) all_unit = false;
        } else {
            all_unit = false;
        }
    }
    if (!all_unit && !all_unlimited)
        throw BadRange("capacities must be all unit or all unlimited");

    auto votes = approval_supports(profile);
    auto trace = allocate(profile, n, EpConfig{QuotaRule::droop()});

    UninominalReport report;
    report.unit_capacities = all_unit;
    report.seats = trace.seats;
    report.elected = trace.elected;
    std::sort(report.elected.begin(), report.elected.end());

    if (all_unit) {
        std::vector<int> order(votes.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return votes[a] > votes[b]; });
        report.expected_top.assign(order.begin(), order.begin() + n);
        std::sort(report.expected_top.begin(), report.expected_top.end());
        report.equivalent = report.elected == report.expected_top;
    } else {
        report.remainder_allocations =
            largest_remainders(votes, n, profile.total_votes() / (n + 1));
        report.equivalent =
            std::find(report.remainder_allocations.begin(),
                      report.remainder_allocations.end(),
                      report.seats) != report.remainder_allocations.end();
    }
    return report;
}

Profile apply_approval_delta(const Profile& profile, int candidate,
                             const std::vector<ApprovalDelta>& deltas) {
    if (candidate < 0 || candidate >= profile.candidate_count())
        throw UnknownCandidate("unknown candidate id " + std::to_string(candidate));

    std::vector<std::pair<CandidateSet, Rational>> raw;
    raw.reserve(profile.ballots().size() + deltas.size());
    for (const auto& b : profile.ballots()) raw.emplace_back(b.approvals, b.weight);
    size_t original = raw.size();

    for (const auto& d : deltas) {
        if (d.weight < 0) throw IllegalModification("negative weight in delta");
        if (d.weight == 0) continue;
        if (d.ballot_index < 0) {
            raw.emplace_back(CandidateSet{candidate}, d.weight);
            continue;
        }
        size_t k = static_cast<size_t>(d.ballot_index);
        if (k >= original) throw IllegalModification("no such ballot type");
        if (std::binary_search(raw[k].first.begin(), raw[k].first.end(), candidate))
            throw IllegalModification("ballot type already approves the candidate");
        if (d.weight > raw[k].second)
            throw IllegalModification("more weight than the ballot type carries");
        raw[k].second -= d.weight;
        CandidateSet grown = raw[k].first;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), candidate), candidate);
        raw.emplace_back(std::move(grown), d.weight);
    }
    return aggregate(profile.candidates(), raw);
}

MonotonicityReport probe_candidate_monotonicity(const Profile& profile, int n,
                                                const EpConfig& config, int candidate,
                                                const std::vector<ApprovalDelta>& deltas,
                                                long branch_cap) {
    MonotonicityReport report;
    report.candidate = candidate;
    Profile modified = apply_approval_delta(profile, candidate, deltas);
    report.before = enumerate_allocations(profile, n, config, branch_cap);
    report.after = enumerate_allocations(modified, n, config, branch_cap);

    auto contains = [&](const std::vector<AllocationOutcome>& outcomes) {
        for (const auto& o : outcomes)
            if (std::find(o.elected.begin(), o.elected.end(), candidate) !=
                o.elected.end())
                return true;
        return false;
    };
    report.elected_before = contains(report.before);
    report.elected_after = contains(report.after);
    report.monotone = !report.elected_before || report.elected_after;
    return report;
}

}  // namespace epvote
