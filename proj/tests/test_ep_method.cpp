// Oracles for the sequential quota engine: hand-computed traces on the
// bundled fixtures, variant behavior, halting statuses, and tie branching.
#include <doctest.h>

#include <algorithm>
#include <set>

#include "epvote/ep_method.hpp"
#include "epvote/errors.hpp"
#include "epvote/profile_io.hpp"
#include "helpers.hpp"

using namespace epvote;
using helpers::load_fixture;
using helpers::rat;

namespace {

EpConfig droop_exact() {
    EpConfig cfg;
    cfg.quota_rule = QuotaRule::droop();
    return cfg;
}

std::vector<std::string> elected_labels(const Profile& p, const AllocationTrace& t) {
    std::vector<std::string> out;
    for (int id : t.elected) out.push_back(p.label(id));
    return out;
}

int id_of(const Profile& p, const std::string& label) {
    auto found = p.find_candidate(label);
    REQUIRE(found.has_value());
    return *found;
}

}  // namespace

TEST_SUITE("ep_method") {

TEST_CASE("nine-candidate fixture, three seats: a u x with exact step values") {
    Profile p = load_fixture("nine_candidates.profile");
    AllocationTrace t = allocate(p, 3, droop_exact());

    CHECK(t.initial_quota == rat("25"));
    CHECK(t.status == AllocationStatus::Completed);
    CHECK(elected_labels(p, t) == std::vector<std::string>{"a", "u", "x"});

    const StepRecord& s0 = t.steps[0];
    CHECK(s0.support_before == rat("43"));
    CHECK(s0.reduction_factor == rat("18/43"));
    CHECK_FALSE(s0.exhausted);

    const StepRecord& s1 = t.steps[1];
    CHECK(s1.support_before == rat("1412/43"));  // ~32.837
    CHECK(s1.supports_snapshot[id_of(p, "b")] == rat("738/43"));
    CHECK(s1.supports_snapshot[id_of(p, "e")] == rat("1213/43"));
    CHECK(s1.supports_snapshot[id_of(p, "f")] == rat("1177/43"));
    CHECK(s1.supports_snapshot[id_of(p, "v")] == rat("32"));
    CHECK(s1.supports_snapshot[id_of(p, "x")] == rat("808/43"));
    CHECK_FALSE(s1.exhausted);

    const StepRecord& s2 = t.steps[2];
    CHECK(s2.support_before == rat("808/43"));  // ~18.791, below the quota
    CHECK(s2.exhausted);
    CHECK(s2.reduction_factor == 0);

    std::vector<int> expected_seats(p.candidate_count(), 0);
    expected_seats[id_of(p, "a")] = 1;
    expected_seats[id_of(p, "u")] = 1;
    expected_seats[id_of(p, "x")] = 1;
    CHECK(t.seats == expected_seats);
}

TEST_CASE("nine-candidate fixture, four seats: a u b z; no nesting with n=3") {
    Profile p = load_fixture("nine_candidates.profile");
    AllocationTrace t3 = allocate(p, 3, droop_exact());
    AllocationTrace t4 = allocate(p, 4, droop_exact());

    CHECK(t4.initial_quota == rat("20"));
    CHECK(elected_labels(p, t4) == std::vector<std::string>{"a", "u", "b", "z"});
    CHECK(t4.steps[1].support_before == rat("1422/43"));
    CHECK(t4.steps[2].support_before == rat("943/43"));
    CHECK(t4.steps[3].support_before == rat("15"));
    CHECK(t4.steps[3].exhausted);

    std::set<int> set3(t3.elected.begin(), t3.elected.end());
    std::set<int> set4(t4.elected.begin(), t4.elected.end());
    CHECK_FALSE(std::includes(set4.begin(), set4.end(), set3.begin(), set3.end()));
}

TEST_CASE("three party lists 56/34/30, five seats: 3+1+1 with exhausted finish") {
    Profile p = load_fixture("three_party_lists.profile");
    AllocationTrace t = allocate(p, 5, droop_exact());

    CHECK(t.initial_quota == rat("20"));
    CHECK(elected_labels(p, t) ==
          std::vector<std::string>{"A", "A", "B", "C", "A"});
    CHECK(t.seats == std::vector<int>{3, 1, 1});
    CHECK(t.steps[4].support_before == rat("16"));
    CHECK(t.steps[4].exhausted);
}

TEST_CASE("capacity-bounded joint lists, seven seats: quota 115/4 and full order") {
    Profile p = load_fixture("capacity_bounded_joint.profile");
    AllocationTrace t = allocate(p, 7, droop_exact());

    CHECK(t.initial_quota == rat("115/4"));
    CHECK(elected_labels(p, t) ==
          std::vector<std::string>{"a2", "a3", "a4", "b1", "a5", "b2", "b3"});
    // Only the last seat falls short of the quota (57/2 < 115/4).
    for (int s = 0; s < 6; ++s) CHECK_FALSE(t.steps[s].exhausted);
    CHECK(t.steps[6].support_before == rat("57/2"));
    CHECK(t.steps[6].exhausted);
}

TEST_CASE("rounded-fraction reduction drops a party above quota") {
    Profile p = load_fixture("rounded_reduction_violation.profile");
    EpConfig cfg = droop_exact();
    cfg.reduction_rule = ReductionRule::SimpleFractions;
    AllocationTrace t = allocate(p, 3, cfg);

    CHECK(t.initial_quota == rat("78"));
    CHECK(elected_labels(p, t) == std::vector<std::string>{"A", "C", "A"});
    CHECK(t.seats == std::vector<int>{2, 0, 1});

    // ceil(158/78) = 3, so the whole A-support keeps 2/3 of its value.
    CHECK(t.steps[0].reduction_denominator == rat("3"));
    CHECK(t.steps[0].reduction_factor == rat("2/3"));
    CHECK(t.steps[1].reduction_denominator == rat("2"));
    // B holds 79 exact approvals (joint support 86) against a quota of 78
    // and still ends with zero seats: the over-coarse reduction at work.
    CHECK(exact_support(p, {id_of(p, "B")}) == rat("79"));
    CHECK(joint_support(p, {id_of(p, "B")}) == rat("86"));

    // The exact rule on the same profile pays B its seat.
    AllocationTrace exact = allocate(p, 3, droop_exact());
    CHECK(exact.seats[id_of(p, "B")] >= 1);
}

TEST_CASE("gaining an approval flips A,B,A to A,C,B (three-candidate overlap)") {
    Profile p = load_fixture("party_seat_drop.profile");
    AllocationTrace before = allocate(p, 3, droop_exact());
    CHECK(elected_labels(p, before) == std::vector<std::string>{"A", "B", "A"});

    // One of the three B-only voters also approves A afterwards.
    Profile q = aggregate(p.candidates(),
                          {{{id_of(p, "A")}, rat("2")},
                           {{id_of(p, "B")}, rat("2")},
                           {{id_of(p, "A"), id_of(p, "B")}, rat("1")},
                           {{id_of(p, "A"), id_of(p, "C")}, rat("5")},
                           {{id_of(p, "B"), id_of(p, "C")}, rat("2")}});
    AllocationTrace after = allocate(q, 3, droop_exact());
    CHECK(elected_labels(q, after) == std::vector<std::string>{"A", "C", "B"});
    CHECK(before.seats[id_of(p, "A")] == 2);
    CHECK(after.seats[id_of(p, "A")] == 1);
}

TEST_CASE("an extra supporter flips A,B,A to A,C,B (quota shift)") {
    Profile p = load_fixture("quota_shift_drop.profile");
    AllocationTrace before = allocate(p, 3, droop_exact());
    CHECK(elected_labels(p, before) == std::vector<std::string>{"A", "B", "A"});

    Profile q = aggregate(p.candidates(),
                          {{{id_of(p, "A")}, rat("6")},
                           {{id_of(p, "B")}, rat("3")},
                           {{id_of(p, "A"), id_of(p, "B")}, rat("3")},
                           {{id_of(p, "A"), id_of(p, "C")}, rat("8")},
                           {{id_of(p, "B"), id_of(p, "C")}, rat("7")}});
    AllocationTrace after = allocate(q, 3, droop_exact());
    CHECK(elected_labels(q, after) == std::vector<std::string>{"A", "C", "B"});
    CHECK(before.seats[id_of(p, "A")] == 2);
    CHECK(after.seats[id_of(p, "A")] == 1);
}

TEST_CASE("declaration order breaks support ties") {
    // A and C both start at 7; A is declared first and takes the seat.
    Profile p = load_fixture("party_seat_drop.profile");
    AllocationTrace t = allocate(p, 1, droop_exact());
    CHECK(p.label(t.elected[0]) == "A");
    CHECK(approval_support(p, id_of(p, "A")) == approval_support(p, id_of(p, "C")));
}

TEST_CASE("negative-weight variant lets a short seat drive weights below zero") {
    Profile p = parse_profile_string(
        "candidates: a b\n"
        "3: a\n"
        "1: b\n");
    EpConfig cfg = droop_exact();
    cfg.reduction_rule = ReductionRule::NegativeAllowed;
    AllocationTrace t = allocate(p, 2, cfg);  // quota 4/3

    CHECK(t.seats == std::vector<int>{1, 1});
    CHECK(t.steps[1].support_before == rat("1"));
    CHECK(t.steps[1].reduction_factor == rat("-1/3"));
    CHECK(t.final_supports[1] == rat("-1/3"));
    CHECK_FALSE(t.steps[1].exhausted);

    // The exact rule zeroes the same ballot instead.
    AllocationTrace e = allocate(p, 2, droop_exact());
    CHECK(e.steps[1].exhausted);
    CHECK(e.final_supports[1] == 0);
}

TEST_CASE("stop threshold halts before electing a weak seat") {
    Profile p = parse_profile_string(
        "candidates: a b\n"
        "3: a\n"
        "1: b\n");
    EpConfig cfg = droop_exact();
    cfg.threshold_alpha = rat("9/10");
    AllocationTrace t = allocate(p, 2, cfg);  // quota 4/3, second-best support 1

    CHECK(t.status == AllocationStatus::StoppedByThreshold);
    CHECK(t.stopped_at == 1);
    CHECK(t.elected.size() == 1);
    CHECK(t.seats == std::vector<int>{1, 0});

    // alpha = 3/4 tolerates the weak seat: 1 >= (3/4)(4/3).
    cfg.threshold_alpha = rat("3/4");
    AllocationTrace u = allocate(p, 2, cfg);
    CHECK(u.status == AllocationStatus::Completed);
    CHECK(u.seats == std::vector<int>{1, 1});
}

TEST_CASE("run is underfilled when an exhausted seat erases the remaining support") {
    Profile p = parse_profile_string(
        "candidates: a b\n"
        "1: a b\n");
    EpConfig cfg;
    cfg.quota_rule = QuotaRule::fixed(rat("2"));
    AllocationTrace t = allocate(p, 2, cfg);

    CHECK(t.status == AllocationStatus::Underfilled);
    CHECK(t.stopped_at == 1);
    CHECK(t.elected.size() == 1);
    CHECK(t.steps[0].exhausted);
    CHECK(t.seats == std::vector<int>{1, 0});
}

TEST_CASE("per-step quota recomputes from the remaining vote mass") {
    Profile p = parse_profile_string(
        "candidates: a b\n"
        "3: a\n"
        "1: b\n");
    EpConfig cfg;
    cfg.quota_rule = QuotaRule::updated_per_step();
    AllocationTrace t = allocate(p, 2, cfg);

    CHECK(t.steps[0].quota_used == rat("2"));   // 4/2
    CHECK(t.steps[1].quota_used == rat("2"));   // (1+1)/1
    CHECK(t.seats == std::vector<int>{1, 1});
}

TEST_CASE("zeroing spent ballots changes the per-step quota") {
    Profile p = parse_profile_string(
        "candidates: a b c\n"
        "5: a\n"
        "16/5: b\n"
        "1: c\n");
    EpConfig cfg;
    cfg.quota_rule = QuotaRule::updated_per_step();
    AllocationTrace keep = allocate(p, 2, cfg);
    cfg.zero_empty_ballots = true;
    AllocationTrace drop = allocate(p, 2, cfg);

    // After a's seat the a-only ballots hold 2/5; zeroing them shrinks the
    // remaining mass from 23/5 to 21/5 and with it the second quota.
    CHECK(keep.steps[1].quota_used == rat("23/5"));
    CHECK(drop.steps[1].quota_used == rat("21/5"));

    cfg.quota_rule = QuotaRule::droop();
    CHECK_THROWS_AS(allocate(p, 2, cfg), BadRange);
}

TEST_CASE("fixed quota equal to the Droop value reproduces the Droop run") {
    Profile p = load_fixture("rounded_reduction_violation.profile");
    EpConfig fixed;
    fixed.quota_rule = QuotaRule::fixed(rat("78"));
    AllocationTrace a = allocate(p, 3, fixed);
    AllocationTrace b = allocate(p, 3, droop_exact());
    CHECK(a.elected == b.elected);
    CHECK(a.seats == b.seats);
}

TEST_CASE("reduction_factor matches the three rules") {
    CHECK(reduction_factor(rat("43"), rat("25"), ReductionRule::Exact) == rat("18/43"));
    CHECK(reduction_factor(rat("20"), rat("25"), ReductionRule::Exact) == 0);
    CHECK(reduction_factor(rat("158"), rat("78"), ReductionRule::SimpleFractions) ==
          rat("2/3"));
    CHECK(reduction_factor(rat("20"), rat("25"), ReductionRule::SimpleFractions) == 0);
    CHECK(reduction_factor(rat("20"), rat("25"), ReductionRule::NegativeAllowed) ==
          rat("-1/4"));
    CHECK_THROWS_AS(reduction_factor(rat("0"), rat("1"), ReductionRule::Exact),
                    NonPositiveSupport);
    CHECK_THROWS_AS(reduction_factor(rat("1"), rat("0"), ReductionRule::Exact),
                    BadRange);
}

TEST_CASE("allocate input validation") {
    Profile p = parse_profile_string(
        "candidates: a b\n"
        "3: a\n"
        "1: b\n");
    CHECK_THROWS_AS(allocate(p, 0, droop_exact()), ZeroSeats);
    CHECK_THROWS_AS(allocate(p, 3, droop_exact()), InsufficientCandidates);

    EpConfig bad = droop_exact();
    bad.threshold_alpha = rat("-1/2");
    CHECK_THROWS_AS(allocate(p, 1, bad), BadRange);
    bad.threshold_alpha = rat("2");
    CHECK_THROWS_AS(allocate(p, 1, bad), BadRange);

    // Unsupported candidates do not count toward the seat capacity.
    Profile q = parse_profile_string(
        "candidates: a b\n"
        "3: a\n");
    CHECK_THROWS_AS(allocate(q, 2, droop_exact()), InsufficientCandidates);
}

TEST_CASE("tie enumeration lists every branch and respects the cap") {
    Profile p = parse_profile_string(
        "candidates: x y\n"
        "5: x\n"
        "5: y\n");
    auto outcomes = enumerate_allocations(p, 2, droop_exact(), 8);
    REQUIRE(outcomes.size() == 2);
    CHECK(outcomes[0].elected == std::vector<int>{0, 1});
    CHECK(outcomes[1].elected == std::vector<int>{1, 0});
    CHECK(outcomes[0].seats == std::vector<int>{1, 1});
    CHECK(outcomes[1].seats == std::vector<int>{1, 1});

    // The declaration-order branch coincides with allocate().
    AllocationTrace t = allocate(p, 2, droop_exact());
    CHECK(outcomes.front().elected == t.elected);

    CHECK_THROWS_AS(enumerate_allocations(p, 2, droop_exact(), 1), BranchCapExceeded);
    CHECK_THROWS_AS(enumerate_allocations(p, 2, droop_exact(), 0), BadRange);
}

TEST_CASE("tie-free profiles enumerate to exactly the allocate() outcome") {
    Profile p = load_fixture("nine_candidates.profile");
    auto outcomes = enumerate_allocations(p, 3, droop_exact(), 64);
    REQUIRE(outcomes.size() == 1);
    AllocationTrace t = allocate(p, 3, droop_exact());
    CHECK(outcomes[0].elected == t.elected);
    CHECK(outcomes[0].seats == t.seats);
    CHECK(outcomes[0].status == AllocationStatus::Completed);
}

TEST_CASE("support bookkeeping: paid seats subtract exactly one quota") {
    Profile p = load_fixture("nine_candidates.profile");
    AllocationTrace t = allocate(p, 4, droop_exact());
    for (size_t s = 0; s + 1 < t.steps.size(); ++s) {
        const StepRecord& cur = t.steps[s];
        if (cur.exhausted) continue;
        // Winner's support in the next snapshot = support_before - quota.
        const StepRecord& nxt = t.steps[s + 1];
        CHECK(nxt.supports_snapshot[cur.chosen] ==
              Rational(cur.support_before - cur.quota_used));
    }
}

}  // TEST_SUITE
