#include <sstream>

#include "doctest.h"
#include "epvote/errors.hpp"
#include "epvote/profile.hpp"
#include "epvote/profile_io.hpp"
#include "helpers.hpp"

using namespace epvote;
using helpers::load_fixture;

namespace {

std::vector<Candidate> unit_candidates(int count) {
    std::vector<Candidate> cs;
    for (int i = 0; i < count; ++i)
        cs.push_back(Candidate{i, std::string(1, char('a' + i)), 1});
    return cs;
}

}  // namespace

TEST_SUITE("profile") {

TEST_CASE("aggregation merges duplicate approval sets") {
    Profile p = aggregate(unit_candidates(3),
                          {{{0, 1}, Rational(3)}, {{1, 0}, Rational(2)}, {{2}, Rational(1)}});
    REQUIRE(p.ballots().size() == 2);
    CHECK(p.ballots()[0].approvals == CandidateSet{0, 1});
    CHECK(p.ballots()[0].weight == Rational(5));
    CHECK(p.ballots()[1].approvals == CandidateSet{2});
    CHECK(p.ballots()[1].weight == Rational(1));
    CHECK(p.total_votes() == Rational(6));
}

TEST_CASE("zero-weight types are dropped, first-occurrence order kept") {
    Profile p = aggregate(unit_candidates(3),
                          {{{0}, Rational(0)}, {{1}, Rational(2)}, {{2}, Rational(1)}});
    REQUIRE(p.ballots().size() == 2);
    CHECK(p.ballots()[0].approvals == CandidateSet{1});
    CHECK(p.ballots()[1].approvals == CandidateSet{2});
}

TEST_CASE("constructor rejects bad input") {
    CHECK_THROWS_AS(aggregate(unit_candidates(2), {{{}, Rational(1)}}),
                    EmptyApprovalSet);
    CHECK_THROWS_AS(aggregate(unit_candidates(2), {{{5}, Rational(1)}}),
                    UnknownCandidate);
    CHECK_THROWS_AS(aggregate(unit_candidates(2), {{{0}, Rational(-1)}}), BadRange);
    auto bad_cap = unit_candidates(2);
    bad_cap[0].capacity = 0;
    CHECK_THROWS_AS(aggregate(bad_cap, {{{0}, Rational(1)}}), BadRange);
}

TEST_CASE("approval supports on the nine-candidate fixture") {
    Profile p = load_fixture("nine_candidates.profile");
    CHECK(p.total_votes() == Rational(100));
    auto id = [&](const char* label) { return *p.find_candidate(label); };
    CHECK(approval_support(p, id("a")) == Rational(43));
    CHECK(approval_support(p, id("b")) == Rational(41));
    CHECK(approval_support(p, id("e")) == Rational(41));
    CHECK(approval_support(p, id("f")) == Rational(39));
    CHECK(approval_support(p, id("u")) == Rational(34));
    CHECK(approval_support(p, id("v")) == Rational(32));
    CHECK(approval_support(p, id("x")) == Rational(31));
    CHECK(approval_support(p, id("y")) == Rational(10));
    CHECK(approval_support(p, id("z")) == Rational(15));
    CHECK_THROWS_AS(approval_support(p, 99), UnknownCandidate);

    auto all = approval_supports(p);
    Rational sum(0);
    for (const auto& w : all) sum += w;
    Rational double_count(0);
    for (const auto& b : p.ballots()) double_count += Rational((long)b.approvals.size()) * b.weight;
    CHECK(sum == double_count);
}

TEST_CASE("exact and joint support") {
    Profile nine = load_fixture("nine_candidates.profile");
    auto id = [&](const char* label) { return *nine.find_candidate(label); };
    CHECK(exact_support(nine, {id("a"), id("b"), id("x")}) == Rational(21));
    CHECK(exact_support(nine, {id("a"), id("b")}) == Rational(0));

    Profile pair = load_fixture("joint_block_pair.profile");
    auto pid = [&](const char* label) { return *pair.find_candidate(label); };
    CHECK(exact_support(pair, {pid("c1"), pid("c3")}) == Rational(1));
    CHECK(joint_support(pair, {pid("a"), pid("b")}) == Rational(42));
    CHECK(joint_support(pair, {}) == pair.total_votes());

    Profile caps = load_fixture("capacity_bounded_joint.profile");
    auto cid = [&](const char* label) { return *caps.find_candidate(label); };
    CandidateSet a2to5{cid("a2"), cid("a3"), cid("a4"), cid("a5")};
    CHECK(joint_support(caps, a2to5) == Rational(144));
    CHECK(exact_support(caps, a2to5) == Rational(24));
}

TEST_CASE("star closure") {
    Profile caps = load_fixture("capacity_bounded_joint.profile");
    // a2..a5 are jointly approved only on ballots that also include a1
    CandidateSet closure = star_closure(
        caps, {*caps.find_candidate("a2"), *caps.find_candidate("a3"),
               *caps.find_candidate("a4"), *caps.find_candidate("a5")});
    CHECK(closure == CandidateSet{*caps.find_candidate("a1"), *caps.find_candidate("a2"),
                                  *caps.find_candidate("a3"), *caps.find_candidate("a4"),
                                  *caps.find_candidate("a5")});

    Profile pair = load_fixture("joint_block_pair.profile");
    CandidateSet ab{*pair.find_candidate("a"), *pair.find_candidate("b")};
    CHECK(star_closure(pair, ab) ==
          CandidateSet{*pair.find_candidate("a"), *pair.find_candidate("b"),
                       *pair.find_candidate("c1"), *pair.find_candidate("c2")});

    // no ballot contains {a, c3} jointly: empty closure
    CandidateSet none{*pair.find_candidate("a"), *pair.find_candidate("c3")};
    CHECK(joint_support(pair, none) == Rational(0));
    CHECK(star_closure(pair, none).empty());
}

TEST_CASE("star closure is antitone") {
    Profile pair = load_fixture("joint_block_pair.profile");
    CandidateSet small{*pair.find_candidate("c1")};
    CandidateSet big{*pair.find_candidate("c1"), *pair.find_candidate("c2")};
    auto closure_small = star_closure(pair, small);
    auto closure_big = star_closure(pair, big);
    CHECK(joint_support(pair, big) > 0);
    for (int id : closure_big)
        CHECK(std::binary_search(closure_small.begin(), closure_small.end(), id));
}

TEST_CASE("quota values") {
    CHECK(quota_value(QuotaRule::droop(), Rational(100), 3, 0, Rational(100)) ==
          Rational(25));
    CHECK(quota_value(QuotaRule::droop(), Rational(230), 7, 0, Rational(230)) ==
          Rational(115, 4));
    CHECK(quota_value(QuotaRule::hare(), Rational(100), 4, 0, Rational(100)) ==
          Rational(25));
    CHECK(quota_value(QuotaRule::fixed(Rational(9, 2)), Rational(100), 4, 2,
                      Rational(50)) == Rational(9, 2));
    // the per-step rule divides what remains by the seats still open
    CHECK(quota_value(QuotaRule::updated_per_step(), Rational(100), 4, 1,
                      Rational(75)) == Rational(25));
    CHECK_THROWS_AS(quota_value(QuotaRule::droop(), Rational(100), 0, 0, Rational(100)),
                    ZeroSeats);
    CHECK_THROWS_AS(
        quota_value(QuotaRule::updated_per_step(), Rational(100), 4, 4, Rational(0)),
        ZeroSeats);
    CHECK_THROWS_AS(QuotaRule::fixed(Rational(0)), BadRange);
}

TEST_CASE("profile text round-trips") {
    for (const char* name :
         {"nine_candidates.profile", "three_party_lists.profile",
          "joint_block_pair.profile", "rounded_reduction_violation.profile",
          "capacity_bounded_joint.profile", "party_seat_drop.profile",
          "quota_shift_drop.profile", "overlapping_trio.profile",
          "disjoint_trio.profile", "no_divisor_quota.profile",
          "two_disjoint_parties.profile"}) {
        CAPTURE(name);
        Profile p = load_fixture(name);
        Profile again = parse_profile_string(serialize_profile(p));
        CHECK(p == again);
    }
}

TEST_CASE("aggregation is insensitive to ballot line order") {
    Profile a = parse_profile_string(
        "candidates: x y z(*)\n2: x y\n3: z\n1/2: x y\n");
    Profile b = parse_profile_string(
        "candidates: x y z(*)\n3: z\n1/2: y x\n2: x y\n");
    CHECK(exact_support(a, {0, 1}) == Rational(5, 2));
    CHECK(a.total_votes() == b.total_votes());
    CHECK(exact_support(a, {0, 1}) == exact_support(b, {0, 1}));
    CHECK(exact_support(a, {2}) == exact_support(b, {2}));
}

TEST_CASE("parser reports line numbers for malformed input") {
    CHECK_THROWS_WITH_AS(parse_profile_string("1: a\n"),
                         "line 1: expected 'candidates:' before ballot lines",
                         ParseError);
    CHECK_THROWS_AS(parse_profile_string("candidates: a a\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("candidates: a\n1: b\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("candidates: a\n-1: a\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("candidates: a\n1:\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("candidates: a(x)\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("candidates: a(0)\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("candidates: a\nno colon here\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse_profile_string("candidates:\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
    Profile p = parse_profile_string(
        "# heading\n\ncandidates: a b\n# interior\n2: a\n\n3: a b\n");
    CHECK(p.total_votes() == Rational(5));
    CHECK(p.ballots().size() == 2);
}

TEST_CASE("capacity markers parse") {
    Profile p = parse_profile_string("candidates: a a2(3) party(*)\n1: a a2 party\n");
    CHECK(p.candidates()[0].capacity == 1);
    CHECK(p.candidates()[1].capacity == 3);
    CHECK_FALSE(p.candidates()[2].capacity.has_value());
}

}  // TEST_SUITE
