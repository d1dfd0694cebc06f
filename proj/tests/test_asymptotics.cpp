// Two-party recursion: conservation and positivity invariants, opening-run
// length, closed-form seat-share limits, and the rival method's staircase.
#include <doctest.h>

#include <random>
#include <vector>

#include "epvote/asymptotics.hpp"
#include "epvote/ep_method.hpp"
#include "epvote/errors.hpp"
#include "epvote/profile.hpp"
#include "helpers.hpp"

using namespace epvote;
using helpers::rat;

namespace {

Profile three_type_profile(const Rational& v_a, const Rational& v_b,
                           const Rational& v_ab) {
    std::vector<Candidate> candidates{{0, "A", std::nullopt}, {1, "B", std::nullopt}};
    return aggregate(candidates, {{{0}, v_a}, {{1}, v_b}, {{0, 1}, v_ab}});
}

// Checks the state-machine laws along one full trajectory.
void check_trajectory(long a, long b, long ab, int n) {
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(ab);
    CAPTURE(n);
    Rational v(a + b + ab);
    TwoPartyState state{Rational(a) / v, Rational(b) / v, Rational(ab) / v,
                        Rational(1, n + 1), 0};
    const Rational rho = state.rho;
    bool zeta_positive = ab > 0;

    for (int s = 0; s < n; ++s) {
        // Conservation: the shares always sum to (n+1-s) quotas.
        CHECK(Rational(state.alpha + state.beta + state.zeta) ==
              Rational(rho * (n + 1 - s)));
        if (s <= n - 1) {
            // With shared ballots present the leader strictly clears the
            // quota; without them the final payment can land exactly on it.
            Rational best = state.alpha >= state.beta ? state.alpha : state.beta;
            if (zeta_positive)
                CHECK(Rational(best + state.zeta) > rho);
            else
                CHECK(Rational(best + state.zeta) >= rho);
        }

        TwoPartyState before = state;
        int who = two_party_step(state);

        // The leader takes the seat (ties to A) and pays exactly one quota.
        if (before.alpha > before.beta) CHECK(who == 0);
        if (before.alpha < before.beta) CHECK(who == 1);
        if (before.alpha == before.beta) CHECK(who == 0);
        if (who == 0) {
            CHECK(state.beta == before.beta);
            CHECK(Rational(state.alpha + state.zeta) ==
                  Rational(before.alpha + before.zeta - rho));
        } else {
            CHECK(state.alpha == before.alpha);
            CHECK(Rational(state.beta + state.zeta) ==
                  Rational(before.beta + before.zeta - rho));
        }
        if (zeta_positive) {
            CHECK(state.alpha > 0);
            CHECK(state.beta > 0);
            CHECK(state.zeta > 0);
        }
    }
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("state invariants hold along seeded random trajectories") {
    std::mt19937_64 rng(774233);
    std::uniform_int_distribution<long> weight(1, 50);
    for (int trial = 0; trial < 40; ++trial) {
        long a = weight(rng), b = weight(rng), ab = weight(rng);
        for (int n : {7, 12, 25}) check_trajectory(a, b, ab, n);
    }
    // Disjoint-party trajectories keep conservation without the positivity.
    check_trajectory(60, 40, 0, 4);
    check_trajectory(51, 49, 0, 5);
}

TEST_CASE("after a lead change the previous leader immediately recovers") {
    std::mt19937_64 rng(98131);
    std::uniform_int_distribution<long> weight(1, 50);
    for (int trial = 0; trial < 40; ++trial) {
        long a = weight(rng), b = weight(rng), ab = 1 + (long)(rng() % 50);
        TwoPartyResult r = simulate_two_party(Rational(a), Rational(b),
                                              Rational(ab), 20);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(ab);
        for (size_t s = 0; s + 2 < r.recipients.size(); ++s)
            if (r.recipients[s] != r.recipients[s + 1])
                CHECK(r.recipients[s + 2] == r.recipients[s]);
    }
}

TEST_CASE("opening run length matches the ceiling formula within one") {
    std::mt19937_64 rng(55012);
    std::uniform_int_distribution<long> weight(1, 50);
    for (int trial = 0; trial < 60; ++trial) {
        long a = weight(rng), b = weight(rng), ab = 1 + (long)(rng() % 50);
        int n = 10 + (int)(rng() % 30);
        TwoPartyResult r = simulate_two_party(Rational(a), Rational(b),
                                              Rational(ab), n);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(ab);
        CAPTURE(n);

        int lead = r.recipients.front();
        int run = 0;
        while (run < n && r.recipients[(size_t)run] == lead) ++run;
        if (run < n) {
            CHECK(r.predicted_k <= n);
            CHECK(run >= r.predicted_k);
            CHECK(run <= r.predicted_k + 1);
        } else {
            CHECK(r.predicted_k + 1 >= n);
        }
    }
}

TEST_CASE("recursion reproduces the full allocation on three-type profiles") {
    struct Case {
        long a, b, ab;
        int n;
    };
    for (const Case& c : {Case{26, 14, 10, 7}, Case{60, 40, 0, 4}, Case{3, 1, 46, 9},
                          Case{51, 49, 0, 5}, Case{17, 19, 31, 12}}) {
        CAPTURE(c.a);
        CAPTURE(c.b);
        CAPTURE(c.ab);
        CAPTURE(c.n);
        TwoPartyResult r = simulate_two_party(Rational(c.a), Rational(c.b),
                                              Rational(c.ab), c.n);
        Profile p = three_type_profile(Rational(c.a), Rational(c.b), Rational(c.ab));
        EpConfig cfg;
        cfg.quota_rule = QuotaRule::droop();
        AllocationTrace t = allocate(p, c.n, cfg);

        CHECK(t.elected == r.recipients);
        CHECK(t.seats == std::vector<int>{r.seats_a, r.seats_b});
        CHECK(r.simulated_fraction == Rational(r.seats_a, c.n));
    }
}

TEST_CASE("seat shares approach the closed-form limit at rate 3/n") {
    std::mt19937_64 rng(682340);
    std::uniform_int_distribution<long> weight(1, 50);
    for (int trial = 0; trial < 12; ++trial) {
        long a = weight(rng), b = weight(rng), ab = weight(rng);
        for (int n : {50, 200}) {
            TwoPartyResult r = simulate_two_party(Rational(a), Rational(b),
                                                  Rational(ab), n);
            Rational gap = r.simulated_fraction - r.exact_limit;
            if (gap < 0) gap = -gap;
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(ab);
            CAPTURE(n);
            CHECK(gap <= Rational(3, n));
        }
    }
}

TEST_CASE("limit formula and its symmetric form") {
    // (alpha-beta)(alpha+zeta)/alpha = (1/5)(4/5)/(2/5) = 2/5.
    CHECK(two_party_limit(rat("2/5"), rat("1/5"), rat("2/5")) == rat("7/10"));
    // Swapping the parties mirrors the limit around 1/2.
    CHECK(two_party_limit(rat("1/5"), rat("2/5"), rat("2/5")) == rat("3/10"));
    // Equal parties split evenly regardless of the overlap.
    CHECK(two_party_limit(rat("3/10"), rat("3/10"), rat("2/5")) == rat("1/2"));
    // No overlap: the limit is the raw share.
    CHECK(two_party_limit(rat("3/5"), rat("2/5"), rat("0")) == rat("3/5"));

    CHECK_THROWS_AS(two_party_limit(rat("1/2"), rat("1/4"), rat("1/8")), BadRange);
    CHECK_THROWS_AS(two_party_limit(rat("0"), rat("1/2"), rat("1/2")),
                    DegenerateShares);
}

TEST_CASE("degenerate inputs: one-sided and empty electorates") {
    TwoPartyResult all_b = simulate_two_party(rat("0"), rat("5"), rat("3"), 4);
    CHECK(all_b.seats_a == 0);
    CHECK(all_b.exact_limit == 0);
    CHECK(all_b.predicted_k == 5);

    TwoPartyResult all_a = simulate_two_party(rat("5"), rat("0"), rat("3"), 4);
    CHECK(all_a.seats_b == 0);
    CHECK(all_a.exact_limit == 1);
    CHECK(all_a.predicted_k == 5);

    CHECK_THROWS_AS(simulate_two_party(rat("0"), rat("0"), rat("5"), 2),
                    StateExhausted);
    CHECK_THROWS_AS(simulate_two_party(rat("-1"), rat("2"), rat("0"), 2), BadRange);
    CHECK_THROWS_AS(simulate_two_party(rat("0"), rat("0"), rat("0"), 2), ZeroVotes);
    CHECK_THROWS_AS(simulate_two_party(rat("1"), rat("1"), rat("1"), 0), ZeroSeats);
}

TEST_CASE("block-length formula: direct values and validation") {
    // alpha 1/2, beta 1/4, zeta 1/4, n 9: (1/4)(3/4)/((1/2)(1/10)) = 15/4 -> 4.
    CHECK(leading_block_length(rat("1/2"), rat("1/4"), rat("1/4"), 9) == 4);
    // A tie yields a zero-length formula block.
    CHECK(leading_block_length(rat("1/2"), rat("1/2"), rat("0"), 9) == 0);
    CHECK_THROWS_AS(leading_block_length(rat("1/4"), rat("1/2"), rat("1/4"), 9),
                    BetaExceedsAlpha);
    CHECK_THROWS_AS(leading_block_length(rat("3/4"), rat("0"), rat("1/4"), 9),
                    BadRange);
    CHECK_THROWS_AS(leading_block_length(rat("1/2"), rat("1/4"), rat("1/4"), 0),
                    ZeroSeats);
}

TEST_CASE("limit curve matches the plotted closed form exactly") {
    const Rational zeta = rat("0.376");  // = 47/125
    CHECK(zeta == rat("47/125"));
    const int samples = 49;
    auto curve = limit_curve(zeta, samples);
    REQUIRE((int)curve.size() == samples);

    for (int j = 1; j <= samples; ++j) {
        const auto& [alpha, value] = curve[(size_t)(j - 1)];
        Rational x(j, samples + 1);
        CHECK(alpha == Rational((1 - zeta) * x));
        Rational expected;
        if (x > rat("1/2"))
            expected = Rational(1, 2) + ((1 - zeta) * x + zeta) * (x - Rational(1, 2)) / x;
        else if (x < rat("1/2"))
            expected = Rational(1, 2) -
                       ((1 - zeta) * (1 - x) + zeta) * (Rational(1, 2) - x) / (1 - x);
        else
            expected = Rational(1, 2);
        CHECK(value == expected);
    }

    // Strictly increasing across the whole grid.
    for (size_t i = 0; i + 1 < curve.size(); ++i)
        CHECK(curve[i].second < curve[i + 1].second);

    CHECK_THROWS_AS(limit_curve(rat("1"), 10), BadRange);
    CHECK_THROWS_AS(limit_curve(rat("1/2"), 1), BadRange);
}

TEST_CASE("rival staircase flattens where the limit curve climbs") {
    const Rational zeta = rat("0.376");
    const int samples = 60;
    auto stairs = staircase_curve(zeta, samples, 200);
    REQUIRE((int)stairs.size() == samples);

    // Longest run of identical seat fractions across adjacent samples.
    int longest = 1, run = 1;
    for (size_t i = 1; i < stairs.size(); ++i) {
        run = stairs[i].second == stairs[i - 1].second ? run + 1 : 1;
        longest = std::max(longest, run);
    }
    CHECK(longest > 3);

    auto curve = limit_curve(zeta, samples);
    for (size_t i = 0; i + 1 < curve.size(); ++i)
        CHECK(curve[i].second < curve[i + 1].second);

    CHECK_THROWS_AS(staircase_curve(zeta, 10, 0), BadRange);
}

}  // TEST_SUITE
