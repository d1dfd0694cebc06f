#include "epvote/rival_methods.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>

#include "epvote/errors.hpp"

namespace epvote {

SatisfactionFunction harmonic_satisfaction() {
    auto cache = std::make_shared<std::vector<Rational>>(1, Rational(0));
    return [cache](int h) -> Rational {
        if (h < 0) throw BadRange("satisfaction argument must be non-negative");
        while (static_cast<int>(cache->size()) <= h) {
            int j = static_cast<int>(cache->size());
            cache->push_back(cache->back() + Rational(1, j));
        }
        return (*cache)[h];
    };
}

namespace {

bool approves(const BallotType& b, int id) {
    return std::binary_search(b.approvals.begin(), b.approvals.end(), id);
}

std::vector<int> clone_counts(const Profile& profile, int n) {
    std::vector<int> counts;
    counts.reserve(profile.candidates().size());
    for (const auto& c : profile.candidates()) {
        int m = c.capacity ? *c.capacity : n;
        counts.push_back(std::min(m, n));
    }
    return counts;
}

void require_electable(const Profile& profile, const std::vector<int>& clones, int n) {
    if (n < 1) throw ZeroSeats("number of seats must be positive");
    auto w = approval_supports(profile);
    long available = 0;
    for (size_t i = 0; i < clones.size(); ++i)
        if (w[i] > 0) available += clones[i];
    if (available < n)
        throw InsufficientCandidates("fewer electable candidates than seats");
}

}  // namespace

RivalTrace seq_phragmen(const Profile& profile, int n) {
    auto clones = clone_counts(profile, n);
    require_electable(profile, clones, n);
    const auto& ballots = profile.ballots();
    auto w = approval_supports(profile);
    size_t m = profile.candidates().size();

    RivalTrace trace;
    trace.method = "seq-phragmen";
    trace.seats.assign(m, 0);
    std::vector<Rational> load(ballots.size(), Rational(0));

    for (int s = 0; s < n; ++s) {
        std::vector<std::pair<int, Rational>> scores;
        int best = -1;
        Rational best_score;
        for (size_t i = 0; i < m; ++i) {
            if (trace.seats[i] >= clones[i] || w[i] == 0) continue;
            Rational carried(0);
            for (size_t k = 0; k < ballots.size(); ++k)
                if (approves(ballots[k], static_cast<int>(i)))
                    carried += ballots[k].weight * load[k];
            Rational score = (1 + carried) / w[i];
            if (best < 0 || score < best_score) {
                best = static_cast<int>(i);
                best_score = score;
            }
            scores.emplace_back(static_cast<int>(i), std::move(score));
        }
        for (size_t k = 0; k < ballots.size(); ++k)
            if (approves(ballots[k], best)) load[k] = best_score;
        trace.seats[best] += 1;
        trace.sequence.push_back(best);
        trace.step_scores.push_back(std::move(scores));
    }
    return trace;
}

RivalTrace thiele_addition(const Profile& profile, int n,
                           const SatisfactionFunction& sigma) {
    auto clones = clone_counts(profile, n);
    require_electable(profile, clones, n);
    const auto& ballots = profile.ballots();
    auto w = approval_supports(profile);
    size_t m = profile.candidates().size();

    RivalTrace trace;
    trace.method = "thiele-addition";
    trace.seats.assign(m, 0);
    std::vector<int> h(ballots.size(), 0);  // elected approved per ballot type

    for (int s = 0; s < n; ++s) {
        std::vector<std::pair<int, Rational>> scores;
        int best = -1;
        Rational best_score;
        for (size_t i = 0; i < m; ++i) {
            if (trace.seats[i] >= clones[i] || w[i] == 0) continue;
            Rational gain(0);
            for (size_t k = 0; k < ballots.size(); ++k)
                if (approves(ballots[k], static_cast<int>(i)))
                    gain += ballots[k].weight * (sigma(h[k] + 1) - sigma(h[k]));
            if (best < 0 || gain > best_score) {
                best = static_cast<int>(i);
                best_score = gain;
            }
            scores.emplace_back(static_cast<int>(i), std::move(gain));
        }
        for (size_t k = 0; k < ballots.size(); ++k)
            if (approves(ballots[k], best)) h[k] += 1;
        trace.seats[best] += 1;
        trace.sequence.push_back(best);
        trace.step_scores.push_back(std::move(scores));
    }
    return trace;
}

RivalTrace thiele_addition_by_reweighting(const Profile& profile, int n) {
    auto clones = clone_counts(profile, n);
    require_electable(profile, clones, n);
    const auto& ballots = profile.ballots();
    auto w = approval_supports(profile);
    size_t m = profile.candidates().size();

    RivalTrace trace;
    trace.method = "thiele-reweighting";
    trace.seats.assign(m, 0);
    std::vector<int> h(ballots.size(), 0);
    std::vector<Rational> reduced;  // v_k / (h_k + 1)
    reduced.reserve(ballots.size());
    for (const auto& b : ballots) reduced.push_back(b.weight);

    for (int s = 0; s < n; ++s) {
        std::vector<std::pair<int, Rational>> scores;
        int best = -1;
        Rational best_score;
        for (size_t i = 0; i < m; ++i) {
            if (trace.seats[i] >= clones[i] || w[i] == 0) continue;
            Rational score(0);
            for (size_t k = 0; k < ballots.size(); ++k)
                if (approves(ballots[k], static_cast<int>(i))) score += reduced[k];
            if (best < 0 || score > best_score) {
                best = static_cast<int>(i);
                best_score = score;
            }
            scores.emplace_back(static_cast<int>(i), std::move(score));
        }
        for (size_t k = 0; k < ballots.size(); ++k)
            if (approves(ballots[k], best)) {
                h[k] += 1;
                reduced[k] = ballots[k].weight / (h[k] + 1);
            }
        trace.seats[best] += 1;
        trace.sequence.push_back(best);
        trace.step_scores.push_back(std::move(scores));
    }
    return trace;
}

RivalTrace thiele_elimination(const Profile& profile, int n,
                              const SatisfactionFunction& sigma) {
    if (n < 1) throw ZeroSeats("number of seats must be positive");
    auto clones = clone_counts(profile, n);
    long total = std::accumulate(clones.begin(), clones.end(), 0L);
    if (total < n) throw InsufficientCandidates("fewer candidates than seats");
    const auto& ballots = profile.ballots();
    size_t m = profile.candidates().size();

    RivalTrace trace;
    trace.method = "thiele-elimination";
    std::vector<int> remaining = clones;
    std::vector<int> h(ballots.size(), 0);  // remaining approved per ballot type
    for (size_t k = 0; k < ballots.size(); ++k)
        for (int id : ballots[k].approvals) h[k] += remaining[id];

    for (long r = total - n; r > 0; --r) {
        std::vector<std::pair<int, Rational>> scores;
        int worst = -1;
        Rational worst_loss;
        for (size_t i = 0; i < m; ++i) {
            if (remaining[i] == 0) continue;
            Rational loss(0);
            for (size_t k = 0; k < ballots.size(); ++k)
                if (approves(ballots[k], static_cast<int>(i)))
                    loss += ballots[k].weight * (sigma(h[k]) - sigma(h[k] - 1));
            // ties remove the latest-declared candidate
            if (worst < 0 || loss <= worst_loss) {
                worst = static_cast<int>(i);
                worst_loss = loss;
            }
            scores.emplace_back(static_cast<int>(i), std::move(loss));
        }
        for (size_t k = 0; k < ballots.size(); ++k)
            if (approves(ballots[k], worst)) h[k] -= 1;
        remaining[worst] -= 1;
        trace.sequence.push_back(worst);
        trace.step_scores.push_back(std::move(scores));
    }
    trace.seats = std::move(remaining);
    return trace;
}

namespace {

void all_choices(const std::vector<size_t>& pool, size_t from, long slots,
                 std::vector<int>& seats, std::set<std::vector<int>>& out) {
    if (slots == 0) {
        out.insert(seats);
        if (out.size() > 4096)
            throw BranchCapExceeded("too many tied remainder allocations");
        return;
    }
    if (pool.size() - from < static_cast<size_t>(slots)) return;
    for (size_t idx = from; idx + slots <= pool.size(); ++idx) {
        seats[pool[idx]] += 1;
        all_choices(pool, idx + 1, slots - 1, seats, out);
        seats[pool[idx]] -= 1;
    }
}

}  // namespace

std::vector<std::vector<int>> largest_remainders(const std::vector<Rational>& party_votes,
                                                 int n, const Rational& quota) {
    if (n < 1) throw ZeroSeats("number of seats must be positive");
    if (quota <= 0) throw BadRange("quota must be positive");
    Rational total(0);
    for (const auto& v : party_votes) {
        if (v < 0) throw BadRange("negative party vote total");
        total += v;
    }
    if (total == 0) throw ZeroVotes("no votes cast");

    size_t P = party_votes.size();
    std::vector<long> full(P);
    std::vector<Rational> rem(P);
    long filled = 0;
    for (size_t i = 0; i < P; ++i) {
        full[i] = floor_to_long(party_votes[i] / quota);
        rem[i] = party_votes[i] - full[i] * quota;
        filled += full[i];
    }
    long extra = n - filled;
    if (extra < -1)
        throw BadRange("quota too small: full quotas exceed seats by more than one");
    if (extra > static_cast<long>(P))
        throw BadRange("quota too large: full quotas plus one per party cannot fill seats");

    std::vector<int> base(P);
    for (size_t i = 0; i < P; ++i) base[i] = static_cast<int>(full[i]);
    std::set<std::vector<int>> results;

    if (extra == -1) {
        // one seat too many: take it back from a minimal-remainder seat holder
        bool any = false;
        Rational least;
        for (size_t i = 0; i < P; ++i)
            if (full[i] >= 1 && (!any || rem[i] < least)) {
                least = rem[i];
                any = true;
            }
        for (size_t i = 0; i < P; ++i)
            if (full[i] >= 1 && rem[i] == least) {
                auto seats = base;
                seats[i] -= 1;
                results.insert(seats);
            }
    } else if (extra == 0) {
        results.insert(base);
    } else {
        std::vector<Rational> order = rem;
        std::sort(order.begin(), order.end(), std::greater<Rational>());
        Rational cutoff = order[extra - 1];
        std::vector<size_t> tied;
        long slots = extra;
        for (size_t i = 0; i < P; ++i) {
            if (rem[i] > cutoff) {
                base[i] += 1;
                slots -= 1;
            } else if (rem[i] == cutoff) {
                tied.push_back(i);
            }
        }
        all_choices(tied, 0, slots, base, results);
    }
    return {results.begin(), results.end()};
}

std::vector<int> dhondt(const std::vector<Rational>& party_votes, int n) {
    if (n < 1) throw ZeroSeats("number of seats must be positive");
    Rational total(0);
    for (const auto& v : party_votes) {
        if (v < 0) throw BadRange("negative party vote total");
        total += v;
    }
    if (total == 0) throw ZeroVotes("no votes cast");

    std::vector<int> seats(party_votes.size(), 0);
    for (int s = 0; s < n; ++s) {
        size_t best = party_votes.size();
        Rational best_avg;
        for (size_t i = 0; i < party_votes.size(); ++i) {
            if (party_votes[i] == 0) continue;
            Rational avg = party_votes[i] / (seats[i] + 1);
            if (best == party_votes.size() || avg > best_avg) {
                best = i;
                best_avg = avg;
            }
        }
        seats[best] += 1;
    }
    return seats;
}

}  // namespace epvote
