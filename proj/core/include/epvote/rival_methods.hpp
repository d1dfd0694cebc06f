#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "epvote/profile.hpp"

namespace epvote {

// sigma(0) = 0, sigma(1) = 1, non-decreasing.
using SatisfactionFunction = std::function<Rational(int)>;

// sigma(h) = 1 + 1/2 + ... + 1/h
SatisfactionFunction harmonic_satisfaction();

// Candidates with capacity m (Unlimited clamped to n) are expanded into m
// clones on the same ballots; traces report per original candidate, whose
// unelected clones always score identically.
struct RivalTrace {
    std::string method;
    // elected candidate per step; for elimination, the removed candidate
    std::vector<int> sequence;
    // per step, (candidate, score) for every candidate still in the running
    std::vector<std::vector<std::pair<int, Rational>>> step_scores;
    std::vector<int> seats;  // per candidate id
};

// Each ballot type carries a per-unit load, initially 0. Electing candidate
// i sets the common load of its approvers to (1 + sum of carried load)/w_i;
// each step elects the candidate minimizing that value.
RivalTrace seq_phragmen(const Profile& profile, int n);

// Elects the candidate with the maximum total satisfaction increment
// sum_{k: i in A_k} v_k (sigma(h_k+1) - sigma(h_k)).
RivalTrace thiele_addition(const Profile& profile, int n,
                           const SatisfactionFunction& sigma);

// The harmonic rule computed through ballot reweighting: a ballot with h
// elected candidates counts v_k/(h+1); scores match thiele_addition exactly.
RivalTrace thiele_addition_by_reweighting(const Profile& profile, int n);

// Starts from everyone and repeatedly removes the candidate whose removal
// loses the least satisfaction, until n remain. Ties remove the
// latest-declared candidate, so earlier declaration favors survival.
RivalTrace thiele_elimination(const Profile& profile, int n,
                              const SatisfactionFunction& sigma);

// All valid seat vectors: full quotas, then remaining seats by largest
// remainders (ties enumerated). A one-seat oversubscription (possible with
// the Droop quota when remainders vanish) is resolved by removing a seat
// from any minimal-remainder party holding one.
std::vector<std::vector<int>> largest_remainders(const std::vector<Rational>& party_votes,
                                                 int n, const Rational& quota);

// Highest averages v_i/(t+1), lowest-index tie-break.
std::vector<int> dhondt(const std::vector<Rational>& party_votes, int n);

}  // namespace epvote
