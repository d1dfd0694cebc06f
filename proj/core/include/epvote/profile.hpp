#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epvote/rational.hpp"

namespace epvote {

// id is the dense index in declaration order; declaration order is the
// global tie-break order. capacity nullopt encodes an unlimited party list.
struct Candidate {
    int id = 0;
    std::string label;
    std::optional<int> capacity = 1;

    friend bool operator==(const Candidate& a, const Candidate& b) {
        return a.id == b.id && a.label == b.label && a.capacity == b.capacity;
    }
};

// Candidate sets are kept sorted and duplicate-free.
using CandidateSet = std::vector<int>;

struct BallotType {
    CandidateSet approvals;  // the set A_k, nonempty
    Rational weight;         // v_k >= 0

    friend bool operator==(const BallotType& a, const BallotType& b) {
        return a.approvals == b.approvals && a.weight == b.weight;
    }
};

// Immutable after construction. The constructor aggregates: approval sets
// are sorted, duplicate types merged by weight summation (first-occurrence
// order kept), zero-weight types dropped.
class Profile {
  public:
    Profile(std::vector<Candidate> candidates, std::vector<BallotType> raw_ballots);

    const std::vector<Candidate>& candidates() const { return candidates_; }
    const std::vector<BallotType>& ballots() const { return ballots_; }
    const Rational& total_votes() const { return total_votes_; }
    int candidate_count() const { return (int)candidates_.size(); }

    const std::string& label(int id) const;
    std::optional<int> find_candidate(std::string_view label) const;

    friend bool operator==(const Profile& a, const Profile& b) {
        return a.candidates_ == b.candidates_ && a.ballots_ == b.ballots_;
    }

  private:
    std::vector<Candidate> candidates_;
    std::vector<BallotType> ballots_;
    Rational total_votes_;
};

Profile aggregate(std::vector<Candidate> candidates,
                  std::vector<std::pair<CandidateSet, Rational>> raw_ballots);

// w_i: total weight of ballots approving candidate i.
Rational approval_support(const Profile& profile, int candidate);
std::vector<Rational> approval_supports(const Profile& profile);

// v_J: weight of ballots approving exactly J.
Rational exact_support(const Profile& profile, const CandidateSet& J);

// y_J: weight of ballots approving all of J (and possibly more).
Rational joint_support(const Profile& profile, const CandidateSet& J);

// J*: everyone approved by some ballot that approves all of J.
CandidateSet star_closure(const Profile& profile, const CandidateSet& J);

struct QuotaRule {
    enum class Kind { Droop, Hare, Fixed, UpdatedPerStep };
    Kind kind = Kind::Droop;
    Rational fixed_q;  // only for Kind::Fixed, > 0

    static QuotaRule droop() { return {Kind::Droop, 0}; }
    static QuotaRule hare() { return {Kind::Hare, 0}; }
    static QuotaRule fixed(Rational q);
    static QuotaRule updated_per_step() { return {Kind::UpdatedPerStep, 0}; }

    friend bool operator==(const QuotaRule& a, const QuotaRule& b) {
        return a.kind == b.kind && (a.kind != Kind::Fixed || a.fixed_q == b.fixed_q);
    }
};

// v is the initial vote total, v_s the current one (used by UpdatedPerStep,
// which requires s < n).
Rational quota_value(const QuotaRule& rule, const Rational& v, int n, int s,
                     const Rational& v_s);

}  // namespace epvote
