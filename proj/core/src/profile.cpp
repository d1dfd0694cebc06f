#include "epvote/profile.hpp"

#include <algorithm>
#include <map>

#include "epvote/errors.hpp"

namespace epvote {

Profile::Profile(std::vector<Candidate> candidates, std::vector<BallotType> raw_ballots)
    : candidates_(std::move(candidates)) {
    for (int i = 0; i < (int)candidates_.size(); ++i) {
        candidates_[i].id = i;
        if (candidates_[i].capacity && *candidates_[i].capacity < 1)
            throw BadRange("candidate '" + candidates_[i].label +
                           "' has capacity < 1");
    }

    std::map<CandidateSet, size_t> seen;
    for (BallotType& b : raw_ballots) {
        if (b.approvals.empty()) throw EmptyApprovalSet("ballot type approves nobody");
        std::sort(b.approvals.begin(), b.approvals.end());
        b.approvals.erase(std::unique(b.approvals.begin(), b.approvals.end()),
                          b.approvals.end());
        for (int id : b.approvals)
            if (id < 0 || id >= (int)candidates_.size())
                throw UnknownCandidate("ballot references undeclared candidate id " +
                                       std::to_string(id));
        if (sgn(b.weight) < 0)
            throw BadRange("negative ballot weight " + format_exact(b.weight));

        auto [it, fresh] = seen.emplace(b.approvals, ballots_.size());
        if (fresh)
            ballots_.push_back({b.approvals, b.weight});
        else
            ballots_[it->second].weight += b.weight;
    }
    std::erase_if(ballots_, [](const BallotType& b) { return b.weight == 0; });

    total_votes_ = 0;
    for (const BallotType& b : ballots_) total_votes_ += b.weight;
}

const std::string& Profile::label(int id) const {
    if (id < 0 || id >= (int)candidates_.size())
        throw UnknownCandidate("no candidate with id " + std::to_string(id));
    return candidates_[id].label;
}

std::optional<int> Profile::find_candidate(std::string_view label) const {
    for (const Candidate& c : candidates_)
        if (c.label == label) return c.id;
    return std::nullopt;
}

Profile aggregate(std::vector<Candidate> candidates,
                  std::vector<std::pair<CandidateSet, Rational>> raw_ballots) {
    std::vector<BallotType> ballots;
    ballots.reserve(raw_ballots.size());
    for (auto& [approvals, weight] : raw_ballots)
        ballots.push_back({std::move(approvals), std::move(weight)});
    return Profile(std::move(candidates), std::move(ballots));
}

namespace {

void require_known(const Profile& profile, const CandidateSet& J) {
    for (int id : J)
        if (id < 0 || id >= profile.candidate_count())
            throw UnknownCandidate("no candidate with id " + std::to_string(id));
}

CandidateSet sorted_unique(CandidateSet J) {
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    return J;
}

}  // namespace

Rational approval_support(const Profile& profile, int candidate) {
    if (candidate < 0 || candidate >= profile.candidate_count())
        throw UnknownCandidate("no candidate with id " + std::to_string(candidate));
    Rational w = 0;
    for (const BallotType& b : profile.ballots())
        if (std::binary_search(b.approvals.begin(), b.approvals.end(), candidate))
            w += b.weight;
    return w;
}

std::vector<Rational> approval_supports(const Profile& profile) {
    std::vector<Rational> w(profile.candidate_count(), Rational(0));
    for (const BallotType& b : profile.ballots())
        for (int id : b.approvals) w[id] += b.weight;
    return w;
}

Rational exact_support(const Profile& profile, const CandidateSet& J) {
    require_known(profile, J);
    CandidateSet key = sorted_unique(J);
    Rational v = 0;
    for (const BallotType& b : profile.ballots())
        if (b.approvals == key) v += b.weight;
    return v;
}

Rational joint_support(const Profile& profile, const CandidateSet& J) {
    require_known(profile, J);
    CandidateSet key = sorted_unique(J);
    Rational y = 0;
    for (const BallotType& b : profile.ballots())
        if (std::includes(b.approvals.begin(), b.approvals.end(), key.begin(),
                          key.end()))
            y += b.weight;
    return y;
}

CandidateSet star_closure(const Profile& profile, const CandidateSet& J) {
    require_known(profile, J);
    CandidateSet key = sorted_unique(J);
    std::vector<bool> in(profile.candidate_count(), false);
    for (const BallotType& b : profile.ballots())
        if (std::includes(b.approvals.begin(), b.approvals.end(), key.begin(),
                          key.end()))
            for (int id : b.approvals) in[id] = true;
    CandidateSet closure;
    for (int i = 0; i < profile.candidate_count(); ++i)
        if (in[i]) closure.push_back(i);
    return closure;
}

QuotaRule QuotaRule::fixed(Rational q) {
    if (sgn(q) <= 0) throw BadRange("fixed quota must be positive");
    return {Kind::Fixed, std::move(q)};
}

Rational quota_value(const QuotaRule& rule, const Rational& v, int n, int s,
                     const Rational& v_s) {
    if (n < 1) throw ZeroSeats("need at least one seat");
    switch (rule.kind) {
        case QuotaRule::Kind::Droop:
            return v / (n + 1);
        case QuotaRule::Kind::Hare:
            return v / n;
        case QuotaRule::Kind::Fixed:
            return rule.fixed_q;
        case QuotaRule::Kind::UpdatedPerStep:
            if (s >= n) throw ZeroSeats("updated quota needs s < n");
            return v_s / (n - s);
    }
    throw BadRange("unknown quota rule");
}

}  // namespace epvote
