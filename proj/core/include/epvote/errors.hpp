#pragma once

#include <stdexcept>
#include <string>

namespace epvote {

// Root of all domain errors; the CLI maps these to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct EmptyApprovalSet : Error {
    using Error::Error;
};
struct UnknownCandidate : Error {
    using Error::Error;
};
struct ZeroSeats : Error {
    using Error::Error;
};
struct InsufficientCandidates : Error {
    using Error::Error;
};
struct BranchCapExceeded : Error {
    using Error::Error;
};
struct NonPositiveSupport : Error {
    using Error::Error;
};
struct EllExceedsCapacity : Error {
    using Error::Error;
};
struct TooManyCandidates : Error {
    using Error::Error;
};
struct NotUninominal : Error {
    using Error::Error;
};
struct IllegalModification : Error {
    using Error::Error;
};
struct StateExhausted : Error {
    using Error::Error;
};
struct BetaExceedsAlpha : Error {
    using Error::Error;
};
struct DegenerateShares : Error {
    using Error::Error;
};
struct BadRange : Error {
    using Error::Error;
};
struct ZeroVotes : Error {
    using Error::Error;
};

}  // namespace epvote
