#pragma once

#include <utility>
#include <vector>

#include "epvote/rational.hpp"

namespace epvote {

// Two-party electorate with shares alpha (A only), beta (B only) and
// zeta (both), each normalized by the total vote; rho = 1/(n+1) is the
// quota on the same scale. Supports are alpha+zeta and beta+zeta.
struct TwoPartyState {
    Rational alpha;
    Rational beta;
    Rational zeta;
    Rational rho;
    int s = 0;  // seats handed out so far
};

// Gives the next seat to the currently stronger side (ties to A) and
// scales that side's share and zeta by 1 - rho/(share + zeta), so the
// winning support drops by exactly one quota. Returns 0 for A, 1 for B.
int two_party_step(TwoPartyState& state);

struct TwoPartyResult {
    int n = 0;
    int seats_a = 0;
    int seats_b = 0;
    // predicted length of the opening run of seats for the stronger party;
    // n+1 when the weaker party has no own voters (no crossing ever)
    int predicted_k = 0;
    Rational exact_limit;         // limit of seats_a/n as n grows
    Rational simulated_fraction;  // seats_a / n for this n
    std::vector<int> recipients;  // 0 = A, 1 = B, one entry per seat
};

// Runs the reduced two-party recursion for n seats; equals the full
// quota-method allocation on the three-type profile (A), (B), (AB) with
// unlimited capacities.
TwoPartyResult simulate_two_party(const Rational& v_a, const Rational& v_b,
                                  const Rational& v_ab, int n);

// ceil((alpha-beta)(alpha+zeta) / (alpha*rho)) with rho = 1/(n+1): the
// step count until the weaker party first catches up.
int leading_block_length(const Rational& alpha, const Rational& beta,
                         const Rational& zeta, int n);

// Closed-form limit of seats_a/n: alpha >= beta gives
// (1 + (alpha-beta)(alpha+zeta)/alpha)/2, and symmetrically below.
Rational two_party_limit(const Rational& alpha, const Rational& beta,
                         const Rational& zeta);

// (alpha, limit) at `samples` evenly spaced alpha inside (0, 1-zeta).
std::vector<std::pair<Rational, Rational>> limit_curve(const Rational& zeta,
                                                       int samples);

// (alpha, seat fraction of party A) under the load-minimizing rival method
// with n_probe seats, sampled on the same alpha grid. Computed in floating
// point; suitable for curve plotting, not for exact tie decisions.
std::vector<std::pair<double, double>> staircase_curve(const Rational& zeta,
                                                       int samples,
                                                       int n_probe = 200);

}  // namespace epvote
