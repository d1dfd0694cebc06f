#include "epvote/asymptotics.hpp"

#include "epvote/errors.hpp"

namespace epvote {

int two_party_step(TwoPartyState& state) {
    if (state.alpha == 0 && state.beta == 0)
        throw StateExhausted("both party shares are zero");
    bool a_takes = state.alpha >= state.beta;  // ties go to A
    Rational pay = (a_takes ? state.alpha : state.beta) + state.zeta;
    if (pay < state.rho)
        throw StateExhausted("leading support cannot cover a quota");
    Rational factor = 1 - state.rho / pay;
    if (a_takes)
        state.alpha *= factor;
    else
        state.beta *= factor;
    state.zeta *= factor;
    state.s += 1;
    return a_takes ? 0 : 1;
}

TwoPartyResult simulate_two_party(const Rational& v_a, const Rational& v_b,
                                  const Rational& v_ab, int n) {
    if (n < 1) throw ZeroSeats("number of seats must be positive");
    if (v_a < 0 || v_b < 0 || v_ab < 0) throw BadRange("negative vote total");
    Rational v = v_a + v_b + v_ab;
    if (v == 0) throw ZeroVotes("no votes cast");

    TwoPartyState state{v_a / v, v_b / v, v_ab / v, Rational(1, n + 1), 0};
    Rational alpha = state.alpha, beta = state.beta, zeta = state.zeta;

    TwoPartyResult result;
    result.n = n;
    result.recipients.reserve(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        int who = two_party_step(state);
        result.recipients.push_back(who);
        (who == 0 ? result.seats_a : result.seats_b) += 1;
    }
    result.simulated_fraction = Rational(result.seats_a) / n;

    const Rational &hi = alpha >= beta ? alpha : beta,
                   &lo = alpha >= beta ? beta : alpha;
    result.predicted_k =
        lo == 0 ? n + 1 : leading_block_length(hi, lo, zeta, n);
    if (alpha == 0)
        result.exact_limit = 0;
    else if (beta == 0)
        result.exact_limit = 1;
    else
        result.exact_limit = two_party_limit(alpha, beta, zeta);
    return result;
}

int leading_block_length(const Rational& alpha, const Rational& beta,
                         const Rational& zeta, int n) {
    if (n < 1) throw ZeroSeats("number of seats must be positive");
    if (beta <= 0 || zeta < 0) throw BadRange("shares must be positive");
    if (alpha + beta + zeta != 1) throw BadRange("shares must sum to one");
    if (beta > alpha)
        throw BetaExceedsAlpha("first share must be at least the second");
    Rational rho(1, n + 1);
    Rational k = (alpha - beta) * (alpha + zeta) / (alpha * rho);
    return static_cast<int>(floor_to_long(ceil_rational(k)));
}

Rational two_party_limit(const Rational& alpha, const Rational& beta,
                         const Rational& zeta) {
    if (alpha < 0 || beta < 0 || zeta < 0) throw BadRange("negative share");
    if (alpha + beta + zeta != 1) throw BadRange("shares must sum to one");
    if (alpha == 0 || beta == 0)
        throw DegenerateShares("a party without own voters takes no or all seats");
    if (alpha >= beta) return (1 + (alpha - beta) * (alpha + zeta) / alpha) / 2;
    return (1 - (beta - alpha) * (beta + zeta) / beta) / 2;
}

std::vector<std::pair<Rational, Rational>> limit_curve(const Rational& zeta,
                                                       int samples) {
    if (zeta < 0 || zeta >= 1) throw BadRange("zeta must lie in [0, 1)");
    if (samples < 2) throw BadRange("need at least two samples");
    std::vector<std::pair<Rational, Rational>> curve;
    curve.reserve(static_cast<size_t>(samples));
    for (int j = 1; j <= samples; ++j) {
        Rational alpha = (1 - zeta) * j / (samples + 1);
        Rational beta = 1 - zeta - alpha;
        curve.emplace_back(alpha, two_party_limit(alpha, beta, zeta));
    }
    return curve;
}

std::vector<std::pair<double, double>> staircase_curve(const Rational& zeta,
                                                       int samples, int n_probe) {
    if (zeta < 0 || zeta >= 1) throw BadRange("zeta must lie in [0, 1)");
    if (samples < 2) throw BadRange("need at least two samples");
    if (n_probe < 1) throw BadRange("need at least one probe seat");

    double z = zeta.get_d();
    std::vector<std::pair<double, double>> curve;
    curve.reserve(static_cast<size_t>(samples));
    for (int j = 1; j <= samples; ++j) {
        double alpha = (1.0 - z) * j / (samples + 1);
        double beta = 1.0 - z - alpha;
        double wa = alpha + z, wb = beta + z;
        // ballot loads: alpha-only, beta-only, shared
        double xa = 0.0, xb = 0.0, xab = 0.0;
        int seats_a = 0;
        for (int s = 0; s < n_probe; ++s) {
            double score_a = (1.0 + alpha * xa + z * xab) / wa;
            double score_b = (1.0 + beta * xb + z * xab) / wb;
            if (score_a <= score_b) {
                xa = xab = score_a;
                seats_a += 1;
            } else {
                xb = xab = score_b;
            }
        }
        curve.emplace_back(alpha, static_cast<double>(seats_a) / n_probe);
    }
    return curve;
}

}  // namespace epvote
