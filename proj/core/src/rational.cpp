#include "epvote/rational.hpp"

#include <algorithm>
#include <cctype>

#include "epvote/errors.hpp"

namespace epvote {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void bad(std::string_view text) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad(text);

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        mpz_class d(std::string(den), 10);
        if (d == 0) bad(text);
        value = Rational(mpz_class(std::string(num), 10), d);
        value.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (!all_digits(ip) || !all_digits(fp)) bad(text);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        mpz_class num = mpz_class(std::string(ip), 10) * scale +
                        mpz_class(std::string(fp), 10);
        value = Rational(num, scale);
        value.canonicalize();
    } else {
        if (!all_digits(s)) bad(text);
        value = Rational(mpz_class(std::string(s), 10));
    }
    if (negative) value = -value;
    return value;
}

Rational floor_rational(const Rational& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return Rational(q);
}

Rational ceil_rational(const Rational& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return Rational(q);
}

long floor_to_long(const Rational& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw BadRange("rational floor does not fit a long");
    return q.get_si();
}

std::string format_exact(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string format_decimal(const Rational& x, int places) {
    if (places < 0) throw BadRange("negative decimal places");
    mpz_class num = abs(x.get_num());
    const mpz_class& den = x.get_den();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    // round half away from zero on the magnitude
    mpz_class rounded = (2 * num * scale + den) / (2 * den);
    std::string digits = rounded.get_str();
    if ((int)digits.size() <= places)
        digits.insert(0, places + 1 - digits.size(), '0');
    std::string out;
    if (sgn(x) < 0 && rounded != 0) out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

std::string format_significant(const Rational& x, int digits) {
    if (digits < 1) throw BadRange("need at least one significant digit");
    if (x == 0) return "0";

    mpz_class ip = abs(x.get_num()) / x.get_den();
    int places;
    if (ip > 0) {
        int int_digits = (int)ip.get_str().size();
        if (int_digits >= digits) {
            // round the magnitude to `digits` leading digits
            mpz_class num = abs(x.get_num());
            mpz_class pow;
            mpz_ui_pow_ui(pow.get_mpz_t(), 10, int_digits - digits);
            mpz_class den = x.get_den() * pow;
            mpz_class rounded = (2 * num + den) / (2 * den);
            std::string body = rounded.get_str() +
                               std::string(int_digits - digits, '0');
            // rounding may add a digit (999.. -> 1000..); keep it
            return (sgn(x) < 0 ? "-" : "") + body;
        }
        places = digits - int_digits;
    } else {
        // count leading fractional zeros
        mpz_class num = abs(x.get_num());
        int zeros = 0;
        mpz_class scaled = num * 10;
        while (scaled < x.get_den()) {
            ++zeros;
            scaled *= 10;
        }
        places = zeros + digits;
    }
    std::string out = format_decimal(x, places);
    if (out.find('.') != std::string::npos) {
        while (!out.empty() && out.back() == '0') out.pop_back();
        if (!out.empty() && out.back() == '.') out.pop_back();
    }
    return out;
}

std::string format_human(const Rational& x) {
    return format_exact(x) + " (" + format_decimal(x, 6) + ")";
}

}  // namespace epvote
