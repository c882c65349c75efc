#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "delone/error.hpp"

namespace delone {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(std::int64_t p, std::int64_t q = 1) {
    Rational r(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "p/q", or a decimal literal such as "-0.618" or "1e-3" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto fail = [&]() -> Rational { throw Error(ErrorCode::Parse, "not a rational literal: '" + s + "'"); };
    if (s.empty()) return fail();

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0 || r.get_den() == 0) return fail();
        r.canonicalize();
        return r;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    std::string digits;
    std::int64_t frac_digits = 0;
    bool seen_point = false;
    bool any_digit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            any_digit = true;
            if (seen_point) ++frac_digits;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) return fail();
    std::int64_t exponent = 0;
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') return fail();
        ++pos;
        std::string exp_text = s.substr(pos);
        if (exp_text.empty()) return fail();
        try {
            std::size_t used = 0;
            exponent = std::stoll(exp_text, &used);
            if (used != exp_text.size()) return fail();
        } catch (const std::exception&) {
            return fail();
        }
    }
    BigInt mant(digits, 10);
    std::int64_t shift = exponent - frac_digits;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational r = shift < 0 ? Rational(mant, scale) : Rational(mant * scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline BigInt floor_of(const Rational& r) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline BigInt ceil_of(const Rational& r) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline std::int64_t to_int64(const BigInt& z) {
    if (!z.fits_slong_p()) throw Error(ErrorCode::Overflow, "integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

}  // namespace delone
