#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace splinedim {

// GMP keeps mpq_class canonical after every arithmetic operation: lowest
// terms, positive denominator, zero as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return ParseError("invalid rational literal '" + s + "'"); };
    if (s.empty()) throw bad();
    std::size_t slash = s.find('/');
    auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(s, true)) throw bad();
        std::string num = s[0] == '+' ? s.substr(1) : s;
        return Rational(Integer(num, 10));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q(Integer(num, 10), d);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Binomial coefficient as an exact integer; zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline std::int64_t binom(long n, long k) {
    return static_cast<std::int64_t>(binomial(n, k).get_si());
}

} // namespace splinedim
