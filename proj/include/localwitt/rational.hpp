#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace localwitt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "n", "-n", "n/d" (optional surrounding whitespace). Throws
/// std::invalid_argument on malformed input or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [](std::string_view s) -> Integer {
        if (s.empty()) throw std::invalid_argument("empty integer");
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') i = 1;
        if (i == s.size()) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
        Integer v(std::string(s[0] == '+' ? s.substr(1) : s));
        return v;
    };
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(trim(text.substr(0, slash)));
    Integer den = parse_int(trim(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline std::string to_string(const Rational& x) {
    const Integer& d = boost::multiprecision::denominator(x);
    std::string s = boost::multiprecision::numerator(x).str();
    if (d != 1) s += "/" + d.str();
    return s;
}

inline Integer num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline Integer floor_rational(const Rational& x) {
    Integer q, r;
    boost::multiprecision::divide_qr(num(x), den(x), q, r);
    if (r < 0) --q;
    return q;
}

inline Rational rational_pow(const Rational& x, int e) {
    Rational base = e < 0 ? Rational(1) / x : x;
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    Rational r = 1;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

// Modular helpers on 64-bit moduli (modulus < 2^63).
namespace mod {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1u) r = mul(r, b, m);
        b = mul(b, b, m);
        e >>= 1;
    }
    return r;
}

/// Inverse of a modulo m; a must be coprime to m.
inline std::uint64_t inverse(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("value not invertible modulo " + std::to_string(m));
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

/// Residue of an integer modulo m in [0, m).
inline std::uint64_t reduce(const Integer& x, std::uint64_t m) {
    Integer r = x % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

/// Residue of a rational whose denominator is coprime to m.
inline std::uint64_t reduce(const Rational& x, std::uint64_t m) {
    if (m == 1) return 0;
    return mul(reduce(num(x), m), inverse(reduce(den(x), m), m), m);
}

}  // namespace mod

}  // namespace localwitt
