#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "place.hpp"
#include "rational.hpp"

namespace localwitt {

/// A sign in {+1, -1}; the values of Hilbert symbols and Hasse invariants.
enum class Sign : int { minus = -1, plus = 1 };

constexpr Sign operator*(Sign a, Sign b) {
    return static_cast<int>(a) == static_cast<int>(b) ? Sign::plus : Sign::minus;
}
constexpr Sign& operator*=(Sign& a, Sign b) { return a = a * b; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign sign_from_parity(long long k) { return (k % 2 == 0) ? Sign::plus : Sign::minus; }
constexpr Sign pow(Sign s, long long e) { return s == Sign::plus ? s : sign_from_parity(e); }

/// An exact rational viewed inside the completion at `place`.
struct LocalScalar {
    Rational value;
    Place place;
};

namespace detail {

inline void require_nonzero(const Rational& x, const char* what) {
    if (x == 0) throw std::domain_error(std::string(what) + ": zero input");
}

inline int integer_valuation(Integer x, std::int64_t p) {
    int v = 0;
    Integer q, r;
    for (;;) {
        boost::multiprecision::divide_qr(x, Integer(p), q, r);
        if (r != 0) return v;
        x = q;
        ++v;
    }
}

/// Legendre symbol (a|p), p odd, a coprime to p.
inline int legendre(std::uint64_t a, std::uint64_t p) {
    std::uint64_t e = mod::pow(a % p, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

inline std::int64_t least_nonresidue(std::int64_t p) {
    for (std::int64_t u = 2; u < p; ++u)
        if (legendre(static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(p)) == -1) return u;
    throw std::logic_error("no quadratic non-residue");
}

}  // namespace detail

/// p-adic valuation of a nonzero rational.
inline int valuation(const Rational& x, std::int64_t p) {
    detail::require_nonzero(x, "valuation");
    return detail::integer_valuation(num(x), p) - detail::integer_valuation(den(x), p);
}

inline int valuation(const Rational& x, const Place& place) {
    if (place.is_real()) throw std::domain_error("valuation: undefined at the real place");
    return valuation(x, place.prime());
}

inline int valuation(const LocalScalar& x) { return valuation(x.value, x.place); }

/// x / p^valuation(x).
inline Rational unit_part(const Rational& x, std::int64_t p) {
    return x * rational_pow(Rational(p), -valuation(x, p));
}

/// |x|_p as a rational.
inline Rational padic_abs(const Rational& x, std::int64_t p) {
    if (x == 0) return 0;
    return rational_pow(Rational(p), -valuation(x, p));
}

/// Residue of the p-adic unit part of x modulo m (m a power of p).
inline std::uint64_t unit_residue(const Rational& x, std::int64_t p, std::uint64_t m) {
    return mod::reduce(unit_part(x, p), m);
}

/// An element of E*/(E*)^2, stored by its canonical representative:
/// {1,-1} at the real place; {1,u,p,u*p} (u least positive non-residue) for
/// odd p; {+-1,+-2,+-5,+-10} for p = 2.
struct SquareClass {
    Place place;
    std::int64_t representative;

    Rational value() const { return Rational(representative); }
    friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

/// The canonical square-class representatives of the place, in a fixed order.
inline std::vector<std::int64_t> square_class_representatives(const Place& place) {
    if (place.is_real()) return {1, -1};
    std::int64_t p = place.prime();
    if (p == 2) return {1, -1, 5, -5, 2, -2, 10, -10};
    std::int64_t u = detail::least_nonresidue(p);
    return {1, u, p, u * p};
}

inline SquareClass square_class(const Rational& x, const Place& place) {
    detail::require_nonzero(x, "square_class");
    if (place.is_real()) return {place, x > 0 ? 1 : -1};
    std::int64_t p = place.prime();
    int v = valuation(x, p);
    bool odd = (v % 2) != 0;
    if (p == 2) {
        std::uint64_t r = unit_residue(x, 2, 8);
        std::int64_t unit = r == 1 ? 1 : r == 7 ? -1 : r == 5 ? 5 : -5;
        return {place, odd ? 2 * unit : unit};
    }
    std::uint64_t r = unit_residue(x, p, static_cast<std::uint64_t>(p));
    bool residue = detail::legendre(r, static_cast<std::uint64_t>(p)) == 1;
    std::int64_t unit = residue ? 1 : detail::least_nonresidue(p);
    return {place, odd ? unit * p : unit};
}

inline SquareClass square_class(const LocalScalar& x) { return square_class(x.value, x.place); }

/// Hilbert symbol (a,b) at the place, by the closed valuation/residue formula.
inline Sign hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
    detail::require_nonzero(a, "hilbert_symbol");
    detail::require_nonzero(b, "hilbert_symbol");
    if (place.is_real()) return (a < 0 && b < 0) ? Sign::minus : Sign::plus;
    std::int64_t p = place.prime();
    long long alpha = valuation(a, p);
    long long beta = valuation(b, p);
    if (p == 2) {
        auto u = static_cast<long long>(unit_residue(a, 2, 8));
        auto v = static_cast<long long>(unit_residue(b, 2, 8));
        auto eps = [](long long w) { return ((w - 1) / 2) % 2; };
        auto omega = [](long long w) { return ((w * w - 1) / 8) % 2; };
        return sign_from_parity(eps(u) * eps(v) + alpha * omega(v) + beta * omega(u));
    }
    auto up = static_cast<std::uint64_t>(p);
    Sign s = sign_from_parity(alpha * beta * ((p - 1) / 2));
    if (beta % 2 != 0 && detail::legendre(unit_residue(a, p, up), up) == -1) s *= Sign::minus;
    if (alpha % 2 != 0 && detail::legendre(unit_residue(b, p, up), up) == -1) s *= Sign::minus;
    return s;
}

inline Sign hilbert_symbol(const LocalScalar& a, const LocalScalar& b) {
    require_same_place(a.place, b.place, "hilbert_symbol");
    return hilbert_symbol(a.value, b.value, a.place);
}

/// The p-adic fractional part {x}_p: the unique r in [0,1) with p-power
/// denominator such that x - r lies in Z_p.
inline Rational frac_part(const Rational& x, std::int64_t p) {
    if (x == 0) return 0;
    Integer d = den(x);
    int k = detail::integer_valuation(d, p);
    if (k <= 0) return 0;
    Integer pk = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(k));
    Integer cofactor = d / pk;
    // inverse of cofactor mod p^k by extended Euclid
    Integer t = 0, nt = 1, r = pk, nr = cofactor % pk;
    while (nr != 0) {
        Integer q = r / nr;
        Integer tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    Integer m = (num(x) * t) % pk;
    if (m < 0) m += pk;
    return Rational(m, pk);
}

inline Rational frac_part(const LocalScalar& x) {
    if (x.place.is_real()) throw std::domain_error("frac_part: defined only at p-adic places");
    return frac_part(x.value, x.place.prime());
}

/// The standard additive character of the place: exp(sign * 2 pi i {x}_p) at
/// p-adic places, exp(sign * 2 pi i x) at the real place.
struct AdditiveCharacter {
    Place place;
    int sign = +1;

    static AdditiveCharacter standard(const Place& place, int sign = +1) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("character convention must be +1 or -1");
        return {place, sign};
    }
};

/// exp(2 pi i * turns) with `turns` reduced exactly to [0,1) beforehand.
inline std::complex<double> unit_root(const Rational& turns) {
    Rational r = turns - Rational(floor_rational(turns));
    double angle = 2.0 * std::numbers::pi * r.convert_to<double>();
    return {std::cos(angle), std::sin(angle)};
}

inline std::complex<double> character_eval(const Rational& x, const AdditiveCharacter& psi) {
    Rational turns = psi.place.is_real() ? x : frac_part(x, psi.place.prime());
    if (psi.sign < 0) turns = -turns;
    return unit_root(turns);
}

inline std::complex<double> character_eval(const LocalScalar& x, const AdditiveCharacter& psi) {
    require_same_place(x.place, psi.place, "character_eval");
    return character_eval(x.value, psi);
}

}  // namespace localwitt
