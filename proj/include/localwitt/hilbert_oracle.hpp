#pragma once

#include <cstdint>
#include <vector>

#include "local_field.hpp"

namespace localwitt {

/// Residue search depth used by the solvability oracle: enough, by Hensel's
/// lemma, for square-free representatives of valuation <= 1.
constexpr int oracle_depth(std::int64_t p) { return p == 2 ? 6 : 3; }

/// Hilbert symbol decided by searching for a primitive solution of
/// z^2 = a x^2 + b y^2. Independent of the closed formula: the inputs are
/// reduced to square-class representatives, then every (x, y) mod p^K is
/// tried against tables of squares mod p^K.
inline Sign hilbert_symbol_oracle(const Rational& a, const Rational& b, const Place& place) {
    if (place.is_real()) {
        // Isotropy of a x^2 + b y^2 - z^2 over R: some nonzero (x,y) with a x^2 + b y^2 >= 0.
        detail::require_nonzero(a, "hilbert_symbol_oracle");
        detail::require_nonzero(b, "hilbert_symbol_oracle");
        for (int x = -2; x <= 2; ++x)
            for (int y = -2; y <= 2; ++y)
                if ((x != 0 || y != 0) && a * x * x + b * y * y >= 0) return Sign::plus;
        return Sign::minus;
    }
    const std::int64_t p = place.prime();
    const std::int64_t ra = square_class(a, place).representative;
    const std::int64_t rb = square_class(b, place).representative;
    const int depth = oracle_depth(p);
    std::uint64_t modulus = 1;
    for (int i = 0; i < depth; ++i) modulus *= static_cast<std::uint64_t>(p);

    std::vector<char> square(modulus, 0), unit_square(modulus, 0);
    for (std::uint64_t z = 0; z < modulus; ++z) {
        std::uint64_t r = z * z % modulus;
        square[r] = 1;
        if (z % static_cast<std::uint64_t>(p) != 0) unit_square[r] = 1;
    }
    auto residue = [&](std::int64_t c) {
        std::int64_t m = static_cast<std::int64_t>(modulus);
        return static_cast<std::uint64_t>(((c % m) + m) % m);
    };
    const std::uint64_t ma = residue(ra), mb = residue(rb);
    const auto up = static_cast<std::uint64_t>(p);
    for (std::uint64_t x = 0; x < modulus; ++x) {
        std::uint64_t ax = ma * (x * x % modulus) % modulus;
        for (std::uint64_t y = 0; y < modulus; ++y) {
            std::uint64_t value = (ax + mb * (y * y % modulus)) % modulus;
            bool primitive_xy = (x % up != 0) || (y % up != 0);
            if (primitive_xy ? square[value] : unit_square[value]) return Sign::plus;
        }
    }
    return Sign::minus;
}

inline Sign hilbert_symbol_oracle(const LocalScalar& a, const LocalScalar& b) {
    require_same_place(a.place, b.place, "hilbert_symbol_oracle");
    return hilbert_symbol_oracle(a.value, b.value, a.place);
}

}  // namespace localwitt
