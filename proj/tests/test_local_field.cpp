#include <gtest/gtest.h>

#include <random>

#include "localwitt/hilbert_oracle.hpp"
#include "localwitt/local_field.hpp"
#include "localwitt/random.hpp"

using namespace localwitt;

namespace {

const std::vector<std::string> kPlaces{"real", "p:2", "p:3", "p:5", "p:7", "p:11", "p:13"};

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational(" 7 "), Rational(7));
    EXPECT_EQ(to_string(parse_rational("4/-6")), "-2/3");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Place, Parse) {
    EXPECT_TRUE(Place::parse("real").is_real());
    EXPECT_EQ(Place::parse("p:7").prime(), 7);
    EXPECT_THROW(Place::parse("p:0"), std::invalid_argument);
    EXPECT_THROW(Place::parse("p:9"), std::invalid_argument);
    EXPECT_THROW(Place::parse("p:2147483659"), std::invalid_argument);
    EXPECT_THROW(Place::parse("q:3"), std::invalid_argument);
    EXPECT_THROW(Place::real().prime(), std::domain_error);
}

TEST(Valuation, Basics) {
    EXPECT_EQ(valuation(Rational(18), 3), 2);
    EXPECT_EQ(valuation(Rational(5, 27), 3), -3);
    EXPECT_EQ(valuation(Rational(-7), 2), 0);
    EXPECT_EQ(padic_abs(Rational(1, 49), 7), Rational(49));
    EXPECT_THROW(valuation(Rational(0), 3), std::domain_error);
}

TEST(SquareClass, RepresentativesAreClosedUnderProducts) {
    for (const auto& text : kPlaces) {
        const Place place = Place::parse(text);
        const auto reps = square_class_representatives(place);
        const std::size_t expected = place.is_real() ? 2 : place.prime() == 2 ? 8 : 4;
        ASSERT_EQ(reps.size(), expected) << text;
        for (auto r : reps) EXPECT_EQ(square_class(Rational(r), place).representative, r) << text;
        std::mt19937_64 rng(17);
        for (int i = 0; i < 200; ++i) {
            Rational x = random_rational(rng, place.is_real() ? 0 : place.prime());
            Rational y = random_rational(rng, place.is_real() ? 0 : place.prime());
            // x y^2 lies in the class of x.
            EXPECT_EQ(square_class(x * y * y, place), square_class(x, place)) << text << " x=" << to_string(x);
        }
    }
}

TEST(SquareClass, KnownValues) {
    const Place q5 = Place::padic(5), q2 = Place::padic(2);
    EXPECT_EQ(square_class(Rational(6), q5).representative, 1);
    EXPECT_EQ(square_class(Rational(2), q5).representative, 2);
    EXPECT_EQ(square_class(Rational(50), q5).representative, 2);
    EXPECT_EQ(square_class(Rational(17), q2).representative, 1);
    EXPECT_EQ(square_class(Rational(-3), q2).representative, 5);
    EXPECT_EQ(square_class(Rational(12), q2).representative, -5);  // 12 = 4 * 3 and 3 = -5 mod 8
    EXPECT_EQ(square_class(Rational(-2, 9), Place::real()).representative, -1);
}

// The closed form of the Hilbert symbol against brute-force solvability of
// a x^2 + b y^2 = z^2, for every pair of square-class representatives.
TEST(HilbertSymbol, AgreesWithOracleOnAllRepresentatives) {
    for (const auto& text : kPlaces) {
        const Place place = Place::parse(text);
        const auto reps = square_class_representatives(place);
        for (auto a : reps)
            for (auto b : reps)
                EXPECT_EQ(hilbert_symbol(Rational(a), Rational(b), place),
                          hilbert_symbol_oracle(Rational(a), Rational(b), place))
                    << text << " a=" << a << " b=" << b;
    }
}

TEST(HilbertSymbol, AgreesWithOracleOnRandomRationals) {
    std::mt19937_64 rng(99);
    for (const auto& text : kPlaces) {
        const Place place = Place::parse(text);
        const std::int64_t p = place.is_real() ? 0 : place.prime();
        for (int i = 0; i < 60; ++i) {
            Rational a = random_rational(rng, p), b = random_rational(rng, p);
            EXPECT_EQ(hilbert_symbol(a, b, place), hilbert_symbol_oracle(a, b, place))
                << text << " a=" << to_string(a) << " b=" << to_string(b);
        }
    }
}

TEST(HilbertSymbol, Axioms) {
    std::mt19937_64 rng(5);
    for (const auto& text : kPlaces) {
        const Place place = Place::parse(text);
        const std::int64_t p = place.is_real() ? 0 : place.prime();
        for (int i = 0; i < 100; ++i) {
            Rational a = random_rational(rng, p), b = random_rational(rng, p), c = random_rational(rng, p);
            EXPECT_EQ(hilbert_symbol(a, b, place), hilbert_symbol(b, a, place));
            EXPECT_EQ(hilbert_symbol(a, b * c, place), hilbert_symbol(a, b, place) * hilbert_symbol(a, c, place));
            EXPECT_EQ(hilbert_symbol(a, -a, place), Sign::plus);
            if (a != 1) EXPECT_EQ(hilbert_symbol(a, 1 - a, place), Sign::plus);
        }
    }
}

TEST(HilbertSymbol, KnownValues) {
    EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(-1), Place::padic(7)), Sign::plus);
    EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(-1), Place::padic(2)), Sign::minus);
    EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(-1), Place::real()), Sign::minus);
    EXPECT_EQ(hilbert_symbol(Rational(3), Rational(5), Place::padic(5)), Sign::minus);
    EXPECT_EQ(hilbert_symbol(Rational(7), Rational(7), Place::padic(7)), Sign::minus);
    EXPECT_THROW(hilbert_symbol(Rational(0), Rational(1), Place::padic(3)), std::domain_error);
}

TEST(HilbertSymbol, ProductFormula) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng);
        Sign prod = hilbert_symbol(a, b, Place::real());
        std::set<std::int64_t> primes{2};
        for (Integer x : {num(a), den(a), num(b), den(b)}) {
            x = abs(x);
            for (std::int64_t q = 2; Integer(q) * q <= x; ++q)
                while (x % q == 0) {
                    primes.insert(q);
                    x /= q;
                }
            if (x > 1) primes.insert(x.convert_to<std::int64_t>());
        }
        for (auto q : primes) prod *= hilbert_symbol(a, b, Place::padic(q));
        EXPECT_EQ(prod, Sign::plus) << to_string(a) << ", " << to_string(b);
    }
}

TEST(AdditiveCharacter, FractionalPartAndValues) {
    EXPECT_EQ(frac_part(Rational(7, 9), 3), Rational(7, 9));
    EXPECT_EQ(frac_part(Rational(10, 3), 3), Rational(1, 3));
    EXPECT_EQ(frac_part(Rational(5), 3), Rational(0));
    EXPECT_EQ(frac_part(Rational(1, 6), 3), Rational(2, 3));  // 1/6 = 2/3 - 1/2, and 1/2 is a 3-adic integer
    const auto psi = AdditiveCharacter::standard(Place::padic(3));
    const auto v = character_eval(Rational(1, 3), psi);
    EXPECT_NEAR(v.real(), std::cos(2 * std::numbers::pi / 3), 1e-15);
    EXPECT_NEAR(std::abs(v), 1.0, 1e-15);
    // psi(x + y) = psi(x) psi(y)
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        Rational x = random_rational(rng, 3), y = random_rational(rng, 3);
        EXPECT_LT(std::abs(character_eval(x + y, psi) - character_eval(x, psi) * character_eval(y, psi)), 1e-12);
    }
}
