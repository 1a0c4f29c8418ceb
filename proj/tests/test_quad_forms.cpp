#include <gtest/gtest.h>

#include <random>

#include "localwitt/quadratic_form.hpp"
#include "localwitt/random.hpp"

using namespace localwitt;

namespace {

std::vector<Rational> random_coeffs(std::mt19937_64& rng, std::size_t n, std::int64_t p) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(random_rational(rng, p));
    return c;
}

}  // namespace

TEST(QuadraticForm, RejectsZeroCoefficient) {
    EXPECT_THROW(QuadraticForm(Place::padic(3), {Rational(1), Rational(0)}), std::invalid_argument);
}

TEST(QuadraticForm, HasseMatchesProductOfSymbols) {
    std::mt19937_64 rng(11);
    for (std::int64_t p : {0, 2, 3, 5, 7}) {
        const Place place = p ? Place::padic(p) : Place::real();
        for (int i = 0; i < 80; ++i) {
            QuadraticForm q(place, random_coeffs(rng, 1 + i % 5, p));
            EXPECT_EQ(hasse_invariant(q), hasse_invariant_by_symbols(q));
        }
    }
}

TEST(QuadraticForm, KnownInvariants) {
    QuadraticForm q(Place::padic(3), {Rational(1), Rational(-1), Rational(1, 49)});
    auto w = invariants(q);
    EXPECT_EQ(w.rank, 3u);
    EXPECT_EQ(w.det_class.representative, 2);  // -1/49 ~ -1 ~ u at p = 3
    EXPECT_EQ(w.hasse, Sign::plus);
    auto r = invariants(QuadraticForm(Place::real(), {Rational(2), Rational(-3), Rational(-5)}));
    ASSERT_TRUE(r.signature);
    EXPECT_EQ(r.signature->positive, 1);
    EXPECT_EQ(r.signature->negative, 2);
}

// Congruent matrices g A g^T with g unimodular diagonalize to equivalent forms.
TEST(QuadraticForm, DiagonalizationIsCongruenceInvariant) {
    std::mt19937_64 rng(12);
    for (std::int64_t p : {0, 2, 3, 5}) {
        const Place place = p ? Place::padic(p) : Place::real();
        for (int i = 0; i < 40; ++i) {
            const std::size_t n = 2 + i % 3;
            SymMatrix a = SymMatrix::diagonal(random_coeffs(rng, n, p));
            SymMatrix b = a.congruent(random_unimodular(rng, n));
            auto [qa, ra] = diagonalize(a, place);
            auto [qb, rb] = diagonalize(b, place);
            EXPECT_EQ(ra, 0);
            EXPECT_EQ(rb, 0);
            EXPECT_TRUE(equivalent(qa, qb));
            EXPECT_EQ(invariants(qa), invariants(qb));
        }
    }
}

TEST(QuadraticForm, DiagonalizeWithTransformReproducesDiagonal) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        SymMatrix a = SymMatrix::diagonal(random_coeffs(rng, 3, 0)).congruent(random_unimodular(rng, 3));
        auto d = diagonalize_with_transform(a, Place::real());
        EXPECT_EQ(a.congruent(d.transform), SymMatrix::diagonal(d.form.coeffs()));
    }
}

TEST(QuadraticForm, DiagonalizeSingular) {
    SymMatrix a({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}});
    auto [q, radical] = diagonalize(a, Place::padic(5));
    EXPECT_EQ(radical, 1);
    EXPECT_EQ(q.rank(), 1u);
}

TEST(Equivalence, ScalingBySquaresAndPermutation) {
    std::mt19937_64 rng(14);
    for (std::int64_t p : {0, 2, 3, 7}) {
        const Place place = p ? Place::padic(p) : Place::real();
        for (int i = 0; i < 50; ++i) {
            auto c = random_coeffs(rng, 3, p);
            auto d = c;
            for (auto& x : d) {
                Rational s = random_rational(rng, p);
                x *= s * s;
            }
            std::swap(d[0], d[2]);
            EXPECT_TRUE(equivalent(QuadraticForm(place, c), QuadraticForm(place, d)));
        }
    }
}

TEST(Equivalence, DistinguishesKnownPairs) {
    const Place q3 = Place::padic(3);
    // <1,1> and <3,3> share det and differ in Hasse invariant iff (3,3) = -1.
    EXPECT_FALSE(equivalent(QuadraticForm(q3, {Rational(1), Rational(1)}), QuadraticForm(q3, {Rational(3), Rational(3)})));
    EXPECT_TRUE(equivalent(QuadraticForm(q3, {Rational(1), Rational(-1)}), QuadraticForm(q3, {Rational(3), Rational(-3)})));
    EXPECT_FALSE(equivalent(QuadraticForm(q3, {Rational(1)}), QuadraticForm(q3, {Rational(1), Rational(1)})));
    EXPECT_FALSE(equivalent(QuadraticForm(Place::real(), {Rational(1), Rational(1)}),
                            QuadraticForm(Place::real(), {Rational(1), Rational(-1)})));
}

TEST(Witt, HyperbolicPlaneIsTrivial) {
    const Place q5 = Place::padic(5);
    QuadraticForm q(q5, {Rational(2), Rational(3)});
    auto sum = witt_sum(q, witt_negate(q));
    EXPECT_EQ(sum.rank(), 4u);
    QuadraticForm hyp(q5, {Rational(1), Rational(-1), Rational(1), Rational(-1)});
    EXPECT_TRUE(equivalent(sum, hyp));
    auto level = witt_filtration_level(q, q);
    EXPECT_EQ(level.level, 2);
    ASSERT_TRUE(level.w2_class);
    EXPECT_EQ(*level.w2_class, Sign::plus);
}

TEST(Witt, ProductRankAndFiltration) {
    const Place q7 = Place::padic(7);
    QuadraticForm a(q7, {Rational(1), Rational(3)}), b(q7, {Rational(7), Rational(2)});
    EXPECT_EQ(witt_product(a, b).rank(), 4u);
    EXPECT_EQ(witt_filtration_level(QuadraticForm(q7, {Rational(1)}), QuadraticForm(q7, {Rational(1), Rational(1)})).level, 0);
    EXPECT_EQ(witt_filtration_level(QuadraticForm(q7, {Rational(1)}), QuadraticForm(q7, {Rational(3)})).level, 1);
    auto w2 = witt_filtration_level(QuadraticForm(q7, {Rational(1), Rational(1)}), QuadraticForm(q7, {Rational(7), Rational(7)}));
    EXPECT_EQ(w2.level, 2);
    EXPECT_EQ(*w2.w2_class, relative_hasse(QuadraticForm(q7, {Rational(1), Rational(1)}),
                                           QuadraticForm(q7, {Rational(7), Rational(7)})));
}
