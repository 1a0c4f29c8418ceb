#include <gtest/gtest.h>

#include <random>

#include "localwitt/random.hpp"
#include "localwitt/symn.hpp"

using namespace localwitt;

namespace {

std::vector<Place> test_places() { return {Place::real(), Place::padic(2), Place::padic(3), Place::padic(5)}; }

}  // namespace

TEST(StabilizerForm, DiagonalEntries) {
    // q_A for A = diag(a_i) is <-a_i a_j> over i < j (up to sign conventions), rank n(n-1)/2.
    auto st = stabilizer_form(SymMatrix::diagonal({Rational(1), Rational(2), Rational(3)}), Place::padic(5));
    EXPECT_EQ(st.form.rank(), 3u);
    EXPECT_THROW(stabilizer_form(SymMatrix::diagonal({Rational(1), Rational(0)}), Place::padic(5)),
                 std::invalid_argument);
}

TEST(StabilizerForm, CongruenceInvariant) {
    std::mt19937_64 rng(31);
    for (const auto& place : test_places()) {
        const std::int64_t p = place.is_real() ? 0 : place.prime();
        for (int i = 0; i < 20; ++i) {
            const std::size_t n = 2 + i % 3;
            std::vector<Rational> d;
            for (std::size_t k = 0; k < n; ++k) d.push_back(random_rational(rng, p));
            SymMatrix a = SymMatrix::diagonal(d);
            SymMatrix b = a.congruent(random_unimodular(rng, n));
            EXPECT_TRUE(equivalent(stabilizer_form(a, place).form, stabilizer_form(b, place).form)) << place.to_string();
        }
    }
}

// eps(A, A') = eps(q_A, q_A')^n whenever det A and det A' share a class.
TEST(SignProp, HoldsOnAllRepresentativePairs) {
    for (const auto& place : test_places()) {
        for (std::size_t n : {2u, 3u}) {
            std::vector<std::vector<Rational>> diags;
            for_each_representative_diagonal(n, place, [&](const std::vector<Rational>& a) { diags.push_back(a); });
            for (std::size_t i = 0; i < diags.size(); i += 3)
                for (std::size_t j = 0; j < diags.size(); j += 5) {
                    SymMatrix a = SymMatrix::diagonal(diags[i]), b = SymMatrix::diagonal(diags[j]);
                    auto da = QuadraticForm(place, diags[i]).determinant(), db = QuadraticForm(place, diags[j]).determinant();
                    if (square_class(da, place) != square_class(db, place)) {
                        EXPECT_THROW(verify_signprop(a, b, place), std::invalid_argument);
                        continue;
                    }
                    EXPECT_TRUE(verify_signprop(a, b, place).holds) << place.to_string() << " n=" << n;
                }
        }
    }
}

TEST(CConstant, WellDefinedForEveryDeterminantClass) {
    for (const auto& place : test_places())
        for (std::size_t n : {1u, 2u, 3u})
            for (auto r : square_class_representatives(place)) {
                auto c = c_constant(n, square_class(Rational(r), place), place);
                EXPECT_TRUE(c.well_defined) << place.to_string() << " n=" << n << " d=" << r;
                EXPECT_GT(c.samples, 0u);
            }
}

TEST(Orbits, Counts) {
    // p-adic: two Hasse invariants for n >= 3; real: signatures with det sign fixed.
    for (std::int64_t p : {2, 3, 5, 7})
        for (auto r : square_class_representatives(Place::padic(p)))
            EXPECT_EQ(sl_orbit_count(3, square_class(Rational(r), Place::padic(p)), Place::padic(p)), 2);
    for (auto r : square_class_representatives(Place::padic(3)))
        EXPECT_EQ(sl_orbit_count(1, square_class(Rational(r), Place::padic(3)), Place::padic(3)), 1);
    EXPECT_EQ(sl_orbit_count(3, square_class(Rational(1), Place::real()), Place::real()), 2);
    EXPECT_EQ(sl_orbit_count(5, square_class(Rational(-1), Place::real()), Place::real()), 3);
    EXPECT_THROW(sl_orbit_count(2, square_class(Rational(1), Place::real()), Place::real()), std::invalid_argument);
}

TEST(Scaling, LawAndInvariance) {
    std::mt19937_64 rng(41);
    for (const auto& place : test_places()) {
        const std::int64_t p = place.is_real() ? 0 : place.prime();
        for (int i = 0; i < 40; ++i) {
            const std::size_t n = (i % 2) ? 3 : 5;
            std::vector<Rational> d;
            for (std::size_t k = 0; k < n; ++k) d.push_back(random_rational(rng, p));
            SymMatrix a = SymMatrix::diagonal(d).congruent(random_unimodular(rng, n));
            auto c = epsilon_scaling_check(a, random_rational(rng, p), place);
            EXPECT_TRUE(c.scaling_law) << place.to_string();
            EXPECT_TRUE(c.invariance) << place.to_string();
        }
    }
    EXPECT_THROW(epsilon_scaling_check(SymMatrix::identity(2), Rational(3), Place::padic(3)), std::invalid_argument);
}
