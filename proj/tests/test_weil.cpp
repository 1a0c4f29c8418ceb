#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "localwitt/char_sum.hpp"
#include "localwitt/weil.hpp"

using namespace localwitt;

namespace {

// Damped Fresnel integral: int exp(2 pi i a x^2 - pi eps x^2) dx over R,
// by composite Simpson on [0, L] (the integrand is even).
std::complex<double> damped_fresnel(double a, double eps) {
    const double pi = std::numbers::pi;
    const double L = std::sqrt(60.0 / (pi * eps));
    const int steps = 400000;
    const double h = L / steps;
    std::complex<double> sum = 0;
    for (int k = 0; k <= steps; ++k) {
        const double x = k * h;
        const double w = (k == 0 || k == steps) ? 1.0 : (k % 2 ? 4.0 : 2.0);
        sum += w * std::exp(std::complex<double>(-pi * eps * x * x, 2.0 * pi * a * x * x));
    }
    return 2.0 * sum * h / 3.0;
}

// Naive Gauss sum over Z/p^k: p^{-k} sum_x psi(a x^2 / p^k).
std::complex<double> naive_gauss(std::int64_t a, std::int64_t p, int k) {
    std::int64_t n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    std::complex<double> s = 0;
    for (std::int64_t x = 0; x < n; ++x) {
        const double t = static_cast<double>((a % n * (x * x % n) % n + n) % n) / static_cast<double>(n);
        s += std::polar(1.0, 2.0 * std::numbers::pi * t);
    }
    return s / static_cast<double>(n);
}

}  // namespace

// Real place: gamma(a x^2) = exp(+- pi i / 4), checked against the Fresnel
// integral |2a|^{1/2} lim_{eps -> 0} int psi(a x^2) exp(-pi eps x^2).
TEST(WeilGamma, RealPlaceMatchesFresnelQuadrature) {
    for (double a : {1.0, -1.0, 0.5, -2.0}) {
        auto v = damped_fresnel(a, 1e-3) * std::sqrt(std::abs(2.0 * a));
        auto g = gamma_rank1(Rational(a == 0.5 ? Rational(1, 2) : Rational(static_cast<int>(a))),
                             AdditiveCharacter::standard(Place::real()));
        EXPECT_LT(std::abs(v - g.value), 2e-3) << "a=" << a << " numeric " << v;
        EXPECT_EQ(g.eighth_root_index, a > 0 ? 1 : 7);
    }
}

TEST(WeilGamma, CharacterSumsAgreeWithNaiveSums) {
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (std::int64_t a : {1, 2, 3, 5}) {
            if (a % p == 0) continue;
            for (int k = 1; k <= (p == 2 ? 5 : 3); ++k) {
                Polynomial f(1);
                f.add_term({2}, Rational(a) / rational_pow(Rational(p), k));
                EXPECT_LT(std::abs(integrate_unit_polydisc(f, p, +1) - naive_gauss(a, p, k)), 1e-10)
                    << "p=" << p << " a=" << a << " k=" << k;
            }
        }
    }
}

TEST(WeilGamma, IsEighthRootAndDependsOnSquareClass) {
    for (std::int64_t p : {2, 3, 5, 7, 11}) {
        const Place place = Place::padic(p);
        const auto psi = AdditiveCharacter::standard(place);
        for (auto r : square_class_representatives(place)) {
            auto g = gamma_rank1(Rational(r), psi);
            EXPECT_NEAR(std::abs(g.value), 1.0, 1e-12);
            EXPECT_LT(std::abs(g.value - eighth_root(g.eighth_root_index)), 1e-9);
            auto g2 = gamma_rank1(Rational(r) * p * p * 9 * 49, psi);
            EXPECT_EQ(g.eighth_root_index, g2.eighth_root_index) << "p=" << p << " r=" << r;
            // <a> + <-a> is hyperbolic, so gamma(a) gamma(-a) = 1.
            auto gm = gamma_rank1(Rational(-r), psi);
            EXPECT_EQ((g.eighth_root_index + gm.eighth_root_index) % 8, 0) << "p=" << p << " r=" << r;
        }
    }
}

TEST(WeilGamma, KnownValues) {
    const auto psi3 = AdditiveCharacter::standard(Place::padic(3));
    const auto psi2 = AdditiveCharacter::standard(Place::padic(2));
    EXPECT_EQ(gamma_rank1(Rational(1), psi3).eighth_root_index, 0);
    // Quadratic Gauss sum mod 3 is i sqrt 3.
    EXPECT_EQ(gamma_rank1(Rational(3), psi3).eighth_root_index, 2);
    EXPECT_EQ(gamma_rank1(Rational(1), psi2).eighth_root_index, 1);
    // Opposite character conjugates gamma.
    const auto psi3m = AdditiveCharacter::standard(Place::padic(3), -1);
    EXPECT_EQ(gamma_rank1(Rational(3), psi3m).eighth_root_index, 6);
}

// gamma of a rank-2 form summed directly equals the product of rank-1 values.
TEST(WeilGamma, DirectRankTwoMatchesProduct) {
    for (std::int64_t p : {2, 3}) {
        const Place place = Place::padic(p);
        const auto psi = AdditiveCharacter::standard(place);
        const auto reps = square_class_representatives(place);
        for (auto a : reps)
            for (auto b : reps) {
                QuadraticForm q(place, {Rational(a), Rational(b)});
                EXPECT_EQ(gamma_form_direct(q, psi).eighth_root_index, gamma_form(q, psi).eighth_root_index)
                    << "p=" << p << " <" << a << "," << b << ">";
            }
    }
}

TEST(WeilGamma, EqualsRelativeHasseOnW2) {
    for (std::int64_t p : {2, 3, 5}) {
        const Place place = Place::padic(p);
        const auto psi = AdditiveCharacter::standard(place);
        const auto reps = square_class_representatives(place);
        for (auto a : reps)
            for (auto b : reps)
                for (auto c : reps) {
                    QuadraticForm q(place, {Rational(a), Rational(b)});
                    QuadraticForm q2(place, {Rational(c), Rational(a * b * c)});
                    auto chk = gamma_matches_epsilon(q, q2, psi);
                    EXPECT_TRUE(chk.holds) << "p=" << p;
                }
    }
}

TEST(WeilEquation, BallIndicators) {
    struct Case {
        std::int64_t p;
        std::vector<Rational> coeffs, center;
        int m;
    };
    const std::vector<Case> cases{
        {3, {Rational(1)}, {Rational(0)}, 0},
        {3, {Rational(2)}, {Rational(1, 3)}, 1},
        {5, {Rational(1), Rational(2)}, {Rational(0), Rational(1, 5)}, 1},
        {2, {Rational(1), Rational(3)}, {Rational(1, 2), Rational(0)}, 1},
        {7, {Rational(7), Rational(1, 7)}, {Rational(1), Rational(2)}, 0},
        {2, {Rational(5)}, {Rational(3, 4)}, 2},
    };
    for (const auto& c : cases) {
        QuadraticForm q(Place::padic(c.p), c.coeffs);
        auto chk = verify_weil_equation(q, BallIndicator{c.center, c.m}, AdditiveCharacter::standard(q.place()));
        EXPECT_LT(chk.residual, 1e-9) << "p=" << c.p << " lhs=" << chk.lhs << " rhs=" << chk.rhs;
        EXPECT_GT(std::abs(chk.lhs) + std::abs(chk.rhs), 0.0);
    }
}

TEST(WeilEquation, Preconditions) {
    const auto psi = AdditiveCharacter::standard(Place::padic(3));
    QuadraticForm q3(Place::padic(3), {Rational(1), Rational(1), Rational(1)});
    EXPECT_THROW(verify_weil_equation(q3, BallIndicator{{0, 0, 0}, 0}, psi), std::invalid_argument);
    QuadraticForm q1(Place::padic(3), {Rational(1)});
    EXPECT_THROW(verify_weil_equation(q1, BallIndicator{{0, 0}, 0}, psi), std::invalid_argument);
    EXPECT_THROW(verify_weil_equation(q1, BallIndicator{{0}, 0}, AdditiveCharacter::standard(Place::padic(5))),
                 std::invalid_argument);
    EXPECT_THROW(verify_weil_equation(QuadraticForm(Place::padic(3), {Rational(1, 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3), Rational(1)}),
                                      BallIndicator{{0, 0}, 8}, psi, 1000),
                 BudgetExceeded);
}
