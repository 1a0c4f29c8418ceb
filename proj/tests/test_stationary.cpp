#include <gtest/gtest.h>

#include "localwitt/stationary.hpp"

using namespace localwitt;

namespace {

// Naive p^{-nK} sum over (Z/p^K)^n of psi(t f(x)) for a polynomial in two variables.
std::complex<double> naive_integral(const Polynomial& f, const Rational& t, std::int64_t p, int K) {
    std::int64_t side = 1;
    for (int i = 0; i < K; ++i) side *= p;
    const auto psi = AdditiveCharacter::standard(Place::padic(p));
    std::complex<double> s = 0;
    const bool two = f.num_vars() == 2;
    for (std::int64_t x = 0; x < side; ++x)
        for (std::int64_t y = 0; y < (two ? side : 1); ++y) {
            std::vector<Rational> pt{Rational(x)};
            if (two) pt.emplace_back(y);
            s += character_eval(t * f.evaluate(pt), psi);
        }
    return s / std::pow(static_cast<double>(side), two ? 2.0 : 1.0);
}

}  // namespace

TEST(PhasePolynomial, Parse) {
    auto f = parse_polynomial("x^3-3x+y^2");
    EXPECT_EQ(f.num_vars(), 2u);
    EXPECT_EQ(f.total_degree(), 3);
    EXPECT_EQ(f.evaluate({Rational(2), Rational(1)}), Rational(3));
    EXPECT_EQ(parse_polynomial("2*x*y - x^2").evaluate({Rational(1), Rational(3)}), Rational(5));
    EXPECT_THROW(parse_polynomial("x^"), std::invalid_argument);
    EXPECT_THROW(PhasePolynomial::parse("x/2", 5), std::invalid_argument);
    EXPECT_THROW(PhasePolynomial::parse("7", 5), std::invalid_argument);
}

TEST(CriticalPoints, CubicInTwoVariables) {
    auto f = PhasePolynomial::parse("x^3-3x+y^2", 5);
    auto pts = critical_points(f);
    ASSERT_EQ(pts.size(), 2u);
    for (const auto& cp : pts) {
        // grad f = (3x^2 - 3, 2y) vanishes at x = +-1, y = 0.
        const Integer x = cp.point[0];
        EXPECT_TRUE(x == 1 || x + 1 == Integer(1) * 244140625) << x;  // 5^12
        EXPECT_EQ(cp.point[1], 0);
        EXPECT_EQ(cp.hessian_form.rank(), 2u);
    }
}

TEST(CriticalPoints, DegenerateIsRejected) {
    // x^3 has a degenerate critical point at 0 mod 3.
    EXPECT_THROW(critical_points(PhasePolynomial::parse("x^3", 3)), std::domain_error);
    // 3x^2 - 3 and its derivative 6x both vanish mod 2 at x = 1.
    EXPECT_THROW(critical_points(PhasePolynomial::parse("x^3-3x", 2)), std::domain_error);
}

TEST(OscillatoryIntegral, MatchesNaiveSum) {
    const std::vector<std::pair<std::string, std::int64_t>> cases{{"x^3-3x", 5}, {"x^2+x*y+2y^2", 3}, {"x^3+y^2-x", 7}};
    for (const auto& [text, p] : cases) {
        auto f = PhasePolynomial::parse(text, p);
        for (int m = 1; m <= 2; ++m) {
            Rational t = rational_pow(Rational(p), -2 * m);
            auto r = exact_oscillatory_integral(f, t, AdditiveCharacter::standard(f.place()));
            if (f.num_vars() == 2 && r.level > 3) continue;
            EXPECT_LT(std::abs(r.value - naive_integral(f.polynomial(), t, p, std::max(r.level, 2 * m))), 1e-9)
                << text << " p=" << p << " m=" << m;
        }
    }
}

TEST(StationaryPhase, NondegenerateCasesAgreeExactly) {
    const std::vector<std::pair<std::string, std::int64_t>> cases{
        {"x^3-3x", 5}, {"x^3-3x+y^2", 5}, {"x^2+x*y+2y^2", 3}, {"x^3+y^3-3x-3y", 7}, {"x^2+x*y+y^2", 2}};
    for (const auto& [text, p] : cases) {
        auto f = PhasePolynomial::parse(text, p);
        auto rep = compare_stationary(f, 1, 3, AdditiveCharacter::standard(f.place()), 1e-10);
        ASSERT_TRUE(rep.threshold) << text << " p=" << p;
        for (const auto& row : rep.rows)
            if (row.m >= *rep.threshold) EXPECT_LT(row.difference, 1e-10) << text << " m=" << row.m;
    }
}

TEST(StationaryPhase, RejectsNonSquareScale) {
    auto f = PhasePolynomial::parse("x^3-3x", 5);
    const auto psi = AdditiveCharacter::standard(f.place());
    EXPECT_THROW(stationary_phase_prediction(f, Rational(1, 5), psi), std::invalid_argument);
    EXPECT_THROW(stationary_phase_prediction(f, Rational(2, 25), psi), std::invalid_argument);
    EXPECT_THROW(stationary_phase_prediction(f, Rational(1), psi), std::invalid_argument);
}
