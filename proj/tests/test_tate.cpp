#include <gtest/gtest.h>

#include <cstdlib>

#include "localwitt/tate.hpp"

using namespace localwitt;

namespace {

// F(f)(y) from a Riemann sum over each coset c + p^k Z_p, refined to p^{k+N}.
Complex numeric_fourier_at(const PadicTestFunction& f, const Rational& y, const AdditiveCharacter& psi, int N) {
    const std::int64_t p = f.prime();
    Complex total = 0;
    for (const auto& [key, w] : f.terms()) {
        const auto& [k, c] = key;
        const Rational pk = rational_pow(Rational(p), k);
        const auto count = checked_power(p, N, default_term_budget);
        Complex s = 0;
        for (std::uint64_t z = 0; z < count; ++z) s += character_eval((c + pk * Integer(z)) * y, psi);
        total += w * s / static_cast<double>(count) * std::pow(static_cast<double>(p), -k);
    }
    return total;
}

// Pairing with |x|^s (x, d) dx by brute force: refine to level N and drop
// the cosets near 0, whose contribution is O(p^{-(N-2)(1+Re s)}).
Complex truncated_zeta(const PadicTestFunction& f, const MultiplicativeCharacter& chi, int N) {
    const std::int64_t p = f.prime();
    const Place place = Place::padic(p);
    Complex total = 0;
    const PadicTestFunction fine = f.refined(N);
    for (const auto& [key, w] : fine.terms()) {
        const Rational& c = key.second;
        if (c == 0) continue;
        const int v = valuation(c, p);
        if (N - v < (p == 2 ? 3 : 1)) continue;  // within p^{-N+2} of 0, also truncated
        total += w * std::pow(static_cast<double>(p), -N) * std::exp(-static_cast<double>(v) * chi.s * std::log(double(p))) *
                 static_cast<double>(to_int(hilbert_symbol(c, chi.twist, place)));
    }
    return total;
}

}  // namespace

TEST(PadicTestFunction, CanonicalCentersAndEvaluation) {
    auto f = PadicTestFunction::indicator(3, Rational(10), 2);
    EXPECT_EQ(f.terms().begin()->first.second, Rational(1));  // 10 = 1 mod 9
    EXPECT_EQ(f(Rational(19)), Complex(1.0));
    EXPECT_EQ(f(Rational(2)), Complex(0.0));
    auto g = f + (-1.0) * f;
    EXPECT_TRUE(g.terms().empty());
    EXPECT_EQ(PadicTestFunction::indicator(3, 0, 0).refined(1).terms().size(), 3u);
    EXPECT_THROW(PadicTestFunction(4), std::invalid_argument);
}

TEST(PadicFourier, MatchesRiemannSums) {
    for (std::int64_t p : {2, 3, 5}) {
        const auto psi = AdditiveCharacter::standard(Place::padic(p));
        for (const auto& f : default_padic_family(p)) {
            auto ff = padic_fourier(f, psi);
            for (Rational y : {Rational(0), Rational(1), Rational(1, p), Rational(2, p * p), Rational(p + 1, p * p * p)}) {
                EXPECT_LT(std::abs(ff(y) - numeric_fourier_at(f, y, psi, 5)), 1e-10)
                    << "p=" << p << " f=" << f.label() << " y=" << to_string(y);
            }
        }
    }
}

TEST(PadicFourier, InversionAndPlancherel) {
    for (std::int64_t p : {2, 3, 7}) {
        const auto psi = AdditiveCharacter::standard(Place::padic(p));
        for (const auto& f : default_padic_family(p)) {
            auto ff = padic_fourier(padic_fourier(f, psi), psi);
            EXPECT_LT(max_difference(ff, f.reflected()), 1e-12) << "p=" << p << " " << f.label();
            EXPECT_NEAR(padic_fourier(f, psi).l2_norm_squared(), f.l2_norm_squared(), 1e-12);
        }
    }
}

TEST(PadicZeta, MatchesTruncatedSums) {
    for (std::int64_t p : {2, 3, 5}) {
        const std::int64_t u = p == 2 ? 5 : detail::least_nonresidue(p);
        for (Rational d : {Rational(1), Rational(u), Rational(p), Rational(u * p), Rational(-1)}) {
            for (Complex s : {Complex(2.0, 0.0), Complex(2.5, 0.7)}) {
                MultiplicativeCharacter chi{s, d};
                for (const auto& f : default_padic_family(p)) {
                    const int N = p == 2 ? 11 : p == 3 ? 6 : 4;
                    EXPECT_LT(std::abs(padic_zeta(f, chi) - truncated_zeta(f, chi, N)), 1e-7)
                        << "p=" << p << " d=" << to_string(d) << " f=" << f.label();
                }
            }
        }
    }
}

TEST(PadicZeta, UnramifiedClosedForm) {
    // Pairing of 1_Zp with |x|^s is (1 - 1/p) / (1 - p^{-1-s}).
    for (std::int64_t p : {2, 3, 11}) {
        const Complex s(-0.4, 0.3);
        const Complex expected = (1.0 - 1.0 / p) / (1.0 - std::pow(double(p), -1.0 - s));
        EXPECT_LT(std::abs(padic_zeta(PadicTestFunction::indicator(p, 0, 0), {s, 1}) - expected), 1e-12);
    }
    EXPECT_THROW(padic_zeta(PadicTestFunction::indicator(3, 0, 0), {Complex(-1.0, 0.0), 1}), std::domain_error);
}

TEST(TateCheck, LocalFunctionalEquationAllTwists) {
    for (std::int64_t p : {2, 3, 5, 7}) {
        const auto psi = AdditiveCharacter::standard(Place::padic(p));
        const std::int64_t u = p == 2 ? 5 : detail::least_nonresidue(p);
        std::vector<Rational> twists{Rational(1), Rational(u), Rational(p), Rational(u * p)};
        if (p == 2) twists.insert(twists.end(), {Rational(-1), Rational(-5), Rational(2), Rational(-2)});
        for (const auto& d : twists)
            for (Complex s : {Complex(-0.5, 0.0), Complex(-0.3, 1.2), Complex(-0.8, -0.4)}) {
                auto rep = tate_check(p, {s, d}, default_padic_family(p), psi);
                std::size_t kept = 0;
                for (const auto& row : rep.rows) kept += !row.excluded;
                EXPECT_GE(kept, 3u) << "p=" << p << " d=" << to_string(d);
                EXPECT_LT(rep.max_deviation, 1e-9) << "p=" << p << " d=" << to_string(d) << " s=" << s;
            }
    }
}

TEST(TateCheck, UnramifiedGammaFactor) {
    for (std::int64_t p : {3, 5}) {
        const Complex s(-0.35, 0.2);
        auto rep = tate_check(p, {s, 1}, default_padic_family(p), AdditiveCharacter::standard(Place::padic(p)));
        const Complex expected = (1.0 - std::pow(double(p), s)) / (1.0 - std::pow(double(p), -1.0 - s));
        EXPECT_LT(std::abs(rep.c - expected), 1e-10);
    }
}

TEST(TateCheck, Preconditions) {
    const auto psi = AdditiveCharacter::standard(Place::padic(3));
    EXPECT_THROW(tate_check(3, {Complex(0.2, 0.0), 1}, default_padic_family(3), psi), std::domain_error);
    auto two = default_padic_family(3);
    two.erase(two.begin() + 2, two.end());
    EXPECT_THROW(tate_check(3, {Complex(-0.5, 0.0), 1}, two, psi), std::invalid_argument);
    EXPECT_THROW(tate_check(5, {Complex(-0.5, 0.0), 1}, default_padic_family(3),
                            AdditiveCharacter::standard(Place::padic(5))),
                 std::invalid_argument);
}

TEST(RealFourier, ClosedFormMatchesQuadrature) {
    for (int sign : {1, -1})
        for (const auto& f : default_real_family()) {
            auto ff = real_fourier(f, sign);
            for (double y : {-1.3, -0.2, 0.0, 0.45, 1.1})
                EXPECT_LT(std::abs(ff(y) - real_fourier_numeric(f, y, sign)), 1e-9) << f.label << " y=" << y;
        }
}

TEST(RealZeta, GaussianClosedForm) {
    const RealTestFunction g{{1.0, 0.0, 0.0}, 0.0, 0.0, "gauss"};
    for (double s : {-0.7, -0.2, 0.5, 1.3}) {
        // 2 * int_0^inf x^s exp(-pi x^2) dx = pi^{-(s+1)/2} Gamma((s+1)/2).
        const double expected = std::pow(std::numbers::pi, -(s + 1) / 2) * std::tgamma((s + 1) / 2);
        EXPECT_NEAR(real_zeta(g, {s, 1}).real(), expected, 1e-10);
        EXPECT_NEAR(std::abs(real_zeta(g, {s, -1})), 0.0, 1e-12);
    }
}

TEST(RealTate, FunctionalEquationAndGammaFactor) {
    for (double s : {-0.75, -0.5, -0.2}) {
        auto even = real_tate_check({s, 1}, default_real_family());
        EXPECT_LT(even.max_deviation, 1e-6) << "s=" << s;
        const double expected = std::pow(std::numbers::pi, -s - 0.5) * std::tgamma((s + 1) / 2) / std::tgamma(-s / 2);
        EXPECT_LT(std::abs(even.c - expected), 1e-8) << "s=" << s << " c=" << even.c;
        auto odd = real_tate_check({s, -1}, default_real_family());
        EXPECT_LT(odd.max_deviation, 1e-6) << "s=" << s;
    }
    EXPECT_THROW(real_tate_check({0.3, 1}, default_real_family()), std::domain_error);
}

TEST(RealTate, GammaMatrixRankOne) {
    for (double s : {-0.7, -0.45, -0.1}) {
        auto g = real_gamma_matrix_check(s, default_real_family());
        EXPECT_LT(g.residual, 1e-6) << "s=" << s;
        const Complex expected = std::tgamma(s + 1) * std::pow(2 * std::numbers::pi, -s - 1);
        EXPECT_LT(std::abs(g.c - expected), 1e-8) << "s=" << s;
    }
}

TEST(Sym3, CosetFourierClosedFormMatchesDirectSum) {
    const auto psi = AdditiveCharacter::standard(Place::padic(3));
    const SymMatrix c({{Rational(1), Rational(2), Rational(0)}, {Rational(2), Rational(1), Rational(1)},
                       {Rational(0), Rational(1), Rational(5)}});
    const std::vector<SymMatrix> ys{
        SymMatrix::identity(3),
        SymMatrix::diagonal({Rational(1, 3), Rational(1), Rational(2, 3)}),
        SymMatrix({{Rational(0), Rational(1, 6), Rational(0)}, {Rational(1, 6), Rational(0), Rational(0)},
                   {Rational(0), Rational(0), Rational(1, 3)}}),
        SymMatrix::diagonal({Rational(1, 9), Rational(1), Rational(1)}),
    };
    for (int k : {0, 1})
        for (const auto& y : ys)
            EXPECT_LT(std::abs(sym3_coset_fourier(c, k, y, psi) - sym3_coset_fourier_direct(c, k, y, psi)), 1e-12);
}

TEST(Sym3, CounterRngIsSplittable) {
    CounterRng a(7, 3), b(7, 3), c(7, 4);
    std::vector<std::uint64_t> xs;
    for (int i = 0; i < 100; ++i) xs.push_back(a.next());
    b.seek(50);
    EXPECT_EQ(b.next(), xs[50]);
    EXPECT_NE(c.at(0), xs[0]);
    double mean = 0;
    CounterRng d(1, 1);
    for (int i = 0; i < 100000; ++i) mean += d.uniform();
    EXPECT_NEAR(mean / 100000, 0.5, 0.01);
    for (int i = 0; i < 1000; ++i) EXPECT_LT(d.below(7), 7u);
}

TEST(Sym3, MonteCarloIsReproducibleAcrossWorkerCounts) {
    Sym3McConfig cfg;
    cfg.samples = 20000;
    cfg.rhs_samples = 2000;
    cfg.blocks = 20;
    cfg.bootstrap = 50;
    setenv("LOCALWITT_WORKERS", "1", 1);
    auto a = padic_sym3_mc_check(cfg);
    setenv("LOCALWITT_WORKERS", "3", 1);
    auto b = padic_sym3_mc_check(cfg);
    unsetenv("LOCALWITT_WORKERS");
    ASSERT_EQ(a.rows.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(a.rows[i].lhs, b.rows[i].lhs);
        EXPECT_EQ(a.rows[i].rhs, b.rows[i].rhs);
    }
    EXPECT_EQ(a.sigma, b.sigma);
    cfg.seed += 1;
    EXPECT_NE(padic_sym3_mc_check(cfg).rows[0].lhs, a.rows[0].lhs);
}

TEST(Sym3, Preconditions) {
    Sym3McConfig cfg;
    cfg.p = 2;
    EXPECT_THROW(padic_sym3_mc_check(cfg), std::invalid_argument);
    cfg.p = 3;
    cfg.s = 1.5;
    EXPECT_THROW(padic_sym3_mc_check(cfg), std::domain_error);
    cfg.s = 0.5;
    cfg.tests = {{SymMatrix::diagonal({Rational(1), Rational(1), Rational(3)}), 1, "singular"},
                 {SymMatrix::identity(3), 1, "I"}};
    EXPECT_THROW(padic_sym3_mc_check(cfg), std::invalid_argument);
}
