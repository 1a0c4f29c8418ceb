#include <gtest/gtest.h>

#include "localwitt/shintani.hpp"

using namespace localwitt;

namespace {

// v_ij(s) by enumerating sign tuples directly.
Complex naive_v(int n, int i, int j, Complex s) {
    Complex sum = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != i) continue;
        Complex arg = 0;
        for (int k = 1; k <= n; ++k) {
            const double e = (mask >> (k - 1)) & 1u ? 1.0 : -1.0;
            arg += k <= j ? (double(k) + s) * e : -(double(k - j) + s) * e;
        }
        sum += std::exp(Complex(0.0, std::numbers::pi / 2.0) * arg);
    }
    return sum;
}

}  // namespace

TEST(GammaMatrix, EntriesMatchEnumeration) {
    for (int n = 1; n <= 6; ++n)
        for (Complex s : {Complex(-0.3, 0.0), Complex(0.25, 1.5)}) {
            auto g = gamma_matrix(n, s);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    const Complex want = naive_v(n, i, j, s);
                    const double scale = std::exp(std::numbers::pi / 2.0 * std::abs(s.imag()) * n) * (1 << n);
                    EXPECT_LT(std::abs(g.v[i][j] - want), 1e-13 * scale);
                }
        }
}

TEST(GammaMatrix, ColumnSumsMatchClosedForms) {
    for (int n = 1; n <= 9; ++n)
        for (Complex s : {Complex(-0.37, 0.0), Complex(0.4, -0.7)}) {
            auto c = c_vector(n, s), cp = c_prime_vector(n, s);
            for (int j = 0; j <= n; ++j) {
                EXPECT_LT(std::abs(c[j] - c_closed_form(n, j, s)), 1e-9 * std::max(1.0, std::abs(c[j])));
                EXPECT_LT(std::abs(cp[j] - c_prime_closed_form(n, j, s)), 1e-9 * std::max(1.0, std::abs(cp[j])));
            }
        }
}

TEST(GammaMatrix, SignVectorsForOddN) {
    for (int n : {1, 3, 5, 7, 9, 11})
        for (Complex s : {Complex(-0.3, 0.0), Complex(0.15, 0.0), Complex(0.2, 2.0)}) {
            auto chk = check_sign_vectors(n, s);
            EXPECT_TRUE(chk.holds) << "n=" << n << " dev=" << chk.max_deviation;
        }
    EXPECT_EQ(check_sign_vectors(3, Complex(-0.3, 0.0)).expected_c, (std::vector<int>{1, -1, -1, 1}));
    EXPECT_EQ(check_sign_vectors(3, Complex(-0.3, 0.0)).expected_c_prime, (std::vector<int>{1, 1, -1, -1}));
}

TEST(GammaMatrix, Preconditions) {
    EXPECT_THROW(gamma_matrix(0, 0.1), std::invalid_argument);
    EXPECT_THROW(gamma_matrix(max_shintani_n + 1, 0.1), std::invalid_argument);
    EXPECT_THROW(check_sign_vectors(2, 0.1), std::invalid_argument);
    EXPECT_THROW(check_sign_vectors(3, 0.0), std::invalid_argument);
}
