#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace localwitt {

using Complex = std::complex<double>;

/// Largest n for which the 2^n-term sums are evaluated.
constexpr int max_shintani_n = 20;

/// Shintani's Gamma-matrix entries v_ij(s) for Sym_n(R):
///   v_ij(s) = sum over sign tuples with exactly i entries +1 of
///     exp(pi i/2 [ sum_{k<=j} (k+s) e_k - sum_{k>j} (k-j+s) e_k ]).
struct GammaMatrix {
    int n = 0;
    Complex s;
    std::vector<std::vector<Complex>> v;  // v[i][j], 0 <= i,j <= n
};

namespace detail {

inline void check_shintani_n(int n) {
    if (n < 1 || n > max_shintani_n)
        throw std::invalid_argument("shintani: n must lie in [1, " + std::to_string(max_shintani_n) + "]");
}

/// One summand. The integer part of the angle is reduced mod 4 exactly, so
/// only the s-dependent part goes through floating point.
inline Complex shintani_term(int n, int j, std::uint32_t plus_mask, Complex s) {
    long long integer_part = 0;
    long long s_coeff = 0;
    for (int k = 1; k <= n; ++k) {
        const int e = (plus_mask >> (k - 1)) & 1u ? 1 : -1;
        if (k <= j) {
            integer_part += static_cast<long long>(k) * e;
            s_coeff += e;
        } else {
            integer_part -= static_cast<long long>(k - j) * e;
            s_coeff -= e;
        }
    }
    static const Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex iota(0.0, 1.0);
    return quarter[((integer_part % 4) + 4) % 4] *
           std::exp(iota * (std::numbers::pi / 2.0) * s * static_cast<double>(s_coeff));
}

}  // namespace detail

inline Complex v_entry(int n, int i, int j, Complex s) {
    detail::check_shintani_n(n);
    if (i < 0 || i > n || j < 0 || j > n) throw std::invalid_argument("v_entry: index out of range");
    Complex sum = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == i) sum += detail::shintani_term(n, j, mask, s);
    return sum;
}

inline GammaMatrix gamma_matrix(int n, Complex s) {
    detail::check_shintani_n(n);
    GammaMatrix g{n, s, std::vector<std::vector<Complex>>(n + 1, std::vector<Complex>(n + 1, 0.0))};
    for (int j = 0; j <= n; ++j)
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
            g.v[std::popcount(mask)][j] += detail::shintani_term(n, j, mask, s);
    return g;
}

/// c_j = sum_i v_ij.
inline std::vector<Complex> c_vector(const GammaMatrix& g) {
    std::vector<Complex> c(g.n + 1, 0.0);
    for (int j = 0; j <= g.n; ++j)
        for (int i = 0; i <= g.n; ++i) c[j] += g.v[i][j];
    return c;
}

/// c'_j = sum_i (-1)^{n-i} v_ij.
inline std::vector<Complex> c_prime_vector(const GammaMatrix& g) {
    std::vector<Complex> c(g.n + 1, 0.0);
    for (int j = 0; j <= g.n; ++j)
        for (int i = 0; i <= g.n; ++i) c[j] += ((g.n - i) % 2 == 0 ? 1.0 : -1.0) * g.v[i][j];
    return c;
}

inline std::vector<Complex> c_vector(int n, Complex s) { return c_vector(gamma_matrix(n, s)); }
inline std::vector<Complex> c_prime_vector(int n, Complex s) { return c_prime_vector(gamma_matrix(n, s)); }

inline Complex half_pi_cos(int k, Complex s) { return std::cos(std::numbers::pi / 2.0 * (static_cast<double>(k) + s)); }
inline Complex half_pi_sin(int k, Complex s) { return std::sin(std::numbers::pi / 2.0 * (static_cast<double>(k) + s)); }

/// 2^n prod_{k=1}^{j} cos(pi/2 (k+s)) prod_{k=1}^{n-j} cos(pi/2 (k+s)).
inline Complex c_closed_form(int n, int j, Complex s) {
    Complex r = std::pow(2.0, n);
    for (int k = 1; k <= j; ++k) r *= half_pi_cos(k, s);
    for (int k = 1; k <= n - j; ++k) r *= half_pi_cos(k, s);
    return r;
}

/// (2i)^n (-1)^{n-j} prod_{k=1}^{j} sin(pi/2 (k+s)) prod_{k=1}^{n-j} sin(pi/2 (k+s)).
inline Complex c_prime_closed_form(int n, int j, Complex s) {
    Complex r = std::pow(Complex(0.0, 2.0), n) * ((n - j) % 2 == 0 ? 1.0 : -1.0);
    for (int k = 1; k <= j; ++k) r *= half_pi_sin(k, s);
    for (int k = 1; k <= n - j; ++k) r *= half_pi_sin(k, s);
    return r;
}

/// (-1)^{j(n-j)/2}: the sign pattern attached to |det|^s (n odd).
inline int real1_sign(int n, int j) { return ((j * (n - j) / 2) % 2 == 0) ? 1 : -1; }

/// (-1)^{j(n-j)/2 + j}: the pattern attached to sgn(det)|det|^s (n odd).
inline int real2_sign(int n, int j) { return (((j * (n - j) / 2) + j) % 2 == 0) ? 1 : -1; }

struct SignVectorCheck {
    bool holds = false;
    std::vector<Complex> c_normalized;        // c_j / c_0
    std::vector<Complex> c_prime_normalized;  // c'_j / c'_0
    std::vector<int> expected_c;
    std::vector<int> expected_c_prime;
    double max_deviation = 0.0;
};

/// For odd n and generic s: c_j / c_0 = (-1)^{j(n-j)/2} and
/// c'_j / c'_0 = (-1)^{j(n-j)/2 + j}, entrywise within tol.
inline SignVectorCheck check_sign_vectors(int n, Complex s, double tol = 1e-10) {
    if (n % 2 == 0) throw std::invalid_argument("check_sign_vectors: n must be odd");
    detail::check_shintani_n(n);
    for (int k = 1; k <= n; ++k)
        if (std::abs(half_pi_cos(k, s)) < 1e-8 || std::abs(half_pi_sin(k, s)) < 1e-8)
            throw std::invalid_argument("check_sign_vectors: s is at a zero of the cosine/sine products");
    auto g = gamma_matrix(n, s);
    auto c = c_vector(g);
    auto cp = c_prime_vector(g);
    SignVectorCheck out;
    for (int j = 0; j <= n; ++j) {
        out.c_normalized.push_back(c[j] / c[0]);
        out.c_prime_normalized.push_back(cp[j] / cp[0]);
        out.expected_c.push_back(real1_sign(n, j));
        out.expected_c_prime.push_back(real2_sign(n, j));
        out.max_deviation = std::max(out.max_deviation, std::abs(out.c_normalized[j] - Complex(out.expected_c[j], 0)));
        out.max_deviation =
            std::max(out.max_deviation, std::abs(out.c_prime_normalized[j] - Complex(out.expected_c_prime[j], 0)));
    }
    out.holds = out.max_deviation < tol;
    return out;
}

}  // namespace localwitt
