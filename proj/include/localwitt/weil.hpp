#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "char_sum.hpp"
#include "quadratic_form.hpp"

namespace localwitt {

/// Weil's constant gamma(q, psi): an 8th root of unity.
struct WeilConstant {
    std::complex<double> value{1.0, 0.0};
    int eighth_root_index = 0;  // value ~ exp(2 pi i index / 8)
    int stabilized_at = 0;      // first level of the stable window (p-adic)
    Place place = Place::real();
    int convention = +1;
};

inline std::complex<double> eighth_root(int index) {
    double a = std::numbers::pi * static_cast<double>(((index % 8) + 8) % 8) / 4.0;
    return {std::cos(a), std::sin(a)};
}

namespace detail {

inline WeilConstant snap_eighth_root(std::complex<double> v, int level, const Place& place, int convention) {
    if (std::abs(std::abs(v) - 1.0) > 1e-9)
        throw std::runtime_error("Weil constant has modulus " + std::to_string(std::abs(v)) + ", expected 1");
    int index = static_cast<int>(std::lround(std::arg(v) * 4.0 / std::numbers::pi));
    index = ((index % 8) + 8) % 8;
    if (std::abs(v - eighth_root(index)) > 1e-6)
        throw std::runtime_error("Weil constant is not an 8th root of unity");
    return {v, index, level, place, convention};
}

}  // namespace detail

/// Integral of psi(a x^2) over p^{-m} Z_p, as an exact normalized Gauss sum.
inline std::complex<double> gauss_integral(const Rational& a, std::int64_t p, int m, int sign,
                                           std::uint64_t budget = default_term_budget) {
    Polynomial q(1);
    q.add_term({2}, a * rational_pow(Rational(p), -2 * m));
    return integrate_unit_polydisc(q, p, sign, budget) * std::pow(static_cast<double>(p), m);
}

/// Determinant of the bilinear form (x,y) -> q(x+y) - q(x) - q(y), i.e.
/// 2^n a_1 ... a_n. This is the determinant entering |det q|^{-1/2} in Weil's
/// functional equation.
inline Rational weil_determinant(const QuadraticForm& q) {
    return q.determinant() * rational_pow(Rational(2), static_cast<int>(q.rank()));
}

/// Highest level at which the stabilization window may start.
constexpr int max_stabilization_level = 6;

/// gamma(a x^2, psi). At a p-adic place the integrals I_m of psi(a x^2) over
/// p^{-m} Z_p are computed exactly for the square-class representative of a;
/// once I_m = I_{m+1} = I_{m+2} (within 1e-10) gamma = I_m |2a|^{1/2}.
inline WeilConstant gamma_rank1(const Rational& a, const AdditiveCharacter& psi) {
    detail::require_nonzero(a, "gamma_rank1");
    if (psi.place.is_real()) {
        int index = (a > 0 ? 1 : -1) * psi.sign;
        return {eighth_root(index), (index + 8) % 8, 0, psi.place, psi.sign};
    }
    const std::int64_t p = psi.place.prime();
    const Rational rep(square_class(a, psi.place).representative);
    std::vector<std::complex<double>> levels;
    for (int m = 0; m <= max_stabilization_level + 2; ++m) {
        levels.push_back(gauss_integral(rep, p, m, psi.sign));
        if (m < 2) continue;
        const int start = m - 2;
        if (std::abs(levels[start] - levels[start + 1]) < 1e-10 && std::abs(levels[start] - levels[start + 2]) < 1e-10) {
            double norm = std::sqrt(padic_abs(2 * rep, p).convert_to<double>());
            return detail::snap_eighth_root(levels[start] * norm, start, psi.place, psi.sign);
        }
    }
    throw std::runtime_error("gamma_rank1: Gauss integrals for a = " + to_string(a) + " at p = " + std::to_string(p) +
                             " did not stabilize by level " + std::to_string(max_stabilization_level) +
                             " (last |I_m| = " + std::to_string(std::abs(levels.back())) + ")");
}

/// gamma is a homomorphism on the Witt group: multiply over the diagonal.
inline WeilConstant gamma_form(const QuadraticForm& q, const AdditiveCharacter& psi) {
    require_same_place(q.place(), psi.place, "gamma_form");
    WeilConstant g{{1.0, 0.0}, 0, 0, psi.place, psi.sign};
    for (const auto& a : q.coeffs()) {
        WeilConstant c = gamma_rank1(a, psi);
        g.value *= c.value;
        g.eighth_root_index = (g.eighth_root_index + c.eighth_root_index) % 8;
        g.stabilized_at = std::max(g.stabilized_at, c.stabilized_at);
    }
    return g;
}

/// gamma(q, psi) for a diagonal p-adic form from n-dimensional Gauss
/// integrals over p^{-m} Z_p^n, summed directly without splitting into
/// rank-1 factors. Coefficients are replaced by square-class
/// representatives first. Throws BudgetExceeded if a level is too large.
inline WeilConstant gamma_form_direct(const QuadraticForm& q, const AdditiveCharacter& psi,
                                      std::uint64_t budget = default_term_budget) {
    require_same_place(q.place(), psi.place, "gamma_form_direct");
    if (psi.place.is_real()) throw std::invalid_argument("gamma_form_direct: p-adic place required");
    const std::int64_t p = psi.place.prime();
    const std::size_t n = q.rank();
    if (n == 0) return {{1.0, 0.0}, 0, 0, psi.place, psi.sign};
    std::vector<Rational> reps;
    for (const auto& a : q.coeffs()) reps.emplace_back(square_class(a, psi.place).representative);
    std::vector<std::complex<double>> levels;
    for (int m = 0; m <= max_stabilization_level + 2; ++m) {
        Polynomial f(n);
        const Rational scale = rational_pow(Rational(p), -2 * m);
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial::Exponents e(n, 0);
            e[i] = 2;
            f.add_term(e, reps[i] * scale);
        }
        const int level = reduce_phase(f, p).level;
        if (checked_power(p, level * static_cast<int>(n), budget) > budget)
            throw BudgetExceeded("gamma_form_direct: p^(n*" + std::to_string(level) + ") exceeds the term budget");
        levels.push_back(integrate_unit_polydisc_at_level(f, p, psi.sign, level, budget) *
                         std::pow(static_cast<double>(p), static_cast<double>(m) * n));
        if (m < 2) continue;
        const int start = m - 2;
        if (std::abs(levels[start] - levels[start + 1]) < 1e-10 && std::abs(levels[start] - levels[start + 2]) < 1e-10) {
            Rational det = rational_pow(Rational(2), static_cast<int>(n));
            for (const auto& a : reps) det *= a;
            const double norm = std::sqrt(padic_abs(det, p).convert_to<double>());
            return detail::snap_eighth_root(levels[start] * norm, start, psi.place, psi.sign);
        }
    }
    throw std::runtime_error("gamma_form_direct: no stable window by level " + std::to_string(max_stabilization_level));
}

/// The ball center + p^{-m} Z_p^n (m is the radius exponent).
struct BallIndicator {
    std::vector<Rational> center;
    int radius_exponent = 0;

    std::size_t dimension() const { return center.size(); }
};

struct WeilEquationCheck {
    std::complex<double> lhs;
    std::complex<double> rhs;
    double residual = 0.0;
    WeilConstant gamma;
};

/// Both sides of F(psi(q)) = gamma(q) |det q|^{-1/2} psi(-q^dual) paired with
/// a ball indicator phi:
///   LHS = integral over the ball of psi(q(x)),
///   RHS = gamma |det q|^{-1/2} * integral of psi(-q^dual(y)) * phiv(y),
/// where phiv(y) = integral phi(x) psi(-x.y) dx = p^{mn} psi(-c.y) 1_{p^m Z_p^n}(y).
/// Each side is an exact finite character sum over (Z/p^L)^n.
inline WeilEquationCheck verify_weil_equation(const QuadraticForm& q, const BallIndicator& ball,
                                              const AdditiveCharacter& psi,
                                              std::uint64_t budget = default_term_budget) {
    require_same_place(q.place(), psi.place, "verify_weil_equation");
    if (q.place().is_real()) throw std::invalid_argument("verify_weil_equation: p-adic place required");
    const std::size_t n = q.rank();
    if (n == 0 || n > 2) throw std::invalid_argument("verify_weil_equation: rank must be 1 or 2");
    if (ball.dimension() != n) throw std::invalid_argument("verify_weil_equation: ball dimension != rank");
    const std::int64_t p = q.place().prime();
    const int m = ball.radius_exponent;
    const Rational pm = rational_pow(Rational(p), m);

    Polynomial lhs_phase(n), rhs_phase(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& a = q.coeffs()[i];
        const Rational& c = ball.center[i];
        // a (c + p^{-m} z)^2
        Polynomial::Exponents e0(n, 0), e1(n, 0), e2(n, 0);
        e1[i] = 1;
        e2[i] = 2;
        lhs_phase.add_term(e0, a * c * c);
        lhs_phase.add_term(e1, 2 * a * c / pm);
        lhs_phase.add_term(e2, a / (pm * pm));
        // -(p^m z)^2 / (4a) - c p^m z
        rhs_phase.add_term(e2, -pm * pm / (4 * a));
        rhs_phase.add_term(e1, -c * pm);
    }
    auto direct = [&](const Polynomial& f) {
        return integrate_unit_polydisc_at_level(f, p, psi.sign, reduce_phase(f, p).level, budget);
    };
    // Check both budgets before evaluating either side.
    for (const auto* f : {&lhs_phase, &rhs_phase}) {
        std::uint64_t side = checked_power(p, reduce_phase(*f, p).level, budget);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (side > budget || total > budget / side)
                throw BudgetExceeded("verify_weil_equation: p^(n*L) exceeds the term budget of " +
                                     std::to_string(budget));
            total *= side;
        }
    }
    WeilEquationCheck out;
    out.gamma = gamma_form(q, psi);
    out.lhs = direct(lhs_phase) * std::pow(static_cast<double>(p), static_cast<double>(m) * n);
    const double det_abs = padic_abs(weil_determinant(q), p).convert_to<double>();
    out.rhs = out.gamma.value / std::sqrt(det_abs) * direct(rhs_phase);
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

struct GammaEpsilonCheck {
    bool holds = false;
    std::complex<double> gamma_ratio;  // gamma(q) / gamma(q')
    Sign epsilon = Sign::plus;         // eps(q, q')
};

/// gamma((q) - (q'), psi) = eps(q, q') for (q) - (q') in W^2.
inline GammaEpsilonCheck gamma_matches_epsilon(const QuadraticForm& q, const QuadraticForm& q2,
                                               const AdditiveCharacter& psi) {
    WittFiltration level = witt_filtration_level(q, q2);
    if (level.level < 2)
        throw std::invalid_argument("gamma_matches_epsilon: (q) - (q') has filtration level " +
                                    std::to_string(level.level) + ", need >= 2");
    GammaEpsilonCheck out;
    out.gamma_ratio = gamma_form(q, psi).value * std::conj(gamma_form(q2, psi).value);
    out.epsilon = *level.w2_class;
    out.holds = std::abs(out.gamma_ratio - std::complex<double>(to_int(out.epsilon), 0.0)) < 1e-6;
    return out;
}

}  // namespace localwitt
