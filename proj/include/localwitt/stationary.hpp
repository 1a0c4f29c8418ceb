#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "char_sum.hpp"
#include "weil.hpp"

namespace localwitt {

/// An integer-coefficient polynomial phase in 1 or 2 variables over Z_p.
class PhasePolynomial {
public:
    PhasePolynomial(Polynomial f, std::int64_t p) : f_(std::move(f)), place_(Place::padic(p)) {
        if (f_.num_vars() < 1 || f_.num_vars() > 2)
            throw std::invalid_argument("phase polynomial: 1 or 2 variables supported");
        if (f_.total_degree() < 1) throw std::invalid_argument("phase polynomial: must be nonconstant");
        for (const auto& [e, c] : f_.terms())
            if (den(c) != 1) throw std::invalid_argument("phase polynomial: coefficients must be integers");
    }

    static PhasePolynomial parse(std::string_view text, std::int64_t p) { return {parse_polynomial(text), p}; }

    const Polynomial& polynomial() const { return f_; }
    std::size_t num_vars() const { return f_.num_vars(); }
    std::int64_t prime() const { return place_.prime(); }
    const Place& place() const { return place_; }

private:
    Polynomial f_;
    Place place_;
};

/// A critical point of f in Z_p^n, known modulo p^precision.
struct CriticalPoint {
    std::vector<Integer> residue_mod_p;  // the simple root of grad f mod p
    std::vector<Integer> point;          // lift mod p^precision
    int precision = 0;                   // grad f(point) = 0 mod p^precision (certified)
    QuadraticForm hessian_form;          // q with f(x) - f(x0) ~ q(x - x0)
    Rational hessian_determinant;        // det of the second-derivative matrix
    Integer phase_value;                 // f(point) mod p^precision
};

/// Largest lifting precision keeping p^K below 2^62.
inline int max_lift_precision(std::int64_t p) {
    int k = 0;
    std::uint64_t r = 1;
    while (r <= (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(p)) {
        r *= static_cast<std::uint64_t>(p);
        ++k;
    }
    return k;
}

namespace detail {

inline Integer mod_int(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0) r += m;
    return r;
}

inline Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer t = 0, nt = 1, r = m, nr = mod_int(a, m);
    while (nr != 0) {
        Integer q = r / nr;
        Integer tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("inverse_mod: not invertible");
    return mod_int(t, m);
}

inline Integer eval_int(const Polynomial& f, const std::vector<Integer>& x) {
    std::vector<Rational> xr(x.begin(), x.end());
    Rational v = f.evaluate(xr);
    if (den(v) != 1) throw std::logic_error("eval_int: non-integral value");
    return num(v);
}

}  // namespace detail

/// Finds every simple root of grad f mod p and Hensel-lifts it to precision
/// p^precision. A root whose Hessian is singular mod p is rejected.
inline std::vector<CriticalPoint> critical_points(const PhasePolynomial& phase, int precision = 12) {
    const Polynomial& f = phase.polynomial();
    const std::size_t n = f.num_vars();
    const std::int64_t p = phase.prime();
    if (precision < 1 || precision > max_lift_precision(p))
        throw std::invalid_argument("critical_points: precision out of range");
    std::vector<Polynomial> grad;
    std::vector<std::vector<Polynomial>> hess(n);
    for (std::size_t i = 0; i < n; ++i) grad.push_back(f.derivative(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) hess[i].push_back(grad[i].derivative(j));

    auto hessian_at = [&](const std::vector<Integer>& x) {
        std::vector<std::vector<Integer>> h(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h[i][j] = detail::eval_int(hess[i][j], x);
        return h;
    };
    auto det = [&](const std::vector<std::vector<Integer>>& h) -> Integer {
        return n == 1 ? h[0][0] : h[0][0] * h[1][1] - h[0][1] * h[1][0];
    };

    std::vector<CriticalPoint> out;
    const Integer P(p);
    const Integer PK = boost::multiprecision::pow(P, static_cast<unsigned>(precision));
    std::vector<Integer> x(n, 0);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = Integer(r % static_cast<std::uint64_t>(p));
            r /= static_cast<std::uint64_t>(p);
        }
        bool critical = true;
        for (const auto& g : grad) critical = critical && detail::mod_int(detail::eval_int(g, x), P) == 0;
        if (!critical) continue;
        if (detail::mod_int(det(hessian_at(x)), P) == 0) {
            std::string where;
            for (std::size_t i = 0; i < n; ++i) where += (i ? "," : "") + x[i].str();
            throw std::domain_error("critical_points: degenerate critical point mod " + std::to_string(p) + " at (" +
                                    where + ") of " + f.to_string());
        }
        // Newton iteration on grad f modulo p^precision.
        std::vector<Integer> y = x;
        for (int iter = 0; iter < 64; ++iter) {
            std::vector<Integer> g(n);
            bool done = true;
            for (std::size_t i = 0; i < n; ++i) {
                g[i] = detail::mod_int(detail::eval_int(grad[i], y), PK);
                done = done && g[i] == 0;
            }
            if (done) break;
            auto h = hessian_at(y);
            Integer dinv = detail::inverse_mod(det(h), PK);
            if (n == 1) {
                y[0] = detail::mod_int(y[0] - g[0] * dinv, PK);
            } else {
                Integer s0 = h[1][1] * g[0] - h[0][1] * g[1];
                Integer s1 = -h[1][0] * g[0] + h[0][0] * g[1];
                y[0] = detail::mod_int(y[0] - s0 * dinv, PK);
                y[1] = detail::mod_int(y[1] - s1 * dinv, PK);
            }
        }
        for (const auto& g : grad)
            if (detail::mod_int(detail::eval_int(g, y), PK) != 0)
                throw std::runtime_error("critical_points: Hensel lifting failed to converge");

        auto h = hessian_at(y);
        std::vector<std::vector<Rational>> half(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) half[i][j] = Rational(h[i][j]) / 2;
        auto [form, radical] = diagonalize(SymMatrix(half), phase.place());
        if (radical != 0) throw std::logic_error("critical_points: singular Hessian representative");
        out.push_back(CriticalPoint{x, y, precision, form, Rational(det(h)),
                                    detail::mod_int(detail::eval_int(f, y), PK)});
    }
    return out;
}

struct PhaseIntegralResult {
    std::complex<double> value;
    int level = 0;                   // K: the sum runs over (Z/p^K)^n
    bool stabilized = false;
    bool checked_next_level = false; // value recomputed at K+1 (else certified by periodicity)
};

namespace detail {

inline std::complex<double> oscillatory_at_level(const Polynomial& g, std::int64_t p, int sign, int level,
                                                 std::uint64_t budget) {
    if (g.num_vars() > 1 && g.is_separable()) {
        std::complex<double> v = unit_root(sign > 0 ? frac_part(g.constant_term(), p) : -frac_part(g.constant_term(), p));
        for (std::size_t i = 0; i < g.num_vars(); ++i)
            v *= integrate_unit_polydisc_at_level(g.univariate_part(i), p, sign, level, budget);
        return v;
    }
    return integrate_unit_polydisc_at_level(g, p, sign, level, budget);
}

/// t = u p^{-2m} with u a unit square; returns m.
inline int square_scale_exponent(const Rational& t, const Place& place) {
    detail::require_nonzero(t, "stationary phase");
    const int v = valuation(t, place);
    if (v > 0 || v % 2 != 0) throw std::invalid_argument("stationary phase: |t| must be p^{2m}, m >= 0");
    if (square_class(t, place).representative != 1)
        throw std::invalid_argument("stationary phase: t must be a square");
    return -v / 2;
}

}  // namespace detail

/// Integral of psi(t f(x)) over Z_p^n, as the exact normalized sum
/// p^{-nK} sum_{x mod p^K} psi(t f(x)). K starts at max(K requested, the
/// period of the summand); the value is recomputed at K+1 when the budget
/// allows, otherwise stabilization is certified by exact periodicity.
inline PhaseIntegralResult exact_oscillatory_integral(const PhasePolynomial& f, const Rational& t,
                                                      const AdditiveCharacter& psi, int min_level = 0,
                                                      std::uint64_t budget = default_term_budget) {
    require_same_place(f.place(), psi.place, "exact_oscillatory_integral");
    detail::require_nonzero(t, "exact_oscillatory_integral");
    const std::int64_t p = f.prime();
    const Polynomial g = f.polynomial() * t;
    const int period = reduce_phase(g, p).level;
    const std::size_t coords = (g.num_vars() > 1 && g.is_separable()) ? 1 : g.num_vars();
    auto fits = [&](int level) {
        std::uint64_t side = checked_power(p, level, budget);
        if (side > budget) return false;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < coords; ++i) {
            if (total > budget / side) return false;
            total *= side;
        }
        return true;
    };
    int level = std::max(min_level, period);
    if (!fits(level))
        throw BudgetExceeded("exact_oscillatory_integral: level " + std::to_string(level) +
                             " exceeds the term budget");
    PhaseIntegralResult r;
    r.level = level;
    r.value = detail::oscillatory_at_level(g, p, psi.sign, level, budget);
    if (fits(level + 1)) {
        std::complex<double> next = detail::oscillatory_at_level(g, p, psi.sign, level + 1, budget);
        r.checked_next_level = true;
        r.stabilized = std::abs(next - r.value) < 1e-12;
        if (!r.stabilized) throw std::runtime_error("exact_oscillatory_integral: value changed between levels");
    } else {
        r.stabilized = true;
    }
    return r;
}

/// Stationary-phase prediction
///   sum over critical points x0 of psi(t f(x0)) |t|^{-n/2} gamma(q_x0) |det q_x0|^{-1/2}
/// for t = u p^{-2m}, u a unit square.
inline std::complex<double> stationary_phase_prediction(const PhasePolynomial& f, const Rational& t,
                                                        const AdditiveCharacter& psi) {
    require_same_place(f.place(), psi.place, "stationary_phase_prediction");
    const std::int64_t p = f.prime();
    const int m = detail::square_scale_exponent(t, f.place());
    if (m < 1) throw std::invalid_argument("stationary_phase_prediction: need |t| = p^{2m} with m >= 1");
    const int needed = 2 * m + 2;
    if (needed > max_lift_precision(p))
        throw std::runtime_error("stationary_phase_prediction: insufficient critical-point precision");
    const auto points = critical_points(f, std::max(needed, 4));
    const double abs_t = padic_abs(t, p).convert_to<double>();
    const auto n = static_cast<double>(f.num_vars());
    std::complex<double> sum = 0;
    for (const auto& cp : points) {
        if (cp.precision < needed) throw std::runtime_error("stationary_phase_prediction: insufficient precision");
        std::complex<double> phase = character_eval(t * Rational(cp.phase_value), psi);
        WeilConstant g = gamma_form(cp.hessian_form, psi);
        double det_abs = padic_abs(cp.hessian_determinant, p).convert_to<double>();
        sum += phase * std::pow(abs_t, -n / 2.0) * g.value / std::sqrt(det_abs);
    }
    return sum;
}

struct StationaryRow {
    int m = 0;
    std::complex<double> exact;
    std::complex<double> prediction;
    double difference = 0.0;
    int level = 0;
};

struct StationaryReport {
    std::vector<StationaryRow> rows;
    std::optional<int> threshold;  // smallest m from which every row agrees
};

/// Exact integral vs prediction for t = p^{-2m}, m in [m_min, m_max].
inline StationaryReport compare_stationary(const PhasePolynomial& f, int m_min, int m_max,
                                           const AdditiveCharacter& psi, double tol = 1e-10) {
    StationaryReport rep;
    const std::int64_t p = f.prime();
    for (int m = m_min; m <= m_max; ++m) {
        Rational t = rational_pow(Rational(p), -2 * m);
        auto exact = exact_oscillatory_integral(f, t, psi);
        auto pred = stationary_phase_prediction(f, t, psi);
        rep.rows.push_back({m, exact.value, pred, std::abs(exact.value - pred), exact.level});
    }
    for (auto it = rep.rows.rbegin(); it != rep.rows.rend() && it->difference < tol; ++it) rep.threshold = it->m;
    return rep;
}

}  // namespace localwitt
