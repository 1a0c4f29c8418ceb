#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "char_sum.hpp"
#include "quadratic_form.hpp"
#include "random.hpp"
#include "shintani.hpp"

namespace localwitt {

/// x -> (x, d) |x|^s.
struct MultiplicativeCharacter {
    Complex s;
    Rational twist = 1;

    /// |.|^{-1} chi^{-1}: the character on the other side of the equation.
    MultiplicativeCharacter dual() const { return {-1.0 - s, twist}; }
};

// ---------------------------------------------------------------------------
// p-adic test functions: finite sums of weighted coset indicators.

/// sum of w * 1_{c + p^k Z_p}. Cosets are keyed by (k, c) with c reduced to
/// the canonical representative p^k {c p^{-k}}_p.
class PadicTestFunction {
public:
    using Key = std::pair<int, Rational>;

    explicit PadicTestFunction(std::int64_t p, std::string label = {}) : p_(p), label_(std::move(label)) {
        if (!is_prime(p)) throw std::invalid_argument("test function: p must be prime");
    }

    static PadicTestFunction indicator(std::int64_t p, const Rational& center, int level, std::string label = {}) {
        PadicTestFunction f(p, std::move(label));
        f.add(center, level, 1.0);
        return f;
    }

    std::int64_t prime() const { return p_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }
    const std::map<Key, Complex>& terms() const { return terms_; }

    Rational canonical_center(const Rational& c, int level) const {
        const Rational pk = rational_pow(Rational(p_), level);
        return pk * frac_part(c / pk, p_);
    }

    PadicTestFunction& add(const Rational& center, int level, Complex weight) {
        if (weight == Complex(0.0)) return *this;
        Key key{level, canonical_center(center, level)};
        auto it = terms_.find(key);
        if (it == terms_.end()) terms_.emplace(std::move(key), weight);
        else if ((it->second += weight) == Complex(0.0)) terms_.erase(it);
        return *this;
    }

    Complex operator()(const Rational& x) const {
        Complex v = 0;
        for (const auto& [key, w] : terms_) {
            const Rational diff = x - key.second;
            if (diff == 0 || valuation(diff, p_) >= key.first) v += w;
        }
        return v;
    }

    int max_level() const {
        int k = std::numeric_limits<int>::min();
        for (const auto& [key, w] : terms_) k = std::max(k, key.first);
        return k;
    }

    /// The same function written with disjoint cosets at one common level.
    PadicTestFunction refined(int level) const {
        if (!terms_.empty() && level < max_level())
            throw std::invalid_argument("refined: level below the finest coset level");
        PadicTestFunction out(p_, label_);
        for (const auto& [key, w] : terms_) {
            const auto pieces = checked_power(p_, level - key.first, default_term_budget);
            const Rational step = rational_pow(Rational(p_), key.first);
            for (std::uint64_t j = 0; j < pieces; ++j) out.add(key.second + step * Integer(j), level, w);
        }
        return out;
    }

    /// x -> phi(-x).
    PadicTestFunction reflected() const {
        PadicTestFunction out(p_, label_);
        for (const auto& [key, w] : terms_) out.add(-key.second, key.first, w);
        return out;
    }

    /// Squared L2 norm, exact up to the weights' floating point.
    double l2_norm_squared() const {
        if (terms_.empty()) return 0.0;
        const int level = max_level();
        double total = 0;
        for (const auto& [key, w] : refined(level).terms_) total += std::norm(w);
        return total * std::pow(static_cast<double>(p_), -level);
    }

    friend PadicTestFunction operator+(PadicTestFunction a, const PadicTestFunction& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("test functions over different primes");
        for (const auto& [key, w] : b.terms_) a.add(key.second, key.first, w);
        return a;
    }

    friend PadicTestFunction operator*(Complex c, PadicTestFunction a) {
        PadicTestFunction out(a.p_, a.label_);
        for (const auto& [key, w] : a.terms_) out.add(key.second, key.first, c * w);
        return out;
    }

    /// Largest weight difference after refining both to a common level.
    friend double max_difference(const PadicTestFunction& a, const PadicTestFunction& b) {
        PadicTestFunction diff = a + (-1.0) * b;
        if (diff.terms_.empty()) return 0.0;
        double m = 0;
        for (const auto& [key, w] : diff.refined(diff.max_level()).terms_) m = std::max(m, std::abs(w));
        return m;
    }

private:
    std::int64_t p_;
    std::string label_;
    std::map<Key, Complex> terms_;
};

/// F(1_{c + p^k Z_p})(y) = p^{-k} psi(c y) 1_{p^{-k} Z_p}(y), extended linearly.
/// psi(c y) is constant on cosets of p^l Z_p with l = max(-k, -v(c)).
inline PadicTestFunction padic_fourier(const PadicTestFunction& f, const AdditiveCharacter& psi) {
    if (!psi.place.is_padic() || psi.place.prime() != f.prime())
        throw std::invalid_argument("padic_fourier: character and test function live at different places");
    const std::int64_t p = f.prime();
    PadicTestFunction out(p, f.label().empty() ? std::string{} : "F(" + f.label() + ")");
    for (const auto& [key, w] : f.terms()) {
        const auto& [k, c] = key;
        const Complex scale = w * std::pow(static_cast<double>(p), -k);
        if (c == 0) {
            out.add(Rational(0), -k, scale);
            continue;
        }
        const int level = std::max(-k, -valuation(c, p));
        const auto pieces = checked_power(p, level + k, default_term_budget);
        const Rational step = rational_pow(Rational(p), -k);
        for (std::uint64_t j = 0; j < pieces; ++j) {
            const Rational y0 = step * Integer(j);
            out.add(y0, level, scale * character_eval(c * y0, psi));
        }
    }
    return out;
}

namespace detail {

/// Residues mod p^e on which (y, d) is constant for units y.
inline int unit_conductor_exponent(std::int64_t p) { return p == 2 ? 3 : 1; }

/// Integral of (y, d) over Z_p^*.
inline Complex twisted_unit_integral(std::int64_t p, const Rational& d) {
    const int e = unit_conductor_exponent(p);
    const std::int64_t m = p == 2 ? 8 : p;
    const Place place = Place::padic(p);
    long long total = 0;
    for (std::int64_t y = 1; y < m; ++y)
        if (y % p != 0) total += to_int(hilbert_symbol(Rational(y), d, place));
    return static_cast<double>(total) * std::pow(static_cast<double>(p), -e);
}

}  // namespace detail

/// The pairing of chi with a test function, summed in closed form: a coset
/// through 0 contributes a geometric series over the shells |x| = p^{-j},
/// a coset avoiding 0 lies in one shell and, once fine enough, carries a
/// constant value of (x, d).
inline Complex padic_zeta(const PadicTestFunction& f, const MultiplicativeCharacter& chi) {
    if (chi.s.real() <= -1.0)
        throw std::domain_error("padic_zeta: Re(s) = " + std::to_string(chi.s.real()) +
                                " <= -1, the pairing diverges");
    detail::require_nonzero(chi.twist, "padic_zeta twist");
    const std::int64_t p = f.prime();
    const Place place = Place::padic(p);
    const double logp = std::log(static_cast<double>(p));
    const int e = detail::unit_conductor_exponent(p);
    const Complex a_unit = detail::twisted_unit_integral(p, chi.twist);
    const double b = to_int(hilbert_symbol(Rational(p), chi.twist, place));
    const Complex ratio = b * std::exp(-(1.0 + chi.s) * logp);  // (p,d) p^{-1-s}

    Complex total = 0;
    std::vector<std::pair<PadicTestFunction::Key, Complex>> pending(f.terms().begin(), f.terms().end());
    while (!pending.empty()) {
        auto [key, w] = pending.back();
        pending.pop_back();
        const auto& [k, c] = key;
        if (c == 0) {
            total += w * a_unit * std::pow(ratio, k) / (1.0 - ratio);
            continue;
        }
        const int v = valuation(c, p);
        if (k - v >= e) {
            const double symbol = to_int(hilbert_symbol(c, chi.twist, place));
            total += w * std::pow(static_cast<double>(p), -k) * symbol * std::exp(-static_cast<double>(v) * chi.s * logp);
            continue;
        }
        const Rational step = rational_pow(Rational(p), k);
        const auto pieces = checked_power(p, v + e - k, default_term_budget);
        for (std::uint64_t j = 0; j < pieces; ++j) pending.push_back({{v + e, c + step * Integer(j)}, w});
    }
    return total;
}

struct FunctionalEquationRow {
    std::string label;
    Complex lhs;  // pairing of F(phi) with chi
    Complex rhs;  // pairing of phi with |.|^{-1} chi^{-1}
    Complex ratio;
    bool excluded = false;
};

struct FunctionalEquationReport {
    Place place = Place::real();
    MultiplicativeCharacter chi;
    std::vector<FunctionalEquationRow> rows;
    double max_deviation = 0.0;
    Complex c;  // mean of the ratios over the rows kept
    std::vector<std::string> warnings;
};

namespace detail {

inline constexpr double zero_pairing_threshold = 1e-12;

inline void finish_report(FunctionalEquationReport& r) {
    std::vector<Complex> ratios;
    for (auto& row : r.rows) {
        if (std::abs(row.rhs) < zero_pairing_threshold) {
            row.excluded = true;
            r.warnings.push_back("excluded " + (row.label.empty() ? std::string("test function") : row.label) +
                                 ": pairing with the dual character vanishes");
            continue;
        }
        row.ratio = row.lhs / row.rhs;
        ratios.push_back(row.ratio);
    }
    if (ratios.size() < 3) {
        // Too few rows to say anything: report an infinite deviation.
        r.warnings.push_back("fewer than three usable test functions");
        r.max_deviation = std::numeric_limits<double>::infinity();
        return;
    }
    for (std::size_t i = 0; i < ratios.size(); ++i)
        for (std::size_t j = i + 1; j < ratios.size(); ++j)
            r.max_deviation = std::max(r.max_deviation, std::abs(ratios[i] - ratios[j]));
    Complex sum = 0;
    for (auto x : ratios) sum += x;
    if (!ratios.empty()) r.c = sum / static_cast<double>(ratios.size());
}

inline void require_strip(double re_s, const char* what) {
    if (!(re_s > -1.0 && re_s < 0.0))
        throw std::domain_error(std::string(what) + ": need -1 < Re(s) < 0, got Re(s) = " + std::to_string(re_s));
}

}  // namespace detail

/// 1_{Z_p}, 1_{Z_p^*}, 1_{1+pZ_p}, 1_{pZ_p}, 1_{p^{-1}+Z_p}, a complex
/// combination, 1_{1+p^3Z_p}, and three cosets fine enough that no ramified
/// twist kills them (e = 1 for odd p, 3 for p = 2):
/// 1_{-1+p^eZ_p}, 1_{u+p^eZ_p}, 1_{p+p^{1+e}Z_p}.
inline std::vector<PadicTestFunction> default_padic_family(std::int64_t p) {
    const Rational P(p);
    std::vector<PadicTestFunction> out;
    out.push_back(PadicTestFunction::indicator(p, 0, 0, "1_Zp"));
    auto units = PadicTestFunction::indicator(p, 0, 0) + (-1.0) * PadicTestFunction::indicator(p, 0, 1);
    units.set_label("1_Zp*");
    out.push_back(units);
    out.push_back(PadicTestFunction::indicator(p, 1, 1, "1_{1+pZp}"));
    out.push_back(PadicTestFunction::indicator(p, 0, 1, "1_pZp"));
    out.push_back(PadicTestFunction::indicator(p, 1 / P, 0, "1_{1/p+Zp}"));
    auto mixed = PadicTestFunction::indicator(p, 2, 2) + Complex(0.0, 0.5) * PadicTestFunction::indicator(p, 0, -1);
    mixed.set_label("1_{2+p^2Zp}+i/2*1_{p^-1Zp}");
    out.push_back(mixed);
    out.push_back(PadicTestFunction::indicator(p, 1, 3, "1_{1+p^3Zp}"));
    const int e = detail::unit_conductor_exponent(p);
    const Rational u(p == 2 ? 3 : detail::least_nonresidue(p));
    out.push_back(PadicTestFunction::indicator(p, -1, e, "1_{-1+p^eZp}"));
    out.push_back(PadicTestFunction::indicator(p, u, e, "1_{" + to_string(u) + "+p^eZp}"));
    out.push_back(PadicTestFunction::indicator(p, P, 1 + e, "1_{p+p^(1+e)Zp}"));
    return out;
}

/// Ratio of the pairings of F(phi) with chi and of phi with |.|^{-1}chi^{-1},
/// over each test function.
inline FunctionalEquationReport tate_check(std::int64_t p, const MultiplicativeCharacter& chi,
                                           const std::vector<PadicTestFunction>& tests,
                                           const AdditiveCharacter& psi) {
    detail::require_strip(chi.s.real(), "tate_check");
    if (tests.size() < 3) throw std::invalid_argument("tate_check: need at least 3 test functions");
    FunctionalEquationReport r;
    r.place = Place::padic(p);
    r.chi = chi;
    for (const auto& f : tests) {
        if (f.prime() != p) throw std::invalid_argument("tate_check: test function over a different prime");
        r.rows.push_back({f.label(), padic_zeta(padic_fourier(f, psi), chi), padic_zeta(f, chi.dual()), 0.0, false});
    }
    detail::finish_report(r);
    return r;
}

// ---------------------------------------------------------------------------
// Real place: (c0 + c1 x + c2 x^2) exp(-pi (x-a)^2 + 2 pi i b x).

struct RealTestFunction {
    std::array<Complex, 3> poly{1.0, 0.0, 0.0};
    double a = 0.0;
    double b = 0.0;
    std::string label;

    Complex operator()(double x) const {
        const Complex q = poly[0] + x * (poly[1] + x * poly[2]);
        return q * std::exp(Complex(-std::numbers::pi * (x - a) * (x - a), 2.0 * std::numbers::pi * b * x));
    }
};

/// Closed-form Fourier transform y -> integral f(x) exp(2 pi i sign x y) dx.
/// With u = b + sign y the Gaussian part transforms to
/// exp(2 pi i a b) exp(-pi (y + sign b)^2 + 2 pi i sign a y), and multiplying
/// by x amounts to (2 pi i sign)^{-1} d/dy.
inline RealTestFunction real_fourier(const RealTestFunction& f, int sign = +1) {
    const double pi = std::numbers::pi;
    const double sg = sign >= 0 ? 1.0 : -1.0;
    const Complex D(0.0, 2.0 * pi * sg);                      // 2 pi i sign
    const Complex alpha = sg * Complex(-2.0 * pi * f.b, 2.0 * pi * f.a);  // L(y) = alpha + beta y
    const double beta = -2.0 * pi;
    const auto& c = f.poly;
    RealTestFunction out;
    const Complex phase = std::exp(Complex(0.0, 2.0 * pi * f.a * f.b));
    out.poly[0] = phase * (c[0] + c[1] * alpha / D + c[2] * (alpha * alpha - 2.0 * pi) / (D * D));
    out.poly[1] = phase * (c[1] * beta / D + c[2] * 2.0 * alpha * beta / (D * D));
    out.poly[2] = phase * (c[2] * beta * beta / (D * D));
    out.a = -sg * f.b;
    out.b = sg * f.a;
    out.label = f.label.empty() ? std::string{} : "F(" + f.label + ")";
    return out;
}

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Adaptive Gauss-Kronrod of a complex integrand, real and imaginary parts
/// separately; throws when the error estimate is too large.
template <class F>
Complex integrate_complex(F&& f, double lo, double hi, const char* what) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    Complex result;
    for (int part = 0; part < 2; ++part) {
        double err = 0, l1 = 0;
        auto g = [&](double x) {
            Complex v = f(x);
            return part == 0 ? v.real() : v.imag();
        };
        double v = GK::integrate(g, lo, hi, 20, 1e-13, &err, &l1);
        if (!std::isfinite(v) || err > 1e-9 * std::max(l1, 1.0))
            throw QuadratureError(std::string(what) + ": quadrature did not converge on [" + std::to_string(lo) +
                                  ", " + std::to_string(hi) + "] (error estimate " + std::to_string(err) +
                                  ", L1 " + std::to_string(l1) + ", 61-point Kronrod, depth 20)");
        (part == 0 ? result.real(v) : result.imag(v));
    }
    return result;
}

}  // namespace detail

/// integral over the real line of f(x) exp(2 pi i sign x y), by quadrature.
inline Complex real_fourier_numeric(const RealTestFunction& f, double y, int sign = +1) {
    const double sg = sign >= 0 ? 1.0 : -1.0;
    auto g = [&](double x) { return f(x) * std::exp(Complex(0.0, 2.0 * std::numbers::pi * sg * x * y)); };
    const double inf = std::numeric_limits<double>::infinity();
    return detail::integrate_complex(g, -inf, f.a, "real_fourier_numeric") +
           detail::integrate_complex(g, f.a, inf, "real_fourier_numeric");
}

/// integral over x > 0 of x^s h(x): (0,1) after x = e^u, then (1, inf).
template <class H>
Complex half_line_mellin(H&& h, Complex s, const char* what) {
    if (s.real() <= -1.0) throw std::domain_error(std::string(what) + ": Re(s) <= -1, the integral diverges");
    const double inf = std::numeric_limits<double>::infinity();
    auto near_zero = [&](double u) { return std::exp((s + 1.0) * u) * h(std::exp(u)); };
    auto far = [&](double x) { return std::exp(s * std::log(x)) * h(x); };
    return detail::integrate_complex(near_zero, -inf, 0.0, what) + detail::integrate_complex(far, 1.0, inf, what);
}

/// Pairing of f with x -> (x, d)_R |x|^s; the twist only matters through
/// the sign of d.
inline Complex real_zeta(const RealTestFunction& f, const MultiplicativeCharacter& chi) {
    detail::require_nonzero(chi.twist, "real_zeta twist");
    const double eps = chi.twist < 0 ? -1.0 : 1.0;
    return half_line_mellin([&](double x) { return f(x) + eps * f(-x); }, chi.s, "real_zeta");
}

inline std::vector<RealTestFunction> default_real_family() {
    return {
        {{1.0, 0.0, 0.0}, 0.0, 0.0, "gauss"},
        {{1.0, 0.0, 0.0}, 0.3, 0.0, "gauss(a=0.3)"},
        {{1.0, 0.0, 0.0}, 0.0, 0.4, "gauss(b=0.4)"},
        {{0.0, 0.0, 1.0}, 0.0, 0.0, "x^2*gauss"},
        {{1.0, Complex(0.5, 0.25), 0.0}, 0.2, -0.1, "(1+(0.5+0.25i)x)*gauss(a=0.2,b=-0.1)"},
        {{0.5, 0.0, Complex(0.0, 1.0)}, -0.4, 0.35, "(0.5+ix^2)*gauss(a=-0.4,b=0.35)"},
    };
}

inline FunctionalEquationReport real_tate_check(const MultiplicativeCharacter& chi,
                                                const std::vector<RealTestFunction>& tests, int sign = +1) {
    if (chi.s.imag() != 0.0) throw std::domain_error("real_tate_check: s must be real");
    detail::require_strip(chi.s.real(), "real_tate_check");
    if (tests.size() < 3) throw std::invalid_argument("real_tate_check: need at least 3 test functions");
    FunctionalEquationReport r;
    r.place = Place::real();
    r.chi = chi;
    for (const auto& f : tests)
        r.rows.push_back({f.label, real_zeta(real_fourier(f, sign), chi), real_zeta(f, chi.dual()), 0.0, false});
    detail::finish_report(r);
    return r;
}

struct GammaMatrixCheck {
    double s = 0.0;
    Complex c;          // least-squares scalar
    double residual = 0.0;  // max |lhs - c w| / max |lhs|
    std::vector<std::array<Complex, 2>> lhs;  // Phi_i(F f, s), i = 0 (negative), 1 (positive)
    std::vector<std::array<Complex, 2>> rhs;  // sum_j v_ij(s) Phi_j(f, -s-1)
};

/// Phi_1 integrates over x > 0 and Phi_0 over x < 0 (the number of positive
/// eigenvalues of a 1x1 matrix). Checks Phi_i(F f, s) = c(s) sum_j v_ij(s)
/// Phi_j(f, -s-1) over the family with a single scalar c(s). The entries
/// v_ij belong to the transform with kernel exp(2 pi i x y).
inline GammaMatrixCheck real_gamma_matrix_check(double s, const std::vector<RealTestFunction>& tests) {
    detail::require_strip(s, "real_gamma_matrix_check");
    const GammaMatrix g = gamma_matrix(1, s);
    GammaMatrixCheck out;
    out.s = s;
    auto phi = [](const RealTestFunction& f, Complex t) -> std::array<Complex, 2> {
        return {half_line_mellin([&](double x) { return f(-x); }, t, "real_gamma_matrix_check"),
                half_line_mellin([&](double x) { return f(x); }, t, "real_gamma_matrix_check")};
    };
    Complex num = 0;
    double den_sum = 0, scale = 0;
    for (const auto& f : tests) {
        auto l = phi(real_fourier(f), s);
        auto base = phi(f, -s - 1.0);
        std::array<Complex, 2> w{};
        for (int i = 0; i < 2; ++i) w[i] = g.v[i][0] * base[0] + g.v[i][1] * base[1];
        for (int i = 0; i < 2; ++i) {
            num += std::conj(w[i]) * l[i];
            den_sum += std::norm(w[i]);
            scale = std::max(scale, std::abs(l[i]));
        }
        out.lhs.push_back(l);
        out.rhs.push_back(w);
    }
    if (den_sum == 0.0 || scale == 0.0) throw std::runtime_error("real_gamma_matrix_check: degenerate test family");
    out.c = num / den_sum;
    for (std::size_t k = 0; k < tests.size(); ++k)
        for (int i = 0; i < 2; ++i)
            out.residual = std::max(out.residual, std::abs(out.lhs[k][i] - out.c * out.rhs[k][i]) / scale);
    return out;
}

// ---------------------------------------------------------------------------
// Monte-Carlo probe over Sym_3(Q_p).

/// weight * indicator of C + p^k Sym_3(Z_p), C integral with v(det C) < k.
struct Sym3TestFunction {
    SymMatrix center = SymMatrix::identity(3);
    int level = 1;
    std::string label;
};

struct Sym3McConfig {
    std::int64_t p = 3;
    Complex s{0.5, 0.0};
    std::uint64_t seed = 42;
    std::uint64_t samples = 1'000'000;      // per test function, left-hand side
    std::uint64_t rhs_samples = 4096;       // per test function
    int truncation = 10;                    // digits of each entry kept
    std::uint64_t blocks = 100;
    std::uint64_t bootstrap = 400;
    double max_singular_fraction = 1e-3;
    std::vector<Sym3TestFunction> tests;
};

struct Sym3McRow {
    std::string label;
    Complex lhs;
    double lhs_stderr = 0.0;
    Complex rhs;
    Complex ratio;
    double ratio_stderr = 0.0;
    double singular_fraction = 0.0;
};

struct Sym3McReport {
    std::vector<Sym3McRow> rows;
    Complex difference;  // ratio_1 - ratio_2
    double sigma = 0.0;  // bootstrap standard deviation of the difference
    bool agree = false;  // |difference| <= 3 sigma
    bool resolved = false;  // both ratios differ from 0 by more than 3 of their own sigma
};

inline std::vector<Sym3TestFunction> default_sym3_tests(std::int64_t p) {
    const Rational u(detail::least_nonresidue(p));
    return {{SymMatrix::identity(3), 1, "1_{I+p Sym3(Zp)}"},
            {SymMatrix::diagonal({Rational(1), Rational(1), u}), 1, "1_{diag(1,1,u)+p Sym3(Zp)}"}};
}

namespace detail {

constexpr std::size_t sym3_index[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};

inline void require_sym3_test(const Sym3TestFunction& f, std::int64_t p) {
    if (f.center.size() != 3) throw std::invalid_argument("sym3 test function: center must be 3x3");
    for (const auto& row : f.center.entries())
        for (const auto& x : row)
            if (den(x) != 1) throw std::invalid_argument("sym3 test function: center must be integral");
    const auto [q, radical] = diagonalize(f.center, Place::padic(p));
    if (radical != 0 || f.level <= valuation(q.determinant(), p))
        throw std::invalid_argument("sym3 test function: support meets det = 0 (need level > v(det C))");
}

inline std::int64_t checked_int_power(std::int64_t p, int e) {
    return static_cast<std::int64_t>(checked_power(p, e, std::uint64_t(1) << 62));
}

inline __int128 det3(const std::array<__int128, 6>& z) {
    // z = (z00, z01, z02, z11, z12, z22)
    return z[0] * (z[3] * z[5] - z[4] * z[4]) - z[1] * (z[1] * z[5] - z[4] * z[2]) +
           z[2] * (z[1] * z[4] - z[3] * z[2]);
}

inline int int128_valuation(__int128 x, std::int64_t p) {
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace detail

/// Integral of psi(Tr(X Y)) over C + p^k Sym_3(Z_p), in closed form:
/// p^{-6k} psi(Tr(C Y)) if Y lies in the dual lattice of p^k Sym_3(Z_p), else 0.
inline Complex sym3_coset_fourier(const SymMatrix& c, int k, const SymMatrix& y, const AdditiveCharacter& psi) {
    const std::int64_t p = psi.place.prime();
    const Rational pk = rational_pow(Rational(p), k);
    Rational trace = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const Rational pairing = (i == j ? 1 : 2) * pk * y(i, j);
            if (j >= i && pairing != 0 && valuation(pairing, p) < 0) return 0.0;
            trace += c(i, j) * y(i, j);
        }
    return std::pow(static_cast<double>(p), -6.0 * k) * character_eval(trace, psi);
}

/// The same integral as a finite sum over C + p^k Z, Z running over
/// Sym_3(Z_p) modulo the level where psi(Tr(p^k Z Y)) becomes constant.
inline Complex sym3_coset_fourier_direct(const SymMatrix& c, int k, const SymMatrix& y, const AdditiveCharacter& psi,
                                         std::uint64_t budget = default_term_budget) {
    const std::int64_t p = psi.place.prime();
    int vmin = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            const Rational e = (i == j ? 1 : 2) * y(i, j);
            if (e != 0) vmin = std::min(vmin, valuation(e, p));
        }
    const int r = vmin == std::numeric_limits<int>::max() ? 0 : std::max(0, -k - vmin);
    const std::uint64_t side = checked_power(p, r, budget);
    const std::uint64_t total = checked_power(p, 6 * r, budget);
    const Rational pk = rational_pow(Rational(p), k);
    Complex sum = 0;
    std::array<std::uint64_t, 6> z{};
    for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t rest = t;
        for (auto& d : z) {
            d = rest % side;
            rest /= side;
        }
        Rational trace = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                trace += (c(i, j) + pk * Integer(z[detail::sym3_index[i][j]])) * y(i, j);
        sum += character_eval(trace, psi);
    }
    return sum / static_cast<double>(total) * std::pow(static_cast<double>(p), -6.0 * k);
}

/// Monte-Carlo comparison of
///   LHS(phi) = integral |det Y|^s F(phi)(Y) dY,
///   RHS(phi) = integral eps(q_B) (det B,-1) |det B|^{-s-2} phi(B) dB
/// for two coset indicators: the ratios LHS/RHS should agree.
inline Sym3McReport padic_sym3_mc_check(Sym3McConfig cfg) {
    const std::int64_t p = cfg.p;
    if (!is_prime(p) || p == 2) throw std::invalid_argument("sym3-mc: p must be an odd prime");
    if (!(cfg.s.real() > 0.0 && cfg.s.real() < 1.0)) throw std::domain_error("sym3-mc: need 0 < Re(s) < 1");
    if (cfg.tests.empty()) cfg.tests = default_sym3_tests(p);
    if (cfg.tests.size() != 2) throw std::invalid_argument("sym3-mc: exactly two test functions are compared");
    if (cfg.blocks == 0 || cfg.samples < cfg.blocks || cfg.rhs_samples < cfg.blocks)
        throw std::invalid_argument("sym3-mc: need at least one sample per block");
    for (const auto& f : cfg.tests) detail::require_sym3_test(f, p);
    const int L = cfg.truncation;
    for (const auto& f : cfg.tests)
        if (L < f.level) throw std::invalid_argument("sym3-mc: truncation level below the coset level");
    const std::int64_t pL = detail::checked_int_power(p, L);
    if (pL > (std::int64_t(1) << 30)) throw std::invalid_argument("sym3-mc: truncation too deep for exact determinants");

    const Place place = Place::padic(p);
    const AdditiveCharacter psi = AdditiveCharacter::standard(place);
    const double logp = std::log(static_cast<double>(p));
    const std::uint64_t B = cfg.blocks;

    struct BlockStats {
        Complex sum;
        std::uint64_t count = 0;
        std::uint64_t singular = 0;
    };
    // lhs[t][b], rhs[t][b]
    std::vector<std::vector<BlockStats>> lhs(2, std::vector<BlockStats>(B)), rhs(2, std::vector<BlockStats>(B));

    auto block_size = [&](std::uint64_t n, std::uint64_t b) { return n / B + (b < n % B ? 1 : 0); };

    auto lhs_block = [&](std::size_t t, std::uint64_t b) {
        const auto& f = cfg.tests[t];
        const int k = f.level;
        const std::int64_t pk = detail::checked_int_power(p, k);
        std::array<std::int64_t, 6> cmod{};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j)
                cmod[detail::sym3_index[i][j]] = static_cast<std::int64_t>(mod::reduce(f.center(i, j), pk));
        CounterRng rng(cfg.seed, (static_cast<std::uint64_t>(t) << 40) | b);
        BlockStats st;
        const Complex base = std::exp(3.0 * k * cfg.s * logp);  // |det p^{-k} Z|^s = p^{3ks} |det Z|^s
        for (std::uint64_t n = block_size(cfg.samples, b); n > 0; --n) {
            std::array<__int128, 6> z{};
            for (auto& x : z) x = static_cast<__int128>(rng.below(static_cast<std::uint64_t>(pL)));
            ++st.count;
            const __int128 det = detail::det3(z);
            if (det % pL == 0) {
                ++st.singular;
                continue;
            }
            const int v = detail::int128_valuation(det, p);
            __int128 trace = 0;
            for (std::size_t i = 0; i < 6; ++i) {
                const bool diag = i == 0 || i == 3 || i == 5;
                trace += (diag ? 1 : 2) * static_cast<__int128>(cmod[i]) * (z[i] % pk);
            }
            const auto tr = static_cast<std::int64_t>(((trace % pk) + pk) % pk);
            st.sum += base * std::exp(-static_cast<double>(v) * cfg.s * logp) *
                      character_eval(Rational(tr, pk), psi);
        }
        lhs[t][b] = st;
    };

    auto rhs_block = [&](std::size_t t, std::uint64_t b) {
        const auto& f = cfg.tests[t];
        const Rational pk = rational_pow(Rational(p), f.level);
        CounterRng rng(cfg.seed, (static_cast<std::uint64_t>(t + 2) << 40) | b);
        BlockStats st;
        for (std::uint64_t n = block_size(cfg.rhs_samples, b); n > 0; --n) {
            std::vector<std::vector<Rational>> e(3, std::vector<Rational>(3));
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i; j < 3; ++j)
                    e[i][j] = e[j][i] = f.center(i, j) + pk * Integer(rng.below(static_cast<std::uint64_t>(pL)));
            const auto [q, radical] = diagonalize(SymMatrix(std::move(e)), place);
            ++st.count;
            if (radical != 0) {
                ++st.singular;
                continue;
            }
            const Rational det = q.determinant();
            const double sign = to_int(hasse_invariant(q) * hilbert_symbol(det, Rational(-1), place));
            const int v = valuation(det, p);
            st.sum += sign * std::exp((cfg.s + 2.0) * static_cast<double>(v) * logp);  // |det|^{-s-2}
        }
        rhs[t][b] = st;
    };

    // Blocks are independent streams; the split across threads does not
    // change any result.
    std::vector<std::pair<int, std::uint64_t>> jobs;
    for (int side = 0; side < 2; ++side)
        for (std::size_t t = 0; t < 2; ++t)
            for (std::uint64_t b = 0; b < B; ++b) jobs.push_back({side * 2 + static_cast<int>(t), b});
    const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(jobs.size())));
    auto run = [&](unsigned w) {
        for (std::size_t j = w; j < jobs.size(); j += workers) {
            const auto [which, b] = jobs[j];
            if (which < 2) lhs_block(static_cast<std::size_t>(which), b);
            else rhs_block(static_cast<std::size_t>(which - 2), b);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    Sym3McReport report;
    for (std::size_t t = 0; t < 2; ++t) {
        Sym3McRow row;
        row.label = cfg.tests[t].label;
        Complex ls = 0, rs = 0;
        std::uint64_t lc = 0, rc = 0, singular = 0;
        for (std::uint64_t b = 0; b < B; ++b) {
            ls += lhs[t][b].sum;
            lc += lhs[t][b].count;
            singular += lhs[t][b].singular;
            rs += rhs[t][b].sum;
            rc += rhs[t][b].count;
        }
        row.singular_fraction = static_cast<double>(singular) / static_cast<double>(lc);
        if (row.singular_fraction > cfg.max_singular_fraction)
            throw std::runtime_error("sym3-mc: singular-sample fraction " + std::to_string(row.singular_fraction) +
                                     " exceeds " + std::to_string(cfg.max_singular_fraction) +
                                     "; increase the truncation level");
        // The p^{6k} volume of p^{-k} Sym_3(Z_p) cancels the p^{-6k} in F(phi).
        row.lhs = ls / static_cast<double>(lc);
        row.rhs = std::pow(static_cast<double>(p), -6.0 * cfg.tests[t].level) * rs / static_cast<double>(rc);
        row.ratio = row.lhs / row.rhs;
        report.rows.push_back(row);
    }
    report.difference = report.rows[0].ratio - report.rows[1].ratio;

    // Bootstrap over blocks.
    CounterRng boot(cfg.seed, std::uint64_t(0xB0075742) << 20);
    auto resampled_ratio = [&](std::size_t t) {
        Complex ls = 0, rs = 0;
        std::uint64_t lc = 0, rc = 0;
        for (std::uint64_t i = 0; i < B; ++i) {
            const auto& l = lhs[t][boot.below(B)];
            ls += l.sum;
            lc += l.count;
            const auto& r = rhs[t][boot.below(B)];
            rs += r.sum;
            rc += r.count;
        }
        const Complex lv = ls / static_cast<double>(lc);
        const Complex rv = std::pow(static_cast<double>(p), -6.0 * cfg.tests[t].level) * rs / static_cast<double>(rc);
        return std::pair{lv, lv / rv};
    };
    std::vector<Complex> diffs;
    std::array<std::vector<Complex>, 2> lhs_boot, ratio_boot;
    for (std::uint64_t r = 0; r < cfg.bootstrap; ++r) {
        auto [l0, r0] = resampled_ratio(0);
        auto [l1, r1] = resampled_ratio(1);
        lhs_boot[0].push_back(l0);
        lhs_boot[1].push_back(l1);
        ratio_boot[0].push_back(r0);
        ratio_boot[1].push_back(r1);
        diffs.push_back(r0 - r1);
    }
    auto spread = [](const std::vector<Complex>& xs) {
        if (xs.size() < 2) return 0.0;
        Complex mean = 0;
        for (auto x : xs) mean += x;
        mean /= static_cast<double>(xs.size());
        double var = 0;
        for (auto x : xs) var += std::norm(x - mean);
        return std::sqrt(var / static_cast<double>(xs.size() - 1));
    };
    report.sigma = spread(diffs);
    report.resolved = true;
    for (std::size_t t = 0; t < 2; ++t) {
        auto& row = report.rows[t];
        row.lhs_stderr = spread(lhs_boot[t]);
        row.ratio_stderr = spread(ratio_boot[t]);
        report.resolved = report.resolved && std::abs(row.ratio) > 3.0 * row.ratio_stderr;
    }
    report.agree = std::abs(report.difference) <= 3.0 * report.sigma;
    return report;
}

}  // namespace localwitt
