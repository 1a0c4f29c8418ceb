#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "local_field.hpp"
#include "polynomial.hpp"

namespace localwitt {

/// Largest number of terms any single character sum may enumerate.
constexpr std::uint64_t default_term_budget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Worker count for character-sum kernels: LOCALWITT_WORKERS, else the
/// hardware concurrency. Results never depend on it.
inline unsigned worker_count() {
    if (const char* env = std::getenv("LOCALWITT_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return static_cast<unsigned>(w);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

inline std::uint64_t checked_power(std::int64_t p, int e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > limit / static_cast<std::uint64_t>(p)) return limit + 1;
        r *= static_cast<std::uint64_t>(p);
    }
    return r;
}

/// A polynomial with coefficients in Z/M, M = p^E, evaluated on integer
/// points; the phase of a point x is P(x) mod M.
class ModularPhase {
public:
    struct Term {
        std::uint64_t coeff;
        std::vector<int> exps;
    };

    ModularPhase(std::size_t nvars, std::uint64_t modulus, std::vector<Term> terms)
        : nvars_(nvars), modulus_(modulus), terms_(std::move(terms)) {
        for (const auto& t : terms_) max_exp_ = std::max(max_exp_, *std::max_element(t.exps.begin(), t.exps.end()));
    }

    std::size_t num_vars() const { return nvars_; }
    std::uint64_t modulus() const { return modulus_; }

    std::uint64_t operator()(const std::uint64_t* x) const {
        // powers[i][k] = x_i^k mod M
        std::uint64_t pw[4][32];
        const int top = std::min(max_exp_, 31);
        for (std::size_t i = 0; i < nvars_; ++i) {
            pw[i][0] = 1 % modulus_;
            for (int k = 1; k <= top; ++k) pw[i][k] = mod::mul(pw[i][k - 1], x[i] % modulus_, modulus_);
        }
        std::uint64_t s = 0;
        for (const auto& t : terms_) {
            std::uint64_t v = t.coeff;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (t.exps[i]) v = mod::mul(v, pw[i][t.exps[i]], modulus_);
            s += v;
            if (s >= modulus_) s -= modulus_;
        }
        return s;
    }

private:
    std::size_t nvars_;
    std::uint64_t modulus_;
    std::vector<Term> terms_;
    int max_exp_ = 0;
};

/// Sum over x in (Z/N)^n of exp(sign * 2 pi i * phase(x) / M).
///
/// Work is split into fixed-size chunks of the linear index. Small moduli use
/// exact integer histograms of phase residues; large moduli sum complex
/// partials per chunk and reduce them in chunk order. Either way the result
/// is bitwise identical for every worker count.
inline std::complex<double> character_sum(const ModularPhase& phase, std::uint64_t side, int sign,
                                          std::uint64_t budget = default_term_budget) {
    const std::size_t n = phase.num_vars();
    if (n == 0 || n > 4) throw std::invalid_argument("character_sum: 1 to 4 variables supported");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > budget / side) throw BudgetExceeded("character sum exceeds the term budget");
        total *= side;
    }
    if (total > budget) throw BudgetExceeded("character sum exceeds the term budget");

    const std::uint64_t m = phase.modulus();
    const double turn = 2.0 * std::numbers::pi / static_cast<double>(m);
    constexpr std::uint64_t chunk = 1u << 15;
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), chunks));

    auto point = [&](std::uint64_t index, std::uint64_t* x) {
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = index % side;
            index /= side;
        }
    };
    auto root = [&](std::uint64_t k) {
        double a = turn * static_cast<double>(k);
        return std::complex<double>(std::cos(a), sign * std::sin(a));
    };

    const bool use_histogram = m <= (1u << 22) && m <= total;
    if (use_histogram) {
        std::vector<std::vector<std::uint32_t>> hist(workers, std::vector<std::uint32_t>(m, 0));
        auto work = [&](unsigned w) {
            std::uint64_t x[4];
            for (std::uint64_t c = w; c < chunks; c += workers) {
                const std::uint64_t end = std::min(total, (c + 1) * chunk);
                for (std::uint64_t idx = c * chunk; idx < end; ++idx) {
                    point(idx, x);
                    ++hist[w][phase(x)];
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
        work(0);
        for (auto& t : pool) t.join();
        std::complex<double> s = 0;
        for (std::uint64_t k = 0; k < m; ++k) {
            std::uint64_t count = 0;
            for (unsigned w = 0; w < workers; ++w) count += hist[w][k];
            if (count) s += static_cast<double>(count) * root(k);
        }
        return s;
    }

    std::vector<std::complex<double>> partial(chunks);
    auto work = [&](unsigned w) {
        std::uint64_t x[4];
        for (std::uint64_t c = w; c < chunks; c += workers) {
            const std::uint64_t end = std::min(total, (c + 1) * chunk);
            std::complex<double> s = 0;
            for (std::uint64_t idx = c * chunk; idx < end; ++idx) {
                point(idx, x);
                s += root(phase(x));
            }
            partial[c] = s;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();
    std::complex<double> s = 0;
    for (const auto& v : partial) s += v;
    return s;
}

namespace detail {

inline Integer binomial(int n, int k) {
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline int binomial_valuation(int n, int k, std::int64_t p) {
    return integer_valuation(binomial(n, k), p);
}

}  // namespace detail

/// The phase of psi(Q(z)) for z in Z_p^n as a modular polynomial, together
/// with a level L such that psi(Q(z)) only depends on z mod p^L.
struct PhaseReduction {
    ModularPhase phase;
    int level;
    int exponent;  // M = p^exponent
};

inline PhaseReduction reduce_phase(const Polynomial& q, std::int64_t p) {
    const std::size_t n = q.num_vars();
    int e = 0;
    for (const auto& [ex, c] : q.terms()) e = std::max(e, -valuation(c, p));
    const std::uint64_t m = checked_power(p, e, std::uint64_t{1} << 62);
    if (m > (std::uint64_t{1} << 62)) throw BudgetExceeded("phase modulus exceeds 2^62");

    // Smallest L with v(c) + v(binomials) + L*|beta| >= 0 for every monomial
    // c*z^alpha and every nonzero beta <= alpha in the expansion of (z + p^L w)^alpha.
    int level = 0;
    for (const auto& [ex, c] : q.terms()) {
        const int vc = valuation(c, p);
        std::vector<int> beta(n, 0);
        for (;;) {
            std::size_t i = 0;
            while (i < n && beta[i] == ex[i]) beta[i++] = 0;
            if (i == n) break;
            ++beta[i];
            int size = 0, vb = 0;
            for (std::size_t j = 0; j < n; ++j) {
                size += beta[j];
                vb += detail::binomial_valuation(ex[j], beta[j], p);
            }
            const int need = -(vc + vb);
            if (need > 0) level = std::max(level, (need + size - 1) / size);
        }
    }

    const Rational scale = rational_pow(Rational(p), e);
    std::vector<ModularPhase::Term> terms;
    for (const auto& [ex, c] : q.terms()) {
        std::uint64_t r = mod::reduce(c * scale, m);
        if (r) terms.push_back({r, ex});
    }
    return {ModularPhase(n, m, std::move(terms)), level, e};
}

/// Exact value of the integral of psi(Q(z)) over Z_p^n with the Haar measure
/// of total mass 1, as a normalized finite character sum at the level
/// `level` (which must be at least the reduction level).
inline std::complex<double> integrate_unit_polydisc_at_level(const Polynomial& q, std::int64_t p, int sign,
                                                             int level, std::uint64_t budget = default_term_budget) {
    auto red = reduce_phase(q, p);
    if (level < red.level) throw std::invalid_argument("integration level below the phase period");
    const std::uint64_t side = checked_power(p, level, budget);
    if (side > budget) throw BudgetExceeded("character sum exceeds the term budget");
    std::complex<double> s = character_sum(red.phase, side, sign, budget);
    return s / std::pow(static_cast<double>(side), static_cast<double>(q.num_vars()));
}

/// Same integral; separable phases are evaluated as products of
/// one-dimensional sums, which is exact since the measure is a product.
inline std::complex<double> integrate_unit_polydisc(const Polynomial& q, std::int64_t p, int sign,
                                                    std::uint64_t budget = default_term_budget) {
    const std::size_t n = q.num_vars();
    if (n > 1 && q.is_separable()) {
        std::complex<double> v = unit_root(sign > 0 ? frac_part(q.constant_term(), p) : -frac_part(q.constant_term(), p));
        for (std::size_t i = 0; i < n; ++i) v *= integrate_unit_polydisc(q.univariate_part(i), p, sign, budget);
        return v;
    }
    return integrate_unit_polydisc_at_level(q, p, sign, reduce_phase(q, p).level, budget);
}

}  // namespace localwitt
