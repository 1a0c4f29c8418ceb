#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "quadratic_form.hpp"

namespace localwitt {

/// Counter-based generator: the n-th output depends only on (key, n), so a
/// stream can be split into blocks that are generated independently.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(seed ^ mix(stream + 0x632BE59BD9B4E019ull))) {}

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t at(std::uint64_t counter) const { return mix(key_ + counter * 0xD1B54A32D192ED03ull); }
    std::uint64_t next() { return at(counter_++); }
    void seek(std::uint64_t counter) { counter_ = counter; }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Random nonzero rational n/d with |n| <= max_num, 1 <= d <= max_den, with
/// a random power of `p` mixed in when p > 0.
inline Rational random_rational(std::mt19937_64& rng, std::int64_t p = 0, int max_num = 60, int max_den = 30,
                                int max_pow = 2) {
    std::uniform_int_distribution<int> num_dist(1, max_num), den_dist(1, max_den), sign_dist(0, 1),
        pow_dist(-max_pow, max_pow);
    Rational r(Integer(num_dist(rng) * (sign_dist(rng) ? 1 : -1)), Integer(den_dist(rng)));
    if (p > 0) r *= rational_pow(Rational(p), pow_dist(rng));
    return r;
}

/// Random integer matrix of determinant +-1: a product of elementary
/// transvections, a permutation and sign flips.
inline std::vector<std::vector<Rational>> random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
    if (n < 2) {
        if (rng() & 1u) g[0][0] = -1;
        return g;
    }
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        int c = coef(rng);
        for (std::size_t k = 0; k < n; ++k) g[i][k] += c * g[j][k];
    }
    std::size_t a = idx(rng), b = idx(rng);
    std::swap(g[a], g[b]);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1u)
            for (auto& x : g[i]) x = -x;
    return g;
}

}  // namespace localwitt
