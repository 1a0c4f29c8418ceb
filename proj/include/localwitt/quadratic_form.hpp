#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "local_field.hpp"

namespace localwitt {

/// A diagonal quadratic form a_1 x_1^2 + ... + a_n x_n^2 over a place.
class QuadraticForm {
public:
    explicit QuadraticForm(Place place, std::vector<Rational> coeffs = {})
        : place_(place), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (c == 0) throw std::invalid_argument("quadratic form: zero coefficient");
    }

    const Place& place() const { return place_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::size_t rank() const { return coeffs_.size(); }

    Rational determinant() const {
        Rational d = 1;
        for (const auto& c : coeffs_) d *= c;
        return d;
    }

    /// t * q.
    QuadraticForm scaled(const Rational& t) const {
        std::vector<Rational> c;
        c.reserve(coeffs_.size());
        for (const auto& a : coeffs_) c.push_back(t * a);
        return QuadraticForm(place_, std::move(c));
    }

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

private:
    Place place_;
    std::vector<Rational> coeffs_;
};

/// An exact rational symmetric n x n matrix.
class SymMatrix {
public:
    explicit SymMatrix(std::vector<std::vector<Rational>> entries) : entries_(std::move(entries)) {
        const std::size_t n = entries_.size();
        if (n == 0) throw std::invalid_argument("symmetric matrix: n must be >= 1");
        for (const auto& row : entries_)
            if (row.size() != n) throw std::invalid_argument("symmetric matrix: not square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (entries_[i][j] != entries_[j][i])
                    throw std::invalid_argument("symmetric matrix: entries not symmetric");
    }

    static SymMatrix diagonal(const std::vector<Rational>& d) {
        std::vector<std::vector<Rational>> e(d.size(), std::vector<Rational>(d.size(), Rational(0)));
        for (std::size_t i = 0; i < d.size(); ++i) e[i][i] = d[i];
        return SymMatrix(std::move(e));
    }

    static SymMatrix identity(std::size_t n) { return diagonal(std::vector<Rational>(n, Rational(1))); }

    std::size_t size() const { return entries_.size(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const std::vector<std::vector<Rational>>& entries() const { return entries_; }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                if (i != j && entries_[i][j] != 0) return false;
        return true;
    }

    /// t * A.
    SymMatrix scaled(const Rational& t) const {
        auto e = entries_;
        for (auto& row : e)
            for (auto& x : row) x *= t;
        return SymMatrix(std::move(e));
    }

    /// g A g^T for a square matrix g of matching size.
    SymMatrix congruent(const std::vector<std::vector<Rational>>& g) const {
        const std::size_t n = size();
        std::vector<std::vector<Rational>> ga(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (g[i][k] != 0)
                    for (std::size_t j = 0; j < n; ++j) ga[i][j] += g[i][k] * entries_[k][j];
        std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (g[j][k] != 0) out[i][j] += ga[i][k] * g[j][k];
        return SymMatrix(std::move(out));
    }

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::vector<std::vector<Rational>> entries_;
};

struct Diagonalization {
    QuadraticForm form;
    int radical_dim = 0;
    /// P with P A P^T = diag(form coefficients, 0, ..., 0).
    std::vector<std::vector<Rational>> transform;
};

/// Symmetric Gaussian elimination over Q. A zero pivot with a nonzero
/// off-diagonal partner j is repaired by adding row and column j to row and
/// column i.
inline Diagonalization diagonalize_with_transform(const SymMatrix& a, const Place& place) {
    const std::size_t n = a.size();
    auto m = a.entries();
    std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) t[i][i] = 1;

    auto add_row_col = [&](std::size_t dst, std::size_t src, const Rational& c) {
        // row dst += c * row src, then column dst += c * column src
        for (std::size_t j = 0; j < n; ++j) m[dst][j] += c * m[src][j];
        for (std::size_t i = 0; i < n; ++i) m[i][dst] += c * m[i][src];
        for (std::size_t j = 0; j < n; ++j) t[dst][j] += c * t[src][j];
    };
    auto swap_row_col = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(m[i], m[j]);
        for (auto& row : m) std::swap(row[i], row[j]);
        std::swap(t[i], t[j]);
    };

    std::vector<Rational> diag;
    std::size_t k = 0;
    for (; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n && pivot == n; ++i)
            if (m[i][i] != 0) pivot = i;
        if (pivot == n) {
            for (std::size_t i = k; i < n && pivot == n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (m[i][j] != 0) {
                        add_row_col(i, j, Rational(1));
                        pivot = i;
                        break;
                    }
        }
        if (pivot == n) break;  // remaining block is zero
        swap_row_col(k, pivot);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational c = -m[i][k] / m[k][k];
            add_row_col(i, k, c);
        }
        diag.push_back(m[k][k]);
    }
    Diagonalization out{QuadraticForm(place, std::move(diag)), static_cast<int>(n - k), std::move(t)};
    return out;
}

/// Diagonal form congruent to A over Q plus the dimension of its radical.
inline std::pair<QuadraticForm, int> diagonalize(const SymMatrix& a, const Place& place) {
    auto d = diagonalize_with_transform(a, place);
    return {std::move(d.form), d.radical_dim};
}

/// Hasse-Witt invariant: the product of (a_i, a_j) over i < j; +1 in rank <= 1.
inline Sign hasse_invariant(const QuadraticForm& q) {
    const auto& a = q.coeffs();
    if (q.place().is_real()) {
        long long neg = 0;
        for (const auto& c : a) neg += (c < 0);
        return sign_from_parity(neg * (neg - 1) / 2);
    }
    // Work with square-class representatives so every symbol is on small integers.
    std::vector<Rational> reps;
    reps.reserve(a.size());
    for (const auto& c : a) reps.emplace_back(square_class(c, q.place()).representative);
    Sign s = Sign::plus;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) s *= hilbert_symbol(reps[i], reps[j], q.place());
    return s;
}

/// The same invariant evaluated literally as a product of Hilbert symbols,
/// including at the real place.
inline Sign hasse_invariant_by_symbols(const QuadraticForm& q) {
    const auto& a = q.coeffs();
    Sign s = Sign::plus;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) s *= hilbert_symbol(a[i], a[j], q.place());
    return s;
}

/// eps(q, q') = eps(q) eps(q').
inline Sign relative_hasse(const QuadraticForm& q, const QuadraticForm& q2) {
    require_same_place(q.place(), q2.place(), "relative_hasse");
    return hasse_invariant(q) * hasse_invariant(q2);
}

struct Signature {
    int positive = 0;
    int negative = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

struct WittInvariants {
    std::size_t rank = 0;
    SquareClass det_class;
    Sign hasse = Sign::plus;
    std::optional<Signature> signature;  // real place only

    friend bool operator==(const WittInvariants&, const WittInvariants&) = default;
};

inline Signature signature(const QuadraticForm& q) {
    Signature s;
    for (const auto& c : q.coeffs()) (c > 0 ? s.positive : s.negative) += 1;
    return s;
}

inline WittInvariants invariants(const QuadraticForm& q) {
    WittInvariants w{q.rank(), square_class(q.determinant(), q.place()), hasse_invariant(q), std::nullopt};
    if (q.place().is_real()) w.signature = signature(q);
    return w;
}

/// Classification: p-adic forms are equivalent iff rank, determinant class and
/// Hasse invariant agree; real forms iff signatures agree.
inline bool equivalent(const QuadraticForm& q, const QuadraticForm& q2) {
    require_same_place(q.place(), q2.place(), "equivalent");
    if (q.place().is_real()) return signature(q) == signature(q2);
    return q.rank() == q2.rank() &&
           square_class(q.determinant(), q.place()) == square_class(q2.determinant(), q2.place()) &&
           relative_hasse(q, q2) == Sign::plus;
}

inline QuadraticForm witt_sum(const QuadraticForm& q, const QuadraticForm& q2) {
    require_same_place(q.place(), q2.place(), "witt_sum");
    auto c = q.coeffs();
    c.insert(c.end(), q2.coeffs().begin(), q2.coeffs().end());
    return QuadraticForm(q.place(), std::move(c));
}

inline QuadraticForm witt_product(const QuadraticForm& q, const QuadraticForm& q2) {
    require_same_place(q.place(), q2.place(), "witt_product");
    std::vector<Rational> c;
    c.reserve(q.rank() * q2.rank());
    for (const auto& a : q.coeffs())
        for (const auto& b : q2.coeffs()) c.push_back(a * b);
    return QuadraticForm(q.place(), std::move(c));
}

/// The negative -q, so that q + (-q) is hyperbolic.
inline QuadraticForm witt_negate(const QuadraticForm& q) { return q.scaled(Rational(-1)); }

struct WittFiltration {
    int level = 0;                   // 0, 1, or 2 meaning ">= 2"
    std::optional<Sign> w2_class;    // image in W^2/W^3 when level >= 2
};

/// Position of (q) - (q') in the filtration W >= W^1 >= W^2. Forms of
/// different rank are compared after padding the smaller one with
/// hyperbolic planes <1,-1>, which does not change its Witt class.
inline WittFiltration witt_filtration_level(const QuadraticForm& q, const QuadraticForm& q2) {
    require_same_place(q.place(), q2.place(), "witt_filtration_level");
    if (q.rank() % 2 != q2.rank() % 2) return {0, std::nullopt};
    auto pad = [](const QuadraticForm& f, std::size_t rank) {
        auto c = f.coeffs();
        while (c.size() < rank) {
            c.emplace_back(1);
            c.emplace_back(-1);
        }
        return QuadraticForm(f.place(), std::move(c));
    };
    const std::size_t r = std::max(q.rank(), q2.rank());
    QuadraticForm a = pad(q, r), b = pad(q2, r);
    const Rational da = a.determinant(), db = b.determinant();
    if (square_class(da, a.place()) != square_class(db, b.place())) return {1, std::nullopt};
    return {2, relative_hasse(a, b)};
}

}  // namespace localwitt
