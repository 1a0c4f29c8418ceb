#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadratic_form.hpp"

namespace localwitt {

/// The trace form Q(X) = Tr(X^2)/2 restricted to the stabilizer algebra
/// h_A = { X : X A + A X^T = 0 } of a diagonal A = diag(a_1..a_n). In the
/// basis X_ij (i < j) it is diagonal with entries -a_j/a_i, pairs in
/// lexicographic order.
struct StabilizerForm {
    std::vector<Rational> source;
    QuadraticForm form;
};

namespace detail {

inline std::vector<Rational> diagonal_entries(const SymMatrix& a, const Place& place, const char* what) {
    auto [q, radical] = diagonalize(a, place);
    if (radical != 0) throw std::invalid_argument(std::string(what) + ": singular matrix");
    return q.coeffs();
}

}  // namespace detail

inline StabilizerForm stabilizer_form_of_diagonal(const std::vector<Rational>& a, const Place& place) {
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) coeffs.push_back(-a[j] / a[i]);
    return {a, QuadraticForm(place, std::move(coeffs))};
}

/// Non-diagonal A is first diagonalized by congruence.
inline StabilizerForm stabilizer_form(const SymMatrix& a, const Place& place) {
    return stabilizer_form_of_diagonal(detail::diagonal_entries(a, place, "stabilizer_form"), place);
}

namespace detail {

inline void require_same_det_class(const SymMatrix& a, const SymMatrix& b, const Place& place) {
    if (a.size() != b.size()) throw std::invalid_argument("epsilon_pair: matrices of different size");
    const Rational da = diagonalize(a, place).first.determinant();
    const Rational db = diagonalize(b, place).first.determinant();
    if (square_class(da, place) != square_class(db, place))
        throw std::invalid_argument("epsilon_pair: determinant square classes differ (" + to_string(da) + " vs " +
                                    to_string(db) + ")");
}

}  // namespace detail

/// eps(A, A'): relative Hasse-Witt invariant of the stabilizer forms.
/// Requires det A and det A' in the same square class.
inline Sign epsilon_pair(const SymMatrix& a, const SymMatrix& b, const Place& place) {
    detail::require_same_det_class(a, b, place);
    return relative_hasse(stabilizer_form(a, place).form, stabilizer_form(b, place).form);
}

struct SignPropCheck {
    bool holds = false;
    Sign epsilon_pair = Sign::plus;     // eps(A, A')
    Sign relative_hasse = Sign::plus;   // eps(q_A, q_A')
    std::size_t n = 0;
};

/// eps(A, A') = eps(q_A, q_A')^n.
inline SignPropCheck verify_signprop(const SymMatrix& a, const SymMatrix& b, const Place& place) {
    SignPropCheck c;
    c.n = a.size();
    c.epsilon_pair = epsilon_pair(a, b, place);
    c.relative_hasse = relative_hasse(diagonalize(a, place).first, diagonalize(b, place).first);
    c.holds = c.epsilon_pair == pow(c.relative_hasse, static_cast<long long>(c.n));
    return c;
}

/// Calls visit(entries) for every diagonal matrix with entries drawn from the
/// square-class representatives of the place.
template <class Visit>
void for_each_representative_diagonal(std::size_t n, const Place& place, Visit&& visit) {
    const auto reps = square_class_representatives(place);
    std::vector<std::size_t> idx(n, 0);
    std::vector<Rational> entries(n);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) entries[i] = Rational(reps[idx[i]]);
        visit(entries);
        std::size_t i = 0;
        while (i < n && ++idx[i] == reps.size()) idx[i++] = 0;
        if (i == n) return;
    }
}

struct CConstant {
    std::optional<Sign> value;  // common value of eps(Q|h_A) eps(q_A)^n, if any A has this det class
    bool well_defined = true;
    std::size_t samples = 0;
};

/// c(d) = eps(Q|h_A) * eps(q_A)^n over every representative diagonal A with
/// det A in class d; well_defined reports whether all of them agree.
inline CConstant c_constant(std::size_t n, const SquareClass& d, const Place& place) {
    require_same_place(d.place, place, "c_constant");
    CConstant c;
    for_each_representative_diagonal(n, place, [&](const std::vector<Rational>& a) {
        QuadraticForm q(place, a);
        if (square_class(q.determinant(), place) != d) return;
        Sign v = hasse_invariant(stabilizer_form_of_diagonal(a, place).form) *
                 pow(hasse_invariant(q), static_cast<long long>(n));
        ++c.samples;
        if (!c.value) c.value = v;
        else if (*c.value != v) c.well_defined = false;
    });
    return c;
}

/// Invariants of the local congruence orbit of an invertible symmetric matrix.
struct OrbitInvariant {
    std::size_t n = 0;
    SquareClass det_class;
    Sign hasse = Sign::plus;
    std::optional<Signature> signature;

    friend bool operator==(const OrbitInvariant&, const OrbitInvariant&) = default;
};

inline OrbitInvariant orbit_invariant(const SymMatrix& a, const Place& place) {
    auto [q, radical] = diagonalize(a, place);
    if (radical != 0) throw std::invalid_argument("orbit_invariant: singular matrix");
    OrbitInvariant o{a.size(), square_class(q.determinant(), place), hasse_invariant(q), std::nullopt};
    if (place.is_real()) o.signature = signature(q);
    return o;
}

/// Number of distinct orbit invariants realized by invertible symmetric
/// n x n matrices with det in the class d: distinct Hasse invariants at a
/// p-adic place, distinct signatures at the real place.
inline int sl_orbit_count(std::size_t n, const SquareClass& d, const Place& place) {
    if (n % 2 == 0) throw std::invalid_argument("sl_orbit_count: n must be odd");
    require_same_place(d.place, place, "sl_orbit_count");
    std::set<std::pair<int, int>> seen;
    for_each_representative_diagonal(n, place, [&](const std::vector<Rational>& a) {
        QuadraticForm q(place, a);
        if (square_class(q.determinant(), place) != d) return;
        if (place.is_real()) {
            auto s = signature(q);
            seen.insert({s.positive, s.negative});
        } else {
            seen.insert({to_int(hasse_invariant(q)), 0});
        }
    });
    return static_cast<int>(seen.size());
}

struct ScalingCheck {
    bool holds = false;
    bool scaling_law = false;  // eps(t q_A) = (t,-1)^{n(n-1)/2} eps(q_A)
    bool invariance = false;   // eps(q_A)(det A,-1)^{(n-1)/2} unchanged under A -> tA
};

/// eps(q_A)(det A, -1)^{(n-1)/2}, the orbit function for odd n.
inline Sign scaled_orbit_sign(const SymMatrix& a, const Place& place) {
    auto [q, radical] = diagonalize(a, place);
    if (radical != 0) throw std::invalid_argument("scaled_orbit_sign: singular matrix");
    const auto n = static_cast<long long>(a.size());
    return hasse_invariant(q) * pow(hilbert_symbol(q.determinant(), Rational(-1), place), (n - 1) / 2);
}

/// For odd n: eps(t q_A) = (t,-1)^{n(n-1)/2} eps(q_A), and
/// A -> eps(q_A)(det A,-1)^{(n-1)/2} is invariant under A -> tA.
inline ScalingCheck epsilon_scaling_check(const SymMatrix& a, const Rational& t, const Place& place) {
    const auto n = static_cast<long long>(a.size());
    if (n % 2 == 0) throw std::invalid_argument("epsilon_scaling_check: n must be odd");
    detail::require_nonzero(t, "epsilon_scaling_check");
    auto [q, radical] = diagonalize(a, place);
    if (radical != 0) throw std::invalid_argument("epsilon_scaling_check: singular matrix");
    ScalingCheck c;
    c.scaling_law = hasse_invariant(q.scaled(t)) ==
                    pow(hilbert_symbol(t, Rational(-1), place), n * (n - 1) / 2) * hasse_invariant(q);
    c.invariance = scaled_orbit_sign(a.scaled(t), place) == scaled_orbit_sign(a, place);
    c.holds = c.scaling_law && c.invariance;
    return c;
}

}  // namespace localwitt
