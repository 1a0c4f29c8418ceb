#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace localwitt {

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    explicit Polynomial(std::size_t nvars = 1) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i) {
        Polynomial p(nvars);
        Exponents e(nvars, 0);
        e.at(i) = 1;
        p.add_term(e, Rational(1));
        return p;
    }

    std::size_t num_vars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c) {
        if (e.size() != nvars_) throw std::invalid_argument("polynomial: exponent arity mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int k : e) s += k;
            d = std::max(d, s);
        }
        return d;
    }

    /// True when no monomial mixes two variables.
    bool is_separable() const {
        for (const auto& [e, c] : terms_) {
            int used = 0;
            for (int k : e) used += (k > 0);
            if (used > 1) return false;
        }
        return true;
    }

    /// The part of the polynomial in variable i alone (constants excluded),
    /// as a univariate polynomial.
    Polynomial univariate_part(std::size_t i) const {
        Polynomial out(1);
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) out.add_term({e[i]}, c);
        return out;
    }

    Rational constant_term() const {
        auto it = terms_.find(Exponents(nvars_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational evaluate(const std::vector<Rational>& x) const {
        Rational s = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_; ++i) t *= rational_pow(x[i], e[i]);
            s += t;
        }
        return s;
    }

    Polynomial derivative(std::size_t i) const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents f = e;
            f[i] -= 1;
            out.add_term(f, c * e[i]);
        }
        return out;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + o * Rational(-1); }

    Polynomial operator*(const Rational& s) const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) out.add_term(e, c * s);
        return out;
    }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial out(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e(nvars_);
                for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                out.add_term(e, c1 * c2);
            }
        return out;
    }

    /// Substitutes x_i -> shift_i + scale_i * x_i.
    Polynomial affine_substitute(const std::vector<Rational>& shift, const std::vector<Rational>& scale) const {
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < nvars_; ++i)
            images.push_back(constant(nvars_, shift[i]) + variable(nvars_, i) * scale[i]);
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            Polynomial t = constant(nvars_, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * images[i];
            out = out + t;
        }
        return out;
    }

    std::string to_string(std::string_view names = "xyzw") const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c;
            if (!s.empty()) {
                s += a < 0 ? "-" : "+";
                if (a < 0) a = -a;
            } else if (a < 0) {
                s += "-";
                a = -a;
            }
            bool constant_term = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
            bool wrote = false;
            if (a != 1 || constant_term) {
                s += localwitt::to_string(a);
                wrote = true;
            }
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (wrote) s += "*";
                s += names[i];
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
                wrote = true;
            }
        }
        return s;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

/// Parses integer-coefficient polynomials such as "x^3-3*x", "x^3-3x" or "x^2+y^2".
/// Variables are x, y, z in that order; the arity is the highest variable used
/// (at least `min_vars`).
inline Polynomial parse_polynomial(std::string_view text, std::size_t min_vars = 1) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("polynomial: empty input");
    const std::string names = "xyz";
    std::size_t nvars = min_vars;
    for (char c : s) {
        auto k = names.find(c);
        if (k != std::string::npos) nvars = std::max(nvars, k + 1);
    }
    Polynomial out(nvars);
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("polynomial '" + std::string(text) + "': " + why);
    };
    auto read_int = [&]() -> Integer {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected digits at position " + std::to_string(start));
        return Integer(s.substr(start, i - start));
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail("expected '+' or '-' at position " + std::to_string(i));
        }
        Integer coeff = 1;
        bool have_factor = false;
        Polynomial::Exponents e(nvars, 0);
        for (;;) {
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff *= read_int();
            } else if (i < s.size() && names.find(s[i]) != std::string::npos) {
                std::size_t v = names.find(s[i]);
                ++i;
                int power = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    power = static_cast<int>(read_int());
                }
                e[v] += power;
            } else {
                fail("unexpected character at position " + std::to_string(i));
            }
            have_factor = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            if (i < s.size() && names.find(s[i]) != std::string::npos) continue;  // implicit product, e.g. 3x
            break;
        }
        if (!have_factor) fail("empty term");
        out.add_term(e, Rational(coeff * sign));
    }
    return out;
}

}  // namespace localwitt
