#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace localwitt {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// A place of Q: the real place or the p-adic place for a prime p.
class Place {
public:
    static constexpr std::int64_t max_prime = (std::int64_t{1} << 31) - 1;

    static Place real() { return Place(0); }

    static Place padic(std::int64_t p) {
        if (!is_prime(p)) throw std::invalid_argument("place: " + std::to_string(p) + " is not a prime");
        if (p > max_prime) throw std::invalid_argument("place: prime " + std::to_string(p) + " exceeds 2^31");
        return Place(p);
    }

    /// "real" or "p:<prime>".
    static Place parse(std::string_view text) {
        if (text == "real" || text == "R" || text == "inf") return real();
        if (text.size() > 2 && text.substr(0, 2) == "p:") {
            std::int64_t p = 0;
            for (char c : text.substr(2)) {
                if (c < '0' || c > '9' || p > max_prime)
                    throw std::invalid_argument("place: malformed prime in '" + std::string(text) + "'");
                p = p * 10 + (c - '0');
            }
            return padic(p);
        }
        throw std::invalid_argument("place: expected 'real' or 'p:<prime>', got '" + std::string(text) + "'");
    }

    bool is_real() const { return p_ == 0; }
    bool is_padic() const { return p_ != 0; }

    std::int64_t prime() const {
        if (is_real()) throw std::domain_error("the real place has no prime");
        return p_;
    }

    std::string to_string() const { return is_real() ? std::string("real") : "p:" + std::to_string(p_); }

    friend bool operator==(const Place&, const Place&) = default;

private:
    explicit Place(std::int64_t p) : p_(p) {}
    std::int64_t p_;
};

inline void require_same_place(const Place& a, const Place& b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": place mismatch (" + a.to_string() + " vs " +
                                    b.to_string() + ")");
}

}  // namespace localwitt
