// The semigroups M_t and unions of square classes s*M_t^2.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ternary/arith.hpp"

namespace ternary {

/// M_t: generated by 1 and the primes p with -t a square in Q_p.
inline bool in_Mt(i64 t, i64 w) {
    if (t < 1) throw std::invalid_argument("in_Mt: t must be positive");
    if (w < 1) throw std::invalid_argument("in_Mt: w must be positive");
    for (const auto& pp : factor(w)) {
        if (!is_padic_square(pp.p, -t)) return false;
    }
    return true;
}

/// Congruence description of M_t for t in {1,2,3,7}; independent of in_Mt.
inline bool congruence_Mt(i64 t, i64 w) {
    if (w < 1) throw std::invalid_argument("congruence_Mt: w must be positive");
    auto prime_ok = [t](i64 p) {
        switch (t) {
            case 1: return p % 4 == 1;
            case 2: return p % 8 == 1 || p % 8 == 3;
            case 3: return p % 3 == 1;
            case 7: return p % 7 == 1 || p % 7 == 2 || p % 7 == 4;
            default: throw std::invalid_argument("congruence_Mt: t must be 1, 2, 3 or 7");
        }
    };
    for (i64 p = 2; p * p <= w; ++p) {
        if (w % p) continue;
        if (!prime_ok(p)) return false;
        while (w % p == 0) w /= p;
    }
    return w == 1 || prime_ok(w);
}

struct SquareClassEntry {
    i64 scale = 1;
    i64 t = 1;
    friend bool operator==(const SquareClassEntry&, const SquareClassEntry&) = default;
};

inline std::string to_string(const SquareClassEntry& e) {
    return (e.scale == 1 ? std::string{} : std::to_string(e.scale)) + "M" + std::to_string(e.t) + "^2";
}

/// Union of the sets s*M_t^2.
struct SquareClassSpec {
    std::vector<SquareClassEntry> entries;
    friend bool operator==(const SquareClassSpec&, const SquareClassSpec&) = default;
};

inline std::string to_string(const SquareClassSpec& spec) {
    std::string out;
    for (const auto& e : spec.entries) {
        if (!out.empty()) out += ", ";
        out += to_string(e);
    }
    return out;
}

/// First entry (s,t) with n = s*w^2, w in M_t.
inline std::optional<SquareClassEntry> match_squareclass_spec(const SquareClassSpec& spec, i64 n) {
    if (n < 1) return std::nullopt;
    for (const auto& e : spec.entries) {
        if (n % e.scale) continue;
        const i64 q = n / e.scale;
        if (!is_perfect_square(q)) continue;
        if (in_Mt(e.t, isqrt(q))) return e;
    }
    return std::nullopt;
}

inline bool in_squareclass_spec(const SquareClassSpec& spec, i64 n) {
    return match_squareclass_spec(spec, n).has_value();
}

/// theta(O+(L_p)) as a list of square-class representatives.
struct SpinorNormGroup {
    std::vector<i64> generators;
    friend bool operator==(const SpinorNormGroup&, const SpinorNormGroup&) = default;

    bool contains_class(i64 p, i64 gamma) const {
        const auto cls = padic_square_class(p, gamma);
        for (i64 g : generators) {
            if (padic_square_class(p, g) == cls) return true;
        }
        return false;
    }

    /// Contains 1 and is closed under multiplication modulo squares.
    bool is_group(i64 p) const {
        if (!contains_class(p, 1)) return false;
        for (i64 g : generators) {
            for (i64 h : generators) {
                if (!contains_class(p, g * h)) return false;
            }
        }
        return true;
    }
};

/// Shape of an odd-p Jordan splitting with its ord_p(n) cutoff.
enum class OddBoundType { one_p_p2, one_p2_p3, one_p_p3 };

inline int bound_of(OddBoundType t) {
    switch (t) {
        case OddBoundType::one_p_p2: return 1;
        case OddBoundType::one_p2_p3: return 1;
        case OddBoundType::one_p_p3: return 2;
    }
    return 0;
}

inline std::string to_string(OddBoundType t) {
    switch (t) {
        case OddBoundType::one_p_p2: return "<1,p,p^2>";
        case OddBoundType::one_p2_p3: return "<1,p^2,p^3>";
        case OddBoundType::one_p_p3: return "<1,p,p^3>";
    }
    return "?";
}

}  // namespace ternary
