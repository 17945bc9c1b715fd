// Jordan splittings of p-adic lattices as recorded catalog metadata.
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ternary/arith.hpp"
#include "ternary/forms.hpp"

namespace ternary {

struct SplittingComponent {
    enum class Kind { unary, hyperbolic, anisotropic };
    Kind kind = Kind::unary;
    i64 unit = 1;      ///< unary components only
    int exponent = 0;  ///< scale p^exponent
    friend bool operator==(const SplittingComponent&, const SplittingComponent&) = default;
    int rank() const { return kind == Kind::unary ? 1 : 2; }
};

/// Orthogonal sum of unary components u*p^k and, at p = 2, scaled planes 2^k H, 2^k A
/// (Gram matrices [[0,1],[1,0]] and [[2,1],[1,2]]).
struct LocalSplitting {
    i64 p = 2;
    std::vector<SplittingComponent> components;
    friend bool operator==(const LocalSplitting&, const LocalSplitting&) = default;

    int rank() const {
        int r = 0;
        for (const auto& c : components) r += c.rank();
        return r;
    }

    bool diagonal() const {
        for (const auto& c : components) {
            if (c.kind != SplittingComponent::Kind::unary) return false;
        }
        return true;
    }

    /// Product of component determinants.
    i64 determinant() const {
        i64 det = 1;
        for (const auto& c : components) {
            const i64 s = ipow(p, c.exponent);
            switch (c.kind) {
                case SplittingComponent::Kind::unary: det *= c.unit * s; break;
                case SplittingComponent::Kind::hyperbolic: det *= -s * s; break;
                case SplittingComponent::Kind::anisotropic: det *= 3 * s * s; break;
            }
        }
        return det;
    }

    /// The ternary form whose lattice has this splitting as Gram matrix.
    TernaryForm to_form() const {
        if (rank() != 3) throw std::logic_error("LocalSplitting::to_form: rank is not 3");
        Matrix3 g{};
        int at = 0;
        for (const auto& c : components) {
            const i64 s = ipow(p, c.exponent);
            switch (c.kind) {
                case SplittingComponent::Kind::unary: g[at][at] = c.unit * s; break;
                case SplittingComponent::Kind::hyperbolic:
                    g[at][at + 1] = g[at + 1][at] = s;
                    break;
                case SplittingComponent::Kind::anisotropic:
                    g[at][at] = g[at + 1][at + 1] = 2 * s;
                    g[at][at + 1] = g[at + 1][at] = s;
                    break;
            }
            at += c.rank();
        }
        return {g[0][0], g[1][1], g[2][2], 2 * g[1][2], 2 * g[0][2], 2 * g[0][1]};
    }
};

namespace detail {

/// Integer product expression: factors "n" or "n^k" separated by '*'.
inline i64 parse_product(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer expression");
    i64 value = 1;
    std::size_t pos = 0;
    while (true) {
        auto read_int = [&]() {
            const std::size_t start = pos;
            if (pos < s.size() && s[pos] == '-') ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start || (pos == start + 1 && s[start] == '-'))
                throw std::invalid_argument("expected integer in '" + std::string(s) + "'");
            return std::stoll(std::string(s.substr(start, pos - start)));
        };
        i64 base = read_int();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            const i64 k = read_int();
            if (k < 0 || k > 62) throw std::invalid_argument("bad exponent in '" + std::string(s) + "'");
            base = ipow(base, static_cast<int>(k));
        }
        value *= base;
        if (pos == s.size()) break;
        if (s[pos] != '*') throw std::invalid_argument("unexpected '" + std::string(1, s[pos]) + "' in '" + std::string(s) + "'");
        ++pos;
    }
    return value;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

inline std::string power_string(i64 p, int k) {
    if (k == 0) return "1";
    if (k == 1) return std::to_string(p);
    return std::to_string(p) + "^" + std::to_string(k);
}

}  // namespace detail

/// Parse e.g. "<5,2^2,5*2^6>", "A + <2^3>", "<5> + 2^3H".
inline LocalSplitting parse_splitting(i64 p, std::string_view text) {
    LocalSplitting out;
    out.p = p;
    for (auto part : detail::split(text, '+')) {
        if (part.empty()) throw std::invalid_argument("empty splitting component in '" + std::string(text) + "'");
        if (part.front() == '<') {
            if (part.back() != '>') throw std::invalid_argument("unterminated '<' in '" + std::string(text) + "'");
            for (auto term : detail::split(part.substr(1, part.size() - 2), ',')) {
                const i64 v = detail::parse_product(term);
                if (v == 0) throw std::invalid_argument("zero diagonal entry in '" + std::string(text) + "'");
                out.components.push_back({SplittingComponent::Kind::unary, unit_part(p, v), ord_p(p, v)});
            }
            continue;
        }
        const char kind = part.back();
        if (kind != 'H' && kind != 'A') throw std::invalid_argument("unknown splitting component '" + std::string(part) + "'");
        const auto scale_text = detail::trim(part.substr(0, part.size() - 1));
        const i64 scale = scale_text.empty() ? 1 : detail::parse_product(scale_text);
        if (unit_part(p, scale) != 1) throw std::invalid_argument("plane scale must be a power of p in '" + std::string(part) + "'");
        out.components.push_back({kind == 'H' ? SplittingComponent::Kind::hyperbolic : SplittingComponent::Kind::anisotropic, 1,
                                  ord_p(p, scale)});
    }
    return out;
}

inline std::string to_string(const LocalSplitting& s) {
    std::string out;
    std::string diag;
    auto flush = [&]() {
        if (diag.empty()) return;
        if (!out.empty()) out += " + ";
        out += "<" + diag + ">";
        diag.clear();
    };
    for (const auto& c : s.components) {
        if (c.kind == SplittingComponent::Kind::unary) {
            if (!diag.empty()) diag += ",";
            if (c.exponent == 0) {
                diag += std::to_string(c.unit);
            } else {
                diag += (c.unit == 1 ? std::string{} : std::to_string(c.unit) + "*") + detail::power_string(s.p, c.exponent);
            }
            continue;
        }
        flush();
        if (!out.empty()) out += " + ";
        if (c.exponent > 0) out += detail::power_string(s.p, c.exponent);
        out += c.kind == SplittingComponent::Kind::hyperbolic ? "H" : "A";
    }
    flush();
    return out;
}

}  // namespace ternary
