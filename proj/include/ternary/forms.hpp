// Integral ternary quadratic forms ax^2+by^2+cz^2+dyz+exz+fxy.
#pragma once

#include <array>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ternary/arith.hpp"

namespace ternary {

class DefinitenessError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

using Matrix3 = std::array<std::array<i64, 3>, 3>;

struct Witness {
    i64 x = 0, y = 0, z = 0;
    friend bool operator==(const Witness&, const Witness&) = default;
    Witness operator-() const { return {-x, -y, -z}; }
};

inline std::string to_string(const Witness& w) {
    return "(" + std::to_string(w.x) + "," + std::to_string(w.y) + "," + std::to_string(w.z) + ")";
}

struct TernaryForm {
    i64 a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

    friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

    /// M_F, the matrix of second partials.
    Matrix3 matrix() const {
        return {{{2 * a, f, e}, {f, 2 * b, d}, {e, d, 2 * c}}};
    }

    bool classic() const { return d % 2 == 0 && e % 2 == 0 && f % 2 == 0; }
};

inline std::string to_string(const TernaryForm& q) {
    return "(" + std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) + "," +
           std::to_string(q.d) + "," + std::to_string(q.e) + "," + std::to_string(q.f) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const TernaryForm& q) { return os << to_string(q); }

inline i64 evaluate(const TernaryForm& q, const Witness& v) {
    return q.a * v.x * v.x + q.b * v.y * v.y + q.c * v.z * v.z + q.d * v.y * v.z + q.e * v.x * v.z +
           q.f * v.x * v.y;
}

/// 128-bit evaluation for the residue searches, where coordinates reach p^K.
inline i128 evaluate_wide(const TernaryForm& q, i128 x, i128 y, i128 z) {
    return q.a * x * x + q.b * y * y + q.c * z * z + q.d * y * z + q.e * x * z + q.f * x * y;
}

inline i64 det3(const Matrix3& m) {
    const i128 r = static_cast<i128>(m[0][0]) * (static_cast<i128>(m[1][1]) * m[2][2] - static_cast<i128>(m[1][2]) * m[2][1]) -
                   static_cast<i128>(m[0][1]) * (static_cast<i128>(m[1][0]) * m[2][2] - static_cast<i128>(m[1][2]) * m[2][0]) +
                   static_cast<i128>(m[0][2]) * (static_cast<i128>(m[1][0]) * m[2][1] - static_cast<i128>(m[1][1]) * m[2][0]);
    if (r > std::numeric_limits<i64>::max() || r < std::numeric_limits<i64>::min())
        throw std::overflow_error("det3: determinant exceeds 64 bits");
    return static_cast<i64>(r);
}

inline Matrix3 adjugate(const Matrix3& m) {
    Matrix3 adj{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    }
    return adj;
}

/// det(M_F) for any form, definite or not.
inline i64 matrix_determinant(const TernaryForm& q) { return det3(q.matrix()); }

inline bool is_positive_definite(const TernaryForm& q) {
    const Matrix3 m = q.matrix();
    if (m[0][0] <= 0) return false;
    if (m[0][0] * m[1][1] - m[0][1] * m[1][0] <= 0) return false;
    return det3(m) > 0;
}

/// Delta = det(M_F)/2.
inline i64 discriminant(const TernaryForm& q) {
    if (!is_positive_definite(q)) throw DefinitenessError("discriminant: form " + to_string(q) + " is not positive definite");
    return det3(q.matrix()) / 2;
}

/// Canonical witness order: compare z, then y, then x, each in the sequence 0,1,-1,2,-2,...
inline bool witness_precedes(const Witness& l, const Witness& r) {
    auto key = [](i64 t) { return t > 0 ? 2 * t - 1 : -2 * t; };
    if (l.z != r.z) return key(l.z) < key(r.z);
    if (l.y != r.y) return key(l.y) < key(r.y);
    return key(l.x) < key(r.x);
}

/// Membership over 1..bound, keeping the canonically least witness per member.
class RepresentedSet {
public:
    RepresentedSet(i64 bound, bool keep_witnesses)
        : bound_(bound), member_(static_cast<std::size_t>(bound) + 1, 0) {
        if (keep_witnesses) witnesses_.resize(static_cast<std::size_t>(bound) + 1);
    }

    i64 bound() const { return bound_; }
    bool has_witnesses() const { return !witnesses_.empty(); }

    bool contains(i64 n) const {
        if (n < 1 || n > bound_) throw std::out_of_range("RepresentedSet: " + std::to_string(n) + " outside 1.." + std::to_string(bound_));
        return member_[static_cast<std::size_t>(n)] != 0;
    }

    std::optional<Witness> witness(i64 n) const {
        if (!contains(n) || witnesses_.empty()) return std::nullopt;
        return witnesses_[static_cast<std::size_t>(n)];
    }

    i64 count() const {
        i64 k = 0;
        for (std::size_t n = 1; n < member_.size(); ++n) k += member_[n];
        return k;
    }

    void insert(i64 n, const Witness& w) {
        auto& slot = member_[static_cast<std::size_t>(n)];
        if (!witnesses_.empty()) {
            auto& cur = witnesses_[static_cast<std::size_t>(n)];
            if (!slot || witness_precedes(w, cur)) cur = w;
        }
        slot = 1;
    }

private:
    i64 bound_;
    std::vector<unsigned char> member_;
    std::vector<Witness> witnesses_;
};

namespace detail {

inline i64 ceil_div(i64 num, i64 den) {
    // den > 0
    return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

inline i64 floor_div(i64 num, i64 den) {
    return num >= 0 ? num / den : -((-num + den - 1) / den);
}

}  // namespace detail

/// Every n <= bound with F(v) = n for some integer v.
///
/// The outer coordinate z ranges over z^2 <= 2*bound*adj(M_F)_33/det(M_F). For fixed z
/// the remaining ranges come from completing the square twice:
///   4aF = (2ax + fy + ez)^2 + Q(y,z),   4A'Q = (2A'y + B'z)^2 + D'z^2,
/// with Q = A'y^2 + B'yz + C'z^2. Everything stays in integers.
inline RepresentedSet enumerate_represented(const TernaryForm& q, i64 bound, bool keep_witnesses = true) {
    if (bound < 1) throw std::invalid_argument("enumerate_represented: bound must be >= 1");
    if (!is_positive_definite(q)) throw DefinitenessError("enumerate_represented: form " + to_string(q) + " is not positive definite");

    const i64 a = q.a, b = q.b, c = q.c, d = q.d, e = q.e, f = q.f;
    const i64 A2 = 4 * a * b - f * f;
    const i64 B2 = 4 * a * d - 2 * e * f;
    const i64 C2 = 4 * a * c - e * e;
    const Matrix3 m = q.matrix();
    const i64 det = det3(m);
    const Matrix3 adj = adjugate(m);

    // Largest intermediates: 16*a*A'*bound, 2*bound*adj_33, and (2A'y+B'z)^2 up to the former.
    const i128 top = static_cast<i128>(16) * a * A2 * bound;
    const i128 top2 = static_cast<i128>(2) * bound * adj[2][2];
    constexpr i128 limit = std::numeric_limits<i64>::max() / 4;
    if (top > limit || top2 > limit) throw std::overflow_error("enumerate_represented: bound " + std::to_string(bound) + " too large for 64-bit arithmetic with form " + to_string(q));

    RepresentedSet out(bound, keep_witnesses);
    const i64 zmax = isqrt((2 * bound * adj[2][2]) / det);
    const i64 D2 = 4 * A2 * C2 - B2 * B2;
    for (i64 z = -zmax; z <= zmax; ++z) {
        const i64 r1 = 16 * a * A2 * bound - D2 * z * z;
        if (r1 < 0) continue;
        const i64 s1 = isqrt(r1);
        const i64 ylo = detail::ceil_div(-s1 - B2 * z, 2 * A2);
        const i64 yhi = detail::floor_div(s1 - B2 * z, 2 * A2);
        for (i64 y = ylo; y <= yhi; ++y) {
            const i64 qyz = A2 * y * y + B2 * y * z + C2 * z * z;
            const i64 r2 = 4 * a * bound - qyz;
            if (r2 < 0) continue;
            const i64 s2 = isqrt(r2);
            const i64 lin = f * y + e * z;
            const i64 xlo = detail::ceil_div(-s2 - lin, 2 * a);
            const i64 xhi = detail::floor_div(s2 - lin, 2 * a);
            for (i64 x = xlo; x <= xhi; ++x) {
                const Witness w{x, y, z};
                const i64 v = evaluate(q, w);
                if (v >= 1 && v <= bound) out.insert(v, w);
            }
        }
    }
    return out;
}

}  // namespace ternary
