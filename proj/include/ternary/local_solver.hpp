// Representability of integers by ternary forms over Z_p.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ternary/arith.hpp"
#include "ternary/forms.hpp"

namespace ternary {

/// Evidence behind a local decision.
///
/// Accepting: residue x (coordinates mod p^residue_precision) with
/// F(x) = n mod p^(2g+1) and some component of M_F x of p-order exactly g,
/// which Hensel-lifts to a Z_p solution. Rejecting: no residue class survives, and any
/// solution would need gradient order <= K, so no certificate exists mod p^(2K+1).
struct LocalCertificate {
    Witness residue;
    int residue_precision = 0;
    int gradient_order = 0;
    int congruence_precision() const { return 2 * gradient_order + 1; }
};

struct LocalVerdict {
    bool representable = false;
    bool unramified = false;            ///< decided by p not dividing 2*Delta, no search
    std::optional<LocalCertificate> certificate;
    int bound_exponent = 0;             ///< E = 2K+1 with K = floor(ord_p(4n*Delta)/2)
    int levels_searched = 0;            ///< deepest coordinate precision examined
    std::size_t max_live = 0;           ///< widest surviving residue set
};

/// True iff p does not divide 2*Delta = det(M_F); then L_p is unimodular and
/// represents every p-adic integer.
inline bool unramified_shortcut(const TernaryForm& q, i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("unramified_shortcut: " + std::to_string(p) + " is not prime");
    const i64 det = matrix_determinant(q);
    if (det == 0) throw std::invalid_argument("unramified_shortcut: degenerate form " + to_string(q));
    return det % p != 0;
}

namespace detail {

inline int gradient_order(const Matrix3& m, i128 x, i128 y, i128 z, i64 p, int cap) {
    int best = cap;
    for (int r = 0; r < 3; ++r) {
        i128 g = m[r][0] * x + m[r][1] * y + m[r][2] * z;
        int k = 0;
        while (k < best && g % p == 0) {
            g /= p;
            ++k;
        }
        if (k < best) best = k;
    }
    return best;
}

inline i128 mod_floor128(i128 a, i128 m) {
    const i128 r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace detail

/// Decide n -> L_p for a nondegenerate ternary form (the lattice with Gram M_F/2).
///
/// Nodes are residue vectors x mod p^a. On the coset x + p^a Z_p^3 the value F is fixed
/// mod p^c with c = min(2a, a+g), g the p-order of M_F x. A node dies when
/// F(x) != n mod p^c, is certified when g < a, and otherwise survives with
/// M_F x = 0 mod p^a. Survivors past a = K cannot reach a solution, because at any
/// solution grad^T adj(M_F) grad = 4*Delta*n bounds the gradient order by K.
inline LocalVerdict local_represents(const TernaryForm& q, i64 p, i64 n) {
    if (n < 1) throw std::invalid_argument("local_represents: n must be positive");
    LocalVerdict out;
    if (unramified_shortcut(q, p)) {
        out.representable = true;
        out.unramified = true;
        return out;
    }
    const Matrix3 m = q.matrix();
    const i64 det = matrix_determinant(q);
    const i128 four_n_delta = static_cast<i128>(2) * n * (det < 0 ? -det : det);
    if (four_n_delta > std::numeric_limits<i64>::max()) throw std::overflow_error("local_represents: 4*n*Delta exceeds 64 bits");
    const int big_k = ord_p(p, static_cast<i64>(four_n_delta)) / 2;
    out.bound_exponent = 2 * big_k + 1;

    std::vector<std::array<i128, 3>> live{{0, 0, 0}};
    i128 prev = 1;  // p^(a-1)
    for (int a = 1; a <= big_k + 1; ++a) {
        const i128 pa = prev * p;
        std::vector<std::array<i128, 3>> next;
        out.levels_searched = a;
        for (const auto& base : live) {
            for (i64 i = 0; i < p; ++i) {
                for (i64 j = 0; j < p; ++j) {
                    for (i64 k = 0; k < p; ++k) {
                        const i128 x = base[0] + prev * i, y = base[1] + prev * j, z = base[2] + prev * k;
                        const int g = detail::gradient_order(m, x, y, z, p, a);
                        const int c = std::min(2 * a, a + g);
                        i128 pc = 1;
                        for (int t = 0; t < c; ++t) pc *= p;
                        if (detail::mod_floor128(evaluate_wide(q, x, y, z) - n, pc) != 0) continue;
                        if (g < a) {
                            out.representable = true;
                            out.certificate = LocalCertificate{
                                {static_cast<i64>(x), static_cast<i64>(y), static_cast<i64>(z)}, a, g};
                            return out;
                        }
                        next.push_back({x, y, z});
                    }
                }
            }
        }
        out.max_live = std::max(out.max_live, next.size());
        live = std::move(next);
        prev = pa;
        if (live.empty()) break;
    }
    return out;
}

/// Re-check an accepting certificate from first principles.
inline bool verify_certificate(const TernaryForm& q, i64 p, i64 n, const LocalCertificate& cert) {
    const Matrix3 m = q.matrix();
    const auto& r = cert.residue;
    i128 mod = 1;
    for (int t = 0; t < cert.congruence_precision(); ++t) mod *= p;
    if (detail::mod_floor128(evaluate_wide(q, r.x, r.y, r.z) - n, mod) != 0) return false;
    const int g = detail::gradient_order(m, r.x, r.y, r.z, p, cert.gradient_order + 1);
    return g <= cert.gradient_order;
}

/// Not represented by L_2 = M + <16>, M the binary x^2+xy+y^2: n = 2+4l or 8+16l.
inline bool excluded_by_m_plus_16(i64 n) { return mod_floor(n, 4) == 2 || mod_floor(n, 16) == 8; }

/// Not represented by L_2 = <1,16,48>: n = 5+8l, 2+4l, 3+4l, 8+16l or 12+16l.
inline bool excluded_by_1_16_48(i64 n) {
    return mod_floor(n, 8) == 5 || mod_floor(n, 4) == 2 || mod_floor(n, 4) == 3 || mod_floor(n, 16) == 8 ||
           mod_floor(n, 16) == 12;
}

/// Not represented by L_3 = <1,3,9>: n = 2+3l or 9^k(6+9l).
inline bool excluded_by_1_3_9(i64 n) {
    if (mod_floor(n, 3) == 2) return true;
    while (n % 9 == 0) n /= 9;
    return mod_floor(n, 9) == 6;
}

/// Memo of local_represents over the p-adic square classes of n up to a bound.
///
/// Representability of n depends only on ord_p(n) and the unit square class of n,
/// since v -> u*v carries representations of n to representations of u^2*n.
class LocalTable {
public:
    LocalTable(const TernaryForm& q, i64 p, i64 max_n) : p_(p) {
        if (max_n < 1) throw std::invalid_argument("LocalTable: bound must be positive");
        units_ = p == 2 ? std::vector<i64>{1, 3, 5, 7} : std::vector<i64>{1, least_nonresidue(p)};
        for (i64 pk = 1; pk <= max_n; pk *= p) {
            std::vector<char> row;
            for (i64 u : units_) row.push_back(local_represents(q, p, pk * u).representable ? 1 : 0);
            table_.push_back(std::move(row));
            if (pk > max_n / p) break;
        }
    }

    i64 prime() const { return p_; }

    bool represents(i64 n) const {
        const int k = ord_p(p_, n);
        if (k >= static_cast<int>(table_.size())) throw std::out_of_range("LocalTable: n beyond table bound");
        const i64 u = unit_part(p_, n);
        std::size_t idx = 0;
        if (p_ == 2) {
            idx = static_cast<std::size_t>(mod_floor(u, 8) / 2);
        } else {
            idx = legendre(u, p_) == 1 ? 0 : 1;
        }
        return table_[static_cast<std::size_t>(k)][idx] != 0;
    }

private:
    i64 p_;
    std::vector<i64> units_;
    std::vector<std::vector<char>> table_;
};

}  // namespace ternary
