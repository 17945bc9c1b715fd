// Exact rational-prime and p-adic arithmetic on 64-bit integers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ternary {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

struct PrimePower {
    i64 p = 0;
    int k = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes ascending, exponents >= 1.
using Factorization = std::vector<PrimePower>;

/// floor(sqrt(n)) for n >= 0.
inline i64 isqrt(i64 n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (static_cast<u128>(r) * r > static_cast<u64>(n)) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= static_cast<u64>(n)) ++r;
    return static_cast<i64>(r);
}

/// isqrt for 128-bit nonnegative values whose root fits 64 bits.
inline i64 isqrt128(i128 n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (static_cast<i128>(r) * r > n) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
    return static_cast<i64>(r);
}

inline bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    const i64 r = isqrt(n);
    return r * r == n;
}

/// Largest k with p^k | n.
inline int ord_p(i64 p, i64 n) {
    if (n == 0) throw std::domain_error("ord_p: zero argument");
    if (p < 2) throw std::domain_error("ord_p: modulus must be a prime");
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

/// n with every factor of p removed (sign kept).
inline i64 unit_part(i64 p, i64 n) {
    if (n == 0) throw std::domain_error("unit_part: zero argument");
    while (n % p == 0) n /= p;
    return n;
}

inline i64 ipow(i64 base, int exp) {
    i64 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Floor-mod into [0, m).
inline i64 mod_floor(i64 a, i64 m) {
    const i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace detail {

inline bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

inline u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto step = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

}  // namespace detail

/// Deterministic for all 64-bit inputs (Miller-Rabin with the first 12 prime bases).
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = static_cast<u64>(n) - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (detail::miller_rabin_witness(static_cast<u64>(n), a, d, s)) return false;
    }
    return true;
}

/// Trial division up to 10^6, then Pollard rho on whatever cofactor remains.
inline Factorization factor(i64 n) {
    if (n < 1) throw std::domain_error("factor: argument must be positive");
    Factorization out;
    auto push = [&out](i64 p, int k) {
        for (auto& pp : out) {
            if (pp.p == p) {
                pp.k += k;
                return;
            }
        }
        out.push_back({p, k});
    };
    for (i64 p = 2; p <= 1'000'000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k) push(p, k);
    }
    std::vector<i64> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        const i64 m = stack.back();
        stack.pop_back();
        if (is_prime(m)) {
            push(m, 1);
            continue;
        }
        const i64 d = static_cast<i64>(detail::pollard_rho(static_cast<u64>(m)));
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& l, const PrimePower& r) { return l.p < r.p; });
    return out;
}

inline std::vector<i64> prime_divisors(i64 n) {
    std::vector<i64> ps;
    for (const auto& pp : factor(n)) ps.push_back(pp.p);
    return ps;
}

/// sf(n): the squarefree m with n/m a perfect square.
inline i64 squarefree_part(i64 n) {
    i64 sf = 1;
    for (const auto& pp : factor(n)) {
        if (pp.k % 2) sf *= pp.p;
    }
    return sf;
}

/// Legendre symbol (a/p) for an odd prime p.
inline int legendre(i64 a, i64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::domain_error("legendre: modulus must be an odd prime");
    const u64 r = static_cast<u64>(mod_floor(a, p));
    if (r == 0) return 0;
    return pow_mod(r, static_cast<u64>(p - 1) / 2, static_cast<u64>(p)) == 1 ? 1 : -1;
}

/// Whether m is a square in Q_p.
inline bool is_padic_square(i64 p, i64 m) {
    if (m == 0) throw std::domain_error("is_padic_square: zero argument");
    if (ord_p(p, m) % 2) return false;
    const i64 u = unit_part(p, m);
    if (p == 2) return mod_floor(u, 8) == 1;
    return legendre(u, p) == 1;
}

/// Square class of a nonzero rational integer in Q_p: (ord parity, canonical unit).
/// The unit is a residue mod 8 for p = 2 and 1 or the least nonresidue otherwise.
struct PadicSquareClass {
    int ord_parity = 0;
    i64 unit = 1;
    friend bool operator==(const PadicSquareClass&, const PadicSquareClass&) = default;
};

inline i64 least_nonresidue(i64 p) {
    for (i64 a = 2;; ++a) {
        if (legendre(a, p) == -1) return a;
    }
}

inline PadicSquareClass padic_square_class(i64 p, i64 m) {
    const int k = ord_p(p, m);
    const i64 u = unit_part(p, m);
    if (p == 2) return {k % 2, mod_floor(u, 8)};
    return {k % 2, legendre(u, p) == 1 ? 1 : least_nonresidue(p)};
}

/// Hilbert symbol (a,b)_p by the closed unit/exponent formulas.
inline int hilbert(i64 p, i64 a, i64 b) {
    if (a == 0 || b == 0) throw std::domain_error("hilbert: zero argument");
    const int alpha = ord_p(p, a);
    const int beta = ord_p(p, b);
    const i64 u = unit_part(p, a);
    const i64 v = unit_part(p, b);
    if (p == 2) {
        auto eps = [](i64 w) { return static_cast<int>(mod_floor(w, 4) == 3); };
        auto omega = [](i64 w) {
            const i64 r = mod_floor(w, 8);
            return static_cast<int>(r == 3 || r == 5);
        };
        const int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
        return e % 2 ? -1 : 1;
    }
    int s = 1;
    if ((alpha * beta) % 2 && mod_floor(p, 4) == 3) s = -s;
    if (beta % 2) s *= legendre(u, p);
    if (alpha % 2) s *= legendre(v, p);
    return s;
}

/// Hilbert symbol at the real place.
inline int hilbert_real(i64 a, i64 b) {
    return (a < 0 && b < 0) ? -1 : 1;
}

/// gamma in N_p(-nDelta), i.e. (gamma, -nDelta)_p = +1.
inline bool in_local_norm_group(i64 p, i64 gamma, i64 n_delta) {
    if (n_delta < 1) throw std::domain_error("in_local_norm_group: nDelta must be positive");
    return hilbert(p, gamma, -n_delta) == 1;
}

}  // namespace ternary
