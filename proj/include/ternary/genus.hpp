// Genus-level decisions for catalog records: local representation everywhere,
// the spinor exceptional criterion, and classification of integers.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ternary/arith.hpp"
#include "ternary/catalog.hpp"
#include "ternary/forms.hpp"
#include "ternary/local_solver.hpp"
#include "ternary/spinor.hpp"

namespace ternary {

/// First prime dividing 2*Delta at which n is not represented, if any.
inline std::optional<i64> first_local_obstruction(const GenusRecord& r, i64 n) {
    for (i64 p : r.ramified_primes()) {
        if (!local_represents(r.spinor_regular(), p, n).representable) return p;
    }
    return std::nullopt;
}

/// n -> gen: represented over Z_p at every p | 2*Delta (all other p are unimodular).
inline bool genus_represents(const GenusRecord& r, i64 n) { return !first_local_obstruction(r, n).has_value(); }

/// genus_represents backed by per-prime square-class memo tables, for batch use.
class GenusLocalTable {
public:
    GenusLocalTable(const GenusRecord& r, i64 max_n) {
        for (i64 p : r.ramified_primes()) tables_.emplace_back(r.spinor_regular(), p, max_n);
    }

    std::optional<i64> first_obstruction(i64 n) const {
        for (const auto& t : tables_) {
            if (!t.represents(n)) return t.prime();
        }
        return std::nullopt;
    }

    bool represents(i64 n) const { return !first_obstruction(n).has_value(); }

private:
    std::vector<LocalTable> tables_;
};

/// The spinor exceptional criterion, with n -> gen supplied by the caller.
///
/// With D = n*Delta:
///  (b) p not dividing 2*Delta, p | n: ord_p(n) even and -D a square in Q_p;
///  (c) p | 2*Delta: every generator of theta(O+(L_p)) lies in N_p(-D);
///  (d) p | 2*Delta with -D not a square in Q_p: ord_p(n) <= the record's cutoff.
inline bool spinor_exceptional_local_conditions(const GenusRecord& r, i64 n) {
    const i128 wide = static_cast<i128>(n) * r.delta;
    if (wide > std::numeric_limits<i64>::max()) throw std::overflow_error("spinor criterion: n*Delta exceeds 64 bits");
    const i64 nd = static_cast<i64>(wide);
    for (const auto& pp : factor(n)) {
        if (r.local_at(pp.p)) continue;
        if (pp.k % 2) return false;
        if (!is_padic_square(pp.p, -nd)) return false;
    }
    for (const auto& l : r.local) {
        for (i64 g : l.norms.generators) {
            if (!in_local_norm_group(l.p, g, nd)) return false;
        }
        if (is_padic_square(l.p, -nd)) continue;
        const auto cutoff = l.order_bound();
        if (!cutoff) return false;
        if (ord_p(l.p, n) > *cutoff) return false;
    }
    return true;
}

inline bool spinor_exceptional_general(const GenusRecord& r, i64 n) {
    if (n < 1) throw std::invalid_argument("spinor_exceptional_general: n must be positive");
    return genus_represents(r, n) && spinor_exceptional_local_conditions(r, n);
}

enum class Verdict { represented, exceptional, locally_excluded };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::represented: return "REPRESENTED";
        case Verdict::exceptional: return "EXCEPTIONAL";
        case Verdict::locally_excluded: return "LOCALLY_EXCLUDED";
    }
    return "?";
}

struct Classification {
    Verdict verdict = Verdict::represented;
    std::optional<Witness> witness;
    std::optional<i64> failing_prime;
    std::optional<SquareClassEntry> matched;
};

inline std::string detail_string(const Classification& c) {
    switch (c.verdict) {
        case Verdict::represented: return c.witness ? to_string(*c.witness) : std::string("-");
        case Verdict::exceptional: return "s=" + std::to_string(c.matched->scale) + ",t=" + std::to_string(c.matched->t);
        case Verdict::locally_excluded: return "p=" + std::to_string(*c.failing_prime);
    }
    return "";
}

/// Precomputed state for classifying every n up to a bound for one record.
class ClassifyContext {
public:
    ClassifyContext(const GenusRecord& r, i64 bound, bool keep_witnesses = true)
        : record_(&r), local_(r, bound), global_(enumerate_represented(r.spinor_regular(), bound, keep_witnesses)) {}

    const GenusRecord& record() const { return *record_; }
    i64 bound() const { return global_.bound(); }
    const GenusLocalTable& local() const { return local_; }
    const RepresentedSet& global() const { return global_; }

private:
    const GenusRecord* record_;
    GenusLocalTable local_;
    RepresentedSet global_;
};

/// LOCALLY_EXCLUDED unless n -> gen; then EXCEPTIONAL on the record's
/// square classes; otherwise REPRESENTED with a witness from enumeration.
inline Classification classify(const ClassifyContext& ctx, i64 n) {
    if (n < 1 || n > ctx.bound()) throw std::out_of_range("classify: n outside 1.." + std::to_string(ctx.bound()));
    Classification out;
    if (auto p = ctx.local().first_obstruction(n)) {
        out.verdict = Verdict::locally_excluded;
        out.failing_prime = p;
        return out;
    }
    if (auto e = match_squareclass_spec(ctx.record().exceptional, n)) {
        out.verdict = Verdict::exceptional;
        out.matched = e;
        return out;
    }
    out.verdict = Verdict::represented;
    out.witness = ctx.global().witness(n);
    return out;
}

inline Classification classify(const GenusRecord& r, i64 n) {
    const ClassifyContext ctx(r, n);
    return classify(ctx, n);
}

}  // namespace ternary
