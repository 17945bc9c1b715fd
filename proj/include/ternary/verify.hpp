// Batch verification of the exceptional-set characterizations.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "ternary/catalog.hpp"
#include "ternary/genus.hpp"
#include "ternary/spinor.hpp"

namespace ternary {

struct Mismatch {
    i64 n = 0;
    std::string kind;    ///< "identity" or "statement"
    std::string detail;
    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
    std::string id;
    i64 bound = 0;
    i64 represented = 0;
    i64 exceptional = 0;
    i64 locally_excluded = 0;
    std::vector<Mismatch> mismatches;
    double wall_seconds = 0.0;

    bool passed() const { return mismatches.empty(); }
};

/// n = 4^a * m with a in {0,1} and pred(m).
inline bool four_power_type(i64 n, const std::function<bool(i64)>& pred) {
    if (pred(n)) return true;
    return n % 4 == 0 && pred(n / 4);
}

inline bool is_Mt_square(i64 t, i64 m) { return is_perfect_square(m) && in_Mt(t, isqrt(m)); }

/// Types 2+3l, 9^k(6+9l), 4^a(2+4l), 4^a M_3^2 for 3x^2+7y^2+7z^2+3xy+3xz+5yz.
inline bool b4_unrepresented_types(i64 n) {
    if (n % 3 == 2) return true;
    i64 m = n;
    while (m % 9 == 0) m /= 9;
    if (m % 9 == 6) return true;
    return four_power_type(n, [](i64 v) { return v % 4 == 2; }) || four_power_type(n, [](i64 v) { return is_Mt_square(3, v); });
}

/// Types 5+8l, 4^a(2+4l), 4^a(3+4l), 4^a M_3^2 for 9x^2+16y^2+48z^2.
inline bool b11_unrepresented_types(i64 n) {
    if (n % 8 == 5) return true;
    return four_power_type(n, [](i64 v) { return v % 4 == 2 || v % 4 == 3; }) ||
           four_power_type(n, [](i64 v) { return is_Mt_square(3, v); });
}

/// The closed-form "not represented" statement attached to a record, if it has one.
inline std::optional<std::function<bool(i64)>> closed_form_statement(const GenusRecord& r) {
    if (r.id == "B4" && r.spinor_regular() == TernaryForm{3, 7, 7, 5, 3, 3}) return std::function<bool(i64)>(b4_unrepresented_types);
    if (r.id == "B11" && r.spinor_regular() == TernaryForm{9, 16, 48, 0, 0, 0}) return std::function<bool(i64)>(b11_unrepresented_types);
    return std::nullopt;
}

/// Run fn(begin, end) over [1, bound] in fixed chunks on `jobs` workers; chunk results
/// are indexed so merging in chunk order is deterministic.
template <class ChunkResult, class Fn>
std::vector<ChunkResult> run_chunked(i64 bound, unsigned jobs, Fn fn, i64 chunk = 4096) {
    const i64 count = (bound + chunk - 1) / chunk;
    std::vector<ChunkResult> results(static_cast<std::size_t>(count));
    std::atomic<i64> next{0};
    auto worker = [&]() {
        for (i64 c = next++; c < count; c = next++) {
            const i64 lo = 1 + c * chunk;
            const i64 hi = std::min(bound, lo + chunk - 1);
            results[static_cast<std::size_t>(c)] = fn(lo, hi);
        }
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

/// For each n <= bound compares (i) enumeration of the spinor regular form,
/// (ii) genus representation, (iii) square-class membership and (iv) the general
/// spinor criterion: (ii) and not (i) <=> (iii) <=> (iv). Records with a closed-form
/// statement are also checked against it.
inline VerificationReport verify_record(const GenusRecord& r, i64 bound, unsigned jobs = 1) {
    if (bound < 1) throw std::invalid_argument("verify_record: bound must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const ClassifyContext ctx(r, bound, false);
    const auto statement = closed_form_statement(r);

    struct Chunk {
        i64 represented = 0, exceptional = 0, excluded = 0;
        std::vector<Mismatch> mismatches;
    };
    auto chunks = run_chunked<Chunk>(bound, jobs, [&](i64 lo, i64 hi) {
        Chunk out;
        for (i64 n = lo; n <= hi; ++n) {
            const bool global = ctx.global().contains(n);
            const bool genus = ctx.local().represents(n);
            const bool in_spec = in_squareclass_spec(r.exceptional, n);
            const bool general = genus && spinor_exceptional_local_conditions(r, n);
            const bool missed = genus && !global;
            if (missed != in_spec || in_spec != general) {
                out.mismatches.push_back({n, "identity",
                                          std::string("genus=") + (genus ? "1" : "0") + " global=" + (global ? "1" : "0") +
                                              " squareclass=" + (in_spec ? "1" : "0") + " criterion=" + (general ? "1" : "0")});
            }
            if (statement && (*statement)(n) != !global) {
                out.mismatches.push_back({n, "statement", global ? "represented but matches a listed type" : "not represented and matches no listed type"});
            }
            if (!genus) {
                ++out.excluded;
            } else if (in_spec) {
                ++out.exceptional;
            } else {
                ++out.represented;
            }
        }
        return out;
    });

    VerificationReport rep;
    rep.id = r.id;
    rep.bound = bound;
    for (auto& c : chunks) {
        rep.represented += c.represented;
        rep.exceptional += c.exceptional;
        rep.locally_excluded += c.excluded;
        rep.mismatches.insert(rep.mismatches.end(), c.mismatches.begin(), c.mismatches.end());
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// All exceptional n <= bound, ascending. Needs no enumeration.
inline std::vector<i64> exceptional_list(const GenusRecord& r, i64 bound) {
    if (bound < 1) throw std::invalid_argument("exceptional_list: bound must be >= 1");
    const GenusLocalTable local(r, bound);
    std::vector<i64> out;
    for (i64 n = 1; n <= bound; ++n) {
        if (local.represents(n) && in_squareclass_spec(r.exceptional, n)) out.push_back(n);
    }
    return out;
}

/// Tab-separated n, verdict, detail for 1..bound after a '#' summary header.
inline void write_report(std::ostream& out, const GenusRecord& r, i64 bound, unsigned jobs = 1) {
    const ClassifyContext ctx(r, bound, true);
    auto chunks = run_chunked<std::vector<Classification>>(bound, jobs, [&](i64 lo, i64 hi) {
        std::vector<Classification> v;
        v.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (i64 n = lo; n <= hi; ++n) v.push_back(classify(ctx, n));
        return v;
    });
    i64 counts[3] = {0, 0, 0};
    for (const auto& c : chunks) {
        for (const auto& cl : c) ++counts[static_cast<int>(cl.verdict)];
    }
    out << "# record " << r.id << " form " << to_string(r.spinor_regular()) << " bound " << bound << "\n";
    out << "# represented " << counts[0] << " exceptional " << counts[1] << " locally_excluded " << counts[2] << "\n";
    out << "# n\tverdict\tdetail\n";
    i64 n = 1;
    for (const auto& c : chunks) {
        for (const auto& cl : c) out << n++ << "\t" << to_string(cl.verdict) << "\t" << detail_string(cl) << "\n";
    }
}

}  // namespace ternary
