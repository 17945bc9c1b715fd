// Acceptance gate: one PASS/FAIL line per criterion. All checks are exact
// (zero mismatches tolerated). Exit status is 0 only if every criterion passes.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ternary/ternary.hpp"

using namespace ternary;

namespace {

constexpr i64 kBoundSets = 50000;        // criteria 1, 2
constexpr i64 kBoundStatements = 20000;  // criterion 3
constexpr i64 kBoundLocal = 10000;       // criterion 4
constexpr i64 kBoundGenus = 2000;        // criterion 5
constexpr i64 kBoundOrientation = 10000; // criterion 6
constexpr i64 kBoundOddSquares = 50000;  // criterion 7
constexpr int kHilbertTriples = 20000;   // criterion 8, at each of six primes
constexpr i64 kBoundMt = 100000;         // criterion 8

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
    bool pass = true;
    std::ostringstream note;
};

int failures = 0;

void report(int number, const std::string& title, Outcome& o) {
    std::cout << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title;
    const auto s = o.note.str();
    if (!s.empty()) std::cout << "\n" << s;
    std::cout << std::endl;
    if (!o.pass) ++failures;
}

std::string first_few(const std::vector<i64>& v, std::size_t k = 12) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size() && i < k; ++i) os << (i ? "," : "") << v[i];
    if (v.size() > k) os << ",...";
    return os.str();
}

// Shared by criteria 1 and 2: per record, genus-and-not-global, square-class set and
// general-criterion set, evaluated chunkwise.
struct SetsResult {
    std::vector<i64> missed_vs_spec;
    std::vector<i64> general_vs_spec;
};

SetsResult compare_sets(const GenusRecord& r, i64 bound) {
    const ClassifyContext ctx(r, bound, false);
    struct Chunk {
        std::vector<i64> a, b;
    };
    auto chunks = run_chunked<Chunk>(bound, jobs(), [&](i64 lo, i64 hi) {
        Chunk c;
        for (i64 n = lo; n <= hi; ++n) {
            const bool genus = ctx.local().represents(n);
            const bool missed = genus && !ctx.global().contains(n);
            const bool spec = genus && in_squareclass_spec(r.exceptional, n);
            const bool general = genus && spinor_exceptional_local_conditions(r, n);
            if (missed != spec) c.a.push_back(n);
            if (general != spec) c.b.push_back(n);
        }
        return c;
    });
    SetsResult out;
    for (auto& c : chunks) {
        out.missed_vs_spec.insert(out.missed_vs_spec.end(), c.a.begin(), c.a.end());
        out.general_vs_spec.insert(out.general_vs_spec.end(), c.b.begin(), c.b.end());
    }
    return out;
}

// Odd m^2 whose root has only prime factors 1 mod 4; plain trial division.
bool odd_square_of_1mod4_primes(i64 n) {
    if (n % 2 == 0) return false;
    i64 m = 0;
    while ((m + 1) * (m + 1) <= n) ++m;
    if (m * m != n) return false;
    for (i64 d = 3; d * d <= m; d += 2) {
        if (m % d) continue;
        if (d % 4 != 1) return false;
        while (m % d == 0) m /= d;
    }
    return m == 1 || m % 4 == 1;
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    const Catalog& cat = default_catalog();

    // 1 and 2
    {
        Outcome c1, c2;
        for (const auto& r : cat.records) {
            const auto s = compare_sets(r, kBoundSets);
            if (!s.missed_vs_spec.empty()) {
                c1.pass = false;
                c1.note << "  " << r.id << ": " << s.missed_vs_spec.size() << " mismatches: " << first_few(s.missed_vs_spec) << "\n";
            }
            if (!s.general_vs_spec.empty()) {
                c2.pass = false;
                c2.note << "  " << r.id << ": " << s.general_vs_spec.size() << " mismatches: " << first_few(s.general_vs_spec) << "\n";
            }
        }
        c1.note << "  29 records, n <= " << kBoundSets << ": genus and not represented by the spinor regular form == square-class set";
        c2.note << "  29 records, n <= " << kBoundSets << ": general spinor criterion == square-class set";
        report(1, "exceptional sets by enumeration", c1);
        report(2, "general criterion equivalence", c2);
    }

    // 3
    {
        Outcome c3;
        for (const char* id : {"B4", "B11"}) {
            const auto& r = lookup(cat, id);
            const auto statement = *closed_form_statement(r);
            const auto set = enumerate_represented(r.spinor_regular(), kBoundStatements, false);
            std::vector<i64> bad, bad_with_3adic;
            for (i64 n = 1; n <= kBoundStatements; ++n) {
                if (statement(n) != !set.contains(n)) bad.push_back(n);
                if ((statement(n) || excluded_by_1_3_9(n)) != !set.contains(n)) bad_with_3adic.push_back(n);
            }
            c3.note << "  " << id << " " << to_string(r.spinor_regular()) << ", n <= " << kBoundStatements << ": " << bad.size()
                    << " mismatches";
            if (!bad.empty()) {
                c3.pass = false;
                c3.note << " (" << first_few(bad) << ")";
            }
            c3.note << "\n";
            if (std::string(id) == "B11") {
                c3.note << "  info: B11 types plus the 3-adic types 2+3l, 9^k(6+9l): " << bad_with_3adic.size() << " mismatches";
            }
        }
        report(3, "closed-form statements for B4 and B11", c3);
    }

    // 4
    {
        Outcome c4;
        struct Case {
            std::string what;
            TernaryForm q;
            i64 p;
            bool (*pred)(i64);
        };
        std::vector<Case> cases = {
            {"M+<16> at 2, B4", lookup(cat, "B4").spinor_regular(), 2, excluded_by_m_plus_16},
            {"<1,16,48> at 2, B11", lookup(cat, "B11").spinor_regular(), 2, excluded_by_1_16_48},
        };
        const auto one_3_9 = parse_splitting(3, "<1,3,3^2>");
        for (const auto& r : cat.records) {
            const auto* l = r.local_at(3);
            if (l && l->splitting == one_3_9) {
                for (const auto& q : r.all_forms()) cases.push_back({"<1,3,9> at 3, " + r.id + " " + to_string(q), q, 3, excluded_by_1_3_9});
            }
        }
        for (const auto& c : cases) {
            std::vector<i64> bad;
            for (i64 n = 1; n <= kBoundLocal; ++n) {
                if (c.pred(n) != !local_represents(c.q, c.p, n).representable) bad.push_back(n);
            }
            if (!bad.empty()) {
                c4.pass = false;
                c4.note << "  " << c.what << ": " << bad.size() << " mismatches (" << first_few(bad) << ")\n";
            }
        }
        c4.note << "  " << cases.size() << " (form, p) pairs, n <= " << kBoundLocal;
        report(4, "local exclusion predicates vs local solver", c4);
    }

    // 5
    {
        Outcome c5;
        std::size_t forms = 0;
        int genus_bad = 0;
        for (const auto& r : cat.records) {
            for (const auto& q : r.all_forms()) {
                ++forms;
                const i64 d = discriminant(q);
                if (d != r.delta_listed) {
                    c5.pass = false;
                    c5.note << "  " << r.id << " " << to_string(q) << ": discriminant " << d << " != listed " << r.delta_listed << "\n";
                }
            }
            for (i64 p : r.ramified_primes()) {
                for (i64 n = 1; n <= kBoundGenus; ++n) {
                    const bool ref = local_represents(r.spinor_regular(), p, n).representable;
                    for (const auto& q : r.all_forms()) {
                        if (local_represents(q, p, n).representable != ref) {
                            if (genus_bad++ < 12) c5.note << "  " << r.id << " " << to_string(q) << " p=" << p << " n=" << n << " disagrees\n";
                        }
                    }
                }
            }
        }
        if (genus_bad) c5.pass = false;
        c5.note << "  " << forms << " representatives; local agreement within each genus, n <= " << kBoundGenus << ": " << genus_bad
                << " disagreements";
        report(5, "discriminants vs listed column; genus consistency", c5);
    }

    // 6
    {
        Outcome c6;
        i64 checked = 0;
        for (const auto& r : cat.records) {
            const ClassifyContext ctx(r, kBoundOrientation, false);
            std::vector<RepresentedSet> sgi, sgii;
            for (const auto& q : r.sgi) sgi.push_back(enumerate_represented(q, kBoundOrientation, false));
            for (const auto& q : r.sgii) sgii.push_back(enumerate_represented(q, kBoundOrientation, false));
            for (i64 n = 1; n <= kBoundOrientation; ++n) {
                if (classify(ctx, n).verdict != Verdict::exceptional) continue;
                ++checked;
                bool by_sgi = false, by_sgii = false;
                for (const auto& s : sgi) by_sgi = by_sgi || s.contains(n);
                for (const auto& s : sgii) by_sgii = by_sgii || s.contains(n);
                if (by_sgi || !by_sgii) {
                    c6.pass = false;
                    c6.note << "  " << r.id << " n=" << n << (by_sgi ? " represented by an SGI form" : " missed by every SGII form") << "\n";
                }
            }
        }
        c6.note << "  " << checked << " exceptional (record, n) pairs, n <= " << kBoundOrientation;
        report(6, "exceptional integers lie in SGII only", c6);
    }

    // 7
    {
        Outcome c7;
        const TernaryForm q{4, 9, 9, 2, 4, 4};
        const auto& r = lookup(cat, "A5");
        if (!(r.spinor_regular() == q)) {
            c7.pass = false;
            c7.note << "  A5 form is not (4,9,9,2,4,4)\n";
        }
        const auto set = enumerate_represented(q, kBoundOddSquares, false);
        const GenusLocalTable genus(r, kBoundOddSquares);
        std::vector<i64> bad, fails;
        for (i64 n = 1; n <= kBoundOddSquares; ++n) {
            const bool missed = genus.represents(n) && !set.contains(n);
            if (missed) fails.push_back(n);
            if (missed != odd_square_of_1mod4_primes(n)) bad.push_back(n);
        }
        if (!bad.empty()) {
            c7.pass = false;
            c7.note << "  mismatches: " << first_few(bad) << "\n";
        }
        c7.note << "  (4,9,9,2,4,4), n <= " << kBoundOddSquares << ": " << fails.size() << " locally represented integers missed ("
                << first_few(fails, 8) << ")";
        report(7, "A5 misses exactly the odd squares of products of primes 1 mod 4", c7);
    }

    // 8
    {
        Outcome c8;
        std::mt19937_64 rng(20261014);
        std::uniform_int_distribution<i64> mag(1, 5000);
        auto pick = [&] { return (rng() & 1 ? 1 : -1) * mag(rng); };
        const i64 primes[] = {2, 3, 5, 7, 11, 13};
        i64 bad = 0, product_bad = 0;
        for (int i = 0; i < kHilbertTriples; ++i) {
            const i64 a = pick(), b = pick(), c = pick();
            for (i64 p : primes) {
                if (hilbert(p, a, b) * hilbert(p, a, c) != hilbert(p, a, b * c)) ++bad;
                if (hilbert(p, a, b) != hilbert(p, b, a)) ++bad;
                if (hilbert(p, a, -a) != 1) ++bad;
            }
            int prod = hilbert_real(a, b) * hilbert(2, a, b);
            for (i64 p : prime_divisors(std::abs(a * b)))
                if (p != 2) prod *= hilbert(p, a, b);
            if (prod != 1) ++product_bad;
        }
        i64 mt_bad = 0, inv_bad = 0;
        for (i64 t : {1, 2, 3, 7}) {
            for (i64 w = 1; w <= kBoundMt; ++w) {
                const bool m = in_Mt(t, w);
                if (m != congruence_Mt(t, w)) ++mt_bad;
                for (i64 s : {2, 3, 5})
                    if (m != in_Mt(s * s * t, w)) ++inv_bad;
            }
        }
        c8.pass = bad == 0 && product_bad == 0 && mt_bad == 0 && inv_bad == 0;
        c8.note << "  Hilbert: " << kHilbertTriples << " triples x 6 primes, " << bad << " bilinearity/symmetry/(a,-a) failures, "
                << product_bad << " product-formula failures\n";
        c8.note << "  M_t: w <= " << kBoundMt << ", t in {1,2,3,7}: " << mt_bad << " congruence mismatches, " << inv_bad
                << " square-parameter failures";
        report(8, "arithmetic property suites", c8);
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (8 - failures) << "/8 criteria passed in " << secs << " s" << std::endl;
    return failures == 0 ? 0 : 1;
}
