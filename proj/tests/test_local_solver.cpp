#include <gtest/gtest.h>

#include "ternary/catalog.hpp"
#include "ternary/forms.hpp"
#include "ternary/genus.hpp"
#include "ternary/local_solver.hpp"

using namespace ternary;

namespace {
const TernaryForm kB4{3, 7, 7, 5, 3, 3};
const TernaryForm kB11{9, 16, 48, 0, 0, 0};
const TernaryForm kA1{2, 2, 5, 2, 2, 0};
}  // namespace

TEST(LocalRepresents, Examples) {
    EXPECT_FALSE(local_represents(kB4, 2, 2).representable);
    for (i64 n = 1; n <= 200; ++n) EXPECT_TRUE(local_represents(kB11, 5, n).representable);
    EXPECT_FALSE(local_represents(kB11, 3, 6).representable);
    EXPECT_TRUE(local_represents(kB11, 3, 48).representable);
    EXPECT_FALSE(local_represents(kB11, 2, 12).representable);
}

TEST(LocalRepresents, RejectionRecordsExhaustion) {
    const auto v = local_represents(kB11, 2, 12);
    EXPECT_FALSE(v.certificate.has_value());
    // K = floor(ord_2(4 * 12 * 27648) / 2) = 7
    EXPECT_EQ(v.bound_exponent, 15);
    EXPECT_LE(v.levels_searched, v.bound_exponent);
}

TEST(Unramified, Examples) {
    EXPECT_TRUE(unramified_shortcut(kA1, 3));
    EXPECT_FALSE(unramified_shortcut(kA1, 2));
    EXPECT_TRUE(unramified_shortcut(kB11, 7));
    EXPECT_FALSE(unramified_shortcut(kB11, 3));
    const auto v = local_represents(kA1, 7, 5);
    EXPECT_TRUE(v.representable);
    EXPECT_TRUE(v.unramified);
}

TEST(ClosedFormPredicates, Examples) {
    EXPECT_TRUE(excluded_by_m_plus_16(2));
    EXPECT_TRUE(excluded_by_m_plus_16(8));
    EXPECT_FALSE(excluded_by_m_plus_16(16));
    EXPECT_TRUE(excluded_by_1_16_48(5));
    EXPECT_TRUE(excluded_by_1_16_48(12));
    EXPECT_FALSE(excluded_by_1_16_48(1));
    EXPECT_TRUE(excluded_by_1_3_9(2));
    EXPECT_TRUE(excluded_by_1_3_9(54));
    EXPECT_FALSE(excluded_by_1_3_9(3));
}

TEST(ClosedFormPredicates, AgreeWithSolver) {
    for (i64 n = 1; n <= 3000; ++n) {
        ASSERT_EQ(excluded_by_m_plus_16(n), !local_represents(kB4, 2, n).representable) << n;
        ASSERT_EQ(excluded_by_1_16_48(n), !local_represents(kB11, 2, n).representable) << n;
        ASSERT_EQ(excluded_by_1_3_9(n), !local_represents(kB11, 3, n).representable) << n;
    }
}

TEST(Certificates, ReVerify) {
    for (const auto& r : default_catalog().records) {
        const auto& q = r.spinor_regular();
        for (i64 p : r.ramified_primes()) {
            for (i64 n = 1; n <= 400; ++n) {
                const auto v = local_represents(q, p, n);
                if (!v.representable) continue;
                ASSERT_TRUE(v.certificate.has_value());
                const auto& c = *v.certificate;
                ASSERT_TRUE(verify_certificate(q, p, n, c)) << r.id << " p=" << p << " n=" << n;
                ASSERT_LE(c.congruence_precision(), v.bound_exponent) << r.id << " p=" << p << " n=" << n;
                ASSERT_LT(c.gradient_order, c.residue_precision);
            }
        }
    }
}

TEST(Certificates, TamperedCertificateFails) {
    auto v = local_represents(kB11, 2, 9);
    ASSERT_TRUE(v.certificate.has_value());
    auto c = *v.certificate;
    c.residue = {0, 0, 0};
    EXPECT_FALSE(verify_certificate(kB11, 2, 9, c));
}

TEST(LocalRepresents, GlobalImpliesLocal) {
    for (const auto& r : default_catalog().records) {
        const auto& q = r.spinor_regular();
        const auto set = enumerate_represented(q, 2000, false);
        for (i64 p : r.ramified_primes()) {
            for (i64 n = 1; n <= 2000; ++n) {
                if (set.contains(n)) {
                    ASSERT_TRUE(local_represents(q, p, n).representable) << r.id << " p=" << p << " n=" << n;
                }
            }
        }
    }
}

TEST(LocalRepresents, NondegenerateIndefiniteForm) {
    // x^2 - y^2 + z^2 represents every p-adic integer.
    const TernaryForm h{1, -1, 1, 0, 0, 0};
    for (i64 n = 1; n <= 100; ++n) EXPECT_TRUE(local_represents(h, 2, n).representable);
}

TEST(LocalTable, MatchesDirectCalls) {
    for (const char* id : {"A12", "B8", "B11", "C4"}) {
        const auto& r = lookup(default_catalog(), id);
        for (i64 p : r.ramified_primes()) {
            const LocalTable t(r.spinor_regular(), p, 5000);
            for (i64 n = 1; n <= 5000; ++n) ASSERT_EQ(t.represents(n), local_represents(r.spinor_regular(), p, n).representable);
        }
    }
}

TEST(Genus, Examples) {
    const auto& cat = default_catalog();
    EXPECT_FALSE(genus_represents(lookup(cat, "B4"), 2));
    EXPECT_TRUE(genus_represents(lookup(cat, "B11"), 48));
    EXPECT_FALSE(genus_represents(lookup(cat, "A11"), 1));
}

TEST(Genus, RepresentativesAgreeLocally) {
    for (const auto& r : default_catalog().records) {
        for (i64 p : r.ramified_primes()) {
            for (i64 n = 1; n <= 500; ++n) {
                const bool ref = local_represents(r.spinor_regular(), p, n).representable;
                for (const auto& q : r.all_forms()) ASSERT_EQ(local_represents(q, p, n).representable, ref) << r.id << " " << q << " n=" << n;
            }
        }
    }
}
