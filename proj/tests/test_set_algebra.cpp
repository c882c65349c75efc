#include <gtest/gtest.h>

#include <sstream>

#include "delone/io.hpp"
#include "delone/random.hpp"
#include "delone/set_algebra.hpp"
#include "oracles.hpp"

using namespace delone;

namespace {

const GroupCtx z1 = GroupCtx::integer_lattice(1);
const GroupCtx z2 = GroupCtx::integer_lattice(2);
const GroupCtx h3 = GroupCtx::heisenberg();
const GroupCtx r1 = GroupCtx::real_boxes(1);

PointSet range1(std::int64_t lo, std::int64_t hi) { return PointSet::box({lo}, {hi}); }

PointSet pts1(std::initializer_list<std::int64_t> xs) {
    std::vector<IntElem> v;
    for (auto x : xs) v.push_back(IntElem{x});
    return PointSet::from_elements(1, v);
}

Rational q(long p, long d = 1) { return make_rational(p, d); }

}  // namespace

TEST(SetAlgebra, MinkowskiExamples) {
    EXPECT_EQ(minkowski(z1, range1(-1, 2), range1(0, 10)), GSet(range1(-1, 11)));
    EXPECT_EQ(minkowski(r1, BoxSet::interval(-1, 1), BoxSet::interval(0, 2)), GSet(BoxSet::interval(-1, 3)));
    const PointSet k = PointSet::from_elements(3, {IntElem{0, 0, 0}, IntElem{1, 0, 0}});
    const PointSet a = PointSet::from_elements(3, {IntElem{0, 1, 0}});
    EXPECT_EQ(minkowski(h3, k, a), GSet(PointSet::from_elements(3, {IntElem{0, 1, 0}, IntElem{1, 1, 1}})));
}

TEST(SetAlgebra, MeasureExamples) {
    EXPECT_EQ(measure(z2, PointSet::box({0, 0}, {6, 6})), 36);
    EXPECT_EQ(measure(r1, unite(BoxSet::interval(0, 2), BoxSet::interval(3, q(7, 2)))), q(5, 2));
    EXPECT_EQ(measure(h3, PointSet::box({0, 0, 0}, {2, 2, 4})), 16);
}

TEST(SetAlgebra, EvalExamples) {
    const PMeasure even = PMeasure::indicator([](const IntElem& g) { return g[0] % 2 == 0; }, "2Z");
    EXPECT_EQ(even.eval(z1, range1(0, 10)), 5);
    EXPECT_EQ(PMeasure::counting(pts1({0, 3, 6})).eval(z1, range1(0, 5)), 2);
    EXPECT_EQ(PMeasure::haar_on(BoxSet::interval(0, 1)).eval(r1, BoxSet::interval(0, 1)), 1);
    EXPECT_EQ(PMeasure::zero().eval(z1, range1(0, 5)), 0);
}

TEST(SetAlgebra, ErodeExamples) {
    EXPECT_EQ(erode(z1, range1(0, 10), range1(-1, 2)), GSet(range1(1, 9)));
    EXPECT_EQ(erode(r1, BoxSet::interval(0, 10), BoxSet::interval(-1, 1)), GSet(BoxSet::interval(1, 9)));
    Rng rng = case_rng(21, 0);
    for (int i = 0; i < 20; ++i) {
        const PointSet a = random_shape(z2, rng, 6);
        EXPECT_EQ(erode(z2, a, PointSet::from_elements(2, {IntElem{0, 0}})), GSet(a));
    }
}

TEST(SetAlgebra, DiscreteOperationsMatchOracle) {
    Rng rng = case_rng(22, 0);
    for (const auto& ctx : {z2, h3}) {
        const bool h = ctx.kind() == GroupKind::HeisenbergInt;
        for (int i = 0; i < 150; ++i) {
            const PointSet a = random_shape(ctx, rng, 5);
            const PointSet k = random_unit_neighborhood(ctx, rng, 2, static_cast<int>(uniform(rng, 0, 3)));
            const auto oa = oracle::to_set(a), ok = oracle::to_set(k);
            ASSERT_EQ(oracle::to_set(minkowski(ctx, k, a)), oracle::product(h, ok, oa));
            ASSERT_EQ(oracle::to_set(erode(ctx, a, k)), oracle::erode(h, oa, ok));
            ASSERT_EQ(oracle::to_set(inverse_set(ctx, GSet(a))), oracle::inverse(h, oa));
            ASSERT_EQ(measure(ctx, a), static_cast<long>(oa.size()));
        }
    }
}

/// Kg ⊆ A for g in the erosion, and the erosion is the largest such set: erode(A,K) = (K⁻¹Aᶜ)ᶜ.
TEST(SetAlgebra, ErosionIdentity) {
    Rng rng = case_rng(23, 0);
    for (const auto& ctx : {z2, h3}) {
        for (int i = 0; i < 100; ++i) {
            const PointSet a = random_shape(ctx, rng, 6);
            const PointSet k = random_symmetric_neighborhood(ctx, rng, 2, 2);
            const GSet e = erode(ctx, a, k);
            if (!e.empty()) {
                EXPECT_TRUE(is_subset(minkowski(ctx, k, e), GSet(a)));
            }
            // with e ∈ K, the complement of A only matters inside KA
            const GSet outside = subtract(minkowski(ctx, k, a), GSet(a));
            const GSet expected = outside.empty() ? GSet(a) : subtract(GSet(a), minkowski(ctx, inverse_set(ctx, GSet(k)), outside));
            EXPECT_EQ(e, expected);
        }
    }
    for (int i = 0; i < 100; ++i) {
        const BoxSet a = random_box_union(1, rng, 12, 4, 6);
        const BoxSet k = random_symmetric_box(1, rng, 2, 4);
        const GSet e = erode(r1, a, k);
        if (e.empty()) continue;
        // K·erode(A, K) ⊆ A up to a null set
        EXPECT_EQ(measure(r1, subtract(minkowski(r1, k, e), a)), 0);
    }
}

TEST(SetAlgebra, BoxMeasureMatchesSweep) {
    Rng rng = case_rng(24, 0);
    for (int i = 0; i < 300; ++i) {
        const int count = static_cast<int>(uniform(rng, 1, 6));
        std::vector<std::pair<Rational, Rational>> parts;
        std::vector<Box> boxes;
        for (int j = 0; j < count; ++j) {
            const Rational lo = random_rational(rng, -10, 10, 7), len = random_rational(rng, 0, 4, 7);
            parts.emplace_back(lo, lo + len);
            boxes.push_back(Box{{lo}, {lo + len}});
        }
        const BoxSet b = BoxSet::from_boxes(1, boxes);
        ASSERT_EQ(b.measure(), oracle::interval_union_measure(parts));
    }
}

TEST(SetAlgebra, MeasureIsAdditive) {
    Rng rng = case_rng(25, 0);
    for (int i = 0; i < 100; ++i) {
        const BoxSet a = random_box_union(2, rng, 8, 3, 5), b = random_box_union(2, rng, 8, 3, 5);
        EXPECT_EQ(unite(a, b).measure() + intersect(a, b).measure(), a.measure() + b.measure());
        EXPECT_GE(subtract(a, b).measure(), 0);
        const PointSet p = random_shape(z2, rng, 6), s = random_shape(z2, rng, 6);
        EXPECT_EQ(measure(z2, unite(GSet(p), GSet(s))) + measure(z2, intersect(GSet(p), GSet(s))),
                  measure(z2, p) + measure(z2, s));
    }
}

TEST(SetAlgebra, CanonicalFormIsUnique) {
    const BoxSet a = BoxSet::from_boxes(1, {Box{{q(0)}, {q(1)}}, Box{{q(1)}, {q(2)}}});
    const BoxSet b = BoxSet::from_boxes(1, {Box{{q(1, 2)}, {q(2)}}, Box{{q(0)}, {q(3, 4)}}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.boxes().size(), 1U);
    EXPECT_EQ(PointSet::from_elements(1, {IntElem{3}, IntElem{1}, IntElem{2}, IntElem{1}}), range1(1, 4));
}

TEST(SetAlgebra, PackingExamples) {
    const auto centers = greedy_packing(z1, range1(0, 10), range1(-1, 2));
    EXPECT_EQ(centers, (std::vector<IntElem>{IntElem{0}, IntElem{3}, IntElem{6}, IntElem{9}}));
    const auto chk = check_packing(z1, range1(0, 10), range1(-1, 2), centers);
    EXPECT_TRUE(chk.ok());
    EXPECT_EQ(chk.n_mB, 12);
    EXPECT_EQ(chk.m_BA, 12);
    EXPECT_EQ(chk.m_A, 10);
    EXPECT_EQ(chk.n_mBinvB, 20);
    EXPECT_EQ(greedy_packing(z1, pts1({0}), pts1({0})), (std::vector<IntElem>{IntElem{0}}));
    EXPECT_EQ(greedy_packing(z2, PointSet::box({0, 0}, {2, 2}), PointSet::from_elements(2, {IntElem{0, 0}})).size(), 4U);
}

TEST(SetAlgebra, EmptyInputsRejected) {
    try {
        minkowski(z1, PointSet(1), range1(0, 3));
        FAIL() << "expected EmptySet";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptySet);
    }
    EXPECT_THROW(greedy_packing(z1, PointSet(1), range1(0, 2)), Error);
}

TEST(SetAlgebra, FileRoundTrip) {
    Rng rng = case_rng(26, 0);
    for (const auto& ctx : {z1, z2, h3}) {
        for (int i = 0; i < 20; ++i) {
            const GSet a = random_shape(ctx, rng, 7);
            std::stringstream s;
            write_gset(s, ctx, a);
            const auto [back_ctx, back] = read_gset(s);
            EXPECT_EQ(back_ctx, ctx);
            EXPECT_EQ(back, a);
            std::stringstream again;
            write_gset(again, back_ctx, back);
            EXPECT_EQ(again.str(), [&] {
                std::stringstream t;
                write_gset(t, ctx, a);
                return t.str();
            }());
        }
    }
    const auto r2 = GroupCtx::real_boxes(2);
    for (int i = 0; i < 20; ++i) {
        const GSet a = random_box_union(2, rng, 6, 3, 5);
        std::stringstream s;
        write_gset(s, r2, a);
        const auto [back_ctx, back] = read_gset(s);
        EXPECT_EQ(back_ctx, r2);
        EXPECT_EQ(back, a);
    }
}

TEST(SetAlgebra, FileParsing) {
    std::stringstream s("# group=R d=1\n\n# comment\n0 1/2\n0.5 1.25\n");
    const auto [ctx, a] = read_gset(s);
    EXPECT_EQ(ctx, r1);
    EXPECT_EQ(a, GSet(BoxSet::interval(0, q(5, 4))));
    std::stringstream bad("# group=Z d=2\n1 2 3\n");
    EXPECT_THROW(read_gset(bad), Error);
    std::stringstream noheader("1 2\n");
    EXPECT_THROW(read_gset(noheader), Error);
    std::stringstream frac("# group=Z d=1\n1/2\n");
    EXPECT_THROW(read_gset(frac), Error);
}
