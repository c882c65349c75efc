#include <gtest/gtest.h>

#include "delone/boundaries.hpp"
#include "delone/random.hpp"
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

TEST(Boundaries, IntegerExamples) {
    const PointSet k = range1(-1, 2), a = range1(0, 10);
    EXPECT_EQ(folner_boundary(z1, k, a), GSet(pts1({-1, 10})));
    EXPECT_EQ(strong_folner_boundary(z1, k, a), GSet(pts1({-1, 0, 9, 10})));
    EXPECT_EQ(van_hove_boundary(z1, k, a), GSet(pts1({-1, 0, 9, 10})));
}

TEST(Boundaries, TrivialNeighbourhoodGivesEmptyBoundary) {
    Rng rng = case_rng(31, 0);
    for (const auto& ctx : {z1, z2, h3}) {
        const PointSet e = PointSet::from_elements(ctx.dim(), {identity_int(ctx)});
        for (int i = 0; i < 10; ++i) {
            const PointSet a = random_shape(ctx, rng, 6);
            EXPECT_TRUE(folner_boundary(ctx, e, a).empty());
            EXPECT_TRUE(strong_folner_boundary(ctx, e, a).empty());
            EXPECT_TRUE(van_hove_boundary(ctx, e, a).empty());
        }
    }
}

TEST(Boundaries, RealExamples) {
    const GSet fol = folner_boundary(r1, BoxSet::interval(q(-1, 10), q(1, 10)), BoxSet::interval(0, 1));
    EXPECT_EQ(fol, GSet(unite(BoxSet::interval(q(-1, 10), 0), BoxSet::interval(1, q(11, 10)))));
    const GSet strong = strong_folner_boundary(r1, BoxSet::interval(-1, 1), BoxSet::interval(0, 10));
    EXPECT_EQ(strong, GSet(unite(BoxSet::interval(-1, 1), BoxSet::interval(9, 11))));
    // van Hove: compare measures, not endpoint topology
    const GSet vh = van_hove_boundary(r1, BoxSet::interval(-1, 1), BoxSet::interval(0, 10));
    EXPECT_EQ(measure(r1, vh), 4);
    EXPECT_EQ(measure(r1, symmetric_difference(vh, strong)), 0);
}

TEST(Boundaries, DiscreteBoundariesMatchOracle) {
    Rng rng = case_rng(32, 0);
    for (const auto& ctx : {z2, h3}) {
        const bool h = ctx.kind() == GroupKind::HeisenbergInt;
        for (int i = 0; i < 150; ++i) {
            const PointSet a = random_shape(ctx, rng, 6);
            const PointSet k = random_symmetric_neighborhood(ctx, rng, 2, static_cast<int>(uniform(rng, 1, 3)));
            const auto oa = oracle::to_set(a), ok = oracle::to_set(k);
            ASSERT_EQ(oracle::to_set(folner_boundary(ctx, k, a)), oracle::folner(h, ok, oa));
            ASSERT_EQ(oracle::to_set(strong_folner_boundary(ctx, k, a)), oracle::strong(h, ok, oa));
            ASSERT_EQ(oracle::to_set(van_hove_boundary(ctx, k, a)), oracle::van_hove(h, ok, oa));
        }
    }
}

TEST(Boundaries, FiveComparisonsHold) {
    Rng rng = case_rng(33, 0);
    for (const auto& ctx : {z2, h3}) {
        for (int i = 0; i < 200; ++i) {
            const PointSet a = random_shape(ctx, rng, 6);
            const PointSet k = random_symmetric_neighborhood(ctx, rng, 2, 2);
            const auto c = compare_boundaries(ctx, k, a);
            ASSERT_TRUE(c.all()) << "case " << i << " in " << ctx.name();
        }
    }
    for (int i = 0; i < 50; ++i) {
        const BoxSet a = random_box_union(1, rng, 10, 3, 4);
        const BoxSet k = random_symmetric_box(1, rng, 2, 4);
        ASSERT_TRUE(compare_boundaries(r1, k, a).all()) << "case " << i << " in R1";
    }
}

TEST(Boundaries, MonotoneInK) {
    Rng rng = case_rng(34, 0);
    for (const auto& ctx : {z2, h3}) {
        for (int i = 0; i < 100; ++i) {
            const PointSet a = random_shape(ctx, rng, 6);
            const PointSet k = random_symmetric_neighborhood(ctx, rng, 2, 1);
            const PointSet bigger = unite(k, random_symmetric_neighborhood(ctx, rng, 2, 1));
            EXPECT_TRUE(is_subset(strong_folner_boundary(ctx, k, a), strong_folner_boundary(ctx, bigger, a)));
            EXPECT_TRUE(is_subset(van_hove_boundary(ctx, k, a), van_hove_boundary(ctx, bigger, a)));
        }
    }
}

/// L ∂_K A ⊆ ∂_{KL⁻¹} A.
TEST(Boundaries, TranslatedBoundary) {
    Rng rng = case_rng(35, 0);
    for (const auto& ctx : {z2, h3}) {
        for (int i = 0; i < 100; ++i) {
            const PointSet a = random_shape(ctx, rng, 6);
            const PointSet k = random_symmetric_neighborhood(ctx, rng, 2, 1);
            const PointSet l = random_unit_neighborhood(ctx, rng, 2, 2);
            const GSet edge = strong_folner_boundary(ctx, k, a);
            if (edge.empty()) continue;
            const GSet kl = minkowski(ctx, k, inverse_set(ctx, GSet(l)));
            EXPECT_TRUE(is_subset(minkowski(ctx, l, edge), strong_folner_boundary(ctx, kl, a)));
        }
    }
}

TEST(Boundaries, KindParsing) {
    EXPECT_EQ(parse_boundary_kind("strong"), BoundaryKind::Strong);
    EXPECT_EQ(parse_boundary_kind("vanhove"), BoundaryKind::VanHove);
    EXPECT_EQ(parse_boundary_kind("folner"), BoundaryKind::Folner);
    EXPECT_THROW(parse_boundary_kind("inner"), Error);
    EXPECT_THROW(strong_folner_boundary(z1, PointSet(1), range1(0, 2)), Error);
}
