#include <gtest/gtest.h>

#include <climits>

#include "delone/group.hpp"
#include "delone/random.hpp"
#include "oracles.hpp"

using namespace delone;

namespace {

oracle::Coords coords(const IntElem& g) {
    oracle::Coords c;
    for (int i = 0; i < g.arity(); ++i) c.push_back(g[i]);
    return c;
}

}  // namespace

TEST(Group, HeisenbergProductExamples) {
    const auto h = GroupCtx::heisenberg();
    EXPECT_EQ(multiply(h, IntElem{1, 0, 0}, IntElem{0, 1, 0}), (IntElem{1, 1, 1}));
    EXPECT_EQ(multiply(h, IntElem{0, 1, 0}, IntElem{1, 0, 0}), (IntElem{1, 1, 0}));
    const auto z2 = GroupCtx::integer_lattice(2);
    EXPECT_EQ(multiply(z2, IntElem{2, 3}, IntElem{0, 0}), (IntElem{2, 3}));
}

TEST(Group, InverseExamples) {
    EXPECT_EQ(inverse(GroupCtx::integer_lattice(1), IntElem{5}), (IntElem{-5}));
    const auto h = GroupCtx::heisenberg();
    EXPECT_EQ(inverse(h, IntElem{1, 1, 1}), (IntElem{-1, -1, 0}));
    Rng rng = case_rng(11, 0);
    for (int i = 0; i < 200; ++i) {
        const IntElem g = random_elem(h, rng, 50);
        EXPECT_EQ(inverse(h, g), (IntElem{-g[0], -g[1], -g[2] + g[0] * g[1]}));
        EXPECT_EQ(multiply(h, g, inverse(h, g)), identity_int(h));
        EXPECT_EQ(multiply(h, inverse(h, g), g), identity_int(h));
    }
}

TEST(Group, ProductMatchesOracle) {
    Rng rng = case_rng(12, 0);
    for (const auto& ctx : {GroupCtx::integer_lattice(1), GroupCtx::integer_lattice(3), GroupCtx::heisenberg()}) {
        const bool h = ctx.kind() == GroupKind::HeisenbergInt;
        for (int i = 0; i < 300; ++i) {
            const IntElem g = random_elem(ctx, rng, 1000), x = random_elem(ctx, rng, 1000);
            EXPECT_EQ(coords(multiply(ctx, g, x)), oracle::mul(h, coords(g), coords(x)));
        }
    }
}

TEST(Group, AssociativityOn1000Triples) {
    Rng rng = case_rng(13, 0);
    for (const auto& ctx : {GroupCtx::integer_lattice(2), GroupCtx::heisenberg()}) {
        for (int i = 0; i < 1000; ++i) {
            const IntElem a = random_elem(ctx, rng, 10000), b = random_elem(ctx, rng, 10000), c = random_elem(ctx, rng, 10000);
            ASSERT_EQ(multiply(ctx, multiply(ctx, a, b), c), multiply(ctx, a, multiply(ctx, b, c)));
        }
    }
    const auto r2 = GroupCtx::real_boxes(2);
    for (int i = 0; i < 1000; ++i) {
        RealPoint p[3];
        for (auto& v : p) v = {random_rational(rng, -5, 5, 9), random_rational(rng, -5, 5, 9)};
        ASSERT_EQ(multiply(r2, multiply(r2, p[0], p[1]), p[2]), multiply(r2, p[0], multiply(r2, p[1], p[2])));
        ASSERT_EQ(multiply(r2, p[0], inverse(r2, p[0])), identity_real(r2));
    }
}

TEST(Group, HeisenbergIsNotAbelian) {
    const auto h = GroupCtx::heisenberg();
    EXPECT_FALSE(h.abelian());
    EXPECT_NE(multiply(h, IntElem{1, 0, 0}, IntElem{0, 1, 0}), multiply(h, IntElem{0, 1, 0}, IntElem{1, 0, 0}));
}

TEST(Group, ParseAndDescribe) {
    EXPECT_EQ(GroupCtx::parse("Z2"), GroupCtx::integer_lattice(2));
    EXPECT_EQ(GroupCtx::parse("H3"), GroupCtx::heisenberg());
    EXPECT_EQ(GroupCtx::parse("R1"), GroupCtx::real_boxes(1));
    EXPECT_EQ(GroupCtx::parse("R2").name(), "R2");
    EXPECT_EQ(GroupCtx::integer_lattice(2).haar_normalization(), "counting measure");
    EXPECT_EQ(GroupCtx::real_boxes(1).haar_normalization(), "Lebesgue volume");
    EXPECT_THROW(GroupCtx::parse("Q2"), Error);
    EXPECT_THROW(GroupCtx::integer_lattice(0), Error);
}

TEST(Group, ArityMismatchRejected) {
    const auto h = GroupCtx::heisenberg();
    try {
        multiply(h, IntElem{1, 2}, IntElem{1, 2});
        FAIL() << "expected InvalidElement";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidElement);
    }
}

TEST(Group, OverflowIsReported) {
    const auto z1 = GroupCtx::integer_lattice(1);
    try {
        multiply(z1, IntElem{LLONG_MAX}, IntElem{1});
        FAIL() << "expected Overflow";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Overflow);
    }
    const auto h = GroupCtx::heisenberg();
    EXPECT_THROW(multiply(h, IntElem{INT64_C(1) << 40, 0, 0}, IntElem{0, INT64_C(1) << 40, 0}), Error);
}
