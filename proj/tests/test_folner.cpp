#include <gtest/gtest.h>

#include "delone/density.hpp"
#include "delone/folner.hpp"
#include "delone/verify.hpp"

using namespace delone;

namespace {

const GroupCtx z1 = GroupCtx::integer_lattice(1);
const GroupCtx z2 = GroupCtx::integer_lattice(2);
const GroupCtx h3 = GroupCtx::heisenberg();
const GroupCtx r1 = GroupCtx::real_boxes(1);

Rational q(long p, long d = 1) { return make_rational(p, d); }

}  // namespace

TEST(Folner, CubeRatios) {
    const auto seq = FolnerSeq::cubes_zd(1);
    const GSet k = PointSet::box({-1}, {2});
    EXPECT_EQ(ratio(z1, seq, 10, k, BoundaryKind::Folner), q(2, 10));
    Rational prev = 2;
    for (std::int64_t n : {2, 5, 10, 50, 100}) {
        const Rational r = ratio(z1, seq, n, k, BoundaryKind::Folner);
        EXPECT_EQ(r, q(2, n));
        EXPECT_LT(r, prev);
        prev = r;
    }
    EXPECT_EQ(ratio(z1, seq, 10, k, BoundaryKind::Strong), q(4, 10));
}

TEST(Folner, GeneratedSetsHavePositiveMeasure) {
    for (std::int64_t n : {1, 3, 7}) {
        EXPECT_EQ(measure(z2, FolnerSeq::cubes_zd(2)(n)), n * n);
        EXPECT_EQ(measure(h3, FolnerSeq::heisenberg_boxes()(n)), n * n * n * n);
        EXPECT_EQ(measure(GroupCtx::real_boxes(2), FolnerSeq::cubes_rd(2)(n)), n * n);
        EXPECT_GT(measure(r1, FolnerSeq::comb_r1(q(1, 10))(n + 1)), 0);
    }
    EXPECT_THROW(FolnerSeq::cubes_zd(1)(0), Error);
    // the first comb has a single tooth of width 1 - 1/1 = 0
    EXPECT_THROW(FolnerSeq::comb_r1(q(1, 10))(1), Error);
}

TEST(Folner, HeisenbergBoxesAreTheGammaNFundamentalDomain) {
    for (std::int64_t n : {1, 2, 3}) {
        const Lattice gamma = Lattice::heisenberg_gamma(n);
        const GSet f = FolnerSeq::heisenberg_boxes()(n);
        EXPECT_EQ(f, gamma.fundamental_domain());
        EXPECT_TRUE(tiling_check(gamma, f, default_patch(h3, 2 * n)).ok());
    }
}

TEST(Folner, CombMatchesClosedForms) {
    const Rational eps = q(1, 10);
    const auto comb = FolnerSeq::comb_r1(eps);
    const GSet k = comb.eps_neighborhood();
    for (std::int64_t n : {10, 100, 1000}) {
        const Rational strong = ratio(r1, comb, n, k, BoundaryKind::Strong);
        const Rational fol = ratio(r1, comb, n, k, BoundaryKind::Folner);
        EXPECT_EQ(strong, verify::comb_strong_closed_form(eps, n)) << n;
        EXPECT_EQ(fol, verify::comb_folner_closed_form(eps, n)) << n;
        // the van Hove boundary agrees with the strong one up to a null set
        EXPECT_EQ(ratio(r1, comb, n, k, BoundaryKind::VanHove), strong);
    }
    // strong ratio tends to 2ε while the Følner ratio tends to 0
    EXPECT_LT(abs(ratio(r1, comb, 10000, k, BoundaryKind::Strong) - 2 * eps), q(1, 1000));
    EXPECT_LT(ratio(r1, comb, 10000, k, BoundaryKind::Folner), q(1, 1000));
}

TEST(Folner, ThickenedCombIsStrongFolner) {
    const Rational eps = q(1, 10);
    const auto comb = FolnerSeq::comb_r1(eps);
    const GSet l = BoxSet::interval(-1, 1);
    const auto thick = thicken(r1, comb, l);
    for (std::int64_t n : {10, 100, 1000, 10000}) {
        const GSet a = thick(n);
        EXPECT_EQ(a, GSet(BoxSet::interval(-1, Rational(n + 1 - q(1, n))))) << n;
        const Rational r = ratio(r1, thick, n, comb.eps_neighborhood(), BoundaryKind::Strong);
        EXPECT_EQ(r, verify::thick_comb_closed_form(eps, n));
        EXPECT_LE(r, q(3, n));
    }
}

TEST(Folner, ThickeningExamples) {
    const auto cubes = FolnerSeq::cubes_zd(2);
    const auto same = thicken(z2, cubes, PointSet::from_elements(2, {IntElem{0, 0}}));
    const auto grown = thicken(z2, cubes, PointSet::box({-1, -1}, {2, 2}));
    for (std::int64_t n : {1, 4, 9}) {
        EXPECT_EQ(same(n), cubes(n));
        EXPECT_EQ(grown(n), GSet(PointSet::box({-1, -1}, {n + 1, n + 1})));
    }
    EXPECT_THROW(thicken(z2, cubes, PointSet::box({0, 0}, {2, 2})), Error);
}

TEST(Folner, InnerRatioTendsToOne) {
    const auto seq = FolnerSeq::cubes_zd(2);
    const GSet k = PointSet::box({-1, -1}, {2, 2});
    EXPECT_EQ(inner_ratio(z2, seq, 10, k), q(64, 100));
    EXPECT_GT(inner_ratio(z2, seq, 1000, k), q(99, 100));
}

TEST(Folner, LatticeAlignedCheck) {
    const auto seq = FolnerSeq::cubes_zd(1);
    const GSet b = PointSet::box({-1}, {2});
    const Lattice z = Lattice::int_sublattice(std::vector<std::int64_t>{1});
    const auto w = tb_witness(z1, z.dirac_comb(), b, ShiftDomain::periodic(z));
    EXPECT_EQ(w.c_upper, 5);
    // hand evaluation: ∂_K A_100 = {-1,0,99,100}, L∂ = {-2..1, 98..101}, B_u L ∂ = {-3..2, 97..102}
    EXPECT_EQ(lattice_aligned_check(z1, seq, b, b, 100, w), q(5, 3) * q(12, 100));
    const GSet e = PointSet::from_elements(1, {IntElem{0}});
    EXPECT_EQ(lattice_aligned_check(z1, seq, e, e, 100, w), 0);
    EXPECT_THROW(lattice_aligned_check(z1, seq, b, b, 100, std::nullopt), Error);

    // Heisenberg boxes with δ_{Γ_2}: bound decays like 1/n
    const Lattice g2 = Lattice::heisenberg_gamma(2);
    const GSet bh = unite(default_patch(h3, 1), inverse_set(h3, GSet(default_patch(h3, 1))));
    const auto wh = tb_witness(h3, g2.dirac_comb(), bh, ShiftDomain::periodic(g2));
    const GSet kh = PointSet::from_elements(3, {IntElem{0, 0, 0}, IntElem{1, 0, 0}, IntElem{-1, 0, 0}});
    std::vector<Rational> bounds;
    for (std::int64_t n : {4, 8, 16}) bounds.push_back(lattice_aligned_check(h3, FolnerSeq::heisenberg_boxes(), kh, kh, n, wh));
    // doubling n at least shrinks the bound by 3/4, and n · bound stays bounded
    EXPECT_LT(bounds[1], bounds[0] * q(3, 4));
    EXPECT_LT(bounds[2], bounds[1] * q(3, 4));
    EXPECT_LE(bounds[2] * 16, bounds[0] * 4 * 2);
}
