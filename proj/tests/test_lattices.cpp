#include <gtest/gtest.h>

#include "delone/lattices.hpp"
#include "delone/random.hpp"

using namespace delone;

namespace {

const GroupCtx z1 = GroupCtx::integer_lattice(1);
const GroupCtx z2 = GroupCtx::integer_lattice(2);
const GroupCtx h3 = GroupCtx::heisenberg();

Rational q(long p, long d = 1) { return make_rational(p, d); }

Lattice diag23() { return Lattice::int_sublattice(std::vector<std::int64_t>{2, 0, 0, 3}); }

/// Brute-force membership: g ∈ span of the basis columns, by search over small coefficients.
bool in_span_brute(const Lattice::Matrix& b, const IntElem& g, std::int64_t r) {
    for (std::int64_t s = -r; s <= r; ++s)
        for (std::int64_t t = -r; t <= r; ++t)
            if (b[0][0] * s + b[0][1] * t == g[0] && b[1][0] * s + b[1][1] * t == g[1]) return true;
    return false;
}

}  // namespace

TEST(Lattices, CovolumeExamples) {
    EXPECT_EQ(diag23().covolume(), 6);
    EXPECT_EQ(Lattice::heisenberg_gamma(2).covolume(), 16);
    EXPECT_EQ(Lattice::int_sublattice(std::vector<std::int64_t>{1, 1, 0, 1}).covolume(), 1);
    EXPECT_EQ(Lattice::int_sublattice(std::vector<std::int64_t>{0, 2, -3, 0}).covolume(), 6);
    try {
        Lattice::int_sublattice(std::vector<std::int64_t>{1, 2, 2, 4});
        FAIL() << "expected SingularBasis";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularBasis);
    }
}

TEST(Lattices, MembershipMatchesBruteForce) {
    Rng rng = case_rng(41, 0);
    for (int i = 0; i < 30; ++i) {
        const Lattice lat = random_int_lattice(2, rng, 3);
        for (int j = 0; j < 40; ++j) {
            const IntElem g = random_elem(z2, rng, 8);
            EXPECT_EQ(lat.contains(g), in_span_brute(lat.basis(), g, 50)) << lat.describe() << " " << g;
        }
    }
    const Lattice g2 = Lattice::heisenberg_gamma(2);
    EXPECT_TRUE(g2.contains(IntElem{2, -4, 8}));
    EXPECT_FALSE(g2.contains(IntElem{2, 2, 2}));
    EXPECT_FALSE(g2.contains(IntElem{1, 0, 0}));
}

TEST(Lattices, LatticeDensityExamples) {
    for (std::int64_t k : {1, 2, 5}) EXPECT_EQ(lattice_density(diag23(), FolnerSeq::cubes_zd(2), 6 * k), q(1, 6));
    for (std::int64_t n : {2, 4, 8, 16}) EXPECT_EQ(lattice_density(Lattice::heisenberg_gamma(2), FolnerSeq::heisenberg_boxes(), n), q(1, 16));
    EXPECT_EQ(lattice_density(Lattice::int_sublattice(std::vector<std::int64_t>{1}), FolnerSeq::cubes_zd(1), 7), 1);
    // off the aligned indices the value is within C/n of 1/covol
    for (std::int64_t n : {7, 13, 25}) {
        const Rational d = lattice_density(diag23(), FolnerSeq::cubes_zd(2), n);
        EXPECT_LE(abs(d - q(1, 6)), q(2, n));
    }
}

/// card(Γ ∩ F⁻¹γ) = 1 for 200 random γ, for every built-in lattice family.
TEST(Lattices, FundamentalDomainEquation) {
    Rng rng = case_rng(42, 0);
    std::vector<Lattice> lats{diag23(), Lattice::int_sublattice(std::vector<std::int64_t>{3}), Lattice::heisenberg_gamma(2),
                              Lattice::heisenberg_gamma(3), random_int_lattice(2, rng, 4), random_int_lattice(3, rng, 2)};
    for (const auto& lat : lats) {
        const GSet f = lat.fundamental_domain();
        EXPECT_EQ(measure(lat.ctx(), f), lat.covolume()) << lat.describe();
        for (int i = 0; i < 200; ++i) {
            const IntElem gamma = random_lattice_point(lat, rng, 12);
            ASSERT_TRUE(lat.contains(gamma));
            ASSERT_EQ(fd_count(lat, f, gamma), 1) << lat.describe();
        }
    }
}

TEST(Lattices, CanonicalDomainsTile) {
    Rng rng = case_rng(43, 0);
    std::vector<Lattice> lats{diag23(), Lattice::heisenberg_gamma(2), random_int_lattice(2, rng, 3)};
    for (const auto& lat : lats) {
        const auto t = tiling_check(lat, lat.fundamental_domain(), default_patch(lat.ctx(), 6));
        EXPECT_TRUE(t.ok()) << lat.describe();
        EXPECT_EQ(t.uncovered, 0);
        EXPECT_EQ(t.overlapping, 0);
    }
    // a set that is too small leaves holes, a set that is too big overlaps
    const auto small = tiling_check(diag23(), PointSet::box({0, 0}, {2, 2}), default_patch(z2, 6));
    EXPECT_GT(small.uncovered, 0);
    const auto big = tiling_check(diag23(), PointSet::box({0, 0}, {2, 4}), default_patch(z2, 6));
    EXPECT_GT(big.overlapping, 0);
}

TEST(Lattices, ReduceSplitsIntoLatticeAndDomain) {
    Rng rng = case_rng(44, 0);
    for (const auto& lat : {diag23(), Lattice::heisenberg_gamma(3)}) {
        const GSet f = lat.fundamental_domain();
        for (int i = 0; i < 100; ++i) {
            const IntElem g = random_elem(lat.ctx(), rng, 20);
            const auto [gamma, rep] = lat.reduce(g);
            EXPECT_TRUE(lat.contains(gamma));
            EXPECT_TRUE(f.points().contains(rep));
            EXPECT_EQ(multiply(lat.ctx(), gamma, rep), g);
        }
    }
}

TEST(Lattices, SiegelExamples) {
    const Lattice two = Lattice::int_sublattice(std::vector<std::int64_t>{2});
    const auto r = siegel_fundamental_domain(two, PointSet::box({0}, {4}), default_patch(z1, 10));
    EXPECT_EQ(r.domain, GSet(PointSet::box({0}, {2})));
    EXPECT_TRUE(r.tiling.ok());

    const Lattice one = Lattice::int_sublattice(std::vector<std::int64_t>{1});
    const auto r1 = siegel_fundamental_domain(one, PointSet::from_elements(1, {IntElem{-3}, IntElem{0}, IntElem{5}}),
                                              default_patch(z1, 10));
    EXPECT_EQ(measure(z1, r1.domain), 1);

    const Lattice d22 = Lattice::int_sublattice(std::vector<std::int64_t>{2, 0, 0, 2});
    const PointSet u = unite(PointSet::box({0, 0}, {2, 2}), PointSet::from_elements(2, {IntElem{2, 0}}));
    const auto r2 = siegel_fundamental_domain(d22, u, default_patch(z2, 6));
    EXPECT_TRUE(is_subset(r2.domain, GSet(u)));
    EXPECT_EQ(measure(z2, r2.domain), 4);
    EXPECT_TRUE(r2.tiling.ok());
}

TEST(Lattices, SiegelOnRandomCoveringSets) {
    Rng rng = case_rng(45, 0);
    for (int i = 0; i < 40; ++i) {
        const Lattice lat = i % 2 ? random_int_lattice(2, rng, 3) : random_int_lattice(1, rng, 6);
        // each element of F moved by its own random γ, plus noise: still meets every class of G/Γ
        PointSet pieces(lat.ctx().dim());
        for (const auto& x : lat.fundamental_domain().points().elements())
            pieces = unite(pieces, PointSet::from_elements(lat.ctx().dim(), {multiply(lat.ctx(), random_lattice_point(lat, rng, 4), x)}));
        const GSet u = unite(GSet(pieces), GSet(random_point_set(lat.ctx(), rng, -5, 10, 5)));
        const auto r = siegel_fundamental_domain(lat, u, default_patch(lat.ctx(), 8));
        EXPECT_TRUE(is_subset(r.domain, u));
        EXPECT_EQ(measure(lat.ctx(), r.domain), lat.covolume());
        EXPECT_TRUE(r.tiling.ok());
    }
}

TEST(Lattices, SiegelRejectsNonCoveringSets) {
    const auto r = [] {
        siegel_fundamental_domain(diag23(), PointSet::box({0, 0}, {1, 3}), default_patch(z2, 6));
    };
    try {
        r();
        FAIL() << "expected NotCovering";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCovering);
    }
}

TEST(Lattices, HeisenbergGammaGeneratorsLieInGamma) {
    const Lattice g = Lattice::heisenberg_gamma(3);
    for (const auto& x : g.generators()) EXPECT_TRUE(g.contains(x));
    EXPECT_EQ(g.fundamental_domain(), GSet(PointSet::box({0, 0, 0}, {3, 3, 9})));
    EXPECT_EQ(measure(h3, g.points_in(default_patch(h3, 3))), 27);
}
