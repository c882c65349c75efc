#include <gtest/gtest.h>

#include <cmath>

#include "delone/cutproject.hpp"
#include "delone/random.hpp"
#include "delone/verify.hpp"

using namespace delone;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

PointSet range1(std::int64_t lo, std::int64_t hi) { return PointSet::box({lo}, {hi}); }

/// W = [-1, φ - 1), the golden window of length φ.
PhiIntervalSet golden_window() { return PhiIntervalSet::interval(QPhi(-1), QPhi(-1, 1)); }

PhiIntervalSet unit_window() { return PhiIntervalSet::interval(QPhi(0), QPhi(1)); }

}  // namespace

TEST(CutProject, CyclicPatchExamples) {
    const CyclicScheme s(5);
    const CyclicWindow w(5, {0, 1});
    EXPECT_EQ(s.patch(w, range1(0, 10)), PointSet::from_elements(1, {IntElem{0}, IntElem{1}, IntElem{5}, IntElem{6}}));
    EXPECT_EQ(s.patch(CyclicWindow::full(5), range1(-3, 4)), range1(-3, 4));
    EXPECT_EQ(s.patch(w, range1(-5, 0)), PointSet::from_elements(1, {IntElem{-5}, IntElem{-4}}));
    EXPECT_EQ(s.star(-1), 4);
    EXPECT_THROW(s.patch(CyclicWindow(6, {0}), range1(0, 3)), Error);
}

TEST(CutProject, CyclicPatchMatchesDirectCount) {
    Rng rng = case_rng(61, 0);
    for (int i = 0; i < 100; ++i) {
        const std::int64_t n = uniform(rng, 1, 12);
        const CyclicWindow w = verify::random_cyclic_window(rng, n);
        const std::int64_t lo = uniform(rng, -50, 50), len = uniform(rng, 1, 60);
        std::int64_t expected = 0;
        for (std::int64_t x = lo; x < lo + len; ++x)
            if (w.contains(((x % n) + n) % n)) ++expected;
        EXPECT_EQ(static_cast<std::int64_t>(CyclicScheme(n).patch(w, range1(lo, lo + len)).size()), expected);
    }
}

TEST(CutProject, FibonacciPatchMatchesBruteForce) {
    const FibonacciScheme s;
    const auto pts = s.patch(golden_window(), QPhi(0), QPhi(10));
    EXPECT_EQ(static_cast<std::int64_t>(pts.size()), verify::brute_force_fibonacci_count(golden_window(), 0, 10, 20));
    for (const auto& p : pts) {
        EXPECT_GE(to_qphi(p), QPhi(0));
        EXPECT_LT(to_qphi(p), QPhi(10));
        EXPECT_TRUE(golden_window().contains(to_qphi(FibonacciScheme::star(p))));
    }
    EXPECT_TRUE(projection_injective(pts));

    Rng rng = case_rng(62, 0);
    for (int i = 0; i < 40; ++i) {
        const PhiIntervalSet w = verify::random_phi_window(rng);
        const std::int64_t lo = uniform(rng, -40, 40), hi = lo + uniform(rng, 1, 60);
        EXPECT_EQ(s.count(w, QPhi(lo), QPhi(hi)), verify::brute_force_fibonacci_count(w, lo, hi, 120)) << w.str();
    }
}

TEST(CutProject, FibonacciGapsAreSeparated) {
    const FibonacciScheme s;
    const auto pts = s.patch(golden_window(), QPhi(-200), QPhi(200));
    const auto gap = min_gap(pts);
    ASSERT_TRUE(gap.has_value());
    double expected = 1e300;
    for (std::size_t i = 1; i < pts.size(); ++i) expected = std::min(expected, pts[i].to_double() - pts[i - 1].to_double());
    EXPECT_NEAR(gap->to_double(), expected, 1e-9);
    EXPECT_GT(gap->sign(), 0);
    EXPECT_FALSE(min_gap({ZPhi(1)}).has_value());
    EXPECT_FALSE(projection_injective({ZPhi(1), ZPhi(1)}));
}

TEST(CutProject, CyclicDensityIsExact) {
    const CyclicScheme s(5);
    const CyclicWindow w(5, {0, 1});
    EXPECT_EQ(s.density(w), q(2, 5));
    EXPECT_EQ(s.density(CyclicWindow(5, {})), 0);
    EXPECT_EQ(s.density(CyclicWindow::full(5)), 1);
    for (std::int64_t n : {5, 10, 100}) {
        const auto r = density_formula_check(s, w, FolnerSeq::cubes_zd(1), n);
        EXPECT_EQ(r.empirical, q(2, 5));
        EXPECT_TRUE(r.within_targets());
        EXPECT_TRUE(r.target_exact);
    }
    const auto off = density_formula_check(s, w, FolnerSeq::cubes_zd(1), 7);
    EXPECT_EQ(off.count, 4);
    EXPECT_LE(off.deviation_bound(), q(2, 7));
    EXPECT_EQ(density_formula_check(s, CyclicWindow(5, {}), FolnerSeq::cubes_zd(1), 10).empirical, 0);
}

TEST(CutProject, FibonacciDensityFormula) {
    const FibonacciScheme s;
    const std::int64_t t = 10000;
    const auto r = density_formula_check(s, unit_window(), FolnerSeq::cubes_rd(1), t);
    EXPECT_EQ(r.count, verify::brute_force_fibonacci_count(unit_window(), 0, t, 5000));
    EXPECT_LE(r.deviation_bound(), q(1, 1000));
    EXPECT_FALSE(r.target_exact);
    EXPECT_NEAR(r.empirical.get_d(), 1 / std::sqrt(5.0), 1e-3);
    // the golden window has density φ/√5
    const auto g = density_formula_check(s, golden_window(), FolnerSeq::cubes_rd(1), t);
    EXPECT_NEAR(g.empirical.get_d(), (1 + std::sqrt(5.0)) / 2 / std::sqrt(5.0), 1e-3);
    const auto d = s.density(golden_window(), sqrt5_enclosure());
    EXPECT_LE(d.width(), q(1, 1000000));
}

TEST(CutProject, UniformDensityOverShifts) {
    const CyclicScheme cs(5);
    std::vector<CyclicShift> cshifts;
    for (std::int64_t x = -7; x <= 7; ++x)
        for (std::int64_t h = 0; h < 5; ++h) cshifts.push_back({x, h});
    EXPECT_EQ(uniform_density_check(cs, CyclicWindow(5, {0, 1}), FolnerSeq::cubes_zd(1), 100, cshifts).max_deviation, 0);

    const FibonacciScheme fs;
    const std::int64_t t = 10000;
    Rng rng = case_rng(63, 0);
    std::vector<PhiShift> shifts;
    for (int i = 0; i < 50; ++i)
        shifts.push_back({QPhi(random_rational(rng, -1000, 1000, 9), random_rational(rng, -10, 10, 5)),
                          ZPhi(uniform(rng, -30, 30), uniform(rng, -30, 30))});
    const auto r = uniform_density_check(fs, unit_window(), FolnerSeq::cubes_rd(1), t, shifts);
    EXPECT_EQ(r.shifts, 50U);
    EXPECT_LE(r.max_deviation, q(verify::kFibonacciDeviationConstant * 4, t));
}

TEST(CutProject, CyclicAlmostPeriods) {
    const CyclicScheme s(5);
    const CyclicWindow w(5, {0, 1});
    const auto r = almost_periods(s, w, 0, range1(-20, 20));
    EXPECT_EQ(r.k, 0);
    EXPECT_EQ(r.bound, 0);
    EXPECT_TRUE(r.edge.empty());
    std::vector<IntElem> fives;
    for (std::int64_t x = -20; x < 20; x += 5) fives.push_back(IntElem{x});
    EXPECT_EQ(r.periods, PointSet::from_elements(1, fives));
    for (const auto& t : fives) {
        const auto c = check_almost_period(s, w, r.edge, t[0], range1(0, 50));
        EXPECT_EQ(c.symdiff, 0);
    }
    // with k = 1 the edge is {4, 0, 1, 2} and shifts by ±1 stay inside it
    const auto loose = almost_periods(s, w, q(4, 5), range1(-5, 5));
    EXPECT_EQ(loose.edge.residues(), (std::vector<std::int64_t>{0, 1, 2, 4}));
    const auto c = check_almost_period(s, w, loose.edge, 1, range1(0, 50));
    EXPECT_TRUE(c.included);
    EXPECT_GT(c.symdiff, 0);
}

TEST(CutProject, FibonacciAlmostPeriods) {
    const FibonacciScheme s;
    const Rational eps = q(1, 10);
    const std::int64_t t = 10000;
    const auto r = almost_periods(s, golden_window(), eps, QPhi(0), QPhi(t));
    EXPECT_EQ(r.u, q(1, 32));
    // the edge consists of two intervals of length 2u around the endpoints
    EXPECT_EQ(r.edge.measure(), QPhi(Rational(4 * r.u)));
    EXPECT_LE(r.bound.hi, eps);
    EXPECT_LE(4 * r.u.get_d() / std::sqrt(5.0), eps.get_d());
    ASSERT_GE(r.periods.size(), 10U);
    for (std::size_t i = 0; i < r.periods.size(); i += r.periods.size() / 10) {
        const ZPhi p = r.periods[i];
        EXPECT_LE(std::fabs(to_qphi(FibonacciScheme::star(p)).to_double()), r.u.get_d() + 1e-12);
        const auto c = check_almost_period(s, golden_window(), r.edge, p, QPhi(0), QPhi(2000));
        EXPECT_TRUE(c.included) << p;
        EXPECT_LE(make_rational(c.symdiff, 2000), Rational(eps + q(1, 1000)));
    }
    EXPECT_THROW(almost_periods(s, golden_window(), parse_rational("1e-30"), QPhi(0), QPhi(10)), Error);
}
