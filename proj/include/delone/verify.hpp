#pragma once

// Randomized verification suites. Each suite draws `cases` independent random instances
// (case i uses the stream case_rng(seed, i)), evaluates every relation of its statement
// exactly, and tallies the outcome per relation. Reports are deterministic for a given seed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "delone/boundaries.hpp"
#include "delone/cutproject.hpp"
#include "delone/density.hpp"
#include "delone/folner.hpp"
#include "delone/lattices.hpp"
#include "delone/parallel.hpp"
#include "delone/random.hpp"

namespace delone::verify {

struct CaseResult {
    struct Check {
        std::string name;
        bool ok;
    };
    std::vector<Check> checks;
    std::string detail;  // inputs, reported for the first failing case

    void add(std::string name, bool ok) { checks.push_back({std::move(name), ok}); }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

struct Tally {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
};

struct SuiteReport {
    std::string suite;
    std::string statement;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::vector<Tally> checks;  // in order of first appearance
    std::size_t failed_cases = 0;
    std::optional<std::size_t> first_failing_case;
    std::string first_failure;
    double runtime_s = 0;

    bool passed() const { return failed_cases == 0 && !checks.empty(); }
    const Tally* find(const std::string& name) const {
        for (const auto& t : checks)
            if (t.name == name) return &t;
        return nullptr;
    }
};

namespace detail {

inline std::string show(const GSet& a, std::size_t limit = 16) {
    std::ostringstream os;
    os << "{";
    if (a.discrete()) {
        std::size_t i = 0;
        a.points().for_each([&](const IntElem& g) {
            if (i < limit) os << (i ? " " : "") << g;
            ++i;
        });
        if (i > limit) os << " ... (" << i << " points)";
    } else {
        std::size_t i = 0;
        for (const auto& b : a.boxes().boxes()) {
            if (i++ >= limit) break;
            os << (i > 1 ? " u " : "") << "[";
            for (int k = 0; k < b.dim(); ++k)
                os << (k ? " x " : "") << b.lo[static_cast<std::size_t>(k)] << "," << b.hi[static_cast<std::size_t>(k)];
            os << ")";
        }
    }
    os << "}";
    return os.str();
}

inline bool subset_or_empty(const GSet& a, const GSet& b) { return a.empty() || is_subset(a, b); }

}  // namespace detail

using CaseFn = std::function<CaseResult(std::size_t, Rng&)>;

inline SuiteReport run_cases(std::string suite, std::string statement, std::size_t cases, std::uint64_t seed,
                             unsigned threads, const CaseFn& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    auto results = parallel_map<CaseResult>(
        cases,
        [&](std::size_t i) {
            Rng rng = case_rng(seed, i);
            try {
                return fn(i, rng);
            } catch (const std::exception& e) {
                CaseResult r;
                r.add("no exception", false);
                r.detail = e.what();
                return r;
            }
        },
        threads);
    SuiteReport rep;
    rep.suite = std::move(suite);
    rep.statement = std::move(statement);
    rep.seed = seed;
    rep.cases = cases;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        for (const auto& c : r.checks) {
            auto [it, fresh] = index.try_emplace(c.name, rep.checks.size());
            if (fresh) rep.checks.push_back({c.name, 0, 0});
            auto& t = rep.checks[it->second];
            ++t.total;
            t.passed += c.ok ? 1 : 0;
        }
        if (!r.ok()) {
            ++rep.failed_cases;
            if (!rep.first_failing_case) {
                rep.first_failing_case = i;
                std::string failed;
                for (const auto& c : r.checks)
                    if (!c.ok) failed += (failed.empty() ? "" : "; ") + c.name;
                rep.first_failure = "case " + std::to_string(i) + " (seed " + std::to_string(seed) + "): " + failed +
                                    (r.detail.empty() ? "" : " -- " + r.detail);
            }
        }
    }
    rep.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Symmetric subset of a symmetric unit neighbourhood that still contains e.
inline PointSet symmetric_subset(const GroupCtx& ctx, Rng& rng, const PointSet& l) {
    std::vector<IntElem> keep{identity_int(ctx)};
    l.for_each([&](const IntElem& g) {
        if (coin(rng)) {
            keep.push_back(g);
            keep.push_back(inverse(ctx, g));
        }
    });
    return PointSet::from_elements(ctx.dim(), keep);
}

/// Comb A_n = ⋃_{k<n} [k, k+1-1/n) with K = [-ε, ε): closed forms of the boundary measures.
///   strong:  m(K⁻¹A \ Int_K A) = 1 - 1/n + 2ε + 2εn
///   Følner:  m(KA \ A)         = 2ε + (n-1)/n
/// valid while the gaps are bridged (1/n < 2ε) and the teeth survive erosion (1 - 1/n > 2ε).
inline Rational comb_strong_closed_form(const Rational& eps, std::int64_t n) {
    const Rational nn(static_cast<long>(n));
    return (1 - 1 / nn + 2 * eps + 2 * eps * nn) / (nn - 1);
}

inline Rational comb_folner_closed_form(const Rational& eps, std::int64_t n) {
    const Rational nn(static_cast<long>(n));
    return (2 * eps + (nn - 1) / nn) / (nn - 1);
}

/// Thickened comb L A_n = [-1, n + 1 - 1/n) for L = [-1, 1): strong boundary 4ε.
inline Rational thick_comb_closed_form(const Rational& eps, std::int64_t n) {
    const Rational nn(static_cast<long>(n));
    return 4 * eps / (nn + 2 - 1 / nn);
}

/// Random Fibonacci window: one or two disjoint intervals with small-denominator endpoints.
inline PhiIntervalSet random_phi_window(Rng& rng) {
    const Rational a = random_rational(rng, -2, 1, 12);
    Rational l = random_rational(rng, 0, 2, 12);
    if (l == 0) l = Rational(1, 12);
    std::vector<PhiIntervalSet::Interval> parts{{QPhi(a), QPhi(Rational(a + l))}};
    if (coin(rng)) {
        const Rational b = a + l + random_rational(rng, 0, 1, 6) + Rational(1, 7);
        Rational l2 = random_rational(rng, 0, 1, 8);
        if (l2 == 0) l2 = Rational(1, 8);
        parts.emplace_back(QPhi(b), QPhi(Rational(b + l2)));
    }
    return PhiIntervalSet::from_intervals(std::move(parts));
}

inline CyclicWindow random_cyclic_window(Rng& rng, std::int64_t n) {
    std::vector<std::int64_t> r;
    for (std::int64_t i = 0; i < n; ++i)
        if (coin(rng)) r.push_back(i);
    if (r.empty()) r.push_back(uniform(rng, 0, n - 1));
    return CyclicWindow(n, r);
}

/// Independent count of Fibonacci points: all (m, n) in the box |m|, |n| ≤ bound, each tested
/// with integer sign arithmetic after a floating-point prefilter on both coordinates.
inline std::int64_t brute_force_fibonacci_count(const PhiIntervalSet& w, std::int64_t lo, std::int64_t hi,
                                                std::int64_t bound) {
    if (w.empty()) return 0;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double w_lo = w.lower().to_double() - 1e-6, w_hi = w.upper().to_double() + 1e-6;
    std::int64_t c = 0;
    for (std::int64_t n = -bound; n <= bound; ++n) {
        const double nphi = static_cast<double>(n) * phi;
        const double nconj = static_cast<double>(n) * (1.0 - phi);
        for (std::int64_t m = -bound; m <= bound; ++m) {
            const double x = static_cast<double>(m) + nphi;
            if (x < static_cast<double>(lo) - 1e-6 || x > static_cast<double>(hi) + 1e-6) continue;
            const double xs = static_cast<double>(m) + nconj;
            if (xs < w_lo || xs > w_hi) continue;
            const ZPhi p(m, n);
            if (ZPhi(p - ZPhi(lo)).sign() < 0 || ZPhi(ZPhi(hi) - p).sign() <= 0) continue;
            if (w.contains(to_qphi(p.conj()))) ++c;
        }
    }
    return c;
}

// ---- suites ---------------------------------------------------------------------------------

inline CaseResult boundaries_case(std::size_t i, Rng& rng, std::size_t n) {
    CaseResult r;
    if (i < 2 * n) {
        const bool z2 = i < n;
        const GroupCtx ctx = z2 ? GroupCtx::integer_lattice(2) : GroupCtx::heisenberg();
        const std::string tag = z2 ? "Z2: " : "H3: ";
        const PointSet k = random_symmetric_neighborhood(ctx, rng, z2 ? 2 : 1, static_cast<int>(uniform(rng, 1, z2 ? 3 : 2)));
        const PointSet a = random_shape(ctx, rng, z2 ? 8 : 4);
        const auto cmp = compare_boundaries(ctx, k, a);
        r.add(tag + "strong in van Hove", cmp.strong_in_vanhove);
        r.add(tag + "van Hove in strong(K^2)", cmp.vanhove_in_strong_k2);
        r.add(tag + "Folner in strong", cmp.folner_in_strong);
        r.add(tag + "strong in K*Folner", cmp.strong_in_k_folner);
        r.add(tag + "strong(KA) in Folner(K^2)", cmp.strong_of_ka_in_folner_k2);

        const PointSet k2 = unite(k, random_symmetric_neighborhood(ctx, rng, z2 ? 2 : 1, 1));
        r.add(tag + "strong monotone in K", detail::subset_or_empty(strong_folner_boundary(ctx, k, a), strong_folner_boundary(ctx, k2, a)));
        r.add(tag + "van Hove monotone in K", detail::subset_or_empty(van_hove_boundary(ctx, k, a), van_hove_boundary(ctx, k2, a)));

        const PointSet l = random_point_set(ctx, rng, -1, 3, static_cast<int>(uniform(rng, 1, 3)));
        const GSet edge = strong_folner_boundary(ctx, k, a);
        const GSet kl = minkowski(ctx, k, inverse_set(ctx, l));
        r.add(tag + "L*strong_K in strong_(KL^-1)", edge.empty() || is_subset(minkowski(ctx, l, edge), strong_folner_boundary(ctx, kl, a)));
        if (!r.ok()) r.detail = "K=" + detail::show(k) + " A=" + detail::show(a) + " L=" + detail::show(l);
        return r;
    }
    // measure versions for box unions in R^2
    const GroupCtx ctx = GroupCtx::real_boxes(2);
    const BoxSet k = random_symmetric_box(2, rng, 1, 4);
    const BoxSet a = random_box_union(2, rng, 6, static_cast<int>(uniform(rng, 1, 4)), 4);
    const auto cmp = compare_boundaries(ctx, k, a);
    r.add("R2: all five relations in measure", cmp.all());
    if (!r.ok()) r.detail = "K=" + detail::show(k) + " A=" + detail::show(a);
    return r;
}

inline SuiteReport boundaries(std::size_t cases, std::uint64_t seed, unsigned threads = default_threads()) {
    const std::size_t extra = std::max<std::size_t>(1, cases / 10);
    return run_cases("boundaries",
                     "boundary comparison: strong ⊆ van Hove ⊆ strong(K²), Følner ⊆ strong ⊆ K·Følner, "
                     "strong_K(KA) ⊆ Følner(K²); monotone in K; L·strong_K ⊆ strong_{KL⁻¹}",
                     2 * cases + extra, seed, threads, [cases](std::size_t i, Rng& rng) { return boundaries_case(i, rng, cases); });
}

inline CaseResult packing_case(std::size_t i, Rng& rng) {
    CaseResult r;
    const bool z2 = i % 2 == 0;
    const GroupCtx ctx = z2 ? GroupCtx::integer_lattice(2) : GroupCtx::heisenberg();
    const std::string tag = z2 ? "Z2: " : "H3: ";
    const PointSet a = random_shape(ctx, rng, z2 ? 8 : 4);
    const PointSet b = random_unit_neighborhood(ctx, rng, z2 ? 2 : 1, static_cast<int>(uniform(rng, 0, 3)));
    const auto centers = greedy_packing(ctx, a, b);
    const auto chk = check_packing(ctx, a, b, centers);
    r.add(tag + "translates disjoint", chk.disjoint);
    r.add(tag + "union of Ba_i inside BA", chk.tiles_inside);
    r.add(tag + "A covered by B^-1 B a_i", chk.covers);
    r.add(tag + "n m(B) <= m(BA)", chk.upper_ok());
    r.add(tag + "m(A) <= n m(B^-1 B)", chk.lower_ok());
    // maximality: every other a ∈ A collides with a chosen translate
    std::set<IntElem> used;
    for (const auto& c : centers)
        for (const auto& y : b.elements()) used.insert(multiply(ctx, y, c));
    bool maximal = true;
    std::set<IntElem> chosen(centers.begin(), centers.end());
    a.for_each([&](const IntElem& x) {
        if (chosen.count(x)) return;
        bool hits = false;
        for (const auto& y : b.elements()) hits = hits || used.count(multiply(ctx, y, x));
        maximal = maximal && hits;
    });
    r.add(tag + "maximal", maximal);
    if (!r.ok()) r.detail = "A=" + detail::show(a) + " B=" + detail::show(b);
    return r;
}

inline SuiteReport packing(std::size_t cases, std::uint64_t seed, unsigned threads = default_threads()) {
    return run_cases("packing",
                     "packing argument: a maximal family with Ba_i pairwise disjoint satisfies "
                     "⋃Ba_i ⊆ BA and A ⊆ ⋃B⁻¹Ba_i, hence n·m(B) ≤ m(BA) and m(A) ≤ n·m(B⁻¹B)",
                     cases, seed, threads, packing_case);
}

inline CaseResult sum_identity_case(std::size_t i, Rng& rng, std::size_t n) {
    CaseResult r;
    const bool z2 = i < n;
    const GroupCtx ctx = z2 ? GroupCtx::integer_lattice(2) : GroupCtx::heisenberg();
    const std::string tag = z2 ? "Z2: " : "H3: ";
    const PointSet a = random_shape(ctx, rng, z2 ? 6 : 3);
    const PointSet b = random_point_set(ctx, rng, -2, 5, static_cast<int>(uniform(rng, 1, 8)));
    PMeasure nu = PMeasure::zero();
    switch (uniform(rng, 0, 2)) {
        case 0: nu = random_dirac(ctx, rng, -4, 12, static_cast<int>(uniform(rng, 1, 40))); break;
        case 1: nu = z2 ? random_int_lattice(2, rng, 3).dirac_comb() : Lattice::heisenberg_gamma(uniform(rng, 1, 2)).dirac_comb(); break;
        default: {
            const GSet support = random_shape(ctx, rng, z2 ? 8 : 4);
            nu = PMeasure::weighted(
                [ctx, support](const IntElem& g) {
                    return support.points().contains(g) ? make_rational(1 + (g[0] & 3), 2) : Rational(0);
                },
                "weighted");
        }
    }
    Rational lhs = 0, rhs = 0;
    a.for_each([&](const IntElem& x) { lhs += nu.eval(ctx, left_translate(ctx, x, GSet(b))); });
    b.for_each([&](const IntElem& y) { rhs += nu.eval(ctx, right_translate(ctx, GSet(a), y)); });
    r.add(tag + "sum_a nu(aB) = sum_b nu(Ab)", lhs == rhs);
    if (!r.ok()) r.detail = "A=" + detail::show(a) + " B=" + detail::show(b) + " lhs=" + lhs.get_str() + " rhs=" + rhs.get_str();
    return r;
}

inline SuiteReport sum_identity(std::size_t cases, std::uint64_t seed, unsigned threads = default_threads()) {
    return run_cases("sum-identity", "∫_A ν(aB) dm(a) = ∫_B ν(Ab) dm(b) for finite A, B (unimodular G)", 2 * cases,
                     seed, threads, [cases](std::size_t i, Rng& rng) { return sum_identity_case(i, rng, cases); });
}

inline CaseResult standard_estimates_case(std::size_t i, Rng& rng) {
    CaseResult r;
    const bool z2 = i % 2 == 0;
    const GroupCtx ctx = z2 ? GroupCtx::integer_lattice(2) : GroupCtx::heisenberg();
    const std::string tag = z2 ? "Z2: " : "H3: ";
    if (i % 4 < 2) {
        // upper estimate for a finite Dirac comb; the witness is exact for finite support
        const PMeasure nu = random_dirac(ctx, rng, -3, z2 ? 8 : 5, static_cast<int>(uniform(rng, 1, 30)));
        const PointSet bu = random_symmetric_neighborhood(ctx, rng, 1, static_cast<int>(uniform(rng, 0, 2)));
        const TBWitness w = tb_witness(ctx, nu, bu, ShiftDomain{});
        bool ok = true;
        for (int j = 0; j < 3; ++j) {
            const PointSet a = random_shape(ctx, rng, z2 ? 8 : 4);
            ok = ok && nu.eval(ctx, a) <= w.c_upper / measure(ctx, bu) * measure(ctx, minkowski(ctx, bu, a));
        }
        r.add(tag + "nu(A) <= C_u/m(B_u) m(B_u A)", ok);
        if (!r.ok()) r.detail = "B_u=" + detail::show(bu);
        return r;
    }
    // lower estimate for a lattice comb, with exact witnesses from one period
    const Lattice lat = z2 ? random_int_lattice(2, rng, 3) : Lattice::heisenberg_gamma(uniform(rng, 1, 2));
    std::int64_t reach = 1;
    if (z2) {
        for (const auto& row : lat.basis())
            for (auto v : row) reach = std::max<std::int64_t>(reach, v < 0 ? -v : v);
    } else {
        reach = lat.heisenberg_n();
    }
    const PointSet cube = z2 ? PointSet::box({-reach, -reach}, {reach + 1, reach + 1})
                             : PointSet::box({-reach, -reach, -reach * reach}, {reach + 1, reach + 1, reach * reach + 1});
    const PointSet bl = unite(cube, inverse_set(ctx, cube));  // inverse-closed in H3 as well
    const PMeasure nu = lat.dirac_comb();
    const TBWitness w = tb_witness(ctx, nu, bl, ShiftDomain::periodic(lat));
    const Rational m_bl2 = measure(ctx, minkowski(ctx, bl, bl));
    bool lower_ok = true, upper_ok = true;
    for (int j = 0; j < 3; ++j) {
        const PointSet a = random_shape(ctx, rng, z2 ? 8 : 4);
        lower_ok = lower_ok && nu.eval(ctx, minkowski(ctx, bl, a)) >= *w.c_lower / m_bl2 * measure(ctx, a);
        upper_ok = upper_ok && nu.eval(ctx, a) <= w.c_upper / measure(ctx, bl) * measure(ctx, minkowski(ctx, bl, a));
    }
    r.add(tag + "nu(B_l A) >= C_l/m(B_l^2) m(A)", lower_ok);
    r.add(tag + "nu(A) <= C_u/m(B_u) m(B_u A) (lattice)", upper_ok);
    r.add(tag + "witness exact over one period", w.upper_cert == Cert::Exact && w.lower_cert == Cert::Exact && w.has_lower());
    const auto [lo, hi] = standard_estimate_bounds(ctx, w);
    const Rational dens = 1 / lat.covolume();
    r.add(tag + "1/covol within [C_l/m(B_l^2), C_u/m(B_u)]", lo <= dens && dens <= hi);
    if (!r.ok()) r.detail = lat.describe();
    return r;
}

inline SuiteReport standard_estimates(std::size_t cases, std::uint64_t seed, unsigned threads = default_threads()) {
    return run_cases("standard-estimates",
                     "translation-bounded estimates: ν(A) ≤ C_u/m(B_u)·m(B_uA) when ν(B_u²x) ≤ C_u, "
                     "and ν(B_lA) ≥ C_l/m(B_l²)·m(A) when ν(B_lx) ≥ C_l",
                     cases, seed, threads, standard_estimates_case);
}

inline CaseResult thickening_case(std::size_t i, Rng& rng) {
    CaseResult r;
    if (i < 3) {
        // the comb: Følner but not strong Følner; its thickening is strong Følner
        static const std::int64_t ns[] = {10, 100, 1000};
        const std::int64_t n = ns[i];
        const Rational eps(1, 10);
        const GroupCtx ctx = GroupCtx::real_boxes(1);
        const FolnerSeq comb = FolnerSeq::comb_r1(eps);
        const GSet k = comb.eps_neighborhood();
        r.add("comb: strong ratio = closed form", ratio(ctx, comb, n, k, BoundaryKind::Strong) == comb_strong_closed_form(eps, n));
        r.add("comb: Folner ratio = closed form", ratio(ctx, comb, n, k, BoundaryKind::Folner) == comb_folner_closed_form(eps, n));
        const FolnerSeq thick = thicken(ctx, comb, BoxSet::interval(-1, 1));
        const Rational tr = ratio(ctx, thick, n, k, BoundaryKind::Strong);
        r.add("comb: thickened strong ratio = closed form", tr == thick_comb_closed_form(eps, n));
        r.add("comb: thickened strong ratio <= 3/n", tr <= make_rational(3, n));
        return r;
    }
    const bool z2 = i % 2 == 0;
    const GroupCtx ctx = z2 ? GroupCtx::integer_lattice(2) : GroupCtx::heisenberg();
    const std::string tag = z2 ? "Z2: " : "H3: ";
    const PointSet a = random_shape(ctx, rng, z2 ? 8 : 4);
    const PointSet l = random_symmetric_neighborhood(ctx, rng, 1, static_cast<int>(uniform(rng, 1, 2)));
    const PointSet k = symmetric_subset(ctx, rng, l);
    const GSet la = minkowski(ctx, l, a);
    const GSet l2 = minkowski(ctx, l, l);
    r.add(tag + "strong_K(LA) in Folner_{L^2}(A) for K in L",
          detail::subset_or_empty(strong_folner_boundary(ctx, k, la), folner_boundary(ctx, l2, a)));
    if (!r.ok()) r.detail = "A=" + detail::show(a) + " L=" + detail::show(l) + " K=" + detail::show(k);
    return r;
}

inline SuiteReport thickening(std::size_t cases, std::uint64_t seed, unsigned threads = default_threads()) {
    return run_cases("thickening",
                     "thickening A_n ↦ LA_n: ∂_K(LA) ⊆ δ^{L²}A for K ⊆ L, so LA_n is strong Følner when A_n is "
                     "Følner; comb A_n = ⋃[k, k+1-1/n): strong ratio → 2ε, thickened ratio ≤ 3/n",
                     std::max<std::size_t>(cases, 3), seed, threads, thickening_case);
}

inline CaseResult lattice_fd_case(std::size_t i, Rng& rng) {
    CaseResult r;
    const int kind = static_cast<int>(i % 3);
    const Lattice lat = kind == 0 ? random_int_lattice(1, rng, 6)
                      : kind == 1 ? random_int_lattice(2, rng, 3)
                                  : Lattice::heisenberg_gamma(uniform(rng, 1, 3));
    const GroupCtx& ctx = lat.ctx();
    const std::string tag = ctx.name() + ": ";
    const GSet f = lat.fundamental_domain();
    r.add(tag + "m(F) = covol", measure(ctx, f) == lat.covolume());
    bool fd = true;
    for (int j = 0; j < 4; ++j) fd = fd && fd_count(lat, f, random_lattice_point(lat, rng, 6)) == 1;
    r.add(tag + "card(Gamma ∩ F^-1 gamma) = 1", fd);
    const PointSet patch = default_patch(ctx, kind == 0 ? 8 : kind == 1 ? 5 : 3);
    r.add(tag + "Gamma F tiles the patch", tiling_check(lat, f, patch).ok());
    bool red = true;
    for (int j = 0; j < 4; ++j) {
        const IntElem g = random_elem(ctx, rng, 20);
        const auto [gamma, rep] = lat.reduce(g);
        red = red && lat.contains(gamma) && f.points().contains(rep) && multiply(ctx, gamma, rep) == g;
    }
    r.add(tag + "g = gamma f with f in F", red);
    if (kind == 2) return r;

    // Siegel construction from a random U with ΓU = G
    std::vector<IntElem> u;
    f.points().for_each([&](const IntElem& x) { u.push_back(multiply(ctx, random_lattice_point(lat, rng, 3), x)); });
    for (const auto& g : random_point_set(ctx, rng, -6, 13, static_cast<int>(uniform(rng, 0, 10))).elements()) u.push_back(g);
    const PointSet uset = PointSet::from_elements(ctx.dim(), u);
    const auto sg = siegel_fundamental_domain(lat, uset, patch);
    r.add(tag + "Siegel: F_U inside U", is_subset(sg.domain, GSet(uset)));
    r.add(tag + "Siegel: m(F_U) = covol", measure(ctx, sg.domain) == lat.covolume());
    r.add(tag + "Siegel: tiling on patch", sg.tiling.ok());
    bool fdu = true;
    for (int j = 0; j < 4; ++j) fdu = fdu && fd_count(lat, sg.domain, random_lattice_point(lat, rng, 6)) == 1;
    r.add(tag + "Siegel: card(Gamma ∩ F_U^-1 gamma) = 1", fdu);
    // dropping one coset from U must be detected
    const IntElem dropped = lat.reduce(uset.front()).second;
    std::vector<IntElem> rest;
    for (const auto& x : u)
        if (!(lat.reduce(x).second == dropped)) rest.push_back(x);
    bool detected = false;
    try {
        (void)siegel_fundamental_domain(lat, PointSet::from_elements(ctx.dim(), rest), patch);
    } catch (const Error& e) {
        detected = e.code() == ErrorCode::NotCovering;
    }
    r.add(tag + "Siegel: non-covering U rejected", detected);
    if (!r.ok()) r.detail = lat.describe() + " U=" + detail::show(uset);
    return r;
}

inline SuiteReport lattice_fd(std::size_t cases, std::uint64_t seed, unsigned threads = default_threads()) {
    return run_cases("lattice-fd",
                     "fundamental domains: card(Γ ∩ F⁻¹γ) = 1, ΓF tiles; Siegel construction yields "
                     "F_U ⊆ U with m(F_U) = covol(Γ) whenever ΓU = G",
                     cases, seed, threads, lattice_fd_case);
}

/// Tolerance constant for |empirical - m_H(W)/√5| ≤ C · (strong boundary ratio of [0,T) at K = [-1,1)).
inline constexpr int kFibonacciDeviationConstant = 4;

inline CaseResult density_formula_case(std::size_t i, Rng& rng) {
    CaseResult r;
    if (i % 2 == 0) {
        const std::int64_t n = uniform(rng, 2, 12);
        const CyclicScheme cs(n);
        const CyclicWindow w = random_cyclic_window(rng, n);
        const std::int64_t k = uniform(rng, 1, 20);
        const auto rep = density_formula_check(cs, w, FolnerSeq::cubes_zd(1), k * n);
        std::int64_t brute = 0;
        for (std::int64_t x = 0; x < k * n; ++x)
            for (auto res : w.residues()) brute += ((x % n) == res) ? 1 : 0;
        const Rational oracle = make_rational(w.size(), n);
        r.add("cyclic: count = brute force", rep.count == brute);
        r.add("cyclic: empirical = |W|/N on aligned intervals", rep.empirical == oracle && rep.target_lo == oracle && rep.target_hi == oracle);
        std::vector<CyclicShift> shifts;
        for (int j = 0; j < 4; ++j) shifts.push_back({uniform(rng, -50, 50), uniform(rng, -n, n)});
        r.add("cyclic: uniform deviation 0", uniform_density_check(cs, w, FolnerSeq::cubes_zd(1), k * n, shifts).max_deviation == 0);
        const CyclicWindow bigger = CyclicWindow(n, [&] {
            auto res = w.residues();
            res.push_back(uniform(rng, 0, n - 1));
            return res;
        }());
        const PointSet region = PointSet::box({-20}, {40});
        r.add("cyclic: monotone in W", is_subset(cs.patch(w, region), cs.patch(bigger, region)));
        if (!r.ok()) r.detail = "N=" + std::to_string(n) + " W=" + w.str();
        return r;
    }
    const FibonacciScheme fs;
    const PhiIntervalSet w = random_phi_window(rng);
    const std::int64_t t = 300;
    const auto pts = fs.patch(w, QPhi(0), QPhi(Rational(static_cast<long>(t))));
    r.add("fibonacci: count = brute force", static_cast<std::int64_t>(pts.size()) == brute_force_fibonacci_count(w, 0, t, 2 * t));
    r.add("fibonacci: projection injective", projection_injective(pts));
    const QPhi width = w.upper() - w.lower();
    const auto gap = min_gap(pts);
    r.add("fibonacci: min gap > 1/width(W)", !gap || to_qphi(*gap) * width > QPhi(1));
    const PhiIntervalSet bigger = unite(w, PhiIntervalSet::interval(w.upper(), w.upper() + QPhi(Rational(1, 3))));
    const auto big_pts = fs.patch(bigger, QPhi(0), QPhi(Rational(static_cast<long>(t))));
    r.add("fibonacci: monotone in W", std::includes(big_pts.begin(), big_pts.end(), pts.begin(), pts.end()));
    const std::int64_t big_t = 4000;
    const auto rep = density_formula_check(fs, w, FolnerSeq::cubes_rd(1), big_t);
    const Rational strong_ratio = make_rational(4, big_t);  // K = [-1,1) on [0,T)
    const Rational delta = kFibonacciDeviationConstant * strong_ratio;
    r.add("fibonacci: target_lo - C ratio <= empirical <= target_hi + C ratio",
          rep.target_lo - delta <= rep.empirical && rep.empirical <= rep.target_hi + delta);
    if (!r.ok()) r.detail = "W=" + w.str();
    return r;
}

inline SuiteReport density_formula(std::size_t cases, std::uint64_t seed, unsigned threads = default_threads()) {
    return run_cases("density-formula",
                     "density formula: card(Λ_W ∩ A_n)/m(A_n) → m_H(W)/covol(ℒ) (C = " +
                         std::to_string(kFibonacciDeviationConstant) + " times the strong boundary ratio)",
                     cases, seed, threads, density_formula_case);
}

inline CaseResult almost_periods_case(std::size_t i, Rng& rng) {
    CaseResult r;
    if (i % 2 == 0) {
        const FibonacciScheme fs;
        const PhiIntervalSet w = random_phi_window(rng);
        static const long dens[] = {4, 5, 10};
        const Rational eps(1, dens[uniform(rng, 0, 2)]);
        const QPhi lo(0), hi(2000);
        const auto ap = almost_periods(fs, w, eps, lo, hi);
        r.add("fibonacci: U nonempty and bound <= eps", ap.u > 0 && ap.bound.hi <= eps);
        r.add("fibonacci: periods found", !ap.periods.empty());
        const auto edge_pts = fs.count(ap.edge, lo, hi);
        bool incl = true, counted = true;
        for (int j = 0; j < 3 && !ap.periods.empty(); ++j) {
            const auto& t = ap.periods[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(ap.periods.size()) - 1))];
            const auto pc = check_almost_period(fs, w, ap.edge, t, lo, hi);
            incl = incl && pc.included;
            counted = counted && pc.symdiff <= edge_pts;
        }
        r.add("fibonacci: symmetric difference inside Lambda_edge", incl);
        r.add("fibonacci: card(symdiff) <= card(Lambda_edge)", counted);
        if (!r.ok()) r.detail = "W=" + w.str() + " eps=" + eps.get_str();
        return r;
    }
    const std::int64_t n = uniform(rng, 2, 12);
    const CyclicScheme cs(n);
    const CyclicWindow w = random_cyclic_window(rng, n);
    const Rational eps = coin(rng) ? Rational(0) : make_rational(uniform(rng, 0, n), n);
    const PointSet region = PointSet::box({0}, {5 * n});
    const auto ap = almost_periods(cs, w, eps, region);
    r.add("cyclic: bound <= eps", ap.bound <= eps);
    bool incl = true, exact = true;
    ap.periods.for_each([&](const IntElem& t) {
        const auto pc = check_almost_period(cs, w, ap.edge, t[0], region);
        incl = incl && pc.included;
        if (eps == 0) exact = exact && pc.symdiff == 0;
    });
    r.add("cyclic: symmetric difference inside Lambda_edge", incl);
    r.add("cyclic: eps = 0 gives exact periods", exact);
    if (!r.ok()) r.detail = "N=" + std::to_string(n) + " W=" + w.str() + " eps=" + eps.get_str();
    return r;
}

inline SuiteReport almost_periods_suite(std::size_t cases, std::uint64_t seed, unsigned threads = default_threads()) {
    return run_cases("almost-periods", "almost periods: Λ_W △ (Λ_W t) ⊆ Λ_{WU ∩ WᶜU} for t ∈ Λ_U", cases, seed,
                     threads, almost_periods_case);
}

inline CaseResult gks_case(std::size_t i, Rng& rng) {
    CaseResult r;
    const GroupCtx z1 = GroupCtx::integer_lattice(1);
    if (i % 2 == 0) {
        const std::int64_t n = uniform(rng, 2, 12);
        std::vector<std::int64_t> divisors;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) divisors.push_back(d);
        const std::int64_t d = divisors[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(divisors.size()) - 1))];
        const CyclicScheme cs(n);
        const CyclicWindow w = random_cyclic_window(rng, n);
        const PMeasure nu = cs.dirac_comb(w);
        const Lattice gamma = Lattice::int_sublattice(std::vector<std::int64_t>{d});
        const Lattice period = Lattice::int_sublattice(std::vector<std::int64_t>{n});
        const auto g = gks_density(z1, nu, gamma, {}, {}, {}, period);
        const Rational oracle_d = make_rational(d * w.size(), n);
        r.add("cyclic: d- = d+ = d|W|/N", g.d_minus_lo == oracle_d && g.d_plus_hi == oracle_d);
        const auto lep = leptin_probe(z1, nu, {GSet(PointSet::box({-1}, {2}))}, {GSet(PointSet::box({0}, {n}))}, period);
        r.add("cyclic: Lep_Gamma d- = Lep-", g.lattice_leptin * g.d_minus_lo == lep.lep_minus && lep.minus_cert == Cert::Exact);
        const auto br = beurling_density(z1, nu, FolnerSeq::cubes_zd(1), n, ShiftDomain::periodic(period));
        r.add("cyclic: Beurling = Leptin (periodic)", br.b_minus == lep.lep_minus && br.b_plus == lep.lep_plus);
        if (!r.ok()) r.detail = "N=" + std::to_string(n) + " d=" + std::to_string(d) + " W=" + w.str();
        return r;
    }
    const GroupCtx z2 = GroupCtx::integer_lattice(2);
    const Lattice gamma = random_int_lattice(2, rng, 3);
    const std::int64_t k1 = uniform(rng, 1, 3), k2 = uniform(rng, 1, 3);
    auto b = gamma.basis();
    for (auto& row : b) {
        row[0] *= k1;
        row[1] *= k2;
    }
    const Lattice period = Lattice::int_sublattice(b);
    const PMeasure nu = period.dirac_comb();
    const auto g = gks_density(z2, nu, gamma, {}, {}, {}, period);
    const Rational oracle_d = make_rational(1, k1 * k2);
    r.add("Z2: d- = d+ = covol(Gamma)/covol(P)", g.d_minus_lo == oracle_d && g.d_plus_hi == oracle_d);
    r.add("Z2: Lep_Gamma d- = 1/covol(P)", g.lattice_leptin * g.d_minus_lo == 1 / period.covolume() &&
                                               *g.leptin_exact == 1 / period.covolume());
    if (!r.ok()) r.detail = gamma.describe() + " P=" + period.describe();
    return r;
}

inline SuiteReport gks(std::size_t cases, std::uint64_t seed, unsigned threads = default_threads()) {
    return run_cases("gks", "lattice-relative densities: Lep_Γ · d⁻_ν = Lep⁻_ν (exact for periodic ν with period P ⊆ Γ)",
                     cases, seed, threads, gks_case);
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"boundaries",   "packing",         "sum-identity",
                                                "standard-estimates", "thickening", "lattice-fd",
                                                "density-formula",    "almost-periods", "gks"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, std::size_t cases, std::uint64_t seed,
                             unsigned threads = default_threads()) {
    if (name == "boundaries") return boundaries(cases, seed, threads);
    if (name == "packing") return packing(cases, seed, threads);
    if (name == "sum-identity") return sum_identity(cases, seed, threads);
    if (name == "standard-estimates") return standard_estimates(cases, seed, threads);
    if (name == "thickening") return thickening(cases, seed, threads);
    if (name == "lattice-fd") return lattice_fd(cases, seed, threads);
    if (name == "density-formula") return density_formula(cases, seed, threads);
    if (name == "almost-periods") return almost_periods_suite(cases, seed, threads);
    if (name == "gks") return gks(cases, seed, threads);
    throw Error(ErrorCode::Parse, "unknown suite '" + name + "'");
}

}  // namespace delone::verify
