#pragma once

// Densities of a measure ν: averages along a Følner sequence, Beurling (uniform) densities,
// Leptin-density probes, translation-boundedness witnesses, and the lattice-relative
// densities d⁻, d⁺ (αδ_Γ ≤ ν ≤ α'δ_Γ up to a factor 1-ε after enlarging by some compact K).
//
// Suprema and infima over all compact sets or all translates are not finitely computable.
// Every reported number therefore carries a Cert flag. The mechanism for exact values is
// periodicity: if ν(Xγ) = ν(X) for all γ in a uniform lattice P with fundamental domain F,
// every one of these densities equals ν(F)/m(F).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delone/folner.hpp"
#include "delone/lattices.hpp"
#include "delone/parallel.hpp"
#include "delone/set_algebra.hpp"
#include "delone/witness.hpp"

namespace delone {

/// I(G) ∈ {1, ∞} separates amenable from non-amenable groups; every built-in group is
/// amenable, so the standard estimates are used with I(G) = 1.
inline constexpr int kAmenabilityConstant = 1;

/// ν(A_n)/m(A_n).
inline Rational a_density(const GroupCtx& ctx, const PMeasure& nu, const FolnerSeq& seq, std::int64_t n) {
    const GSet a = seq(n);
    return nu.eval(ctx, a) / measure(ctx, a);
}

// ---- periodicity ----------------------------------------------------------------------------

/// Checks ν({g γ}) = ν({g}) for g in the patch and γ a generator of P (or its inverse).
inline void verify_period(const GroupCtx& ctx, const PMeasure& nu, const Lattice& period, const PointSet& patch) {
    if (!(period.ctx() == ctx)) throw Error(ErrorCode::InvalidPeriod, "period lattice lives in another group");
    if (!ctx.discrete()) throw Error(ErrorCode::InvalidPeriod, "periods are supported in discrete groups only");
    auto gens = period.generators();
    const auto count = gens.size();
    for (std::size_t i = 0; i < count; ++i) gens.push_back(inverse(ctx, gens[i]));
    patch.for_each([&](const IntElem& g) {
        const Rational w = nu.weight(ctx, g);
        for (const auto& gamma : gens) {
            if (nu.weight(ctx, multiply(ctx, g, gamma)) != w)
                throw Error(ErrorCode::InvalidPeriod, nu.label() + " is not invariant under right translation by " +
                                                          period.describe());
        }
    });
}

/// ν(F)/m(F) for a verified period P with canonical fundamental domain F.
inline Rational periodic_density(const GroupCtx& ctx, const PMeasure& nu, const Lattice& period) {
    const GSet f = period.fundamental_domain();
    return nu.eval(ctx, f) / measure(ctx, f);
}

inline PointSet period_patch(const Lattice& period) {
    // F together with its neighbours F·γ^{±1} is enough to see every generator act.
    const auto& ctx = period.ctx();
    const GSet f = period.fundamental_domain();
    PointSet patch = f.points();
    for (const auto& g : period.generators()) {
        patch = unite(patch, right_translate(ctx, f.points(), g));
        patch = unite(patch, right_translate(ctx, f.points(), inverse(ctx, g)));
    }
    return patch;
}

// ---- Beurling densities ---------------------------------------------------------------------

/// Where the shifts s in ν(A s) range: an explicit sample, or one fundamental domain of a period.
struct ShiftDomain {
    std::optional<Lattice> period;
    std::vector<IntElem> int_shifts;
    std::vector<RealPoint> real_shifts;

    static ShiftDomain periodic(Lattice p) { return ShiftDomain{std::move(p), {}, {}}; }
    static ShiftDomain sample(std::vector<IntElem> s) { return ShiftDomain{std::nullopt, std::move(s), {}}; }
    static ShiftDomain sample(std::vector<RealPoint> s) { return ShiftDomain{std::nullopt, {}, std::move(s)}; }
};

struct BeurlingReport {
    Rational b_minus;   // inf_s ν(A_n s)/m(A_n)
    Rational b_plus;    // sup_s ν(A_n s)/m(A_n)
    Cert minus_cert = Cert::SampledUpper;
    Cert plus_cert = Cert::SampledLower;
    std::size_t shifts = 0;
};

inline BeurlingReport beurling_density(const GroupCtx& ctx, const PMeasure& nu, const FolnerSeq& seq, std::int64_t n,
                                       const ShiftDomain& dom) {
    const GSet a = seq(n);
    const Rational m = measure(ctx, a);
    std::vector<Rational> values;
    BeurlingReport r;
    if (dom.period) {
        verify_period(ctx, nu, *dom.period, period_patch(*dom.period));
        const auto f = dom.period->fundamental_domain().points().elements();
        values = parallel_map<Rational>(f.size(), [&](std::size_t i) { return nu.eval(ctx, right_translate(ctx, a, f[i])); });
        r.minus_cert = r.plus_cert = Cert::Exact;
    } else if (!dom.int_shifts.empty()) {
        const auto& s = dom.int_shifts;
        values = parallel_map<Rational>(s.size(), [&](std::size_t i) { return nu.eval(ctx, right_translate(ctx, a, s[i])); });
    } else if (!dom.real_shifts.empty()) {
        const auto& s = dom.real_shifts;
        values = parallel_map<Rational>(s.size(), [&](std::size_t i) { return nu.eval(ctx, right_translate(ctx, a, s[i])); });
    } else {
        throw Error(ErrorCode::EmptyFamily, "no shifts given");
    }
    r.shifts = values.size();
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    r.b_minus = *lo / m;
    r.b_plus = *hi / m;
    return r;
}

// ---- Leptin probes --------------------------------------------------------------------------

struct LeptinReport {
    Rational lep_minus;        // certified value when exact, otherwise the raw probe
    Rational lep_plus;
    Cert minus_cert = Cert::Estimate;
    Cert plus_cert = Cert::Estimate;
    Rational raw_minus;        // max_K min_A ν(KA)/m(A)
    Rational raw_plus;         // min_K max_A ν(A)/m(KA)
    std::optional<Rational> periodic_value;
};

/// Finite-family probes of Lep⁻ = sup_K inf_A ν(KA)/m(A) and Lep⁺ = inf_K sup_A ν(A)/m(KA).
/// The raw probes mix a sampled sup with a sampled inf and carry no one-sided guarantee; with a
/// verified period both values are replaced by the exact ν(F)/m(F).
inline LeptinReport leptin_probe(const GroupCtx& ctx, const PMeasure& nu, const std::vector<GSet>& k_family,
                                 const std::vector<GSet>& a_family, const std::optional<Lattice>& period = std::nullopt) {
    if (k_family.empty() || a_family.empty()) throw Error(ErrorCode::EmptyFamily, "K and A families must be nonempty");
    struct Row {
        Rational inner_min;
        Rational inner_max;
    };
    const auto rows = parallel_map<Row>(k_family.size(), [&](std::size_t i) {
        Row row;
        for (std::size_t j = 0; j < a_family.size(); ++j) {
            const GSet ka = minkowski(ctx, k_family[i], a_family[j]);
            const Rational lower = nu.eval(ctx, ka) / measure(ctx, a_family[j]);
            const Rational upper = nu.eval(ctx, a_family[j]) / measure(ctx, ka);
            if (j == 0 || lower < row.inner_min) row.inner_min = lower;
            if (j == 0 || upper > row.inner_max) row.inner_max = upper;
        }
        return row;
    });
    LeptinReport r;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == 0 || rows[i].inner_min > r.raw_minus) r.raw_minus = rows[i].inner_min;
        if (i == 0 || rows[i].inner_max < r.raw_plus) r.raw_plus = rows[i].inner_max;
    }
    r.lep_minus = r.raw_minus;
    r.lep_plus = r.raw_plus;
    if (nu.is_zero()) {
        r.lep_minus = r.lep_plus = 0;
        r.minus_cert = r.plus_cert = Cert::Exact;
        r.periodic_value = Rational(0);
    } else if (period) {
        verify_period(ctx, nu, *period, period_patch(*period));
        r.periodic_value = periodic_density(ctx, nu, *period);
        r.lep_minus = r.lep_plus = *r.periodic_value;
        r.minus_cert = r.plus_cert = Cert::Exact;
    }
    return r;
}

// ---- translation-boundedness witnesses ------------------------------------------------------

/// C_u = max_x ν(B²x), C_l = min_x ν(Bx) over the given shifts x (all of G is represented exactly
/// by one period's fundamental domain, or by the finite set that can meet the support of a
/// finite Dirac comb).
inline TBWitness tb_witness(const GroupCtx& ctx, const PMeasure& nu, const GSet& b, const ShiftDomain& dom) {
    if (!is_symmetric_unit_neighborhood(ctx, b))
        throw Error(ErrorCode::NotSymmetric, "witness set B must be a symmetric unit neighbourhood");
    const GSet b2 = minkowski(ctx, b, b);
    TBWitness w;
    w.b_upper = b;
    if (nu.is_zero()) {
        w.c_upper = 0;
        w.upper_cert = Cert::Exact;
        w.note = "zero measure: no lower witness";
        return w;
    }

    std::vector<IntElem> xs_int;
    std::vector<RealPoint> xs_real;
    bool exact = false;
    bool finite_support = false;
    if (auto atoms = nu.finite_atoms()) {
        // ν(B²x) > 0 only if x ∈ (B²)⁻¹·supp; outside that finite set both counts vanish.
        std::vector<IntElem> support;
        for (const auto& [g, weight] : *atoms) support.push_back(g);
        const GSet reach = minkowski(ctx, inverse_set(ctx, b2), PointSet::from_elements(ctx.dim(), support));
        xs_int = reach.points().elements();
        exact = finite_support = true;
    } else if (dom.period) {
        verify_period(ctx, nu, *dom.period, period_patch(*dom.period));
        xs_int = dom.period->fundamental_domain().points().elements();
        exact = true;
    } else {
        xs_int = dom.int_shifts;
        xs_real = dom.real_shifts;
    }
    if (xs_int.empty() && xs_real.empty()) throw Error(ErrorCode::EmptyFamily, "no shifts given");

    struct Pair {
        Rational upper, lower;
    };
    std::vector<Pair> vals;
    if (!xs_int.empty()) {
        vals = parallel_map<Pair>(xs_int.size(), [&](std::size_t i) {
            return Pair{nu.eval(ctx, right_translate(ctx, b2, xs_int[i])), nu.eval(ctx, right_translate(ctx, b, xs_int[i]))};
        });
    } else {
        vals = parallel_map<Pair>(xs_real.size(), [&](std::size_t i) {
            return Pair{nu.eval(ctx, right_translate(ctx, b2, xs_real[i])), nu.eval(ctx, right_translate(ctx, b, xs_real[i]))};
        });
    }
    Rational cu = vals.front().upper, cl = vals.front().lower;
    for (const auto& v : vals) {
        if (v.upper > cu) cu = v.upper;
        if (v.lower < cl) cl = v.lower;
    }
    w.c_upper = cu;
    w.upper_cert = exact ? Cert::Exact : Cert::SampledLower;
    if (finite_support) {
        w.note = "finite support: lower bound is 0 away from the support";
        return w;
    }
    w.b_lower = b;
    w.c_lower = cl;
    w.lower_cert = exact ? Cert::Exact : Cert::SampledUpper;
    w.note = exact ? "exact over one period" : "sampled shifts";
    return w;
}

/// The standard-estimate window [C_l/m(B_l²), C_u/m(B_u)] (with I(G) = 1) for Leptin densities.
inline std::pair<Rational, Rational> standard_estimate_bounds(const GroupCtx& ctx, const TBWitness& w) {
    const Rational upper = w.c_upper / measure(ctx, w.b_upper) * kAmenabilityConstant;
    Rational lower = 0;
    if (w.has_lower()) lower = *w.c_lower / measure(ctx, minkowski(ctx, *w.b_lower, *w.b_lower)) * kAmenabilityConstant;
    return {lower, upper};
}

// ---- lattice-relative densities --------------------------------------------------------------

struct GksCertificate {
    Rational eps;
    std::size_t k_index = 0;   // index into the K search list, or SIZE_MAX for the periodic K = F⁻¹F
    Rational alpha;
    bool lower = true;         // αδ_Γ ≤ ν (lower) or ν ≤ αδ_Γ (upper)
    bool exact = false;
};

struct GksReport {
    Rational d_minus_lo;       // certified: d⁻ ≥ d_minus_lo
    Rational d_plus_hi;        // certified: d⁺ ≤ d_plus_hi
    Cert minus_cert = Cert::Estimate;  // a finite A family cannot certify "for all A"
    Cert plus_cert = Cert::Estimate;
    std::vector<GksCertificate> certificates;
    Rational lattice_leptin;                  // Lep_Γ = 1/covol(Γ)
    std::optional<Rational> leptin_exact;     // ν(F_P)/m(F_P) when periodic
    std::optional<GSet> periodic_k;           // K = F⁻¹F
};

/// Searches for α with (1-ε)αδ_Γ(A) ≤ ν(KA) and (1-ε)ν(A) ≤ αδ_Γ(KA).
///
/// With a period P ⊆ Γ of ν and F its fundamental domain, K = F⁻¹F and α = ν(F⁻¹)/δ_Γ(F⁻¹)
/// work for every compact A at ε = 0 (tile A by the disjoint sets F⁻¹γ, γ ∈ P), so
/// d⁻ = d⁺ = α exactly. Without a period the search over K_search and the A-family only
/// yields values flagged as sampled.
inline GksReport gks_density(const GroupCtx& ctx, const PMeasure& nu, const Lattice& gamma,
                             const std::vector<Rational>& eps_schedule, const std::vector<GSet>& k_search,
                             const std::vector<GSet>& a_family, const std::optional<Lattice>& period = std::nullopt) {
    if (!(gamma.ctx() == ctx)) throw Error(ErrorCode::InvalidElement, "lattice lives in another group");
    GksReport r;
    r.lattice_leptin = 1 / gamma.covolume();
    const PMeasure delta = gamma.dirac_comb();

    if (period) {
        for (const auto& g : period->generators())
            if (!gamma.contains(g)) throw Error(ErrorCode::InvalidPeriod, "period lattice is not contained in Γ");
        verify_period(ctx, nu, *period, period_patch(*period));
        const GSet f = period->fundamental_domain();
        const GSet finv = inverse_set(ctx, f);
        const Rational alpha = nu.eval(ctx, finv) / delta.eval(ctx, finv);
        r.d_minus_lo = r.d_plus_hi = alpha;
        r.minus_cert = r.plus_cert = Cert::Exact;
        r.periodic_k = minkowski(ctx, finv, f);
        r.leptin_exact = periodic_density(ctx, nu, *period);
        r.certificates.push_back({0, static_cast<std::size_t>(-1), alpha, true, true});
        r.certificates.push_back({0, static_cast<std::size_t>(-1), alpha, false, true});
        return r;
    }

    if (eps_schedule.empty() || k_search.empty() || a_family.empty())
        throw Error(ErrorCode::NoCertificate, "no period and an empty search (schedule, K list or A family)");
    bool any_lower = false, any_upper = false;
    for (const auto& eps : eps_schedule) {
        if (eps < 0 || eps >= 1) throw Error(ErrorCode::InvalidElement, "ε must lie in [0, 1)");
        for (std::size_t ki = 0; ki < k_search.size(); ++ki) {
            std::optional<Rational> lower, upper;
            for (const auto& a : a_family) {
                const GSet ka = minkowski(ctx, k_search[ki], a);
                const Rational da = delta.eval(ctx, a), dka = delta.eval(ctx, ka);
                if (da > 0) {
                    const Rational v = nu.eval(ctx, ka) / ((1 - eps) * da);
                    if (!lower || v < *lower) lower = v;
                }
                if (dka > 0) {
                    const Rational v = (1 - eps) * nu.eval(ctx, a) / dka;
                    if (!upper || v > *upper) upper = v;
                }
            }
            if (lower) {
                r.certificates.push_back({eps, ki, *lower, true, false});
                if (!any_lower || *lower > r.d_minus_lo) r.d_minus_lo = *lower;
                any_lower = true;
            }
            if (upper) {
                r.certificates.push_back({eps, ki, *upper, false, false});
                if (!any_upper || *upper < r.d_plus_hi) r.d_plus_hi = *upper;
                any_upper = true;
            }
        }
    }
    if (!any_lower || !any_upper)
        throw Error(ErrorCode::NoCertificate, "the A family never meets Γ; best ε reached: " +
                                                  eps_schedule.back().get_str());
    return r;
}

}  // namespace delone
