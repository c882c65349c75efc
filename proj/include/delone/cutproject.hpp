#pragma once

// Cut-and-project schemes and their model sets Λ_W = π^G(ℒ ∩ (G × W)).
//
//   IntCyclic(N):  G = Z, H = Z_N, ℒ = {(n, n mod N)}, covol = N.
//   Fibonacci:     G = H = R, ℒ = {(m + nφ, m + nφ')}, covol = √5; x* = m + nφ' = (m + n) - nφ.
//
// Fibonacci windows are finite unions of half-open intervals with endpoints in Q(φ), so all
// membership tests are exact; √5 only enters through rational enclosures of densities.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delone/folner.hpp"
#include "delone/lattices.hpp"
#include "delone/quadratic.hpp"
#include "delone/set_algebra.hpp"

namespace delone {

// ---- windows ------------------------------------------------------------------------------

/// Canonical finite union of half-open intervals [a, b) with endpoints in Q(φ).
class PhiIntervalSet {
public:
    using Interval = std::pair<QPhi, QPhi>;

    PhiIntervalSet() = default;

    static PhiIntervalSet interval(const QPhi& a, const QPhi& b) { return from_intervals({{a, b}}); }

    static PhiIntervalSet from_intervals(std::vector<Interval> parts) {
        parts.erase(std::remove_if(parts.begin(), parts.end(), [](const Interval& p) { return !(p.first < p.second); }),
                    parts.end());
        std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) { return x.first < y.first; });
        PhiIntervalSet s;
        for (auto& p : parts) {
            if (!s.parts_.empty() && p.first <= s.parts_.back().second) {
                if (s.parts_.back().second < p.second) s.parts_.back().second = p.second;
            } else {
                s.parts_.push_back(std::move(p));
            }
        }
        return s;
    }

    bool empty() const noexcept { return parts_.empty(); }
    const std::vector<Interval>& intervals() const noexcept { return parts_; }

    bool contains(const QPhi& x) const {
        auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                                   [](const QPhi& v, const Interval& p) { return v < p.first; });
        if (it == parts_.begin()) return false;
        --it;
        return x < it->second;
    }

    QPhi measure() const {
        QPhi m;
        for (const auto& [a, b] : parts_) m += b - a;
        return m;
    }

    QPhi lower() const { return parts_.front().first; }
    QPhi upper() const { return parts_.back().second; }

    PhiIntervalSet translated(const QPhi& h) const {
        PhiIntervalSet s = *this;
        for (auto& [a, b] : s.parts_) {
            a += h;
            b += h;
        }
        return s;
    }

    /// WU ∩ WᶜU for U = [-u, u]: the points within distance u of an endpoint of W,
    /// i.e. ⋃_e [e - u, e + u) (equal to the closed version up to finitely many points).
    PhiIntervalSet boundary_neighborhood(const QPhi& u) const {
        std::vector<Interval> parts;
        for (const auto& [a, b] : parts_) {
            parts.emplace_back(a - u, a + u);
            parts.emplace_back(b - u, b + u);
        }
        return from_intervals(std::move(parts));
    }

    friend PhiIntervalSet unite(const PhiIntervalSet& x, const PhiIntervalSet& y) {
        auto parts = x.parts_;
        parts.insert(parts.end(), y.parts_.begin(), y.parts_.end());
        return from_intervals(std::move(parts));
    }

    friend PhiIntervalSet intersect(const PhiIntervalSet& x, const PhiIntervalSet& y) {
        std::vector<Interval> parts;
        std::size_t i = 0, j = 0;
        while (i < x.parts_.size() && j < y.parts_.size()) {
            const QPhi lo = std::max(x.parts_[i].first, y.parts_[j].first);
            const QPhi hi = std::min(x.parts_[i].second, y.parts_[j].second);
            if (lo < hi) parts.emplace_back(lo, hi);
            if (x.parts_[i].second < y.parts_[j].second) ++i;
            else ++j;
        }
        return from_intervals(std::move(parts));
    }

    friend bool is_subset(const PhiIntervalSet& x, const PhiIntervalSet& y) { return intersect(x, y) == x; }

    friend bool operator==(const PhiIntervalSet& x, const PhiIntervalSet& y) { return x.parts_ == y.parts_; }

    std::string str() const {
        std::string s;
        for (const auto& [a, b] : parts_) s += (s.empty() ? "" : " u ") + ("[" + a.str() + ", " + b.str() + ")");
        return s.empty() ? "{}" : s;
    }

private:
    std::vector<Interval> parts_;
};

/// Subset of Z_N.
class CyclicWindow {
public:
    CyclicWindow() = default;
    CyclicWindow(std::int64_t modulus, const std::vector<std::int64_t>& residues) : n_(modulus), in_(static_cast<std::size_t>(modulus), 0) {
        if (modulus < 1) throw Error(ErrorCode::InvalidElement, "modulus must be positive");
        for (auto r : residues) in_[static_cast<std::size_t>(detail::floor_mod(r, modulus))] = 1;
    }
    static CyclicWindow full(std::int64_t modulus) {
        std::vector<std::int64_t> all(static_cast<std::size_t>(modulus));
        for (std::int64_t i = 0; i < modulus; ++i) all[static_cast<std::size_t>(i)] = i;
        return CyclicWindow(modulus, all);
    }

    std::int64_t modulus() const noexcept { return n_; }
    bool contains(std::int64_t r) const { return in_[static_cast<std::size_t>(detail::floor_mod(r, n_))] != 0; }
    std::int64_t size() const { return std::count(in_.begin(), in_.end(), 1); }
    bool empty() const { return size() == 0; }

    std::vector<std::int64_t> residues() const {
        std::vector<std::int64_t> r;
        for (std::int64_t i = 0; i < n_; ++i)
            if (in_[static_cast<std::size_t>(i)]) r.push_back(i);
        return r;
    }

    CyclicWindow translated(std::int64_t h) const {
        std::vector<std::int64_t> r;
        for (auto x : residues()) r.push_back(x + h);
        return CyclicWindow(n_, r);
    }

    /// WU ∩ WᶜU for U = {-k, ..., k}.
    CyclicWindow boundary_neighborhood(std::int64_t k) const {
        std::vector<std::int64_t> r;
        for (std::int64_t x = 0; x < n_; ++x) {
            bool hits_in = false, hits_out = false;
            for (std::int64_t j = -k; j <= k; ++j) (contains(x - j) ? hits_in : hits_out) = true;
            if (hits_in && hits_out) r.push_back(x);
        }
        return CyclicWindow(n_, r);
    }

    friend bool is_subset(const CyclicWindow& a, const CyclicWindow& b) {
        for (std::int64_t i = 0; i < a.n_; ++i)
            if (a.contains(i) && !b.contains(i)) return false;
        return true;
    }

    std::string str() const {
        std::string s = "{";
        for (auto x : residues()) s += (s.size() > 1 ? "," : "") + std::to_string(x);
        return s + "} mod " + std::to_string(n_);
    }

private:
    std::int64_t n_ = 1;
    std::vector<char> in_;
};

// ---- schemes ------------------------------------------------------------------------------

class CyclicScheme {
public:
    explicit CyclicScheme(std::int64_t modulus) : n_(modulus) {
        if (modulus < 1) throw Error(ErrorCode::InvalidElement, "modulus must be positive");
    }
    std::int64_t modulus() const noexcept { return n_; }
    Rational covolume() const { return Rational(static_cast<long>(n_)); }
    std::int64_t star(std::int64_t x) const { return detail::floor_mod(x, n_); }
    GroupCtx ctx() const { return GroupCtx::integer_lattice(1); }

    PointSet patch(const CyclicWindow& w, const PointSet& region) const {
        check(w);
        if (region.empty()) throw Error(ErrorCode::EmptyRegion, "model-set region is empty");
        std::vector<IntElem> pts;
        region.for_each([&](const IntElem& g) {
            if (w.contains(g[0])) pts.push_back(g);
        });
        return PointSet::from_elements(1, pts);
    }

    PMeasure dirac_comb(const CyclicWindow& w) const {
        check(w);
        return PMeasure::indicator([w](const IntElem& g) { return w.contains(g[0]); },
                                   "model set " + w.str());
    }

    /// m_H(W)/covol, exact: the interior and closure of W ⊆ Z_N are W itself.
    Rational density(const CyclicWindow& w) const { return make_rational(w.size(), n_); }

    void check(const CyclicWindow& w) const {
        if (w.modulus() != n_) throw Error(ErrorCode::InvalidElement, "window modulus does not match the scheme");
    }

private:
    std::int64_t n_;
};

class FibonacciScheme {
public:
    static ZPhi star(const ZPhi& x) { return x.conj(); }

    /// Points of Λ_W in [lo, hi), sorted increasingly.
    std::vector<ZPhi> patch(const PhiIntervalSet& w, const QPhi& lo, const QPhi& hi) const {
        if (!(lo < hi)) throw Error(ErrorCode::EmptyRegion, "model-set region is empty");
        std::vector<ZPhi> pts;
        if (w.empty()) return pts;
        if (auto fast = patch_scaled(w, lo, hi)) return *fast;
        const QPhi w0 = w.lower(), w1 = w.upper();
        // x - x* = n√5 ∈ (lo - w1, hi - w0)
        const double s5 = std::sqrt(5.0);
        const auto n_lo = static_cast<std::int64_t>(std::floor((lo - w1).to_double() / s5)) - 2;
        const auto n_hi = static_cast<std::int64_t>(std::ceil((hi - w0).to_double() / s5)) + 2;
        const QPhi phi = QPhi::phi();
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            const QPhi nphi = phi * QPhi(Rational(static_cast<long>(n)));
            // m + nφ ∈ [lo, hi)  and  m + n - nφ ∈ [w0, w1)
            const std::int64_t a = std::max((lo - nphi).ceil(), (w0 - QPhi(Rational(static_cast<long>(n))) + nphi).ceil());
            const std::int64_t b = std::min((hi - nphi).ceil(), (w1 - QPhi(Rational(static_cast<long>(n))) + nphi).ceil());
            for (std::int64_t m = a; m < b; ++m) {
                const ZPhi x(m, n);
                if (w.contains(to_qphi(star(x)))) pts.push_back(x);
            }
        }
        std::sort(pts.begin(), pts.end());
        return pts;
    }

private:
    /// A value (u + wφ)/D over a common denominator D.
    struct Scaled {
        std::int64_t u = 0, w = 0;
    };

    /// Smallest integer k with D·k ≥ u + wφ.
    static std::int64_t ceil_scaled(std::int64_t d, std::int64_t u, std::int64_t w) {
        const double approx = (static_cast<double>(u) + static_cast<double>(w) * (1.0 + std::sqrt(5.0)) / 2.0) / static_cast<double>(d);
        auto k = static_cast<std::int64_t>(std::ceil(approx));
        auto at = [&](std::int64_t kk) {
            return ZPhi(detail::checked_narrow(static_cast<__int128>(d) * kk - u), detail::checked_narrow(-static_cast<__int128>(w))).sign();
        };
        while (at(k - 1) >= 0) --k;
        while (at(k) < 0) ++k;
        return k;
    }

    /// Integer-only enumeration when every endpoint has a small common denominator.
    std::optional<std::vector<ZPhi>> patch_scaled(const PhiIntervalSet& w, const QPhi& lo, const QPhi& hi) const {
        std::vector<const Rational*> coeffs{&lo.a(), &lo.b(), &hi.a(), &hi.b()};
        for (const auto& [a, b] : w.intervals()) {
            for (const QPhi* e : {&a, &b}) {
                coeffs.push_back(&e->a());
                coeffs.push_back(&e->b());
            }
        }
        BigInt den = 1;
        for (const Rational* c : coeffs) den = lcm(den, BigInt(c->get_den()));
        const BigInt limit = BigInt(1) << 40;
        if (den > BigInt(1) << 20) return std::nullopt;
        auto scale = [&](const QPhi& v, Scaled& out) {
            const BigInt u = v.a().get_num() * (den / v.a().get_den());
            const BigInt ww = v.b().get_num() * (den / v.b().get_den());
            if (abs(u) > limit || abs(ww) > limit) return false;
            out.u = u.get_si();
            out.w = ww.get_si();
            return true;
        };
        Scaled slo, shi;
        std::vector<std::pair<Scaled, Scaled>> win;
        if (!scale(lo, slo) || !scale(hi, shi)) return std::nullopt;
        for (const auto& [a, b] : w.intervals()) {
            Scaled sa, sb;
            if (!scale(a, sa) || !scale(b, sb)) return std::nullopt;
            win.emplace_back(sa, sb);
        }
        const std::int64_t d = den.get_si();
        const Scaled w0 = win.front().first, w1 = win.back().second;

        const double s5 = std::sqrt(5.0);
        const auto n_lo = static_cast<std::int64_t>(std::floor((lo - w.upper()).to_double() / s5)) - 2;
        const auto n_hi = static_cast<std::int64_t>(std::ceil((hi - w.lower()).to_double() / s5)) + 2;
        // x* = (m + n) - nφ ∈ [a, b)  ⇔  D(m+n) - a.u - (Dn + a.w)φ ≥ 0  and  b.u - D(m+n) + (b.w + Dn)φ > 0
        auto in_window = [&](std::int64_t m, std::int64_t n) {
            const __int128 dmn = static_cast<__int128>(d) * (m + n), dn = static_cast<__int128>(d) * n;
            for (const auto& [a, b] : win) {
                if (ZPhi(detail::checked_narrow(dmn - a.u), detail::checked_narrow(-dn - a.w)).sign() < 0) return false;
                if (ZPhi(detail::checked_narrow(b.u - dmn), detail::checked_narrow(b.w + dn)).sign() > 0) return true;
            }
            return false;
        };
        std::vector<ZPhi> pts;
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            const std::int64_t dn = detail::checked_narrow(static_cast<__int128>(d) * n);
            // m + nφ ∈ [lo, hi):  D m ≥ lo.u + (lo.w - Dn)φ,  D m < hi.u + (hi.w - Dn)φ
            // m + n - nφ ∈ [w0, w1):  D m ≥ w0.u - Dn + (w0.w + Dn)φ,  D m < w1.u - Dn + (w1.w + Dn)φ
            const std::int64_t a = std::max(ceil_scaled(d, slo.u, slo.w - dn), ceil_scaled(d, w0.u - dn, w0.w + dn));
            const std::int64_t b = std::min(ceil_scaled(d, shi.u, shi.w - dn), ceil_scaled(d, w1.u - dn, w1.w + dn));
            for (std::int64_t m = a; m < b; ++m)
                if (in_window(m, n)) pts.emplace_back(m, n);
        }
        std::sort(pts.begin(), pts.end());
        return pts;
    }

public:
    std::int64_t count(const PhiIntervalSet& w, const QPhi& lo, const QPhi& hi) const {
        return static_cast<std::int64_t>(patch(w, lo, hi).size());
    }

    /// Enclosure of m_H(W)/√5.
    RationalInterval density(const PhiIntervalSet& w, const RationalInterval& s5) const {
        if (w.empty()) return {0, 0};
        return enclose_over_sqrt5(w.measure(), s5);
    }

    /// Unit-weight comb on Λ_W as a measure on R (evaluated box by box).
    PMeasure dirac_comb(const PhiIntervalSet& w) const {
        const FibonacciScheme self = *this;
        return PMeasure::box_mass(
            [self, w](const Box& b) {
                return Rational(static_cast<long>(self.count(w, QPhi(b.lo[0]), QPhi(b.hi[0]))));
            },
            "fibonacci model set " + w.str());
    }
};

// ---- density formula ------------------------------------------------------------------------

struct DensityFormulaReport {
    std::int64_t n = 0;
    std::int64_t count = 0;
    Rational measure;      // m(A_n)
    Rational empirical;    // count / m(A_n)
    Rational target_lo;    // ≤ m_H(interior W)/covol
    Rational target_hi;    // ≥ m_H(closure W)/covol
    bool target_exact = false;

    bool within_targets() const { return target_lo <= empirical && empirical <= target_hi; }
    /// Upper bound for |empirical - m_H(W)/covol|.
    Rational deviation_bound() const {
        Rational d1 = abs(empirical - target_lo), d2 = abs(empirical - target_hi);
        return d1 < d2 ? d2 : d1;
    }
};

inline DensityFormulaReport density_formula_check(const CyclicScheme& scheme, const CyclicWindow& w,
                                                  const FolnerSeq& seq, std::int64_t n) {
    const GSet a = seq(n);
    DensityFormulaReport r;
    r.n = n;
    r.measure = measure(seq.ctx(), a);
    r.count = w.empty() ? 0 : scheme.patch(w, a.points()).size();
    r.empirical = Rational(static_cast<long>(r.count)) / r.measure;
    r.target_lo = r.target_hi = scheme.density(w);
    r.target_exact = true;
    return r;
}

inline std::int64_t count_in(const FibonacciScheme& scheme, const PhiIntervalSet& w, const BoxSet& region,
                             const QPhi& shift = QPhi()) {
    std::int64_t c = 0;
    for (const auto& b : region.boxes()) c += scheme.count(w, QPhi(b.lo[0]) + shift, QPhi(b.hi[0]) + shift);
    return c;
}

inline DensityFormulaReport density_formula_check(const FibonacciScheme& scheme, const PhiIntervalSet& w,
                                                  const FolnerSeq& seq, std::int64_t n,
                                                  const Rational& width = Rational(1, 1000000000)) {
    const GSet a = seq(n);
    DensityFormulaReport r;
    r.n = n;
    r.measure = measure(seq.ctx(), a);
    r.count = count_in(scheme, w, a.boxes());
    r.empirical = Rational(static_cast<long>(r.count)) / r.measure;
    const auto t = scheme.density(w, sqrt5_enclosure(width));
    r.target_lo = t.lo;
    r.target_hi = t.hi;
    r.target_exact = t.lo == t.hi;
    return r;
}

/// Sampled version of the uniform convergence statement: max over the given shifts of
/// |card(Λ_{W+h} ∩ (A_n + x)) / m(A_n) - m_H(W)/covol|. A finite sample only bounds the true
/// supremum from below.
struct UniformDensityReport {
    Rational max_deviation;   // rational upper bound of the sampled maximum
    std::size_t shifts = 0;
    std::size_t worst = 0;    // index of the worst shift
    bool sampled = true;
};

struct CyclicShift {
    std::int64_t x = 0;
    std::int64_t h = 0;
};

inline UniformDensityReport uniform_density_check(const CyclicScheme& scheme, const CyclicWindow& w,
                                                  const FolnerSeq& seq, std::int64_t n,
                                                  const std::vector<CyclicShift>& shifts) {
    const auto& ctx = seq.ctx();
    const GSet a = seq(n);
    const Rational m = measure(ctx, a);
    const Rational target = scheme.density(w);
    UniformDensityReport r;
    r.shifts = shifts.size();
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        const PointSet region = right_translate(ctx, a.points(), IntElem{shifts[i].x});
        const CyclicWindow wh = w.translated(shifts[i].h);
        const auto c = wh.empty() ? 0 : scheme.patch(wh, region).size();
        const Rational dev = abs(Rational(static_cast<long>(c)) / m - target);
        if (i == 0 || dev > r.max_deviation) {
            r.max_deviation = dev;
            r.worst = i;
        }
    }
    return r;
}

struct PhiShift {
    QPhi x;   // shift in G
    ZPhi t;   // lattice point whose star t* is the internal shift h
};

inline UniformDensityReport uniform_density_check(const FibonacciScheme& scheme, const PhiIntervalSet& w,
                                                  const FolnerSeq& seq, std::int64_t n,
                                                  const std::vector<PhiShift>& shifts,
                                                  const Rational& width = Rational(1, 1000000000)) {
    const GSet a = seq(n);
    const Rational m = measure(seq.ctx(), a);
    const auto target = scheme.density(w, sqrt5_enclosure(width));
    UniformDensityReport r;
    r.shifts = shifts.size();
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        const PhiIntervalSet wh = w.translated(to_qphi(FibonacciScheme::star(shifts[i].t)));
        const Rational emp = Rational(static_cast<long>(count_in(scheme, wh, a.boxes(), shifts[i].x))) / m;
        Rational d1 = abs(emp - target.lo), d2 = abs(emp - target.hi);
        const Rational dev = d1 < d2 ? d2 : d1;
        if (i == 0 || dev > r.max_deviation) {
            r.max_deviation = dev;
            r.worst = i;
        }
    }
    return r;
}

// ---- separation -----------------------------------------------------------------------------

/// Smallest distance between consecutive points of a sorted patch (nullopt if < 2 points).
inline std::optional<ZPhi> min_gap(const std::vector<ZPhi>& sorted) {
    std::optional<ZPhi> best;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const ZPhi g = sorted[i] - sorted[i - 1];
        if (!best || g < *best) best = g;
    }
    return best;
}

/// Distinct lattice points have distinct G-coordinates (π^G injective): a sorted patch has no
/// repeated values and every (m, n) pair is recovered from its G-coordinate.
inline bool projection_injective(const std::vector<ZPhi>& sorted) {
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (!(sorted[i - 1] < sorted[i])) return false;
    return true;
}

// ---- almost periods -------------------------------------------------------------------------

struct PhiAlmostPeriods {
    Rational u;                 // U = [-u, u]
    PhiIntervalSet edge;        // WU ∩ WᶜU
    std::vector<ZPhi> periods;  // Λ_U in the region
    RationalInterval bound;     // enclosure of m_H(edge)/√5
    int steps = 0;
};

/// Shrinks U = [-u, u] from u = 1/2 by halving (at most 40 steps) until the density of
/// Λ_{WU ∩ WᶜU} is certified ≤ eps; every t ∈ Λ_U then satisfies
/// Λ_W △ (Λ_W + t) ⊆ Λ_{WU ∩ WᶜU}.
inline PhiAlmostPeriods almost_periods(const FibonacciScheme& scheme, const PhiIntervalSet& w, const Rational& eps,
                                       const QPhi& lo, const QPhi& hi, const Rational& width = Rational(1, 1000000000)) {
    if (eps <= 0) throw Error(ErrorCode::InvalidElement, "eps must be positive");
    if (!(lo < hi)) throw Error(ErrorCode::EmptyRegion, "period region is empty");
    const auto s5 = sqrt5_enclosure(width);
    PhiAlmostPeriods r;
    Rational u(1, 2);
    for (int step = 1; step <= 40; ++step, u /= 2) {
        const PhiIntervalSet edge = w.boundary_neighborhood(QPhi(u));
        const RationalInterval bound = edge.empty() ? RationalInterval{0, 0} : enclose_over_sqrt5(edge.measure(), s5);
        r.u = u;
        r.edge = edge;
        r.bound = bound;
        r.steps = step;
        if (bound.hi <= eps) {
            // Λ_U for the closed U: enumerate a slightly larger half-open window and filter.
            auto cand = scheme.patch(PhiIntervalSet::interval(QPhi(-u), QPhi(u + 1)), lo, hi);
            for (const auto& t : cand)
                if (to_qphi(FibonacciScheme::star(t)) <= QPhi(u)) r.periods.push_back(t);
            return r;
        }
    }
    throw Error(ErrorCode::NoWindowFound, "shrink schedule exhausted; best bound " + r.bound.hi.get_str() +
                                              " at u = " + r.u.get_str());
}

struct CyclicAlmostPeriods {
    std::int64_t k = 0;         // U = {-k..k}
    CyclicWindow edge;
    PointSet periods;
    Rational bound;
    int steps = 0;
};

inline CyclicAlmostPeriods almost_periods(const CyclicScheme& scheme, const CyclicWindow& w, const Rational& eps,
                                          const PointSet& region) {
    scheme.check(w);
    if (eps < 0) throw Error(ErrorCode::InvalidElement, "eps must be nonnegative");
    if (region.empty()) throw Error(ErrorCode::EmptyRegion, "period region is empty");
    CyclicAlmostPeriods r;
    std::int64_t k = scheme.modulus() / 2;
    for (int step = 1; step <= 40; ++step) {
        r.k = k;
        r.edge = w.boundary_neighborhood(k);
        r.bound = make_rational(r.edge.size(), scheme.modulus());
        r.steps = step;
        if (r.bound <= eps) {
            std::vector<std::int64_t> us;
            for (std::int64_t j = -k; j <= k; ++j) us.push_back(j);
            r.periods = scheme.patch(CyclicWindow(scheme.modulus(), us), region);
            return r;
        }
        if (k == 0) break;
        k /= 2;
    }
    throw Error(ErrorCode::NoWindowFound, "shrink schedule exhausted; best bound " + r.bound.get_str());
}

/// Pointwise check of Λ_W △ (Λ_W + t) ⊆ Λ_edge on [lo, hi).
struct PeriodCheck {
    std::int64_t symdiff = 0;
    bool included = true;
    std::optional<ZPhi> violation;
};

inline PeriodCheck check_almost_period(const FibonacciScheme& scheme, const PhiIntervalSet& w,
                                       const PhiIntervalSet& edge, const ZPhi& t, const QPhi& lo, const QPhi& hi) {
    const QPhi tq = to_qphi(t);
    const auto base = scheme.patch(w, lo, hi);
    auto moved = scheme.patch(w, lo - tq, hi - tq);
    for (auto& x : moved) x = x + t;
    std::vector<ZPhi> diff;
    std::set_symmetric_difference(base.begin(), base.end(), moved.begin(), moved.end(), std::back_inserter(diff));
    PeriodCheck r;
    r.symdiff = static_cast<std::int64_t>(diff.size());
    for (const auto& x : diff) {
        if (!edge.contains(to_qphi(FibonacciScheme::star(x)))) {
            r.included = false;
            r.violation = x;
            break;
        }
    }
    return r;
}

inline PeriodCheck check_almost_period(const CyclicScheme& scheme, const CyclicWindow& w, const CyclicWindow& edge,
                                       std::int64_t t, const PointSet& region) {
    const auto ctx = scheme.ctx();
    const PointSet base = scheme.patch(w, region);
    const PointSet moved = intersect(right_translate(ctx, scheme.patch(w, right_translate(ctx, region, IntElem{-t})), IntElem{t}), region);
    const PointSet diff = symmetric_difference(base, moved);
    PeriodCheck r;
    r.symdiff = diff.size();
    diff.for_each([&](const IntElem& x) {
        if (r.included && !edge.contains(x[0])) r.included = false;
    });
    return r;
}

}  // namespace delone
