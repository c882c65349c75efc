#pragma once

// Finite subsets of Z^d (d <= 3) and H3(Z), stored run-length encoded along the last
// coordinate: a sorted list of fibers (one per prefix of the first d-1 coordinates), each
// holding sorted, disjoint, non-adjacent half-open integer runs [lo, hi).
//
// Left and right translations in both group kinds move a whole fiber to another fiber and
// shift its runs by a fiber-dependent constant, so Minkowski products, erosions and
// translates never expand the runs into individual points.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "delone/error.hpp"
#include "delone/group.hpp"

namespace delone {

struct Run {
    std::int64_t lo;
    std::int64_t hi;  // exclusive
    friend bool operator==(const Run&, const Run&) = default;
};

class PointSet {
public:
    using Key = std::array<std::int64_t, 2>;

    struct Fiber {
        Key key{};
        std::vector<Run> runs;
        friend bool operator==(const Fiber&, const Fiber&) = default;
    };

    PointSet() = default;
    explicit PointSet(int arity) : arity_(arity) {
        if (arity < 1 || arity > IntElem::kMaxArity) throw Error(ErrorCode::InvalidElement, "bad arity");
    }

    static PointSet from_elements(int arity, const std::vector<IntElem>& elems) {
        std::vector<std::pair<Key, Run>> runs;
        runs.reserve(elems.size());
        for (const auto& e : elems) {
            if (e.arity() != arity) throw Error(ErrorCode::InvalidElement, "element arity mismatch");
            runs.push_back({key_of(e), Run{e.last(), e.last() + 1}});
        }
        return from_runs(arity, std::move(runs));
    }

    /// Normalizes an arbitrary (overlapping, unsorted) list of keyed runs.
    static PointSet from_runs(int arity, std::vector<std::pair<Key, Run>> runs) {
        PointSet s(arity);
        std::sort(runs.begin(), runs.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second.lo < y.second.lo;
        });
        for (const auto& [key, run] : runs) {
            if (run.hi <= run.lo) continue;
            if (s.fibers_.empty() || s.fibers_.back().key != key) s.fibers_.push_back(Fiber{key, {}});
            auto& rs = s.fibers_.back().runs;
            if (!rs.empty() && run.lo <= rs.back().hi)
                rs.back().hi = std::max(rs.back().hi, run.hi);
            else
                rs.push_back(run);
        }
        return s;
    }

    /// Product of half-open integer intervals [lo_i, hi_i).
    static PointSet box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) {
        if (lo.size() != hi.size() || lo.empty() || lo.size() > 3)
            throw Error(ErrorCode::InvalidElement, "box bounds arity mismatch");
        const int arity = static_cast<int>(lo.size());
        PointSet s(arity);
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (hi[i] <= lo[i]) return s;
        const Run run{lo.back(), hi.back()};
        if (arity == 1) {
            s.fibers_.push_back(Fiber{Key{0, 0}, {run}});
        } else if (arity == 2) {
            for (auto a = lo[0]; a < hi[0]; ++a) s.fibers_.push_back(Fiber{Key{a, 0}, {run}});
        } else {
            for (auto a = lo[0]; a < hi[0]; ++a)
                for (auto b = lo[1]; b < hi[1]; ++b) s.fibers_.push_back(Fiber{Key{a, b}, {run}});
        }
        return s;
    }

    int arity() const noexcept { return arity_; }
    bool empty() const noexcept { return fibers_.empty(); }
    const std::vector<Fiber>& fibers() const noexcept { return fibers_; }

    std::int64_t size() const noexcept {
        std::int64_t n = 0;
        for (const auto& f : fibers_)
            for (const auto& r : f.runs) n += r.hi - r.lo;
        return n;
    }

    std::size_t run_count() const noexcept {
        std::size_t n = 0;
        for (const auto& f : fibers_) n += f.runs.size();
        return n;
    }

    bool contains(const IntElem& e) const {
        if (e.arity() != arity_) return false;
        const Key k = key_of(e);
        auto it = std::lower_bound(fibers_.begin(), fibers_.end(), k,
                                   [](const Fiber& f, const Key& key) { return f.key < key; });
        if (it == fibers_.end() || it->key != k) return false;
        const auto c = e.last();
        auto r = std::upper_bound(it->runs.begin(), it->runs.end(), c,
                                  [](std::int64_t v, const Run& run) { return v < run.lo; });
        if (r == it->runs.begin()) return false;
        --r;
        return c < r->hi;
    }

    IntElem element(const Key& key, std::int64_t last) const {
        IntElem e(arity_);
        for (int i = 0; i + 1 < arity_; ++i) e[i] = key[static_cast<std::size_t>(i)];
        e[arity_ - 1] = last;
        return e;
    }

    /// Visits elements in lexicographic order.
    template <class F>
    void for_each(F&& f) const {
        for (const auto& fib : fibers_)
            for (const auto& r : fib.runs)
                for (auto c = r.lo; c < r.hi; ++c) f(element(fib.key, c));
    }

    std::vector<IntElem> elements() const {
        std::vector<IntElem> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](const IntElem& e) { out.push_back(e); });
        return out;
    }

    IntElem front() const {
        if (empty()) throw Error(ErrorCode::EmptySet, "front() of empty set");
        return element(fibers_.front().key, fibers_.front().runs.front().lo);
    }

    /// Minkowski product with {0}^{d-1} x [lo, hi) (central in both group kinds).
    PointSet dilate_last(std::int64_t lo, std::int64_t hi) const {
        if (hi <= lo) return PointSet(arity_);
        std::vector<std::pair<Key, Run>> runs;
        runs.reserve(run_count());
        for (const auto& f : fibers_)
            for (const auto& r : f.runs) runs.push_back({f.key, Run{r.lo + lo, r.hi + hi - 1}});
        return from_runs(arity_, std::move(runs));
    }

    /// {p : p + (0,..,0,z) in this set for every z in [lo, hi)}.
    PointSet erode_last(std::int64_t lo, std::int64_t hi) const {
        if (hi <= lo) throw Error(ErrorCode::EmptySet, "erosion by an empty run");
        PointSet s(arity_);
        for (const auto& f : fibers_) {
            Fiber out{f.key, {}};
            for (const auto& r : f.runs) {
                Run e{r.lo - lo, r.hi - hi + 1};
                if (e.hi > e.lo) out.runs.push_back(e);
            }
            if (!out.runs.empty()) s.fibers_.push_back(std::move(out));
        }
        return s;
    }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.arity_ == b.arity_ && a.fibers_ == b.fibers_;
    }

    friend PointSet unite(const PointSet& a, const PointSet& b) { return combine(a, b, Op::Union); }
    friend PointSet intersect(const PointSet& a, const PointSet& b) { return combine(a, b, Op::Intersect); }
    friend PointSet subtract(const PointSet& a, const PointSet& b) { return combine(a, b, Op::Difference); }
    friend PointSet symmetric_difference(const PointSet& a, const PointSet& b) { return combine(a, b, Op::Xor); }

    /// True iff sub is a subset of super.
    friend bool is_subset(const PointSet& sub, const PointSet& super) { return subtract(sub, super).empty(); }

    static Key key_of(const IntElem& e) {
        Key k{0, 0};
        for (int i = 0; i + 1 < e.arity(); ++i) k[static_cast<std::size_t>(i)] = e[i];
        return k;
    }

private:
    enum class Op { Union, Intersect, Difference, Xor };

    static bool apply(Op op, bool x, bool y) {
        switch (op) {
            case Op::Union: return x || y;
            case Op::Intersect: return x && y;
            case Op::Difference: return x && !y;
            case Op::Xor: return x != y;
        }
        return false;
    }

    static std::vector<Run> combine_runs(const std::vector<Run>& a, const std::vector<Run>& b, Op op) {
        std::vector<std::int64_t> cuts;
        cuts.reserve(2 * (a.size() + b.size()));
        for (const auto& r : a) { cuts.push_back(r.lo); cuts.push_back(r.hi); }
        for (const auto& r : b) { cuts.push_back(r.lo); cuts.push_back(r.hi); }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        std::vector<Run> out;
        std::size_t ia = 0, ib = 0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const auto lo = cuts[i], hi = cuts[i + 1];
            while (ia < a.size() && a[ia].hi <= lo) ++ia;
            while (ib < b.size() && b[ib].hi <= lo) ++ib;
            const bool in_a = ia < a.size() && a[ia].lo <= lo;
            const bool in_b = ib < b.size() && b[ib].lo <= lo;
            if (!apply(op, in_a, in_b)) continue;
            if (!out.empty() && out.back().hi == lo)
                out.back().hi = hi;
            else
                out.push_back(Run{lo, hi});
        }
        return out;
    }

    static PointSet combine(const PointSet& a, const PointSet& b, Op op) {
        if (a.arity_ != b.arity_) throw Error(ErrorCode::InvalidElement, "set arity mismatch");
        PointSet s(a.arity_);
        static const std::vector<Run> kNone;
        std::size_t i = 0, j = 0;
        while (i < a.fibers_.size() || j < b.fibers_.size()) {
            const Fiber* fa = i < a.fibers_.size() ? &a.fibers_[i] : nullptr;
            const Fiber* fb = j < b.fibers_.size() ? &b.fibers_[j] : nullptr;
            Key key;
            const std::vector<Run>* ra = &kNone;
            const std::vector<Run>* rb = &kNone;
            if (fa && (!fb || fa->key < fb->key)) {
                key = fa->key; ra = &fa->runs; ++i;
            } else if (fb && (!fa || fb->key < fa->key)) {
                key = fb->key; rb = &fb->runs; ++j;
            } else {
                key = fa->key; ra = &fa->runs; rb = &fb->runs; ++i; ++j;
            }
            auto runs = combine_runs(*ra, *rb, op);
            if (!runs.empty()) s.fibers_.push_back(Fiber{key, std::move(runs)});
        }
        return s;
    }

    int arity_ = 1;
    std::vector<Fiber> fibers_;
};

// ---- group actions on whole sets -------------------------------------------------------

namespace detail {

/// Maps every fiber through (key -> new key, run shift); re-sorts only when needed.
template <class KeyMap>
PointSet map_fibers(const PointSet& a, KeyMap&& map) {
    std::vector<std::pair<PointSet::Key, Run>> runs;
    runs.reserve(a.run_count());
    for (const auto& f : a.fibers()) {
        auto [key, shift] = map(f.key);
        for (const auto& r : f.runs) runs.push_back({key, Run{r.lo + shift, r.hi + shift}});
    }
    return PointSet::from_runs(a.arity(), std::move(runs));
}

inline void require_set(const GroupCtx& ctx, const PointSet& a) {
    if (!ctx.discrete() || a.arity() != ctx.dim())
        throw Error(ErrorCode::InvalidElement, "point set does not belong to " + ctx.name());
}

}  // namespace detail

/// k * A.
inline PointSet left_translate(const GroupCtx& ctx, const IntElem& k, const PointSet& a) {
    detail::require_discrete(ctx, k);
    detail::require_set(ctx, a);
    const bool heis = ctx.kind() == GroupKind::HeisenbergInt;
    const int d = ctx.dim();
    return detail::map_fibers(a, [&](const PointSet::Key& key) {
        PointSet::Key out = key;
        for (int i = 0; i + 1 < d; ++i) out[static_cast<std::size_t>(i)] += k[i];
        std::int64_t shift = k[d - 1];
        if (heis) shift = detail::checked_add(shift, detail::checked_mul(k[0], key[1]));
        return std::pair{out, shift};
    });
}

/// A * s.
inline PointSet right_translate(const GroupCtx& ctx, const PointSet& a, const IntElem& s) {
    detail::require_discrete(ctx, s);
    detail::require_set(ctx, a);
    const bool heis = ctx.kind() == GroupKind::HeisenbergInt;
    const int d = ctx.dim();
    return detail::map_fibers(a, [&](const PointSet::Key& key) {
        PointSet::Key out = key;
        for (int i = 0; i + 1 < d; ++i) out[static_cast<std::size_t>(i)] += s[i];
        std::int64_t shift = s[d - 1];
        if (heis) shift = detail::checked_add(shift, detail::checked_mul(key[0], s[1]));
        return std::pair{out, shift};
    });
}

/// A^{-1} = {a^{-1} : a in A}.
inline PointSet inverse_set(const GroupCtx& ctx, const PointSet& a) {
    detail::require_set(ctx, a);
    const bool heis = ctx.kind() == GroupKind::HeisenbergInt;
    std::vector<std::pair<PointSet::Key, Run>> runs;
    runs.reserve(a.run_count());
    for (const auto& f : a.fibers()) {
        PointSet::Key key{-f.key[0], -f.key[1]};
        const std::int64_t offset = heis ? detail::checked_mul(f.key[0], f.key[1]) : 0;
        for (const auto& r : f.runs) runs.push_back({key, Run{offset - r.hi + 1, offset - r.lo + 1}});
    }
    return PointSet::from_runs(a.arity(), std::move(runs));
}

/// K * A, one run of K at a time: (kp, z)A for z in [zlo, zhi) is a central dilation of (kp, zlo)A.
inline PointSet minkowski_product(const GroupCtx& ctx, const PointSet& k, const PointSet& a) {
    detail::require_set(ctx, k);
    detail::require_set(ctx, a);
    const bool heis = ctx.kind() == GroupKind::HeisenbergInt;
    const int d = ctx.dim();
    std::vector<std::pair<PointSet::Key, Run>> runs;
    runs.reserve(k.run_count() * a.run_count());
    for (const auto& kf : k.fibers()) {
        for (const auto& kr : kf.runs) {
            const std::int64_t width = kr.hi - kr.lo - 1;
            for (const auto& af : a.fibers()) {
                PointSet::Key key = af.key;
                for (int i = 0; i + 1 < d; ++i) key[static_cast<std::size_t>(i)] += kf.key[static_cast<std::size_t>(i)];
                std::int64_t shift = kr.lo;
                if (heis) shift = detail::checked_add(shift, detail::checked_mul(kf.key[0], af.key[1]));
                for (const auto& r : af.runs) runs.push_back({key, Run{r.lo + shift, r.hi + shift + width}});
            }
        }
    }
    return PointSet::from_runs(a.arity(), std::move(runs));
}

/// {g : K g subset of A} = intersection over k in K of k^{-1} A.
inline PointSet erosion(const GroupCtx& ctx, const PointSet& a, const PointSet& k) {
    detail::require_set(ctx, k);
    detail::require_set(ctx, a);
    if (k.empty()) throw Error(ErrorCode::EmptySet, "erosion by an empty set");
    std::optional<PointSet> acc;
    for (const auto& kf : k.fibers()) {
        for (const auto& kr : kf.runs) {
            IntElem base = k.element(kf.key, 0);
            PointSet part = left_translate(ctx, inverse(ctx, base), a.erode_last(kr.lo, kr.hi));
            acc = acc ? intersect(*acc, part) : std::move(part);
            if (acc->empty()) return *acc;
        }
    }
    return *acc;
}

}  // namespace delone
