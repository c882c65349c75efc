#pragma once

// Finite unions of half-open axis-aligned boxes in R^d with rational endpoints.
//
// A d-dimensional set is stored as a step function along the first axis whose values are
// (d-1)-dimensional sets; a 0-dimensional set is either the point or empty. Adjacent equal
// slices are merged and no empty slice sits at either end, which makes the representation
// unique for a given point set. Boolean operations merge the breakpoints of both operands.
//
// Inversion maps [a,b) to [-b,-a): the sets here are surrogates for compact sets whose
// boundaries are Lebesgue-null, and every quantity computed from them is a measure.

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "delone/error.hpp"
#include "delone/group.hpp"
#include "delone/rational.hpp"

namespace delone {

struct Box {
    std::vector<Rational> lo;
    std::vector<Rational> hi;  // exclusive

    int dim() const noexcept { return static_cast<int>(lo.size()); }
    bool empty() const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (!(lo[i] < hi[i])) return true;
        return false;
    }
    friend bool operator==(const Box&, const Box&) = default;
};

class BoxSet {
public:
    BoxSet() = default;
    explicit BoxSet(int dim) : dim_(dim) {
        if (dim < 0) throw Error(ErrorCode::InvalidElement, "negative dimension");
    }

    static BoxSet point() {
        BoxSet s(0);
        s.full_ = true;
        return s;
    }

    static BoxSet box(const Box& b) { return from_boxes(b.dim(), {b}); }

    static BoxSet interval(const Rational& lo, const Rational& hi) { return box(Box{{lo}, {hi}}); }

    /// Union of arbitrary (possibly overlapping) boxes.
    static BoxSet from_boxes(int dim, std::vector<Box> boxes) {
        for (const auto& b : boxes)
            if (b.dim() != dim || static_cast<int>(b.hi.size()) != dim)
                throw Error(ErrorCode::InvalidElement, "box dimension mismatch");
        boxes.erase(std::remove_if(boxes.begin(), boxes.end(), [](const Box& b) { return b.empty(); }), boxes.end());
        return build(dim, boxes, 0);
    }

    int dim() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0 ? !full_ : children_.empty(); }

    Rational measure() const {
        if (dim_ == 0) return full_ ? Rational(1) : Rational(0);
        Rational total = 0;
        for (std::size_t i = 0; i < children_.size(); ++i) {
            if (children_[i].empty()) continue;
            total += (cuts_[i + 1] - cuts_[i]) * children_[i].measure();
        }
        return total;
    }

    bool contains(const RealPoint& p) const { return contains_from(p, 0); }

    /// Canonical disjoint box decomposition in deterministic (slab-sweep) order.
    std::vector<Box> boxes() const {
        std::vector<Box> out;
        if (dim_ == 0) {
            if (full_) out.push_back(Box{});
            return out;
        }
        for (std::size_t i = 0; i < children_.size(); ++i) {
            for (auto& tail : children_[i].boxes()) {
                Box b;
                b.lo.reserve(static_cast<std::size_t>(dim_));
                b.hi.reserve(static_cast<std::size_t>(dim_));
                b.lo.push_back(cuts_[i]);
                b.hi.push_back(cuts_[i + 1]);
                b.lo.insert(b.lo.end(), tail.lo.begin(), tail.lo.end());
                b.hi.insert(b.hi.end(), tail.hi.begin(), tail.hi.end());
                out.push_back(std::move(b));
            }
        }
        return out;
    }

    /// Smallest box containing the set; throws on the empty set.
    Box bounding_box() const {
        if (empty()) throw Error(ErrorCode::EmptySet, "bounding box of empty set");
        Box b;
        if (dim_ == 0) return b;
        b.lo.push_back(cuts_.front());
        b.hi.push_back(cuts_.back());
        std::optional<Box> inner;
        for (const auto& c : children_) {
            if (c.empty()) continue;
            Box cb = c.bounding_box();
            if (!inner) {
                inner = cb;
            } else {
                for (std::size_t i = 0; i < cb.lo.size(); ++i) {
                    if (cb.lo[i] < inner->lo[i]) inner->lo[i] = cb.lo[i];
                    if (cb.hi[i] > inner->hi[i]) inner->hi[i] = cb.hi[i];
                }
            }
        }
        b.lo.insert(b.lo.end(), inner->lo.begin(), inner->lo.end());
        b.hi.insert(b.hi.end(), inner->hi.begin(), inner->hi.end());
        return b;
    }

    BoxSet translated(const RealPoint& v) const { return translated_from(v, 0); }

    /// Point reflection x -> -x, with [a,b) mapped to [-b,-a).
    BoxSet reflected() const {
        if (dim_ == 0) return *this;
        BoxSet s(dim_);
        for (auto i = children_.size(); i-- > 0;) s.push_piece(-cuts_[i + 1], -cuts_[i], children_[i].reflected());
        s.finish();
        return s;
    }

    friend bool operator==(const BoxSet& a, const BoxSet& b) {
        return a.dim_ == b.dim_ && a.full_ == b.full_ && a.cuts_ == b.cuts_ && a.children_ == b.children_;
    }

    friend BoxSet unite(const BoxSet& a, const BoxSet& b) { return combine(a, b, Op::Union); }
    friend BoxSet intersect(const BoxSet& a, const BoxSet& b) { return combine(a, b, Op::Intersect); }
    friend BoxSet subtract(const BoxSet& a, const BoxSet& b) { return combine(a, b, Op::Difference); }
    friend BoxSet symmetric_difference(const BoxSet& a, const BoxSet& b) { return combine(a, b, Op::Xor); }
    friend bool is_subset(const BoxSet& sub, const BoxSet& super) { return subtract(sub, super).empty(); }

    /// Minkowski sum {a + b}.
    friend BoxSet minkowski_sum(const BoxSet& a, const BoxSet& b) {
        if (a.dim_ != b.dim_) throw Error(ErrorCode::InvalidElement, "dimension mismatch");
        const auto ba = a.boxes();
        const auto bb = b.boxes();
        std::vector<Box> sums;
        sums.reserve(ba.size() * bb.size());
        for (const auto& x : ba) {
            for (const auto& y : bb) {
                Box s;
                s.lo.resize(x.lo.size());
                s.hi.resize(x.lo.size());
                for (std::size_t i = 0; i < x.lo.size(); ++i) {
                    s.lo[i] = x.lo[i] + y.lo[i];
                    s.hi[i] = x.hi[i] + y.hi[i];
                }
                sums.push_back(std::move(s));
            }
        }
        return from_boxes(a.dim_, std::move(sums));
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

    void push_piece(const Rational& lo, const Rational& hi, BoxSet child) {
        if (!(lo < hi)) return;
        if (!children_.empty() && cuts_.back() < lo) push_piece(cuts_.back(), lo, BoxSet(dim_ - 1));
        if (children_.empty()) {
            if (child.empty()) return;
            cuts_.push_back(lo);
            cuts_.push_back(hi);
            children_.push_back(std::move(child));
            return;
        }
        if (children_.back() == child) {
            cuts_.back() = hi;
            return;
        }
        cuts_.push_back(hi);
        children_.push_back(std::move(child));
    }

    void finish() {
        while (!children_.empty() && children_.back().empty()) {
            children_.pop_back();
            cuts_.pop_back();
        }
        if (children_.empty()) cuts_.clear();
    }

    static BoxSet build(int dim, const std::vector<Box>& boxes, int axis) {
        if (axis == dim) {
            BoxSet s(0);
            s.full_ = !boxes.empty();
            return s;
        }
        const int rest = dim - axis;
        BoxSet s(rest);
        if (boxes.empty()) return s;
        const auto ax = static_cast<std::size_t>(axis);
        std::vector<Rational> cuts;
        cuts.reserve(2 * boxes.size());
        for (const auto& b : boxes) {
            cuts.push_back(b.lo[ax]);
            cuts.push_back(b.hi[ax]);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

        std::vector<std::size_t> order(boxes.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return boxes[x].lo[ax] < boxes[y].lo[ax]; });

        std::vector<std::size_t> active;
        std::size_t next = 0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const Rational& lo = cuts[i];
            active.erase(std::remove_if(active.begin(), active.end(), [&](std::size_t k) { return boxes[k].hi[ax] <= lo; }),
                         active.end());
            while (next < order.size() && boxes[order[next]].lo[ax] <= lo) active.push_back(order[next++]);
            if (active.empty()) continue;
            BoxSet child;
            if (axis + 1 == dim) {
                child = point();
            } else {
                std::vector<Box> tails;
                tails.reserve(active.size());
                for (auto k : active) tails.push_back(boxes[k]);
                child = build(dim, tails, axis + 1);
            }
            s.push_piece(lo, cuts[i + 1], std::move(child));
        }
        s.finish();
        return s;
    }

    static BoxSet combine(const BoxSet& a, const BoxSet& b, Op op) {
        if (a.dim_ != b.dim_) throw Error(ErrorCode::InvalidElement, "dimension mismatch");
        if (a.dim_ == 0) {
            BoxSet s(0);
            s.full_ = apply(op, a.full_, b.full_);
            return s;
        }
        std::vector<Rational> cuts;
        cuts.reserve(a.cuts_.size() + b.cuts_.size());
        std::merge(a.cuts_.begin(), a.cuts_.end(), b.cuts_.begin(), b.cuts_.end(), std::back_inserter(cuts));
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        const BoxSet none(a.dim_ - 1);
        BoxSet s(a.dim_);
        std::size_t ia = 0, ib = 0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const Rational& lo = cuts[i];
            while (ia < a.children_.size() && a.cuts_[ia + 1] <= lo) ++ia;
            while (ib < b.children_.size() && b.cuts_[ib + 1] <= lo) ++ib;
            const BoxSet& ca = (ia < a.children_.size() && a.cuts_[ia] <= lo) ? a.children_[ia] : none;
            const BoxSet& cb = (ib < b.children_.size() && b.cuts_[ib] <= lo) ? b.children_[ib] : none;
            if (ca.empty() && cb.empty()) continue;
            s.push_piece(lo, cuts[i + 1], combine(ca, cb, op));
        }
        s.finish();
        return s;
    }

    bool contains_from(const RealPoint& p, std::size_t axis) const {
        if (dim_ == 0) return full_;
        if (axis >= p.size()) return false;
        const auto& x = p[axis];
        auto it = std::upper_bound(cuts_.begin(), cuts_.end(), x);
        if (it == cuts_.begin() || it == cuts_.end()) return false;
        const auto idx = static_cast<std::size_t>(it - cuts_.begin()) - 1;
        return children_[idx].contains_from(p, axis + 1);
    }

    BoxSet translated_from(const RealPoint& v, std::size_t axis) const {
        if (dim_ == 0) return *this;
        BoxSet s = *this;
        s.shift_in_place(v, axis);
        return s;
    }

    void shift_in_place(const RealPoint& v, std::size_t axis) {
        if (dim_ == 0) return;
        for (auto& c : cuts_) c += v[axis];
        for (auto& ch : children_) ch.shift_in_place(v, axis + 1);
    }

    int dim_ = 0;
    bool full_ = false;               // dim 0 only
    std::vector<Rational> cuts_;      // pieces [cuts_[i], cuts_[i+1])
    std::vector<BoxSet> children_;    // slice on each piece
};

}  // namespace delone
