#pragma once

// Ambient groups: Z^d, the integer Heisenberg group H3(Z), and R^d (acting on box unions).
// All three are unimodular and amenable; Haar measure is counting measure on the discrete
// kinds and Lebesgue volume on R^d.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "delone/error.hpp"
#include "delone/rational.hpp"

namespace delone {

enum class GroupKind { IntLattice, HeisenbergInt, RealBoxes };

class GroupCtx {
public:
    static GroupCtx integer_lattice(int d) { return GroupCtx(GroupKind::IntLattice, d); }
    static GroupCtx heisenberg() { return GroupCtx(GroupKind::HeisenbergInt, 3); }
    static GroupCtx real_boxes(int d) { return GroupCtx(GroupKind::RealBoxes, d); }

    /// Accepts "Z<d>", "H3", "R<d>" (e.g. "Z2", "R1").
    static GroupCtx parse(const std::string& name) {
        if (name == "H3" || name == "H") return heisenberg();
        if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'R')) {
            int d = 0;
            try {
                d = std::stoi(name.substr(1));
            } catch (const std::exception&) {
                throw Error(ErrorCode::Parse, "bad group name '" + name + "'");
            }
            return name[0] == 'Z' ? integer_lattice(d) : real_boxes(d);
        }
        throw Error(ErrorCode::Parse, "unknown group '" + name + "' (expected Z<d>, H3 or R<d>)");
    }

    GroupKind kind() const noexcept { return kind_; }
    int dim() const noexcept { return dim_; }
    bool discrete() const noexcept { return kind_ != GroupKind::RealBoxes; }
    bool abelian() const noexcept { return kind_ != GroupKind::HeisenbergInt; }

    std::string name() const {
        switch (kind_) {
            case GroupKind::IntLattice: return "Z" + std::to_string(dim_);
            case GroupKind::HeisenbergInt: return "H3";
            case GroupKind::RealBoxes: return "R" + std::to_string(dim_);
        }
        return "?";
    }

    /// Kind keyword used in point-set file headers.
    std::string file_kind() const {
        switch (kind_) {
            case GroupKind::IntLattice: return "Z";
            case GroupKind::HeisenbergInt: return "H3";
            case GroupKind::RealBoxes: return "R";
        }
        return "?";
    }

    std::string haar_normalization() const {
        return discrete() ? "counting measure" : "Lebesgue volume";
    }

    friend bool operator==(const GroupCtx&, const GroupCtx&) = default;

private:
    GroupCtx(GroupKind kind, int dim) : kind_(kind), dim_(dim) {
        if (dim < 1) throw Error(ErrorCode::InvalidElement, "group dimension must be >= 1");
        if (kind == GroupKind::IntLattice && dim > 3)
            throw Error(ErrorCode::Unsupported, "Z^d supported for d <= 3");
    }

    GroupKind kind_;
    int dim_;
};

/// Element of Z^d (d <= 3) or H3(Z); coordinates beyond the arity are kept at zero.
class IntElem {
public:
    static constexpr int kMaxArity = 3;

    IntElem() = default;
    explicit IntElem(int arity) : arity_(static_cast<std::uint8_t>(arity)) { check_arity(arity); }
    IntElem(std::initializer_list<std::int64_t> coords) : arity_(static_cast<std::uint8_t>(coords.size())) {
        check_arity(static_cast<int>(coords.size()));
        std::copy(coords.begin(), coords.end(), c_.begin());
    }
    explicit IntElem(const std::vector<std::int64_t>& coords) : arity_(static_cast<std::uint8_t>(coords.size())) {
        check_arity(static_cast<int>(coords.size()));
        std::copy(coords.begin(), coords.end(), c_.begin());
    }

    int arity() const noexcept { return arity_; }
    std::int64_t operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }
    std::int64_t last() const noexcept { return c_[static_cast<std::size_t>(arity_ - 1)]; }

    friend bool operator==(const IntElem& a, const IntElem& b) noexcept {
        return a.arity_ == b.arity_ && a.c_ == b.c_;
    }
    friend std::strong_ordering operator<=>(const IntElem& a, const IntElem& b) noexcept {
        if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
        return a.c_ <=> b.c_;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntElem& e) {
        os << '(';
        for (int i = 0; i < e.arity(); ++i) os << (i ? "," : "") << e[i];
        return os << ')';
    }

private:
    static void check_arity(int arity) {
        if (arity < 1 || arity > kMaxArity)
            throw Error(ErrorCode::InvalidElement, "element arity must be in [1,3]");
    }

    std::array<std::int64_t, kMaxArity> c_{};
    std::uint8_t arity_ = 1;
};

/// Point of R^d with exact rational coordinates.
using RealPoint = std::vector<Rational>;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "coordinate overflow in group product");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "coordinate overflow in group product");
    return r;
}

inline void require_discrete(const GroupCtx& ctx, const IntElem& g) {
    if (!ctx.discrete()) throw Error(ErrorCode::InvalidElement, "integer element used in " + ctx.name());
    if (g.arity() != ctx.dim())
        throw Error(ErrorCode::InvalidElement,
                    "arity " + std::to_string(g.arity()) + " does not match " + ctx.name());
}

inline void require_real(const GroupCtx& ctx, const RealPoint& p) {
    if (ctx.discrete()) throw Error(ErrorCode::InvalidElement, "real point used in " + ctx.name());
    if (static_cast<int>(p.size()) != ctx.dim())
        throw Error(ErrorCode::InvalidElement, "point arity does not match " + ctx.name());
}

}  // namespace detail

inline IntElem identity_int(const GroupCtx& ctx) { return IntElem(ctx.dim()); }
inline RealPoint identity_real(const GroupCtx& ctx) { return RealPoint(static_cast<std::size_t>(ctx.dim()), 0); }

/// Group product g*h. In H3(Z): (a,b,c)(x,y,z) = (a+x, b+y, c+z+ay).
inline IntElem multiply(const GroupCtx& ctx, const IntElem& g, const IntElem& h) {
    detail::require_discrete(ctx, g);
    detail::require_discrete(ctx, h);
    IntElem r(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) r[i] = detail::checked_add(g[i], h[i]);
    if (ctx.kind() == GroupKind::HeisenbergInt) r[2] = detail::checked_add(r[2], detail::checked_mul(g[0], h[1]));
    return r;
}

/// In H3(Z): (a,b,c)^{-1} = (-a, -b, -c + ab).
inline IntElem inverse(const GroupCtx& ctx, const IntElem& g) {
    detail::require_discrete(ctx, g);
    IntElem r(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) r[i] = -g[i];
    if (ctx.kind() == GroupKind::HeisenbergInt) r[2] = detail::checked_add(r[2], detail::checked_mul(g[0], g[1]));
    return r;
}

inline RealPoint multiply(const GroupCtx& ctx, const RealPoint& g, const RealPoint& h) {
    detail::require_real(ctx, g);
    detail::require_real(ctx, h);
    RealPoint r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = g[i] + h[i];
    return r;
}

inline RealPoint inverse(const GroupCtx& ctx, const RealPoint& g) {
    detail::require_real(ctx, g);
    RealPoint r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = -g[i];
    return r;
}

}  // namespace delone
