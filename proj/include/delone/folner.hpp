#pragma once

// Følner sequences n ↦ A_n (n ≥ 1), their boundary ratios, and the thickening A_n ↦ L A_n.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "delone/boundaries.hpp"
#include "delone/witness.hpp"

namespace delone {

enum class FolnerKind { CubesZd, CubesRd, HeisenbergBoxes, CombR1, Thickened, Custom };

inline const char* to_string(FolnerKind k) {
    switch (k) {
        case FolnerKind::CubesZd: return "cubes_Zd";
        case FolnerKind::CubesRd: return "cubes_Rd";
        case FolnerKind::HeisenbergBoxes: return "heisenberg_boxes";
        case FolnerKind::CombR1: return "comb_R1";
        case FolnerKind::Thickened: return "thickened";
        case FolnerKind::Custom: return "custom";
    }
    return "?";
}

class FolnerSeq {
public:
    using Generator = std::function<GSet(std::int64_t)>;

    /// {0, ..., n-1}^d.
    static FolnerSeq cubes_zd(int d) {
        const auto ctx = GroupCtx::integer_lattice(d);
        return FolnerSeq(ctx, FolnerKind::CubesZd, "cubes_Z" + std::to_string(d), [d](std::int64_t n) {
            return GSet(PointSet::box(std::vector<std::int64_t>(static_cast<std::size_t>(d), 0),
                                      std::vector<std::int64_t>(static_cast<std::size_t>(d), n)));
        });
    }

    /// [0, n)^d.
    static FolnerSeq cubes_rd(int d) {
        const auto ctx = GroupCtx::real_boxes(d);
        return FolnerSeq(ctx, FolnerKind::CubesRd, "cubes_R" + std::to_string(d), [d](std::int64_t n) {
            const auto sz = static_cast<std::size_t>(d);
            return GSet(BoxSet::box(Box{RealPoint(sz, 0), RealPoint(sz, Rational(static_cast<long>(n)))}));
        });
    }

    /// {(a,b,c) : 0 ≤ a,b < n, 0 ≤ c < n²} in H3(Z); measure n⁴.
    static FolnerSeq heisenberg_boxes() {
        return FolnerSeq(GroupCtx::heisenberg(), FolnerKind::HeisenbergBoxes, "heisenberg_boxes",
                         [](std::int64_t n) {
                             return GSet(PointSet::box({0, 0, 0}, {n, n, detail::checked_mul(n, n)}));
                         });
    }

    /// A_n = ⋃_{k<n} [k, k+1-1/n) ⊂ R: Følner, but its strong boundary ratio for K = [-ε, ε]
    /// tends to 2ε because every one of the n gaps contributes 2ε.
    static FolnerSeq comb_r1(const Rational& eps) {
        if (eps <= 0) throw Error(ErrorCode::InvalidElement, "comb width parameter must be positive");
        FolnerSeq s(GroupCtx::real_boxes(1), FolnerKind::CombR1, "comb_R1(" + to_string(eps) + ")", [](std::int64_t n) {
            std::vector<Box> teeth;
            teeth.reserve(static_cast<std::size_t>(n));
            const Rational gap(1, static_cast<unsigned long>(n));
            for (std::int64_t k = 0; k < n; ++k) {
                const Rational lo(static_cast<long>(k));
                teeth.push_back(Box{{lo}, {lo + 1 - gap}});
            }
            return GSet(BoxSet::from_boxes(1, std::move(teeth)));
        });
        s.eps_ = eps;
        return s;
    }

    static FolnerSeq custom(const GroupCtx& ctx, std::string name, Generator gen) {
        return FolnerSeq(ctx, FolnerKind::Custom, std::move(name), std::move(gen));
    }

    const GroupCtx& ctx() const noexcept { return ctx_; }
    FolnerKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    const std::optional<Rational>& eps() const noexcept { return eps_; }

    /// The comb's natural neighbourhood [-ε, ε] (written half-open as [-ε, ε)).
    GSet eps_neighborhood() const {
        if (!eps_) throw Error(ErrorCode::InvalidElement, name_ + " has no width parameter");
        return BoxSet::interval(-*eps_, *eps_);
    }

    GSet operator()(std::int64_t n) const {
        if (n < 1) throw Error(ErrorCode::InvalidElement, "Følner index must be >= 1");
        GSet a = gen_(n);
        if (a.empty()) throw Error(ErrorCode::EmptySet, name_ + " produced an empty set at n=" + std::to_string(n));
        return a;
    }

private:
    friend FolnerSeq thicken(const GroupCtx&, const FolnerSeq&, const GSet&);

    FolnerSeq(GroupCtx ctx, FolnerKind kind, std::string name, Generator gen)
        : ctx_(ctx), kind_(kind), name_(std::move(name)), gen_(std::move(gen)) {}

    GroupCtx ctx_;
    FolnerKind kind_;
    std::string name_;
    Generator gen_;
    std::optional<Rational> eps_;
};

/// n ↦ L A_n for a symmetric unit neighbourhood L.
inline FolnerSeq thicken(const GroupCtx& ctx, const FolnerSeq& seq, const GSet& l) {
    detail::require_set(ctx, l);
    if (!is_symmetric_unit_neighborhood(ctx, l))
        throw Error(ErrorCode::NotSymmetric, "thickening set must satisfy e ∈ L = L⁻¹");
    auto base = seq.gen_;
    FolnerSeq out(ctx, FolnerKind::Thickened, "thickened(" + seq.name() + ")",
                  [ctx, base, l](std::int64_t n) { return minkowski(ctx, l, base(n)); });
    out.eps_ = seq.eps_;
    return out;
}

/// m(boundary of A_n) / m(A_n).
inline Rational ratio(const GroupCtx& ctx, const FolnerSeq& seq, std::int64_t n, const GSet& k, BoundaryKind kind) {
    const GSet a = seq(n);
    return measure(ctx, boundary(ctx, kind, k, a)) / measure(ctx, a);
}

/// m(⋂_{k∈K} k A_n) / m(A_n); tends to 1 along strong Følner sequences (K symmetric).
/// The intersection ⋂ kA equals the erosion {g : K⁻¹g ⊆ A}.
inline Rational inner_ratio(const GroupCtx& ctx, const FolnerSeq& seq, std::int64_t n, const GSet& k) {
    const GSet a = seq(n);
    return measure(ctx, erode(ctx, a, inverse_set(ctx, k))) / measure(ctx, a);
}

/// Certified upper bound for sup_s ν(L ∂_K A_n s) / m(A_n):
///   C_u / m(B_u) · m(B_u L ∂_K A_n) / m(A_n),
/// using an upper translation-boundedness witness ν(B_u² x) ≤ C_u.
inline Rational lattice_aligned_check(const GroupCtx& ctx, const FolnerSeq& seq, const GSet& k, const GSet& l,
                                      std::int64_t n, const std::optional<TBWitness>& witness) {
    if (!witness) throw Error(ErrorCode::MissingWitness, "an upper translation-boundedness witness is required");
    const GSet a = seq(n);
    const GSet edge = strong_folner_boundary(ctx, k, a);
    if (edge.empty()) return 0;
    const GSet grown = minkowski(ctx, witness->b_upper, minkowski(ctx, l, edge));
    return witness->c_upper / measure(ctx, witness->b_upper) * measure(ctx, grown) / measure(ctx, a);
}

}  // namespace delone
