#pragma once

// Boundary operators of a set A relative to a compact K:
//   Følner      δ^K A = KA △ A
//   strong      ∂_K A = K⁻¹A ∩ K⁻¹Aᶜ = {g ∈ K⁻¹A : Kg ⊄ A}
//   van Hove    ∂^K A = (KA ∩ cl Aᶜ) ∪ (K⁻¹ cl Aᶜ ∩ A)
// For box unions cl Aᶜ is replaced by Aᶜ; the results agree with the closed-set versions up to
// a Lebesgue-null set, which is all a density computation can see.

#include "delone/set_algebra.hpp"

namespace delone {

inline GSet folner_boundary(const GroupCtx& ctx, const GSet& k, const GSet& a) {
    return symmetric_difference(minkowski(ctx, k, a), a);
}

inline GSet strong_folner_boundary(const GroupCtx& ctx, const GSet& k, const GSet& a) {
    const GSet reach = minkowski(ctx, inverse_set(ctx, k), a);
    return subtract(reach, erode(ctx, a, k));
}

inline GSet van_hove_boundary(const GroupCtx& ctx, const GSet& k, const GSet& a) {
    const GSet outer = subtract(minkowski(ctx, k, a), a);
    const GSet inner = subtract(a, erode(ctx, a, k));
    return unite(outer, inner);
}

enum class BoundaryKind { Folner, Strong, VanHove };

inline GSet boundary(const GroupCtx& ctx, BoundaryKind kind, const GSet& k, const GSet& a) {
    switch (kind) {
        case BoundaryKind::Folner: return folner_boundary(ctx, k, a);
        case BoundaryKind::Strong: return strong_folner_boundary(ctx, k, a);
        case BoundaryKind::VanHove: return van_hove_boundary(ctx, k, a);
    }
    return folner_boundary(ctx, k, a);
}

inline BoundaryKind parse_boundary_kind(const std::string& s) {
    if (s == "folner") return BoundaryKind::Folner;
    if (s == "strong") return BoundaryKind::Strong;
    if (s == "vanhove" || s == "van-hove") return BoundaryKind::VanHove;
    throw Error(ErrorCode::Parse, "unknown boundary kind '" + s + "' (folner|strong|vanhove)");
}

inline const char* to_string(BoundaryKind k) {
    switch (k) {
        case BoundaryKind::Folner: return "folner";
        case BoundaryKind::Strong: return "strong";
        case BoundaryKind::VanHove: return "vanhove";
    }
    return "?";
}

/// The five comparison relations for a symmetric unit neighbourhood K:
///   ∂_K A ⊆ ∂^K A ⊆ ∂_{K²} A,   δ^K A ⊆ ∂_K A ⊆ K δ^K A,   ∂_K(KA) ⊆ δ^{K²} A.
/// For box unions the relations are checked as measure inequalities.
struct BoundaryComparison {
    bool strong_in_vanhove = false;
    bool vanhove_in_strong_k2 = false;
    bool folner_in_strong = false;
    bool strong_in_k_folner = false;
    bool strong_of_ka_in_folner_k2 = false;

    bool all() const {
        return strong_in_vanhove && vanhove_in_strong_k2 && folner_in_strong && strong_in_k_folner &&
               strong_of_ka_in_folner_k2;
    }
};

inline BoundaryComparison compare_boundaries(const GroupCtx& ctx, const GSet& k, const GSet& a) {
    const GSet k2 = minkowski(ctx, k, k);
    const GSet strong = strong_folner_boundary(ctx, k, a);
    const GSet vh = van_hove_boundary(ctx, k, a);
    const GSet strong_k2 = strong_folner_boundary(ctx, k2, a);
    const GSet fol = folner_boundary(ctx, k, a);
    const GSet ka = minkowski(ctx, k, a);
    const GSet strong_ka = strong_folner_boundary(ctx, k, ka);
    const GSet fol_k2 = folner_boundary(ctx, k2, a);
    const GSet k_fol = fol.empty() ? fol : minkowski(ctx, k, fol);

    auto within = [&](const GSet& x, const GSet& y) {
        if (x.discrete()) return is_subset(x, y);
        return measure(ctx, x) <= measure(ctx, y);
    };
    BoundaryComparison r;
    r.strong_in_vanhove = within(strong, vh);
    r.vanhove_in_strong_k2 = within(vh, strong_k2);
    r.folner_in_strong = within(fol, strong);
    r.strong_in_k_folner = within(strong, k_fol);
    r.strong_of_ka_in_folner_k2 = within(strong_ka, fol_k2);
    return r;
}

}  // namespace delone
