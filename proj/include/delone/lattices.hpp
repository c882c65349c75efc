#pragma once

// Uniform lattices in Z^d and H3(Z): membership, covolume, canonical fundamental domains,
// the reduction g = γ f (γ ∈ Γ, f ∈ F), and the Siegel-type construction of a fundamental
// domain inside a covering set U.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "delone/folner.hpp"
#include "delone/set_algebra.hpp"

namespace delone {

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

inline std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorCode::Overflow, "lattice arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

enum class LatticeKind { IntSublattice, HeisenbergGamma };

class Lattice {
public:
    using Matrix = std::vector<std::vector<std::int64_t>>;  // row-major, basis vectors are the columns

    /// The sublattice of Z^d spanned by the columns of `basis`.
    static Lattice int_sublattice(const Matrix& basis) {
        const auto d = basis.size();
        if (d < 1 || d > 3) throw Error(ErrorCode::InvalidElement, "basis must be d×d with 1 ≤ d ≤ 3");
        for (const auto& row : basis)
            if (row.size() != d) throw Error(ErrorCode::InvalidElement, "basis must be square");
        Lattice l(GroupCtx::integer_lattice(static_cast<int>(d)), LatticeKind::IntSublattice);
        l.basis_ = basis;
        l.det_ = determinant(basis);
        if (l.det_ == 0) throw Error(ErrorCode::SingularBasis, "lattice basis is singular");
        l.adj_ = adjugate(basis);
        return l;
    }

    /// Row-major entries, e.g. "2 0 0 3" for diag(2,3).
    static Lattice int_sublattice(const std::vector<std::int64_t>& entries) {
        std::size_t d = 0;
        while (d * d < entries.size()) ++d;
        if (d * d != entries.size() || d == 0) throw Error(ErrorCode::Parse, "basis needs d² entries");
        Matrix m(d, std::vector<std::int64_t>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m[i][j] = entries[i * d + j];
        return int_sublattice(m);
    }

    /// Γ_n = {(k,l,m) : k,l ∈ nZ, m ∈ n²Z} in H3(Z).
    static Lattice heisenberg_gamma(std::int64_t n) {
        if (n < 1) throw Error(ErrorCode::InvalidElement, "Γ_n needs n ≥ 1");
        Lattice l(GroupCtx::heisenberg(), LatticeKind::HeisenbergGamma);
        l.n_ = n;
        l.n2_ = detail::checked_mul(n, n);
        return l;
    }

    const GroupCtx& ctx() const noexcept { return ctx_; }
    LatticeKind kind() const noexcept { return kind_; }
    const Matrix& basis() const noexcept { return basis_; }
    std::int64_t heisenberg_n() const noexcept { return n_; }

    std::string describe() const {
        if (kind_ == LatticeKind::HeisenbergGamma) return "Gamma_" + std::to_string(n_) + " in H3";
        std::string s = "span of columns [";
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < basis_.size(); ++j) s += (j ? " " : "") + std::to_string(basis_[i][j]);
        }
        return s + "] in " + ctx_.name();
    }

    Rational covolume() const {
        if (kind_ == LatticeKind::HeisenbergGamma) return Rational(static_cast<long>(n_)) * n_ * n_ * n_;
        return Rational(static_cast<long>(det_ < 0 ? -det_ : det_));
    }

    bool contains(const IntElem& g) const {
        detail::require_discrete(ctx_, g);
        if (kind_ == LatticeKind::HeisenbergGamma)
            return detail::floor_mod(g[0], n_) == 0 && detail::floor_mod(g[1], n_) == 0 &&
                   detail::floor_mod(g[2], n2_) == 0;
        const auto y = adj_times(g);
        for (const auto v : y)
            if (v % det_ != 0) return false;
        return true;
    }

    /// g = γ f with γ ∈ Γ and f in the canonical fundamental domain.
    std::pair<IntElem, IntElem> reduce(const IntElem& g) const {
        detail::require_discrete(ctx_, g);
        if (kind_ == LatticeKind::HeisenbergGamma) {
            const auto x = detail::floor_mod(g[0], n_);
            const auto y = detail::floor_mod(g[1], n_);
            const auto k = detail::floor_div(g[0], n_);
            // (kn, ln, mn²)(x, y, z) = (kn + x, ln + y, mn² + z + kn·y)
            const auto rest = detail::checked_add(g[2], -detail::checked_mul(detail::checked_mul(k, n_), y));
            const auto z = detail::floor_mod(rest, n2_);
            IntElem f{x, y, z};
            return {multiply(ctx_, g, inverse(ctx_, f)), f};
        }
        const auto y = adj_times(g);
        const auto d = static_cast<int>(basis_.size());
        IntElem gamma(d);
        std::vector<std::int64_t> q(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) q[static_cast<std::size_t>(i)] = detail::floor_div(y[static_cast<std::size_t>(i)], det_);
        for (int i = 0; i < d; ++i) {
            __int128 s = 0;
            for (int j = 0; j < d; ++j)
                s += static_cast<__int128>(basis_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                     q[static_cast<std::size_t>(j)];
            gamma[i] = detail::narrow(s);
        }
        return {gamma, multiply(ctx_, inverse(ctx_, gamma), g)};
    }

    /// Half-open parallelepiped spanned by the basis (integer points), or [0,n)²×[0,n²) for Γ_n.
    GSet fundamental_domain() const {
        if (kind_ == LatticeKind::HeisenbergGamma) return PointSet::box({0, 0, 0}, {n_, n_, n2_});
        const auto d = basis_.size();
        std::vector<std::int64_t> lo(d, 0), hi(d, 0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (basis_[i][j] < 0) lo[i] += basis_[i][j];
                else hi[i] += basis_[i][j];
            }
        for (auto& h : hi) ++h;
        std::vector<IntElem> pts;
        PointSet::box(lo, hi).for_each([&](const IntElem& p) {
            if (reduce(p).first == identity_int(ctx_)) pts.push_back(p);
        });
        return PointSet::from_elements(static_cast<int>(d), pts);
    }

    /// Generators of Γ: the basis columns, or (n,0,0), (0,n,0), (0,0,n²).
    std::vector<IntElem> generators() const {
        if (kind_ == LatticeKind::HeisenbergGamma) return {IntElem{n_, 0, 0}, IntElem{0, n_, 0}, IntElem{0, 0, n2_}};
        const auto d = basis_.size();
        std::vector<IntElem> gens;
        for (std::size_t j = 0; j < d; ++j) {
            IntElem g(static_cast<int>(d));
            for (std::size_t i = 0; i < d; ++i) g[static_cast<int>(i)] = basis_[i][j];
            gens.push_back(g);
        }
        return gens;
    }

    /// Γ ∩ region.
    PointSet points_in(const PointSet& region) const {
        std::vector<IntElem> pts;
        region.for_each([&](const IntElem& g) {
            if (contains(g)) pts.push_back(g);
        });
        return PointSet::from_elements(ctx_.dim(), pts);
    }

    /// δ_Γ as a measure.
    PMeasure dirac_comb() const {
        const Lattice self = *this;
        return PMeasure::indicator([self](const IntElem& g) { return self.contains(g); }, describe());
    }

private:
    Lattice(GroupCtx ctx, LatticeKind kind) : ctx_(ctx), kind_(kind) {}

    static std::int64_t determinant(const Matrix& m) {
        const auto d = m.size();
        __int128 r = 0;
        if (d == 1) r = m[0][0];
        else if (d == 2) r = static_cast<__int128>(m[0][0]) * m[1][1] - static_cast<__int128>(m[0][1]) * m[1][0];
        else
            for (std::size_t j = 0; j < 3; ++j) {
                const auto a = m[1][(j + 1) % 3], b = m[1][(j + 2) % 3];
                const auto c = m[2][(j + 1) % 3], e = m[2][(j + 2) % 3];
                r += static_cast<__int128>(m[0][j]) * (static_cast<__int128>(a) * e - static_cast<__int128>(b) * c);
            }
        return detail::narrow(r);
    }

    static Matrix adjugate(const Matrix& m) {
        const auto d = m.size();
        Matrix adj(d, std::vector<std::int64_t>(d, 0));
        if (d == 1) {
            adj[0][0] = 1;
        } else if (d == 2) {
            adj = {{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}};
        } else {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    // cofactor C_ji goes to adj[i][j]
                    const auto r1 = (j + 1) % 3, r2 = (j + 2) % 3, c1 = (i + 1) % 3, c2 = (i + 2) % 3;
                    adj[i][j] = detail::narrow(static_cast<__int128>(m[r1][c1]) * m[r2][c2] -
                                               static_cast<__int128>(m[r1][c2]) * m[r2][c1]);
                }
        }
        return adj;
    }

    /// adj(B)·g, so that B⁻¹g = adj(B)·g / det(B).
    std::vector<std::int64_t> adj_times(const IntElem& g) const {
        const auto d = adj_.size();
        std::vector<std::int64_t> y(d);
        for (std::size_t i = 0; i < d; ++i) {
            __int128 s = 0;
            for (std::size_t j = 0; j < d; ++j) s += static_cast<__int128>(adj_[i][j]) * g[static_cast<int>(j)];
            y[i] = detail::narrow(s);
        }
        return y;
    }

    GroupCtx ctx_;
    LatticeKind kind_;
    Matrix basis_;
    Matrix adj_;
    std::int64_t det_ = 1;
    std::int64_t n_ = 1;
    std::int64_t n2_ = 1;
};

/// card(Γ ∩ A_n) / m(A_n).
inline Rational lattice_density(const Lattice& lat, const FolnerSeq& seq, std::int64_t n) {
    const GSet a = seq(n);
    return Rational(static_cast<long>(lat.points_in(a.points()).size())) / measure(lat.ctx(), a);
}

/// card(Γ ∩ F⁻¹γ) for a given γ ∈ Γ; equals 1 for a left-fundamental domain F.
inline std::int64_t fd_count(const Lattice& lat, const GSet& f, const IntElem& gamma) {
    const auto& ctx = lat.ctx();
    std::int64_t c = 0;
    f.points().for_each([&](const IntElem& x) { c += lat.contains(multiply(ctx, inverse(ctx, x), gamma)) ? 1 : 0; });
    return c;
}

/// For every g in the patch, the number of f ∈ F with g ∈ Γf. The translates ΓF tile the patch
/// iff every count is 1.
struct TilingReport {
    std::int64_t checked = 0;
    std::int64_t uncovered = 0;
    std::int64_t overlapping = 0;
    bool ok() const { return checked > 0 && uncovered == 0 && overlapping == 0; }
};

inline TilingReport tiling_check(const Lattice& lat, const GSet& f, const PointSet& patch) {
    const auto& ctx = lat.ctx();
    const auto fel = f.points().elements();
    std::vector<IntElem> finv;
    finv.reserve(fel.size());
    for (const auto& x : fel) finv.push_back(inverse(ctx, x));
    TilingReport r;
    patch.for_each([&](const IntElem& g) {
        std::int64_t hits = 0;
        for (const auto& xi : finv) hits += lat.contains(multiply(ctx, g, xi)) ? 1 : 0;
        ++r.checked;
        if (hits == 0) ++r.uncovered;
        if (hits > 1) ++r.overlapping;
    });
    return r;
}

/// Cube [-r, r]^d (or [-r,r]²×[-r², r²] in H3) used to verify covering claims.
inline PointSet default_patch(const GroupCtx& ctx, std::int64_t r) {
    if (ctx.kind() == GroupKind::HeisenbergInt) return PointSet::box({-r, -r, -r * r}, {r + 1, r + 1, r * r + 1});
    const auto d = static_cast<std::size_t>(ctx.dim());
    return PointSet::box(std::vector<std::int64_t>(d, -r), std::vector<std::int64_t>(d, r + 1));
}

struct SiegelResult {
    GSet domain;                    // F_U
    std::vector<IntElem> gammas;    // Γ_U in construction order
    std::vector<GSet> pieces;       // F_k' (possibly empty)
    TilingReport tiling;
};

/// Fundamental domain F_U ⊆ U built from the canonical F:
///   Γ_U = {γ : U ∩ γF ≠ ∅} (sorted), F_k = F ∩ γ_k⁻¹U,
///   F_k' = γ_k F_k \ ⋃_{j<k} ΓF_j,  F_U = ⋃ F_k'.
/// ΓU = G holds iff the F_k cover F; this is checked exactly and additionally on the patch.
inline SiegelResult siegel_fundamental_domain(const Lattice& lat, const GSet& u, const PointSet& patch) {
    const auto& ctx = lat.ctx();
    detail::require_set(ctx, u);
    if (u.empty()) throw Error(ErrorCode::NotCovering, "U is empty");
    const GSet f = lat.fundamental_domain();

    std::map<IntElem, std::vector<IntElem>> by_gamma;  // γ ↦ F_k (as elements of F)
    u.points().for_each([&](const IntElem& x) {
        auto [gamma, rep] = lat.reduce(x);
        by_gamma[gamma].push_back(rep);
    });

    std::set<IntElem> reached;
    for (const auto& [gamma, reps] : by_gamma) reached.insert(reps.begin(), reps.end());
    if (static_cast<std::int64_t>(reached.size()) != f.points().size())
        throw Error(ErrorCode::NotCovering, "ΓU misses " + std::to_string(f.points().size() - static_cast<std::int64_t>(reached.size())) +
                                                " of the classes G/Γ");

    SiegelResult r;
    std::set<IntElem> taken;  // ⋃_{j<k} F_j, as representatives in F
    std::vector<IntElem> all;
    for (const auto& [gamma, reps] : by_gamma) {
        r.gammas.push_back(gamma);
        std::vector<IntElem> piece;
        for (const auto& rep : reps)
            if (!taken.count(rep)) piece.push_back(multiply(ctx, gamma, rep));
        taken.insert(reps.begin(), reps.end());
        all.insert(all.end(), piece.begin(), piece.end());
        r.pieces.push_back(PointSet::from_elements(ctx.dim(), piece));
    }
    r.domain = PointSet::from_elements(ctx.dim(), all);
    r.tiling = tiling_check(lat, r.domain, patch);
    if (r.tiling.uncovered > 0) throw Error(ErrorCode::NotCovering, "ΓF_U does not cover the verification patch");
    return r;
}

}  // namespace delone
