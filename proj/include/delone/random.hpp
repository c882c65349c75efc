#pragma once

// Seeded generators for property checks. Case i of a run with seed s draws from its own stream
// seeded by (s, i), so results do not depend on how cases are scheduled across threads.

#include <cstdint>
#include <random>
#include <vector>

#include "delone/lattices.hpp"
#include "delone/set_algebra.hpp"

namespace delone {

using Rng = std::mt19937_64;

inline Rng case_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

/// Uniform integer in [lo, hi].
inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, int num = 1, int den = 2) { return uniform(rng, 0, den - 1) < num; }

/// p/q with q ∈ [1, max_den] and p/q ∈ [lo, hi].
inline Rational random_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    const auto q = uniform(rng, 1, max_den);
    const auto p = uniform(rng, lo * q, hi * q);
    return make_rational(p, q);
}

/// Element with coordinates in [-r, r].
inline IntElem random_elem(const GroupCtx& ctx, Rng& rng, std::int64_t r) {
    IntElem g(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) g[i] = uniform(rng, -r, r);
    return g;
}

/// `count` random draws from the cube [lo, lo + side)^d (duplicates merge).
inline PointSet random_point_set(const GroupCtx& ctx, Rng& rng, std::int64_t lo, std::int64_t side, int count) {
    std::vector<IntElem> elems;
    for (int j = 0; j < count; ++j) {
        IntElem g(ctx.dim());
        for (int i = 0; i < ctx.dim(); ++i) g[i] = uniform(rng, lo, lo + side - 1);
        elems.push_back(g);
    }
    return PointSet::from_elements(ctx.dim(), elems);
}

/// A random finite set mixing solid blocks and scattered points, so that boundaries are
/// neither trivial nor the whole set.
inline PointSet random_shape(const GroupCtx& ctx, Rng& rng, std::int64_t side) {
    const auto d = static_cast<std::size_t>(ctx.dim());
    PointSet s = random_point_set(ctx, rng, 0, side, static_cast<int>(uniform(rng, 1, 2 * side)));
    const auto blocks = uniform(rng, 0, 2);
    for (std::int64_t b = 0; b < blocks; ++b) {
        std::vector<std::int64_t> lo(d), hi(d);
        for (std::size_t i = 0; i < d; ++i) {
            lo[i] = uniform(rng, 0, side - 1);
            hi[i] = lo[i] + uniform(rng, 1, std::max<std::int64_t>(1, side / 2));
        }
        s = unite(s, PointSet::box(lo, hi));
    }
    return s;
}

/// {e} ∪ S for `extra` random elements S with coordinates in [-r, r].
inline PointSet random_unit_neighborhood(const GroupCtx& ctx, Rng& rng, std::int64_t r, int extra) {
    std::vector<IntElem> elems{identity_int(ctx)};
    for (int j = 0; j < extra; ++j) elems.push_back(random_elem(ctx, rng, r));
    return PointSet::from_elements(ctx.dim(), elems);
}

/// {e} ∪ S ∪ S⁻¹.
inline PointSet random_symmetric_neighborhood(const GroupCtx& ctx, Rng& rng, std::int64_t r, int extra) {
    std::vector<IntElem> elems{identity_int(ctx)};
    for (int j = 0; j < extra; ++j) {
        const IntElem g = random_elem(ctx, rng, r);
        elems.push_back(g);
        elems.push_back(inverse(ctx, g));
    }
    return PointSet::from_elements(ctx.dim(), elems);
}

/// Union of up to `count` random boxes in [0, side)^d with endpoints of denominator ≤ max_den.
inline BoxSet random_box_union(int dim, Rng& rng, std::int64_t side, int count, std::int64_t max_den) {
    std::vector<Box> boxes;
    for (int j = 0; j < count; ++j) {
        Box b;
        for (int i = 0; i < dim; ++i) {
            Rational x = random_rational(rng, 0, side - 1, max_den);
            Rational w = random_rational(rng, 0, std::max<std::int64_t>(1, side / 2), max_den);
            if (w == 0) w = 1;
            b.lo.push_back(x);
            b.hi.push_back(x + w);
        }
        boxes.push_back(std::move(b));
    }
    return BoxSet::from_boxes(dim, std::move(boxes));
}

/// [-a, a)^d with a random rational a ∈ (0, r].
inline BoxSet random_symmetric_box(int dim, Rng& rng, std::int64_t r, std::int64_t max_den) {
    Rational a = random_rational(rng, 0, r, max_den);
    if (a == 0) a = Rational(1, static_cast<unsigned long>(max_den));
    Box b;
    for (int i = 0; i < dim; ++i) {
        b.lo.push_back(-a);
        b.hi.push_back(a);
    }
    return BoxSet::box(b);
}

/// Finite Dirac comb with `count` atoms in [lo, lo + side)^d and weights p/q ∈ (0, 3].
inline PMeasure random_dirac(const GroupCtx& ctx, Rng& rng, std::int64_t lo, std::int64_t side, int count) {
    std::vector<std::pair<IntElem, Rational>> atoms;
    for (const auto& g : random_point_set(ctx, rng, lo, side, count).elements()) {
        Rational w = random_rational(rng, 0, 3, 4);
        if (w == 0) w = 1;
        atoms.emplace_back(g, w);
    }
    return PMeasure::dirac(atoms, "random dirac comb");
}

/// Upper-triangular basis with diagonal in [1, max_diag] and off-diagonal in [-max_diag, max_diag].
inline Lattice random_int_lattice(int d, Rng& rng, std::int64_t max_diag) {
    Lattice::Matrix m(static_cast<std::size_t>(d), std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
    for (int i = 0; i < d; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        m[iu][iu] = uniform(rng, 1, max_diag);
        for (int j = i + 1; j < d; ++j) m[iu][static_cast<std::size_t>(j)] = uniform(rng, -max_diag, max_diag);
    }
    return Lattice::int_sublattice(m);
}

/// A random element of Γ: a word of random length in the generators and their inverses.
inline IntElem random_lattice_point(const Lattice& lat, Rng& rng, int steps) {
    const auto& ctx = lat.ctx();
    const auto gens = lat.generators();
    IntElem g = identity_int(ctx);
    for (int s = 0; s < steps; ++s) {
        const auto& x = gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(gens.size()) - 1))];
        g = multiply(ctx, g, coin(rng) ? x : inverse(ctx, x));
    }
    return g;
}

}  // namespace delone
