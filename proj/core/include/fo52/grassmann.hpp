#pragma once

#include <cstdint>
#include <vector>

#include "fo52/exterior.hpp"
#include "fo52/qmat.hpp"

namespace fo52 {

// A rational point of G(2,5): a 2-plane with its Plücker image, both
// canonical (RREF plane basis; pluck = wedge of the RREF rows).
struct PlanePoint {
    QSubspace plane; // dim 2 in Q^5
    ExtVec pluck;    // grade 2 over Q^5, decomposable

    static PlanePoint from_rows(const std::vector<Rat>& u, const std::vector<Rat>& v);
};

// a·λ1 + b·λ2 on the RREF basis of the plane.
std::vector<Rat> point_on_plane(const PlanePoint& lam, const Rat& a, const Rat& b);

// Seeded 5-dim W ⊂ Λ²V built through five plane points in general position.
// The planes are rational points of the quintic curve cut out by W.
struct Fixture {
    std::uint64_t seed = 0;
    std::vector<PlanePoint> planes; // 5
    WSubspace w;
};

// Deterministic from seed: plane entries in {-3..3}, redrawn until dim W = 5
// and all pairwise generator wedges are nonzero.
Fixture make_fixture(std::uint64_t seed);

struct SharedPair {
    Fixture base;     // W with its points
    WSubspace wprime; // W′ with dim(W ∩ W′) = k exactly
    unsigned k = 0;
};

// W′ = (k-dim subspace of W) + (5−k fresh decomposable generators).
SharedPair make_pair_sharing(std::uint64_t seed, unsigned k);

// Λ∧V as a subspace of Λ²V; dim 7 for a 2-plane Λ.
QSubspace plane_wedge_v(const PlanePoint& lam);

// The distribution subspace W ∩ (Λ∧V); dim 2 generically.
QSubspace distribution_D(const WSubspace& w, const PlanePoint& lam);

// Membership in the jump locus: dim W ∩ (Λ∧V) ≥ 3.
bool in_sigma(const WSubspace& w, const PlanePoint& lam);

// Affine tangent line of the curve G(2,V) ∩ PW at a smooth rational point:
// ker(Jacobian of the Plücker quadrics at pluck) ∩ W, required dim 2.
QSubspace tangent_line_at(const WSubspace& w, const PlanePoint& lam);

// (Λ⁴W)∧(Λ²V) inside Λ⁵(Λ²V) ≅ Q^252; dim 26 for fixtures.
QSubspace t_w_subspace(const WSubspace& w);

} // namespace fo52
