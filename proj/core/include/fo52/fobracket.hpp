#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fo52/euler.hpp"
#include "fo52/exterior.hpp"
#include "fo52/multivector.hpp"
#include "fo52/poly.hpp"
#include "fo52/qmat.hpp"

namespace fo52 {

enum class BracketMethod { orthogonality, pi52_column };

// Quadratic Poisson structure on P^4 attached to a 5-dim subspace W of Λ²V.
struct FOBracket {
    WSubspace w;
    MultivectorClass cls; // grade 2, coeff degree 2, canonical rep
    BracketMethod method = BracketMethod::orthogonality;

    const PolyMultivector& rep() const { return cls.rep(); }
};

// Solves vol5(x ∧ w_i ∧ Π(x)) ≡ 0 for the five RREF generators w_i of W,
// identically in x, on the 150 coefficients of a quadratic bivector. The
// solution space must be exactly 25-dim (triv₂ plus one class line); the
// class is normalized so its first nonzero canonical coordinate is 1.
FOBracket build_bracket_orthogonality(const WSubspace& w);

// The linear map Λ⁵(Λ²V) → grade-2 classes as exact column data. Columns
// follow the lex order of 5-subsets of the 10 pair-basis bivectors; each is
// a canonical class representative. The relative column scales carry the
// linearity of the map, so columns are never rescaled individually.
struct Pi52Map {
    QMat matrix;                                // 150×252
    std::uint64_t grid_seed = 0;
    unsigned n_samples = 0;
    std::vector<std::array<Rat, 5>> sample_points;
    std::size_t rank = 0;                       // certified: 126

    MultivectorClass column(std::size_t lex_pos) const;
};

// Interpolates every column from evaluations at a deterministic rational
// sample grid (x₀ = 1). Grows the grid by 10 samples and rebuilds if the
// homogeneous kernel exceeds triv₂.
Pi52Map build_pi52(std::uint64_t grid_seed, unsigned n_samples = 30, unsigned threads = 1);

// The deterministic evaluation grid used by build_pi52.
std::vector<std::array<Rat, 5>> pi52_sample_grid(std::uint64_t grid_seed, unsigned n);

// matrix · coordinates(ξ); ξ has grade 5 over Q^10.
MultivectorClass pi52_apply(const Pi52Map& m, const ExtVec& xi);

// Null space of the matrix inside Q^252; dim 126 for a rank-126 map.
QSubspace pi52_kernel(const Pi52Map& m);

// q(x) = vol5(x ∧ Π(x) ∧ Π(x)), homogeneous of degree 5.
Poly degeneracy_quintic(const FOBracket& b);

// Pointwise rank of the descended bivector: 0, 2, or 4.
int rank_at(const FOBracket& b, const std::vector<Rat>& v);

// The 10 cubic coefficients of x ∧ Π(x), in lex order of the grade-3 basis.
// Common zero locus = the vanishing surface of the bracket (plus 0).
std::vector<Poly> zero_locus_equations(const FOBracket& b);

// Linearization of the bracket at a rank-0 point: structure constants of a
// 4-dim Lie algebra on the affine-chart coordinate differentials.
struct LieStructure {
    std::size_t pivot = 0;           // ambient coordinate fixed to 1
    std::array<unsigned, 4> labels{}; // ambient indices of the chart coords

    // c[a][b][m]: coefficient of e_m in [e_a, e_b]; antisymmetric in (a,b).
    std::array<std::array<std::array<Rat, 4>, 4>, 4> c{};

    std::vector<Rat> bracket(const std::vector<Rat>& u, const std::vector<Rat>& v) const;
    bool jacobi_holds() const;
    QSubspace derived_subalgebra() const; // span of all [e_a, e_b]
    bool derived_is_abelian() const;
    QMat ad_matrix(const std::vector<Rat>& h) const; // 4×4, column b = [h, e_b]
    // Matrix of ad(h) restricted to the derived subalgebra, in its RREF basis.
    QMat ad_on_derived(const std::vector<Rat>& h) const;
};

LieStructure linearize_at(const FOBracket& b, const std::vector<Rat>& v);

} // namespace fo52
