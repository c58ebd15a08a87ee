#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "fo52/qmat.hpp"

namespace fo52 {

// A basis element of Λ^k(Q^n) is a k-subset of {0..n-1}, stored as a bitmask.
using ExtMask = std::uint16_t;

std::vector<unsigned> mask_indices(ExtMask m);
ExtMask mask_of(std::initializer_list<unsigned> idx);
ExtMask mask_of(const std::vector<unsigned>& idx);

// Sign of merging two disjoint index sets (transposition count of the
// interleave); 0 when the sets overlap.
int merge_sign(ExtMask a, ExtMask b);

// Lex-ordered k-subsets of {0..n-1} with O(1) position lookup.
class ExtBasis {
public:
    ExtBasis(unsigned n, unsigned k);

    unsigned n() const { return n_; }
    unsigned k() const { return k_; }
    std::size_t size() const { return masks_.size(); }
    ExtMask mask_at(std::size_t pos) const { return masks_[pos]; }
    std::size_t pos_of(ExtMask m) const;
    const std::vector<ExtMask>& masks() const { return masks_; }

    // Cached immutable table; safe to call concurrently.
    static const ExtBasis& get(unsigned n, unsigned k);

private:
    unsigned n_, k_;
    std::vector<ExtMask> masks_;
    std::vector<int> pos_;
};

// Sparse element of Λ^grade(Q^ambient).
class ExtVec {
public:
    ExtVec() = default;
    ExtVec(unsigned ambient_n, unsigned grade) : n_(ambient_n), k_(grade) {}

    static ExtVec basis_element(unsigned ambient_n, ExtMask m);
    // Grade-1 vector from coordinates.
    static ExtVec from_vector(const std::vector<Rat>& v);
    static ExtVec from_dense(unsigned ambient_n, unsigned grade, const std::vector<Rat>& coords);

    unsigned ambient_n() const { return n_; }
    unsigned grade() const { return k_; }
    const std::map<ExtMask, Rat>& coeffs() const { return c_; }

    Rat get(ExtMask m) const;
    void set(ExtMask m, const Rat& v);
    void add(ExtMask m, const Rat& v);
    bool is_zero() const { return c_.empty(); }

    ExtVec& operator+=(const ExtVec& o);
    ExtVec& operator*=(const Rat& s);

    // Coordinates in the lex basis order.
    std::vector<Rat> dense() const;

    bool operator==(const ExtVec& o) const { return n_ == o.n_ && k_ == o.k_ && c_ == o.c_; }

private:
    unsigned n_ = 0, k_ = 0;
    std::map<ExtMask, Rat> c_;
};

ExtVec wedge(const ExtVec& a, const ExtVec& b);

// Coefficient of e0∧e1∧e2∧e3∧e4; normalization vol(e0∧…∧e4) = 1.
Rat vol5(const ExtVec& a);

// Wedge of two independent vectors in Q^5; throws DependentVectors.
ExtVec plucker_of_plane(const std::vector<Rat>& u, const std::vector<Rat>& v);

// True iff ω∧ω = 0, i.e. ω lies on the affine Plücker cone.
bool is_decomposable(const ExtVec& omega);

// Matrix of Λ^k(f) in lex bases; entries are k×k minors of f.
QMat induced_wedge_map(const QMat& f, unsigned k);

// Matrix of Λ²(p_x) : Λ²Q⁵ → Λ²(Q⁵/x), 6×10. p_x drops the first nonzero
// coordinate of x (the pivot); p_x(e_pivot) = -(1/x_pivot)·(sum of the other
// coordinates of x on the quotient basis). Kernel = x∧V, dim 4.
QMat quotient_map_at(const std::vector<Rat>& x);
std::size_t pivot_index(const std::vector<Rat>& x); // first nonzero; throws ZeroVector

// 5-dim subspace of Λ²Q⁵ ≅ Q^10 with its Plücker vector in Λ⁵(Q^10).
struct WSubspace {
    QSubspace space;  // ambient 10, dim 5, RREF
    ExtVec plucker;   // grade 5 over Q^10, wedge of the RREF basis rows

    // Canonicalizes the span; requires dim = 5.
    static WSubspace from_span(const QMat& rows);
};

// Row i of the matrix as a bivector over Q^5 (coordinates on the pair basis).
ExtVec bivector_from_coords(const std::vector<Rat>& coords10);

} // namespace fo52
