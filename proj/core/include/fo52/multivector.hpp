#pragma once

#include <map>

#include "fo52/exterior.hpp"
#include "fo52/poly.hpp"

namespace fo52 {

// Homogeneous polynomial multivector field on Q^5: grade-g combination of
// ∂_{i1}∧…∧∂_{ig} with degree-d polynomial coefficients.
class PolyMultivector {
public:
    PolyMultivector() = default;
    PolyMultivector(unsigned grade, unsigned coeff_degree) : g_(grade), d_(coeff_degree) {}

    unsigned grade() const { return g_; }
    unsigned coeff_degree() const { return d_; }
    const std::map<ExtMask, Poly>& components() const { return c_; }

    Poly component(ExtMask m) const;
    void set_component(ExtMask m, const Poly& p);
    void add_component(ExtMask m, const Poly& p);
    bool is_zero() const { return c_.empty(); }

    // Signed access for a bivector: coefficient of ∂_a∧∂_b with p^{ba}=-p^{ab}.
    Poly signed_pair(unsigned a, unsigned b) const;

    PolyMultivector& operator+=(const PolyMultivector& o);
    PolyMultivector operator+(const PolyMultivector& o) const;
    PolyMultivector operator*(const Rat& s) const;

    // Coefficient vector in (ExtIndex lex) × (monomial lex) order; length
    // C(5,g)·C(d+4,4).
    std::vector<Rat> flatten() const;
    static PolyMultivector from_flat(unsigned grade, unsigned coeff_degree,
                                     const std::vector<Rat>& v);

    // Pointwise evaluation: coordinates of the grade-g multivector at x, in
    // lex index order.
    std::vector<Rat> eval(const std::vector<Rat>& x) const;

    static PolyMultivector euler_field(); // E = Σ x_i ∂_i
    // Linear vector field v(x) = A·x as a grade-1, degree-1 multivector.
    static PolyMultivector linear_field(const QMat& a);

    bool operator==(const PolyMultivector& o) const {
        return g_ == o.g_ && d_ == o.d_ && c_ == o.c_;
    }

private:
    unsigned g_ = 0, d_ = 0;
    std::map<ExtMask, Poly> c_;
};

std::size_t flat_len(unsigned grade, unsigned coeff_degree);

PolyMultivector mv_wedge(const PolyMultivector& a, const PolyMultivector& b);

// Schouten–Nijenhuis bracket of two bivector fields:
//   [p,q]^{ijk} = Σ_l ( p^{li}∂_l q^{jk} + p^{lj}∂_l q^{ki} + p^{lk}∂_l q^{ij}
//                     + q^{li}∂_l p^{jk} + q^{lj}∂_l p^{ki} + q^{lk}∂_l p^{ij} ).
// Symmetric in (p,q); coeff_degree = deg p + deg q - 1.
PolyMultivector schouten_bracket(const PolyMultivector& p, const PolyMultivector& q);

// Lie derivative of a grade-g multivector along a vector field (the
// vector×multivector Schouten bracket):
//   (L_X M)^I = X^l ∂_l M^I - Σ_a M^{I|i_a→l} ∂_l X^{i_a}.
PolyMultivector lie_derivative(const PolyMultivector& x_field, const PolyMultivector& m);

// {f,g} = Σ_{i<j} p^{ij} (∂_i f ∂_j g − ∂_j f ∂_i g).
Poly poisson_of_functions(const PolyMultivector& p, const Poly& f, const Poly& g);

// Contraction of a trivector field with df∧dg∧dh, in the convention that
// makes ⟨[p,p], df∧dg∧dh⟩ = 2·Jacobiator exactly (see the convention-lock
// test): the interior-product order ι_df ι_dg ι_dh, i.e. the 3×3 determinant
// with columns (∂h, ∂g, ∂f) over rows (i,j,k).
Poly contract3(const PolyMultivector& t, const Poly& f, const Poly& g, const Poly& h);

} // namespace fo52
