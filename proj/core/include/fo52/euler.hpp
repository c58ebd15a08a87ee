#pragma once

#include "fo52/multivector.hpp"
#include "fo52/qmat.hpp"

namespace fo52 {

// RREF basis of the Euler-trivial subspace triv_g = { x∧A(x) } inside the
// coefficient space of grade-g, degree-g fields. Built once per grade and
// cached immutably. Expected (ambient, trivial, class) dims:
//   g=2: (150, 24, 126)   g=3: (350, 126, 224)   g=4: (350, 224, 126)
class EulerReducer {
public:
    static const EulerReducer& for_grade(unsigned g); // g in {2,3,4}

    unsigned grade() const { return g_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t trivial_dim() const { return triv_.dim(); }
    std::size_t class_dim() const { return ambient_ - triv_.dim(); }
    const QSubspace& triv_basis() const { return triv_; }

    // Annihilates the pivot coordinates of triv_g: the canonical residue.
    std::vector<Rat> reduce_flat(std::vector<Rat> v) const { return triv_.reduce(std::move(v)); }

private:
    explicit EulerReducer(unsigned g);
    unsigned g_;
    std::size_t ambient_;
    QSubspace triv_;
};

// Canonical representative of a multivector class modulo triv_g. Class
// equality is representative equality.
class MultivectorClass {
public:
    MultivectorClass() = default;
    explicit MultivectorClass(PolyMultivector rep) : rep_(std::move(rep)) {}

    unsigned grade() const { return rep_.grade(); }
    const PolyMultivector& rep() const { return rep_; }
    std::vector<Rat> flat() const { return rep_.flatten(); }
    bool is_zero() const { return rep_.is_zero(); }

    bool operator==(const MultivectorClass& o) const { return rep_ == o.rep_; }

private:
    PolyMultivector rep_;
};

// Canonical class of m; requires m.grade = r.grade and coeff_degree = grade.
MultivectorClass euler_reduce(const PolyMultivector& m, const EulerReducer& r);

bool class_is_zero(const MultivectorClass& c);
std::size_t class_span_dim(const std::vector<MultivectorClass>& cs);

} // namespace fo52
