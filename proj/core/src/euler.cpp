#include "fo52/euler.hpp"

#include <mutex>

namespace fo52 {

EulerReducer::EulerReducer(unsigned g) : g_(g) {
    ambient_ = flat_len(g, g);
    // Rows: flatten(x ∧ B) over the monomial basis B of grade-(g-1),
    // degree-(g-1) fields.
    const ExtBasis& lower = ExtBasis::get(5, g - 1);
    const MonoTable& monos = MonoTable::get(g - 1);
    QMat rows(lower.size() * monos.list.size(), ambient_);
    const PolyMultivector euler = PolyMultivector::euler_field();
    std::size_t r = 0;
    for (ExtMask m : lower.masks()) {
        for (const Exp& e : monos.list) {
            PolyMultivector b(g - 1, g - 1);
            b.set_component(m, Poly::monomial(e, Rat(1)));
            rows.set_row(r++, mv_wedge(euler, b).flatten());
        }
    }
    triv_ = QSubspace::from_rows(rows);
}

const EulerReducer& EulerReducer::for_grade(unsigned g) {
    if (g < 2 || g > 4) throw std::invalid_argument("EulerReducer: grade must be 2, 3, or 4");
    static std::once_flag flags[3];
    static const EulerReducer* slots[3] = {nullptr, nullptr, nullptr};
    std::call_once(flags[g - 2], [g]() { slots[g - 2] = new EulerReducer(g); });
    return *slots[g - 2];
}

MultivectorClass euler_reduce(const PolyMultivector& m, const EulerReducer& r) {
    if (m.grade() != r.grade() || m.coeff_degree() != m.grade())
        throw GradeMismatch("euler_reduce: need grade = reducer grade and coeff_degree = grade");
    const std::vector<Rat> residue = r.reduce_flat(m.flatten());
    return MultivectorClass(PolyMultivector::from_flat(m.grade(), m.grade(), residue));
}

bool class_is_zero(const MultivectorClass& c) { return c.is_zero(); }

std::size_t class_span_dim(const std::vector<MultivectorClass>& cs) {
    if (cs.empty()) return 0;
    const std::size_t n = cs[0].flat().size();
    QMat rows(cs.size(), n);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].grade() != cs[0].grade())
            throw GradeMismatch("class_span_dim: mixed grades");
        rows.set_row(i, cs[i].flat());
    }
    return rref(rows).rank;
}

} // namespace fo52
