#include "fo52/multivector.hpp"

#include <bit>
#include <stdexcept>

namespace fo52 {

Poly PolyMultivector::component(ExtMask m) const {
    const auto it = c_.find(m);
    return it == c_.end() ? Poly() : it->second;
}

void PolyMultivector::set_component(ExtMask m, const Poly& p) {
    if (std::popcount(static_cast<unsigned>(m)) != static_cast<int>(g_))
        throw std::invalid_argument("set_component: grade mismatch");
    if (p.is_zero())
        c_.erase(m);
    else
        c_[m] = p;
}

void PolyMultivector::add_component(ExtMask m, const Poly& p) {
    if (p.is_zero()) return;
    auto it = c_.find(m);
    if (it == c_.end()) {
        set_component(m, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) c_.erase(it);
}

Poly PolyMultivector::signed_pair(unsigned a, unsigned b) const {
    if (g_ != 2) throw std::invalid_argument("signed_pair: grade-2 only");
    if (a == b) return Poly();
    if (a < b) return component(mask_of({a, b}));
    return -component(mask_of({b, a}));
}

PolyMultivector& PolyMultivector::operator+=(const PolyMultivector& o) {
    if (g_ != o.g_ || d_ != o.d_) throw std::invalid_argument("PolyMultivector+=: shape mismatch");
    for (const auto& [m, p] : o.c_) add_component(m, p);
    return *this;
}

PolyMultivector PolyMultivector::operator+(const PolyMultivector& o) const {
    PolyMultivector r = *this;
    r += o;
    return r;
}

PolyMultivector PolyMultivector::operator*(const Rat& s) const {
    PolyMultivector r(g_, d_);
    if (sgn(s) == 0) return r;
    for (const auto& [m, p] : c_) r.c_.emplace(m, p * s);
    return r;
}

std::size_t flat_len(unsigned grade, unsigned coeff_degree) {
    return ExtBasis::get(5, grade).size() * MonoTable::get(coeff_degree).list.size();
}

std::vector<Rat> PolyMultivector::flatten() const {
    const ExtBasis& basis = ExtBasis::get(5, g_);
    const MonoTable& monos = MonoTable::get(d_);
    std::vector<Rat> out(basis.size() * monos.list.size());
    for (const auto& [m, p] : c_) {
        const std::size_t base = basis.pos_of(m) * monos.list.size();
        for (const auto& [e, c] : p.terms()) {
            const auto it = monos.pos.find(e);
            if (it == monos.pos.end())
                throw std::invalid_argument("flatten: non-homogeneous coefficient");
            out[base + it->second] = c;
        }
    }
    return out;
}

PolyMultivector PolyMultivector::from_flat(unsigned grade, unsigned coeff_degree,
                                           const std::vector<Rat>& v) {
    const ExtBasis& basis = ExtBasis::get(5, grade);
    const MonoTable& monos = MonoTable::get(coeff_degree);
    if (v.size() != basis.size() * monos.list.size())
        throw std::invalid_argument("from_flat: size mismatch");
    PolyMultivector out(grade, coeff_degree);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Poly p;
        for (std::size_t t = 0; t < monos.list.size(); ++t)
            p.add_term(monos.list[t], v[b * monos.list.size() + t]);
        if (!p.is_zero()) out.c_.emplace(basis.mask_at(b), std::move(p));
    }
    return out;
}

std::vector<Rat> PolyMultivector::eval(const std::vector<Rat>& x) const {
    const ExtBasis& basis = ExtBasis::get(5, g_);
    std::vector<Rat> out(basis.size());
    for (const auto& [m, p] : c_) out[basis.pos_of(m)] = p.eval(x);
    return out;
}

PolyMultivector PolyMultivector::euler_field() {
    PolyMultivector e(1, 1);
    for (unsigned i = 0; i < 5; ++i) e.set_component(ExtMask(1) << i, Poly::var(i));
    return e;
}

PolyMultivector PolyMultivector::linear_field(const QMat& a) {
    if (a.rows() != 5 || a.cols() != 5) throw std::invalid_argument("linear_field: need 5×5");
    PolyMultivector v(1, 1);
    for (unsigned i = 0; i < 5; ++i) {
        Poly p;
        for (unsigned j = 0; j < 5; ++j) {
            Exp e{};
            e[j] = 1;
            p.add_term(e, a.at(i, j));
        }
        v.set_component(ExtMask(1) << i, p);
    }
    return v;
}

PolyMultivector mv_wedge(const PolyMultivector& a, const PolyMultivector& b) {
    PolyMultivector out(a.grade() + b.grade(), a.coeff_degree() + b.coeff_degree());
    if (a.grade() + b.grade() > 5) return out;
    for (const auto& [ma, pa] : a.components()) {
        for (const auto& [mb, pb] : b.components()) {
            const int s = merge_sign(ma, mb);
            if (s == 0) continue;
            Poly prod = pa * pb;
            if (s < 0) prod = -prod;
            out.add_component(ma | mb, prod);
        }
    }
    return out;
}

PolyMultivector schouten_bracket(const PolyMultivector& p, const PolyMultivector& q) {
    if (p.grade() != 2 || q.grade() != 2)
        throw std::invalid_argument("schouten_bracket: bivector×bivector only");
    const unsigned dp = p.coeff_degree(), dq = q.coeff_degree();
    const unsigned dout = (dp + dq == 0) ? 0 : dp + dq - 1;
    PolyMultivector out(3, dout);
    const ExtBasis& tri = ExtBasis::get(5, 3);
    for (ExtMask m : tri.masks()) {
        const std::vector<unsigned> ijk = mask_indices(m);
        const unsigned i = ijk[0], j = ijk[1], k = ijk[2];
        Poly acc;
        for (unsigned l = 0; l < 5; ++l) {
            const auto term = [&](const PolyMultivector& u, const PolyMultivector& v,
                                  unsigned a, unsigned b, unsigned c) {
                const Poly ua = u.signed_pair(l, a);
                if (ua.is_zero()) return Poly();
                const Poly dv = v.signed_pair(b, c).derivative(l);
                if (dv.is_zero()) return Poly();
                return ua * dv;
            };
            acc += term(p, q, i, j, k);
            acc += term(p, q, j, k, i);
            acc += term(p, q, k, i, j);
            acc += term(q, p, i, j, k);
            acc += term(q, p, j, k, i);
            acc += term(q, p, k, i, j);
        }
        if (!acc.is_zero()) out.set_component(m, acc);
    }
    return out;
}

PolyMultivector lie_derivative(const PolyMultivector& x_field, const PolyMultivector& m) {
    if (x_field.grade() != 1) throw std::invalid_argument("lie_derivative: vector field required");
    const unsigned g = m.grade();
    const unsigned dsum = x_field.coeff_degree() + m.coeff_degree();
    const unsigned dout = dsum == 0 ? 0 : dsum - 1;
    PolyMultivector out(g, dout);
    const ExtBasis& basis = ExtBasis::get(5, g);
    for (ExtMask target : basis.masks()) {
        Poly acc;
        // X^l ∂_l M^I
        for (unsigned l = 0; l < 5; ++l) {
            const Poly xl = x_field.component(ExtMask(1) << l);
            if (xl.is_zero()) continue;
            const Poly dm = m.component(target).derivative(l);
            if (!dm.is_zero()) acc += xl * dm;
        }
        // − Σ_a M^{I|i_a→l} ∂_l X^{i_a}
        const std::vector<unsigned> idx = mask_indices(target);
        for (unsigned a = 0; a < idx.size(); ++a) {
            const ExtMask rest = target & ~(ExtMask(1) << idx[a]);
            for (unsigned l = 0; l < 5; ++l) {
                if (rest & (ExtMask(1) << l)) continue;
                const Poly dx = x_field.component(ExtMask(1) << idx[a]).derivative(l);
                if (dx.is_zero()) continue;
                // M with slot a replaced by l; sort both back to canonical
                // order and track the relative sign.
                const int s_orig = merge_sign(ExtMask(1) << idx[a], rest);
                const int s_subs = merge_sign(ExtMask(1) << l, rest);
                const Poly comp = m.component(rest | (ExtMask(1) << l));
                if (comp.is_zero()) continue;
                Poly t = comp * dx;
                if (s_orig * s_subs < 0) t = -t;
                acc -= t;
            }
        }
        if (!acc.is_zero()) out.set_component(target, acc);
    }
    return out;
}

Poly poisson_of_functions(const PolyMultivector& p, const Poly& f, const Poly& g) {
    if (p.grade() != 2) throw std::invalid_argument("poisson_of_functions: bivector required");
    Poly acc;
    for (const auto& [m, pij] : p.components()) {
        const std::vector<unsigned> ij = mask_indices(m);
        const Poly t = f.derivative(ij[0]) * g.derivative(ij[1]) -
                       f.derivative(ij[1]) * g.derivative(ij[0]);
        if (!t.is_zero()) acc += pij * t;
    }
    return acc;
}

Poly contract3(const PolyMultivector& t, const Poly& f, const Poly& g, const Poly& h) {
    if (t.grade() != 3) throw std::invalid_argument("contract3: trivector required");
    Poly acc;
    for (const auto& [m, tp] : t.components()) {
        const std::vector<unsigned> ijk = mask_indices(m);
        // det over rows (i,j,k), columns (∂h, ∂g, ∂f)
        std::array<std::array<Poly, 3>, 3> d;
        const std::array<const Poly*, 3> cols = {&h, &g, &f};
        for (unsigned r = 0; r < 3; ++r)
            for (unsigned c = 0; c < 3; ++c) d[r][c] = cols[c]->derivative(ijk[r]);
        Poly det = d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) -
                   d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
                   d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
        if (!det.is_zero()) acc += tp * det;
    }
    return acc;
}

} // namespace fo52
