#include "fo52/fobracket.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "fo52/errors.hpp"

namespace fo52 {
namespace {

constexpr ExtMask kTop5 = 0b11111;

// Constant-coefficient bivector from pair-basis coordinates.
PolyMultivector constant_bivector(const std::vector<Rat>& coords10) {
    const ExtBasis& b2 = ExtBasis::get(5, 2);
    PolyMultivector m(2, 0);
    for (std::size_t t = 0; t < coords10.size(); ++t)
        if (!rat_is_zero(coords10[t]))
            m.add_component(b2.mask_at(t), Poly::constant(coords10[t]));
    return m;
}

} // namespace

FOBracket build_bracket_orthogonality(const WSubspace& w) {
    const ExtBasis& b2 = ExtBasis::get(5, 2);
    const MonoTable& m2 = MonoTable::get(2);
    const MonoTable& m3 = MonoTable::get(3);

    const PolyMultivector euler = PolyMultivector::euler_field();
    std::vector<PolyMultivector> xw; // x ∧ w_i, grade 3 degree 1
    xw.reserve(5);
    for (std::size_t i = 0; i < 5; ++i)
        xw.push_back(mv_wedge(euler, constant_bivector(w.space.basis().row(i))));

    // Row (i, monomial of degree 3), column (pair, monomial of degree 2):
    // coefficients of vol5(x ∧ w_i ∧ Π(x)) as a linear function of Π.
    const std::size_t n2 = m2.list.size(), n3 = m3.list.size();
    QMat a(5 * n3, b2.size() * n2);
    for (std::size_t u = 0; u < a.cols(); ++u) {
        PolyMultivector unit(2, 2);
        unit.set_component(b2.mask_at(u / n2), Poly::monomial(m2.list[u % n2], Rat(1)));
        for (std::size_t i = 0; i < 5; ++i) {
            const Poly top = mv_wedge(xw[i], unit).component(kTop5);
            for (const auto& [e, cf] : top.terms())
                a.at(i * n3 + m3.pos.at(e), u) = cf;
        }
    }

    const QSubspace sol = kernel(a);
    const EulerReducer& red = EulerReducer::for_grade(2);
    if (sol.dim() != 25)
        throw DegenerateW("orthogonality solution space has dim " +
                          std::to_string(sol.dim()) + ", want 25");
    if (!sol.contains_subspace(red.triv_basis()))
        throw DegenerateW("orthogonality solution space does not contain triv2");

    QMat classes(sol.dim(), a.cols());
    for (std::size_t i = 0; i < sol.dim(); ++i)
        classes.set_row(i, red.reduce_flat(sol.basis().row(i)));
    const RrefResult rr = rref(classes);
    if (rr.rank != 1)
        throw DegenerateW("orthogonality class space has rank " +
                          std::to_string(rr.rank) + ", want 1");

    // The RREF pivot is scaled to 1: first nonzero canonical coordinate = 1.
    FOBracket out;
    out.w = w;
    out.cls = MultivectorClass(PolyMultivector::from_flat(2, 2, rr.mat.row(0)));
    out.method = BracketMethod::orthogonality;
    return out;
}

Poly degeneracy_quintic(const FOBracket& b) {
    const PolyMultivector xp = mv_wedge(PolyMultivector::euler_field(), b.rep());
    return mv_wedge(xp, b.rep()).component(kTop5);
}

int rank_at(const FOBracket& b, const std::vector<Rat>& v) {
    const QMat q = quotient_map_at(v); // throws ZeroVector on v = 0
    const std::vector<Rat> omega = q.mul_vec(b.rep().eval(v));
    bool zero = true;
    for (const Rat& c : omega) zero = zero && rat_is_zero(c);
    if (zero) return 0;
    const ExtVec ob = ExtVec::from_dense(4, 2, omega);
    return wedge(ob, ob).is_zero() ? 2 : 4;
}

std::vector<Poly> zero_locus_equations(const FOBracket& b) {
    const PolyMultivector xp = mv_wedge(PolyMultivector::euler_field(), b.rep());
    const ExtBasis& b3 = ExtBasis::get(5, 3);
    std::vector<Poly> out(b3.size());
    for (std::size_t t = 0; t < b3.size(); ++t) out[t] = xp.component(b3.mask_at(t));
    return out;
}

std::vector<Rat> LieStructure::bracket(const std::vector<Rat>& u,
                                       const std::vector<Rat>& v) const {
    std::vector<Rat> out(4, Rat(0));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (rat_is_zero(u[a]) || rat_is_zero(v[b])) continue;
            const Rat uv = u[a] * v[b];
            for (int m = 0; m < 4; ++m) out[m] += uv * c[a][b][m];
        }
    return out;
}

bool LieStructure::jacobi_holds() const {
    std::vector<std::vector<Rat>> e(4, std::vector<Rat>(4, Rat(0)));
    for (int i = 0; i < 4; ++i) e[i][i] = 1;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int d = b + 1; d < 4; ++d) {
                std::vector<Rat> s = bracket(bracket(e[a], e[b]), e[d]);
                const std::vector<Rat> t1 = bracket(bracket(e[b], e[d]), e[a]);
                const std::vector<Rat> t2 = bracket(bracket(e[d], e[a]), e[b]);
                for (int m = 0; m < 4; ++m)
                    if (!rat_is_zero(s[m] + t1[m] + t2[m])) return false;
            }
    return true;
}

QSubspace LieStructure::derived_subalgebra() const {
    QMat rows(6, 4);
    std::size_t r = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b, ++r)
            for (int m = 0; m < 4; ++m) rows.at(r, m) = c[a][b][m];
    return QSubspace::from_rows(rows);
}

bool LieStructure::derived_is_abelian() const {
    const QSubspace d = derived_subalgebra();
    for (std::size_t i = 0; i < d.dim(); ++i)
        for (std::size_t j = i + 1; j < d.dim(); ++j)
            for (const Rat& cm : bracket(d.basis().row(i), d.basis().row(j)))
                if (!rat_is_zero(cm)) return false;
    return true;
}

QMat LieStructure::ad_matrix(const std::vector<Rat>& h) const {
    QMat out(4, 4);
    for (int b = 0; b < 4; ++b) {
        std::vector<Rat> eb(4, Rat(0));
        eb[b] = 1;
        const std::vector<Rat> col = bracket(h, eb);
        for (int m = 0; m < 4; ++m) out.at(m, b) = col[m];
    }
    return out;
}

QMat LieStructure::ad_on_derived(const std::vector<Rat>& h) const {
    const QSubspace d = derived_subalgebra();
    QMat out(d.dim(), d.dim());
    for (std::size_t j = 0; j < d.dim(); ++j) {
        std::vector<Rat> img = bracket(h, d.basis().row(j));
        // Coordinates in the RREF basis: read off pivot entries, then check
        // the remainder is actually inside d.
        std::vector<Rat> coords(d.dim());
        for (std::size_t i = 0; i < d.dim(); ++i) coords[i] = img[d.pivots()[i]];
        if (!d.contains(img))
            throw Error("ad(h) does not preserve the derived subalgebra");
        for (std::size_t i = 0; i < d.dim(); ++i) out.at(i, j) = coords[i];
    }
    return out;
}

LieStructure linearize_at(const FOBracket& b, const std::vector<Rat>& v) {
    if (rank_at(b, v) != 0)
        throw NotAZero("linearization point is not a zero of the bracket");
    const std::size_t p = pivot_index(v);

    std::vector<Rat> u(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] / v[p]; // u[p] = 1

    LieStructure ls;
    ls.pivot = p;
    std::size_t li = 0;
    for (unsigned i = 0; i < 5; ++i)
        if (i != p) ls.labels[li++] = i;

    // Chart bracket {u_a, u_b} on x_p = 1:
    //   G_ab = Π^{ab} + x_a Π^{bp} − x_b Π^{ap}, restricted to x_p = 1.
    // Structure constants are its first derivatives at u; the value at u
    // itself is the (a,b) entry of the descended bivector, zero at rank 0.
    const PolyMultivector& pi = b.rep();
    for (int ai = 0; ai < 4; ++ai)
        for (int bi = ai + 1; bi < 4; ++bi) {
            const unsigned a = ls.labels[ai], bb = ls.labels[bi];
            Poly g = pi.signed_pair(a, bb);
            g += Poly::var(a) * pi.signed_pair(bb, static_cast<unsigned>(p));
            g -= Poly::var(bb) * pi.signed_pair(a, static_cast<unsigned>(p));
            if (!rat_is_zero(g.eval(u)))
                throw NotAZero("chart bracket has a nonzero constant term");
            for (int mi = 0; mi < 4; ++mi) {
                const Rat cm = g.derivative(ls.labels[mi]).eval(u);
                ls.c[ai][bi][mi] = cm;
                ls.c[bi][ai][mi] = -cm;
            }
        }
    return ls;
}

} // namespace fo52
