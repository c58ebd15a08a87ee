#include "fo52/grassmann.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "fo52/errors.hpp"
#include "fo52/prng.hpp"

namespace fo52 {
namespace {

std::vector<Rat> random_small_vector(Prng& rng, std::size_t n, long lo, long hi) {
    std::vector<Rat> v(n);
    for (Rat& e : v) e = Rat(rng.uniform(lo, hi));
    return v;
}

// One plane with independent small-integer spanning vectors; counts draws
// against the shared retry budget.
PlanePoint draw_plane(Prng& rng, unsigned& draws, unsigned cap) {
    while (true) {
        if (++draws > cap)
            throw ExhaustedRetries("plane drawing exceeded " + std::to_string(cap) + " draws");
        const std::vector<Rat> u = random_small_vector(rng, 5, -3, 3);
        const std::vector<Rat> v = random_small_vector(rng, 5, -3, 3);
        if (rref(QMat::from_rows({u, v})).rank != 2) continue;
        return PlanePoint::from_rows(u, v);
    }
}

} // namespace

PlanePoint PlanePoint::from_rows(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    PlanePoint p;
    p.plane = QSubspace::from_rows(QMat::from_rows({u, v}));
    if (p.plane.dim() != 2)
        throw DependentVectors("plane spanning vectors are dependent");
    p.pluck = plucker_of_plane(p.plane.basis().row(0), p.plane.basis().row(1));
    return p;
}

std::vector<Rat> point_on_plane(const PlanePoint& lam, const Rat& a, const Rat& b) {
    std::vector<Rat> out(5);
    for (std::size_t i = 0; i < 5; ++i)
        out[i] = a * lam.plane.basis().at(0, i) + b * lam.plane.basis().at(1, i);
    return out;
}

Fixture make_fixture(std::uint64_t seed) {
    Prng rng(seed);
    unsigned draws = 0;
    const unsigned cap = 1000;
    while (true) {
        std::vector<PlanePoint> pls;
        pls.reserve(5);
        for (int i = 0; i < 5; ++i) pls.push_back(draw_plane(rng, draws, cap));

        bool ok = true;
        for (int i = 0; ok && i < 5; ++i)
            for (int j = i + 1; ok && j < 5; ++j)
                if (wedge(pls[i].pluck, pls[j].pluck).is_zero()) ok = false;
        if (!ok) continue;

        QMat rows(5, 10);
        for (int i = 0; i < 5; ++i) rows.set_row(i, pls[i].pluck.dense());
        if (rref(rows).rank != 5) continue;

        Fixture f;
        f.seed = seed;
        f.planes = std::move(pls);
        f.w = WSubspace::from_span(rows);
        return f;
    }
}

SharedPair make_pair_sharing(std::uint64_t seed, unsigned k) {
    if (k > 5) throw Error("shared dimension k must be at most 5");
    SharedPair out;
    out.base = make_fixture(seed);
    out.k = k;
    if (k == 5) {
        out.wprime = out.base.w;
        return out;
    }

    Prng rng(seed * 1000003ULL + k);
    unsigned draws = 0;
    const unsigned cap = 1000;
    while (true) {
        if (++draws > cap)
            throw ExhaustedRetries("shared-pair drawing exceeded retry budget");

        QMat rows(5, 10);
        // k-dim random subspace of W.
        if (k > 0) {
            QMat coef(k, 5);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < 5; ++j) coef.at(i, j) = Rat(rng.uniform(-3, 3));
            const QMat shared = coef.mul(out.base.w.space.basis());
            if (rref(shared).rank != k) continue;
            for (std::size_t i = 0; i < k; ++i) rows.set_row(i, shared.row(i));
        }
        // Fresh decomposable generators for the rest.
        bool ok = true;
        for (std::size_t i = k; i < 5; ++i) {
            try {
                unsigned plane_draws = 0;
                rows.set_row(i, draw_plane(rng, plane_draws, 50).pluck.dense());
            } catch (const ExhaustedRetries&) {
                ok = false;
                break;
            }
        }
        if (!ok || rref(rows).rank != 5) continue;

        const WSubspace wp = WSubspace::from_span(rows);
        if (subspace_meet(out.base.w.space, wp.space).dim() != k) continue;
        out.wprime = wp;
        return out;
    }
}

QSubspace plane_wedge_v(const PlanePoint& lam) {
    QMat rows(10, 10);
    std::size_t r = 0;
    for (std::size_t a = 0; a < 2; ++a) {
        const ExtVec la = ExtVec::from_vector(lam.plane.basis().row(a));
        for (unsigned i = 0; i < 5; ++i, ++r) {
            const ExtVec w = wedge(la, ExtVec::basis_element(5, static_cast<ExtMask>(1u << i)));
            rows.set_row(r, w.dense());
        }
    }
    return QSubspace::from_rows(rows);
}

QSubspace distribution_D(const WSubspace& w, const PlanePoint& lam) {
    return subspace_meet(w.space, plane_wedge_v(lam));
}

bool in_sigma(const WSubspace& w, const PlanePoint& lam) {
    return distribution_D(w, lam).dim() >= 3;
}

QSubspace tangent_line_at(const WSubspace& w, const PlanePoint& lam) {
    if (!w.space.contains(lam.pluck.dense()))
        throw Error("tangent point does not lie in W");

    // Jacobian of the five Plücker quadrics (ω∧ω components) at pluck:
    // J[c][P] = 2·sign(P, c∖P)·pluck_{c∖P} for pairs P inside the 4-set c.
    const ExtBasis& b2 = ExtBasis::get(5, 2);
    const ExtBasis& b4 = ExtBasis::get(5, 4);
    QMat jac(b4.size(), b2.size());
    for (std::size_t c = 0; c < b4.size(); ++c) {
        const ExtMask cm = b4.mask_at(c);
        for (std::size_t p = 0; p < b2.size(); ++p) {
            const ExtMask pm = b2.mask_at(p);
            if ((cm & pm) != pm) continue;
            const ExtMask rest = static_cast<ExtMask>(cm & ~pm);
            jac.at(c, p) = Rat(2 * merge_sign(pm, rest)) * lam.pluck.get(rest);
        }
    }

    const QSubspace line = subspace_meet(kernel(jac), w.space);
    if (line.dim() != 2)
        throw SingularPoint("tangent intersection has dim " + std::to_string(line.dim()));
    return line;
}

QSubspace t_w_subspace(const WSubspace& w) {
    const ExtBasis& b4 = ExtBasis::get(5, 4); // 4-subsets of the generators
    QMat rows(5 * 10, 252);
    std::size_t r = 0;
    for (std::size_t t = 0; t < b4.size(); ++t) {
        ExtVec eta; // wedge of four generator rows inside Λ•(Q^10)
        bool first = true;
        for (unsigned i : mask_indices(b4.mask_at(t))) {
            const ExtVec gi = ExtVec::from_vector(w.space.basis().row(i));
            eta = first ? gi : wedge(eta, gi);
            first = false;
        }
        for (unsigned j = 0; j < 10; ++j, ++r) {
            const ExtVec row = wedge(eta, ExtVec::basis_element(10, static_cast<ExtMask>(1u << j)));
            rows.set_row(r, row.dense());
        }
    }
    return QSubspace::from_rows(rows);
}

} // namespace fo52
