#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fo52/errors.hpp"
#include "fo52/fobracket.hpp"
#include "fo52/parallel.hpp"
#include "fo52/prng.hpp"

namespace fo52 {
namespace {

constexpr std::size_t kFlat2 = 150;    // grade-2 degree-2 coefficient space
constexpr unsigned kMaxSamples = 60;

} // namespace

// Deterministic grid of distinct chart points x = (1, a1..a4), a_i nonzero.
std::vector<std::array<Rat, 5>> pi52_sample_grid(std::uint64_t grid_seed, unsigned n) {
    Prng rng(grid_seed);
    std::set<std::array<long, 4>> seen;
    std::vector<std::array<Rat, 5>> pts;
    pts.reserve(n);
    unsigned guard = 0;
    while (pts.size() < n) {
        if (++guard > 1000 * n)
            throw Error("sample grid drawing failed to produce distinct points");
        std::array<long, 4> a{};
        for (long& v : a) {
            do v = rng.uniform(-9, 9); while (v == 0);
        }
        if (!seen.insert(a).second) continue;
        pts.push_back({Rat(1), Rat(a[0]), Rat(a[1]), Rat(a[2]), Rat(a[3])});
    }
    return pts;
}

namespace {

// Dual of span(q_1..q_5) under the wedge pairing on Λ²Q⁴: the unique (up to
// scale) bivector with vol4(Π̄ ∧ q_t) = 0 for all t. With ω = q_1∧…∧q_5 =
// Σ_m c_m f_{∖m} in Λ⁵(Λ²Q⁴), the matching of ψ∧ω against vol4(Π̄∧ψ) gives
//   Π̄_P = (−1)^{pos(P̄)} · sign(P, P̄) · c_{pos(P̄)}     (0-based lex pos).
std::vector<Rat> dual_bivector(const std::vector<ExtVec>& cols) {
    ExtVec omega = cols[0];
    for (std::size_t t = 1; t < cols.size(); ++t) omega = wedge(omega, cols[t]);

    const ExtBasis& bq = ExtBasis::get(4, 2);
    std::vector<Rat> pibar(bq.size());
    for (std::size_t t = 0; t < bq.size(); ++t) {
        const ExtMask pm = bq.mask_at(t);
        const ExtMask comp = static_cast<ExtMask>(0b1111 & ~pm);
        const std::size_t cpos = bq.pos_of(comp);
        const ExtMask omitted = static_cast<ExtMask>(0b111111 & ~(ExtMask{1} << cpos));
        Rat val = Rat(merge_sign(pm, comp)) * omega.get(omitted);
        if (cpos % 2 == 1) val = -val;
        pibar[t] = val;
    }
    return pibar;
}

} // namespace

MultivectorClass Pi52Map::column(std::size_t lex_pos) const {
    std::vector<Rat> flat(matrix.rows());
    for (std::size_t i = 0; i < matrix.rows(); ++i) flat[i] = matrix.at(i, lex_pos);
    return MultivectorClass(PolyMultivector::from_flat(2, 2, flat));
}

Pi52Map build_pi52(std::uint64_t grid_seed, unsigned n_samples, unsigned threads) {
    const ExtBasis& b2 = ExtBasis::get(5, 2);
    const ExtBasis& b55 = ExtBasis::get(10, 5);
    const MonoTable& m2 = MonoTable::get(2);
    const EulerReducer& red = EulerReducer::for_grade(2);
    const std::size_t n2 = m2.list.size();

    for (unsigned ns = n_samples;; ns += 10) {
        const auto pts = pi52_sample_grid(grid_seed, ns);

        std::vector<QMat> qmaps(ns);
        std::vector<std::vector<Rat>> mono_at(ns, std::vector<Rat>(n2));
        // φ_x(u_j) for the ten pair-basis bivectors u_j, per sample.
        std::vector<std::vector<ExtVec>> phi(ns, std::vector<ExtVec>(b2.size()));
        for (unsigned s = 0; s < ns; ++s) {
            const std::vector<Rat> x(pts[s].begin(), pts[s].end());
            qmaps[s] = quotient_map_at(x); // 6×10
            for (std::size_t m = 0; m < n2; ++m)
                mono_at[s][m] = Poly::monomial(m2.list[m], Rat(1)).eval(x);
            for (std::size_t j = 0; j < b2.size(); ++j) {
                ExtVec col(6, 1);
                for (std::size_t i = 0; i < 6; ++i)
                    col.set(static_cast<ExtMask>(ExtMask{1} << i), qmaps[s].at(i, j));
                phi[s][j] = std::move(col);
            }
        }

        // Left-hand side: row (s, P), column (pair, monomial); the equation
        // quotient_map_at(x_s)·Π(x_s) = Π̄ read off in quotient coordinates.
        QMat a(6 * ns, kFlat2);
        for (unsigned s = 0; s < ns; ++s)
            for (std::size_t p = 0; p < 6; ++p)
                for (std::size_t j = 0; j < b2.size(); ++j) {
                    const Rat& q = qmaps[s].at(p, j);
                    if (rat_is_zero(q)) continue;
                    for (std::size_t m = 0; m < n2; ++m)
                        a.at(s * 6 + p, j * n2 + m) = q * mono_at[s][m];
                }

        // The homogeneous kernel must be exactly triv₂: fields x∧(Ax) are
        // killed by every quotient map, so triv₂ is always inside; a larger
        // kernel means the grid does not yet separate classes.
        const QSubspace ker_a = kernel(a);
        if (!ker_a.contains_subspace(red.triv_basis()))
            throw InconsistentSamples("trivial fields fail the sample equations");
        if (ker_a.dim() > red.trivial_dim()) {
            if (ns + 10 > kMaxSamples)
                throw RankDeficit("sample grid rank stuck below the class dimension");
            continue;
        }

        // Right-hand sides, one per lex 5-subset of the pair basis.
        QMat aug(6 * ns, kFlat2 + b55.size());
        for (unsigned s = 0; s < ns; ++s)
            for (std::size_t p = 0; p < 6; ++p)
                for (std::size_t jm = 0; jm < kFlat2; ++jm)
                    aug.at(s * 6 + p, jm) = a.at(s * 6 + p, jm);
        parallel_for(b55.size(), threads, [&](std::size_t col) {
            const auto idx = mask_indices(b55.mask_at(col));
            for (unsigned s = 0; s < ns; ++s) {
                std::vector<ExtVec> sel;
                sel.reserve(5);
                for (unsigned t : idx) sel.push_back(phi[s][t]);
                const std::vector<Rat> pibar = dual_bivector(sel);
                const ExtVec pb = ExtVec::from_dense(4, 2, pibar);
                for (const ExtVec& q : sel) {
                    // q carries the 6 quotient-bivector coordinates on the
                    // flat grade-1 basis; move them back to Λ²Q⁴ to wedge.
                    std::vector<Rat> qc(6, Rat(0));
                    for (std::size_t i = 0; i < 6; ++i)
                        qc[i] = q.get(static_cast<ExtMask>(ExtMask{1} << i));
                    if (!rat_is_zero(wedge(pb, ExtVec::from_dense(4, 2, qc)).get(0b1111)))
                        throw InconsistentSamples("dual bivector fails orthogonality");
                }
                for (std::size_t p = 0; p < 6; ++p)
                    aug.at(s * 6 + p, kFlat2 + col) = pibar[p];
            }
        });

        const RrefResult rr = rref(aug);
        for (const std::size_t pc : rr.pivot_cols)
            if (pc >= kFlat2)
                throw InconsistentSamples("no quadratic bivector fits the samples");
        if (rr.rank != red.class_dim())
            throw InconsistentSamples("sample system rank disagrees with its kernel");

        Pi52Map out;
        out.grid_seed = grid_seed;
        out.n_samples = ns;
        out.sample_points = pts;
        out.matrix = QMat(kFlat2, b55.size());
        parallel_for(b55.size(), threads, [&](std::size_t col) {
            std::vector<Rat> sol(kFlat2, Rat(0)); // free coordinates stay 0
            for (std::size_t r = 0; r < rr.rank; ++r)
                sol[rr.pivot_cols[r]] = rr.mat.at(r, kFlat2 + col);
            const std::vector<Rat> canon = red.reduce_flat(std::move(sol));
            for (std::size_t i = 0; i < kFlat2; ++i) out.matrix.at(i, col) = canon[i];
        });

        out.rank = rref(out.matrix).rank;
        if (out.rank != red.class_dim())
            throw RankDeficit("pi52 matrix rank is " + std::to_string(out.rank) +
                              ", want " + std::to_string(red.class_dim()));
        return out;
    }
}

MultivectorClass pi52_apply(const Pi52Map& m, const ExtVec& xi) {
    if (xi.ambient_n() != 10 || xi.grade() != 5)
        throw GradeMismatch("pi52_apply expects grade 5 over Q^10");
    const ExtBasis& b55 = ExtBasis::get(10, 5);
    std::vector<Rat> flat(m.matrix.rows(), Rat(0));
    for (const auto& [mask, cf] : xi.coeffs()) {
        const std::size_t col = b55.pos_of(mask);
        for (std::size_t i = 0; i < flat.size(); ++i) {
            const Rat& e = m.matrix.at(i, col);
            if (!rat_is_zero(e)) flat[i] += cf * e;
        }
    }
    return MultivectorClass(PolyMultivector::from_flat(2, 2, flat));
}

QSubspace pi52_kernel(const Pi52Map& m) { return kernel(m.matrix); }

} // namespace fo52
