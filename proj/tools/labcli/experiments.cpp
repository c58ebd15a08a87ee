#include "labcli/experiments.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fo52/errors.hpp"
#include "fo52/euler.hpp"
#include "fo52/grassmann.hpp"
#include "fo52/parallel.hpp"
#include "fo52/prng.hpp"
#include "fo52/serialize.hpp"

namespace fo52lab {

using namespace fo52;

namespace {

MultivectorClass bracket_class(const PolyMultivector& a, const PolyMultivector& b) {
    return euler_reduce(schouten_bracket(a, b), EulerReducer::for_grade(3));
}

// Fresh decomposable bivector with small integer plane entries.
ExtVec draw_decomposable(Prng& rng, unsigned cap = 50) {
    for (unsigned i = 0; i < cap; ++i) {
        std::vector<Rat> u(5), v(5);
        for (Rat& e : u) e = Rat(rng.uniform(-3, 3));
        for (Rat& e : v) e = Rat(rng.uniform(-3, 3));
        const ExtVec w = wedge(ExtVec::from_vector(u), ExtVec::from_vector(v));
        if (!w.is_zero()) return w;
    }
    throw ExhaustedRetries("could not draw an independent plane");
}

// Random full-rank 5-dim subspace of `ambient_rows`-spanned space, with its
// bracket. Retries both rank deficits and DegenerateW.
FOBracket sample_bracket_in(const QSubspace& u, Prng& rng, unsigned* redraws) {
    for (unsigned t = 0; t < 50; ++t) {
        QMat coef(5, u.dim());
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < u.dim(); ++j) coef.at(i, j) = Rat(rng.uniform(-5, 5));
        const QMat rows = coef.mul(u.basis());
        if (rref(rows).rank != 5) continue;
        try {
            FOBracket b = build_bracket_orthogonality(WSubspace::from_span(rows));
            if (redraws) *redraws = t;
            return b;
        } catch (const DegenerateW&) {
            continue;
        }
    }
    throw ExhaustedRetries("could not sample a nondegenerate W in the family");
}

} // namespace

ExperimentReport run_jacobi(std::uint64_t seed) {
    ExperimentReport rep;
    rep.experiment = "jacobi";
    rep.seeds = {seed};
    rep.parameters["seed"] = seed;

    const Fixture f = make_fixture(seed);
    const FOBracket b = build_bracket_orthogonality(f.w);
    const MultivectorClass self = bracket_class(b.rep(), b.rep());
    if (!class_is_zero(self))
        throw JacobiFailure("class([Pi,Pi]) != 0 for seed " + std::to_string(seed) +
                            "; the fixture is degenerate, redraw with another seed");
    rep.results["jacobi_class_zero"] = true;
    rep.results["bracket_nonzero"] = !b.cls.is_zero();
    return rep;
}

ExperimentReport run_compat(std::uint64_t seed, unsigned k) {
    ExperimentReport rep;
    rep.experiment = "compat";
    rep.seeds = {seed};
    rep.parameters["seed"] = seed;
    rep.parameters["k"] = k;

    for (unsigned attempt = 0;; ++attempt) {
        if (attempt >= 20)
            throw ExhaustedRetries("no nondegenerate pair after 20 attempts");
        const std::uint64_t s = seed + 7919 * attempt;
        const SharedPair pair = make_pair_sharing(s, k);
        FOBracket b1, b2;
        try {
            b1 = build_bracket_orthogonality(pair.base.w);
            b2 = build_bracket_orthogonality(pair.wprime);
        } catch (const DegenerateW&) {
            continue;
        }
        const bool zero = class_is_zero(bracket_class(b1.rep(), b2.rep()));
        rep.results["attempt_seed"] = s;
        rep.results["redraws"] = attempt;
        rep.results["shared_dim"] = k;
        rep.results["bracket_class_zero"] = zero;
        rep.results["compatible"] = zero;
        if (k >= 4 && !zero)
            throw Error("compatibility failed for shared dim " + std::to_string(k));
        if (k <= 3 && zero) {
            rep.anomalies += 1;
            rep.results["anomaly"] = "zero bracket class at shared dim <= 3";
        }
        return rep;
    }
}

ExperimentReport run_conjecture_d(std::uint64_t seed, const Pi52Map& m, unsigned threads) {
    ExperimentReport rep;
    rep.experiment = "conjecture-d";
    rep.seeds = {seed};
    rep.parameters["seed"] = seed;
    rep.parameters["grid_seed"] = m.grid_seed;

    require_certified(m);
    const Fixture f = make_fixture(seed);
    const FOBracket b = build_bracket_orthogonality(f.w);

    const EulerReducer& r3 = EulerReducer::for_grade(3);
    QMat l(r3.ambient_dim(), 252);
    parallel_for(252, threads, [&](std::size_t t) {
        const PolyMultivector bt = m.column(t).rep();
        const std::vector<Rat> flat =
            r3.reduce_flat(schouten_bracket(bt, b.rep()).flatten());
        for (std::size_t i = 0; i < flat.size(); ++i) l.at(i, t) = flat[i];
    });

    const QSubspace ker_l = kernel(l);
    const QSubspace ker_pi = pi52_kernel(m);
    const QSubspace tw = t_w_subspace(f.w);
    const QSubspace meet = subspace_meet(tw, ker_pi);
    const QSubspace sum = subspace_join(tw, ker_pi);

    if (!ker_l.contains_subspace(sum))
        throw Error("proven inclusion violated: T_W + ker(pi52) is not inside ker L");

    rep.results["dim_ker_L"] = ker_l.dim();
    rep.results["dim_t_w"] = tw.dim();
    rep.results["dim_ker_pi52"] = ker_pi.dim();
    rep.results["dim_meet"] = meet.dim();
    rep.results["dim_sum"] = sum.dim();
    rep.results["dimension_law_ok"] =
        sum.dim() == tw.dim() + ker_pi.dim() - meet.dim();
    rep.results["inclusion_holds"] = true;
    rep.results["equality_holds"] = sum == ker_l;
    return rep;
}

ExperimentReport run_span(std::uint64_t seed, const std::string& family, unsigned n,
                          unsigned threads) {
    ExperimentReport rep;
    rep.experiment = "span";
    rep.seeds = {seed};
    rep.parameters["seed"] = seed;
    rep.parameters["family"] = family;
    rep.parameters["n"] = n;

    const Fixture f = make_fixture(seed);

    // The family's common subspace: a 6-dim U every sample lies inside, or a
    // 4-dim K every sample contains. Either way samples pairwise share >= 4
    // dims, so compatibility is asserted, not just observed.
    QSubspace u_or_k;
    if (family == "U6") {
        Prng rng(seed * 48271 + 11);
        QSubspace u = f.w.space;
        unsigned guard = 0;
        while (u.dim() < 6) {
            if (++guard > 100) throw ExhaustedRetries("could not extend W to a 6-dim U");
            u = subspace_join(u, QSubspace::from_rows(
                                     QMat::from_rows({draw_decomposable(rng).dense()})));
        }
        u_or_k = u;
    } else if (family == "K4") {
        QMat rows(4, 10);
        for (int i = 0; i < 4; ++i) rows.set_row(i, f.planes[i].pluck.dense());
        u_or_k = QSubspace::from_rows(rows);
        if (u_or_k.dim() != 4) throw Error("fixture generators failed to span a 4-dim K");
    } else {
        throw ParseError("unknown family '" + family + "', expected U6 or K4");
    }

    std::vector<FOBracket> brackets(n);
    std::vector<unsigned> redraws(n, 0);
    parallel_for(n, threads, [&](std::size_t i) {
        Prng rng(seed * 1000003 + 500 + i);
        if (family == "U6") {
            brackets[i] = sample_bracket_in(u_or_k, rng, &redraws[i]);
        } else {
            for (unsigned t = 0;; ++t) {
                if (t >= 50) throw ExhaustedRetries("no nondegenerate K4 sample");
                QMat rows(5, 10);
                for (int r = 0; r < 4; ++r) rows.set_row(r, u_or_k.basis().row(r));
                rows.set_row(4, draw_decomposable(rng).dense());
                if (rref(rows).rank != 5) continue;
                try {
                    brackets[i] = build_bracket_orthogonality(WSubspace::from_span(rows));
                    redraws[i] = t;
                    break;
                } catch (const DegenerateW&) {
                    continue;
                }
            }
        }
    });

    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<char> compatible(pairs.size(), 0);
    parallel_for(pairs.size(), threads, [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        compatible[p] =
            class_is_zero(bracket_class(brackets[i].rep(), brackets[j].rep())) ? 1 : 0;
    });
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (!compatible[p])
            throw Error("family pair (" + std::to_string(pairs[p].first) + "," +
                        std::to_string(pairs[p].second) + ") is not compatible");

    std::vector<MultivectorClass> classes;
    classes.reserve(n);
    for (const FOBracket& b : brackets) classes.push_back(b.cls);
    const std::size_t span = class_span_dim(classes);
    if (span > 6) throw Error("bracket classes span " + std::to_string(span) + " > 6 dims");

    for (unsigned i = 0; i < n; ++i)
        rep.rows.push_back({{"trial", i}, {"redraws", redraws[i]}});
    rep.results["n"] = n;
    rep.results["all_pairs_compatible"] = true;
    rep.results["span_dim"] = span;
    return rep;
}

ExperimentReport run_stratify(std::uint64_t seed, unsigned points) {
    ExperimentReport rep;
    rep.experiment = "stratify";
    rep.seeds = {seed};
    rep.parameters["seed"] = seed;
    rep.parameters["points"] = points;

    const Fixture f = make_fixture(seed);
    const FOBracket b = build_bracket_orthogonality(f.w);
    const Poly q = degeneracy_quintic(b);
    const std::vector<Poly> cubics = zero_locus_equations(b);
    if (q.degree() != 5) throw Error("degeneracy polynomial has the wrong degree");

    long trial = 0;
    unsigned rank_counts[3] = {0, 0, 0};
    const auto check_point = [&](const std::vector<Rat>& v, const char* kind) {
        const int r = rank_at(b, v);
        const bool quintic_zero = rat_is_zero(q.eval(v));
        bool cubics_zero = true;
        for (const Poly& c : cubics) cubics_zero = cubics_zero && rat_is_zero(c.eval(v));
        if ((r <= 2) != quintic_zero)
            throw Error("rank/quintic coherence failed at a " + std::string(kind) + " point");
        if ((r == 0) != cubics_zero)
            throw Error("rank/zero-locus coherence failed at a " + std::string(kind) + " point");
        rank_counts[r / 2] += 1;
        rep.rows.push_back({{"trial", trial++},
                            {"kind", kind},
                            {"rank", r},
                            {"quintic_zero", quintic_zero},
                            {"cubics_zero", cubics_zero}});
        return r;
    };

    const Rat pairs[3][2] = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    for (const PlanePoint& p : f.planes)
        for (const auto& ab : pairs)
            if (check_point(point_on_plane(p, ab[0], ab[1]), "line") != 0)
                throw Error("bracket does not vanish on a fixture line");

    Prng rng(seed * 2654435761ULL + 17);
    for (unsigned i = 0; i < points; ++i) {
        std::vector<Rat> v(5);
        bool nonzero = false;
        do {
            for (Rat& e : v) e = Rat(rng.uniform(-9, 9));
            nonzero = false;
            for (const Rat& e : v) nonzero = nonzero || !rat_is_zero(e);
        } while (!nonzero);
        check_point(v, "random");
    }

    rep.results["n_line"] = 15;
    rep.results["n_random"] = points;
    rep.results["rank_0"] = rank_counts[0];
    rep.results["rank_2"] = rank_counts[1];
    rep.results["rank_4"] = rank_counts[2];
    rep.results["all_consistent"] = true;
    rep.results["quintic_degree"] = 5;
    return rep;
}

ExperimentReport run_tangency(std::uint64_t seed) {
    ExperimentReport rep;
    rep.experiment = "tangency";
    rep.seeds = {seed};
    rep.parameters["seed"] = seed;

    for (unsigned t = 0; t < 5; ++t) {
        const SharedPair pair = make_pair_sharing(seed + t, 4);
        const PlanePoint* p = nullptr;
        for (const PlanePoint& cand : pair.base.planes)
            if (!pair.wprime.space.contains(cand.pluck.dense())) {
                p = &cand;
                break;
            }
        if (p == nullptr)
            throw Error("all five generators of W ended up inside W'");

        const QSubspace t2 = tangent_line_at(pair.base.w, *p);
        const QSubspace dprime = distribution_D(pair.wprime, *p);
        const QSubspace target = subspace_join(
            dprime, QSubspace::from_rows(QMat::from_rows({p->pluck.dense()})));
        if (!target.contains_subspace(t2))
            throw Error("tangent line escapes the distribution at pair " + std::to_string(t));

        rep.rows.push_back({{"trial", t},
                            {"pair_seed", seed + t},
                            {"dim_distribution", dprime.dim()},
                            {"contained", true}});
    }
    rep.results["pairs"] = 5;
    rep.results["all_contained"] = true;
    return rep;
}

ExperimentReport run_pi52_build(std::uint64_t grid_seed, unsigned n_samples, unsigned threads,
                                const std::string& matrix_path) {
    ExperimentReport rep;
    rep.experiment = "pi52-build";
    rep.seeds = {grid_seed};
    rep.parameters["grid_seed"] = grid_seed;
    rep.parameters["n_samples"] = n_samples;
    rep.parameters["matrix_path"] = matrix_path;

    const Pi52Map m = build_pi52(grid_seed, n_samples, threads);
    save_text_file(matrix_path, pi52_to_json(m));
    rep.results["rank"] = m.rank;
    rep.results["kernel_dim"] = 252 - m.rank;
    rep.results["n_samples_final"] = m.n_samples;
    rep.results["saved_to"] = matrix_path;
    return rep;
}

ExperimentReport run_pi52_verify(const std::string& matrix_path) {
    ExperimentReport rep;
    rep.experiment = "pi52-verify";
    rep.parameters["matrix_path"] = matrix_path;

    const Pi52Map m = pi52_from_json(load_text_file(matrix_path));
    require_certified(m);
    rep.results["rank"] = m.rank;
    rep.results["kernel_dim"] = 252 - m.rank;
    rep.results["grid_seed"] = m.grid_seed;
    rep.results["n_samples"] = m.n_samples;
    rep.results["canonical_columns"] = true;
    return rep;
}

} // namespace fo52lab
