#include "doctest.h"

#include "fo52/errors.hpp"
#include "fo52/euler.hpp"
#include "fo52/multivector.hpp"

#include "test_util.hpp"

using namespace fo52;
using testutil::random_bivector;
using testutil::random_linear;
using testutil::random_poly;
using testutil::random_qmat;

namespace {

Poly jacobiator(const PolyMultivector& p, const Poly& f, const Poly& g, const Poly& h) {
    return poisson_of_functions(p, f, poisson_of_functions(p, g, h)) +
           poisson_of_functions(p, g, poisson_of_functions(p, h, f)) +
           poisson_of_functions(p, h, poisson_of_functions(p, f, g));
}

} // namespace

TEST_SUITE_BEGIN("schouten");

TEST_CASE("convention lock: <[p,p], df dg dh> = 2 Jacobiator") {
    // This equality pins the pairing normalization once and for all. Every
    // downstream vanishing statement reads through it, so it is checked on
    // many draws and on more than one coefficient degree.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Prng rng(seed);
        const PolyMultivector p = random_bivector(rng, 2);
        const Poly f = random_linear(rng);
        const Poly g = random_linear(rng);
        const Poly h = random_linear(rng);
        const PolyMultivector pp = schouten_bracket(p, p);
        CHECK(contract3(pp, f, g, h) == jacobiator(p, f, g, h) * Rat(2));
    }
    // Quadratic arguments exercise the second-derivative cancellations.
    for (std::uint64_t seed = 21; seed <= 24; ++seed) {
        Prng rng(seed);
        const PolyMultivector p = random_bivector(rng, 2);
        const Poly f = random_poly(rng, 2);
        const Poly g = random_poly(rng, 2);
        const Poly h = random_linear(rng);
        CHECK(contract3(schouten_bracket(p, p), f, g, h) == jacobiator(p, f, g, h) * Rat(2));
    }
    // Degree-1 bivectors too: the identity is a property of the convention,
    // not of quadratic coefficients specifically.
    Prng rng(99);
    const PolyMultivector p1 = random_bivector(rng, 1);
    const Poly f = random_linear(rng), g = random_linear(rng), h = random_linear(rng);
    CHECK(contract3(schouten_bracket(p1, p1), f, g, h) == jacobiator(p1, f, g, h) * Rat(2));
}

TEST_CASE("bracket is symmetric and bilinear on bivectors") {
    Prng rng(31);
    const PolyMultivector p = random_bivector(rng, 2);
    const PolyMultivector q = random_bivector(rng, 2);
    const PolyMultivector r = random_bivector(rng, 2);
    CHECK(schouten_bracket(p, q) == schouten_bracket(q, p));
    CHECK(schouten_bracket(p, q + r) == schouten_bracket(p, q) + schouten_bracket(p, r));
    CHECK(schouten_bracket(p, q * Rat(7)) == schouten_bracket(p, q) * Rat(7));
    const PolyMultivector pq = schouten_bracket(p, q);
    CHECK(pq.grade() == 3);
    CHECK(pq.coeff_degree() == 3);
}

TEST_CASE("poisson bracket is antisymmetric and Leibniz") {
    Prng rng(32);
    const PolyMultivector p = random_bivector(rng, 2);
    const Poly f = random_poly(rng, 2);
    const Poly g = random_linear(rng);
    const Poly h = random_linear(rng);
    CHECK(poisson_of_functions(p, f, g) == -poisson_of_functions(p, g, f));
    CHECK(poisson_of_functions(p, f, f).is_zero());
    CHECK(poisson_of_functions(p, f, g * h) ==
          poisson_of_functions(p, f, g) * h + g * poisson_of_functions(p, f, h));
}

TEST_CASE("multivector wedge grades add and supercommute") {
    Prng rng(33);
    const PolyMultivector x = PolyMultivector::linear_field(random_qmat(rng, 5, 5));
    const PolyMultivector y = PolyMultivector::linear_field(random_qmat(rng, 5, 5));
    const PolyMultivector p = random_bivector(rng, 1);

    const PolyMultivector xy = mv_wedge(x, y);
    CHECK(xy.grade() == 2);
    CHECK(xy.coeff_degree() == 2);
    CHECK(xy == mv_wedge(y, x) * Rat(-1)); // odd grades anticommute
    CHECK(mv_wedge(x, x).is_zero());

    CHECK(mv_wedge(x, p) == mv_wedge(p, x)); // (-1)^{1·2} = +1
    CHECK(mv_wedge(p, p).grade() == 4);
}

TEST_CASE("euler field scales by degree minus grade") {
    Prng rng(34);
    const PolyMultivector e = PolyMultivector::euler_field();
    const PolyMultivector p1 = random_bivector(rng, 1);
    const PolyMultivector p2 = random_bivector(rng, 2);
    CHECK(lie_derivative(e, p1) == p1 * Rat(-1));
    CHECK(lie_derivative(e, p2).is_zero());
    const PolyMultivector p3 = random_bivector(rng, 3);
    CHECK(lie_derivative(e, p3) == p3);
}

TEST_CASE("reducer dimension table") {
    const EulerReducer& r2 = EulerReducer::for_grade(2);
    const EulerReducer& r3 = EulerReducer::for_grade(3);
    const EulerReducer& r4 = EulerReducer::for_grade(4);
    CHECK(r2.ambient_dim() == 150);
    CHECK(r2.trivial_dim() == 24);
    CHECK(r2.class_dim() == 126);
    CHECK(r3.ambient_dim() == 350);
    CHECK(r3.trivial_dim() == 126);
    CHECK(r3.class_dim() == 224);
    CHECK(r4.ambient_dim() == 350);
    CHECK(r4.trivial_dim() == 224);
    CHECK(r4.class_dim() == 126);

    // Chain: triv_g = E∧(lower fields) and ker(E∧·) = triv_{g-1}, so
    // trivial(g) = ambient(g-1) - trivial(g-1), anchored at grade 1 where
    // the fields are x↦Ax and only E itself is "trivial".
    const std::size_t ambient1 = flat_len(1, 1);
    CHECK(ambient1 == 25);
    CHECK(r2.trivial_dim() == ambient1 - 1);
    CHECK(r3.trivial_dim() == r2.ambient_dim() - r2.trivial_dim());
    CHECK(r4.trivial_dim() == r3.ambient_dim() - r3.trivial_dim());
}

TEST_CASE("class dimension matches the weight formula") {
    // Independent oracle: dim of the gl(5) highest-weight module with
    // lambda = (3,3,2,2,0) by the product formula
    // prod_{i<j} (l_i - l_j + j - i)/(j - i). Quadratic bivector classes on
    // Q^5 modulo the trivial family form exactly this module.
    const int lambda[5] = {3, 3, 2, 2, 0};
    Rat dim(1);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            dim *= rat_of(lambda[i] - lambda[j] + j - i, j - i);
    CHECK(dim == Rat(126));
    CHECK(EulerReducer::for_grade(2).class_dim() == 126);
}

TEST_CASE("trivial family reduces to the zero class") {
    Prng rng(35);
    for (int t = 0; t < 5; ++t) {
        const QMat a = random_qmat(rng, 5, 5);
        const PolyMultivector triv =
            mv_wedge(PolyMultivector::euler_field(), PolyMultivector::linear_field(a));
        CHECK(triv.grade() == 2);
        CHECK(triv.coeff_degree() == 2);
        CHECK(euler_reduce(triv, EulerReducer::for_grade(2)).is_zero());
    }
}

TEST_CASE("bracket with a trivial bivector lands in the trivial trivectors") {
    // Well-definedness of the class-level bracket: [x∧Ax, p] = ±E∧(L_A p)
    // lies in triv_3, so brackets descend to classes.
    Prng rng(36);
    for (int t = 0; t < 4; ++t) {
        const QMat a = random_qmat(rng, 5, 5);
        const PolyMultivector triv =
            mv_wedge(PolyMultivector::euler_field(), PolyMultivector::linear_field(a));
        const PolyMultivector p = random_bivector(rng, 2);
        const PolyMultivector br = schouten_bracket(triv, p);
        CHECK(euler_reduce(br, EulerReducer::for_grade(3)).is_zero());
    }
}

TEST_CASE("euler reduction is idempotent and respects cosets") {
    Prng rng(37);
    const EulerReducer& r2 = EulerReducer::for_grade(2);
    const PolyMultivector p = random_bivector(rng, 2);
    const MultivectorClass c = euler_reduce(p, r2);
    CHECK(euler_reduce(c.rep(), r2) == c);
    const QMat a = random_qmat(rng, 5, 5);
    const PolyMultivector shifted =
        p + mv_wedge(PolyMultivector::euler_field(), PolyMultivector::linear_field(a));
    CHECK(euler_reduce(shifted, r2) == c);
    CHECK(class_span_dim({c, euler_reduce(shifted, r2)}) == 1);
    CHECK(class_span_dim({c, euler_reduce(p * Rat(3), r2)}) == 1);
}

TEST_CASE("reduction rejects mismatched shapes") {
    Prng rng(38);
    const PolyMultivector wrong_degree = random_bivector(rng, 1);
    CHECK_THROWS_AS(euler_reduce(wrong_degree, EulerReducer::for_grade(2)), GradeMismatch);
    const PolyMultivector p = random_bivector(rng, 2);
    CHECK_THROWS_AS(euler_reduce(p, EulerReducer::for_grade(3)), GradeMismatch);
}

TEST_CASE("flatten and from_flat are inverse") {
    Prng rng(39);
    const PolyMultivector p = random_bivector(rng, 2);
    const std::vector<Rat> flat = p.flatten();
    REQUIRE(flat.size() == flat_len(2, 2));
    CHECK(PolyMultivector::from_flat(2, 2, flat) == p);
}

TEST_CASE("contraction is alternating in the three functions") {
    Prng rng(40);
    const PolyMultivector t =
        schouten_bracket(random_bivector(rng, 2), random_bivector(rng, 2));
    const Poly f = random_linear(rng), g = random_linear(rng), h = random_linear(rng);
    CHECK(contract3(t, f, g, h) == -contract3(t, g, f, h));
    CHECK(contract3(t, f, g, h) == -contract3(t, f, h, g));
    CHECK(contract3(t, f, f, h).is_zero());
}

TEST_SUITE_END();
