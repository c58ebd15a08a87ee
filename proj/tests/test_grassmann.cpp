#include "doctest.h"

#include "fo52/errors.hpp"
#include "fo52/grassmann.hpp"

#include "test_util.hpp"

using namespace fo52;

namespace {

QSubspace lambda2_of(const std::vector<std::vector<Rat>>& basis) {
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            rows.push_back(plucker_of_plane(basis[i], basis[j]).dense());
    QMat m(rows.size(), 10);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return QSubspace::from_rows(m);
}

std::vector<Rat> unit5(unsigned i) {
    std::vector<Rat> v(5, Rat(0));
    v[i] = Rat(1);
    return v;
}

} // namespace

TEST_SUITE_BEGIN("grassmann");

TEST_CASE("plane points canonicalize their presentation") {
    const std::vector<Rat> u{Rat(1), Rat(2), Rat(0), Rat(-1), Rat(3)};
    const std::vector<Rat> v{Rat(0), Rat(1), Rat(1), Rat(2), Rat(-2)};
    const PlanePoint a = PlanePoint::from_rows(u, v);
    std::vector<Rat> uv(5);
    for (int i = 0; i < 5; ++i) uv[i] = u[i] + Rat(3) * v[i];
    const PlanePoint b = PlanePoint::from_rows(uv, v);
    CHECK(a.plane == b.plane);
    CHECK(a.pluck == b.pluck);
    CHECK(is_decomposable(a.pluck));
    CHECK(a.plane.dim() == 2);
    CHECK_THROWS_AS(PlanePoint::from_rows(u, u), DependentVectors);
}

TEST_CASE("fixtures are deterministic and in general position") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Fixture fx = make_fixture(seed);
        CHECK(fx.seed == seed);
        REQUIRE(fx.planes.size() == 5);
        CHECK(fx.w.space.dim() == 5);
        for (const PlanePoint& lam : fx.planes)
            CHECK(fx.w.space.contains(lam.pluck.dense()));
        // Pairwise general position: no two generator planes meet.
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j)
                CHECK_FALSE(wedge(fx.planes[i].pluck, fx.planes[j].pluck).is_zero());

        const Fixture again = make_fixture(seed);
        CHECK(again.w.space == fx.w.space);
        CHECK(again.w.plucker == fx.w.plucker);
        for (std::size_t i = 0; i < 5; ++i) CHECK(again.planes[i].plane == fx.planes[i].plane);
    }
    CHECK_FALSE(make_fixture(1).w.space == make_fixture(2).w.space);
}

TEST_CASE("point on plane is the stated combination") {
    const Fixture fx = make_fixture(1);
    const PlanePoint& lam = fx.planes[0];
    const std::vector<Rat> p = point_on_plane(lam, Rat(2), Rat(-1));
    for (int i = 0; i < 5; ++i)
        CHECK(p[i] == Rat(2) * lam.plane.basis().at(0, i) - lam.plane.basis().at(1, i));
    CHECK(lam.plane.contains(p));
}

TEST_CASE("shared pairs hit every prescribed intersection dimension") {
    for (unsigned k = 0; k <= 5; ++k) {
        const SharedPair pr = make_pair_sharing(3, k);
        CHECK(pr.k == k);
        CHECK(pr.base.w.space.dim() == 5);
        CHECK(pr.wprime.space.dim() == 5);
        const QSubspace shared = subspace_meet(pr.base.w.space, pr.wprime.space);
        CHECK(shared.dim() == k);
        CHECK(subspace_join(pr.base.w.space, pr.wprime.space).dim() == 10 - k);
    }
    const SharedPair same = make_pair_sharing(3, 5);
    CHECK(same.wprime.space == same.base.w.space);
    const SharedPair four = make_pair_sharing(7, 4);
    CHECK(subspace_join(four.base.w.space, four.wprime.space).dim() == 6);
    CHECK_THROWS(make_pair_sharing(1, 6));
}

TEST_CASE("plane wedge V has dimension 7 and the expected members") {
    const Fixture fx = make_fixture(2);
    const PlanePoint& lam = fx.planes[1];
    const QSubspace pv = plane_wedge_v(lam);
    CHECK(pv.dim() == 7);
    CHECK(pv.contains(lam.pluck.dense()));
    const std::vector<Rat> l1 = point_on_plane(lam, Rat(1), Rat(0));
    const std::vector<Rat> l2 = point_on_plane(lam, Rat(0), Rat(1));
    for (unsigned i = 0; i < 5; ++i) {
        const std::vector<Rat> e = unit5(i);
        if (!lam.plane.contains(e)) {
            CHECK(pv.contains(plucker_of_plane(l1, e).dense()));
            CHECK(pv.contains(plucker_of_plane(l2, e).dense()));
        }
    }
}

TEST_CASE("distribution at curve points is a 2-dim space through the point") {
    const Fixture fx = make_fixture(1);
    for (const PlanePoint& lam : fx.planes) {
        const QSubspace d = distribution_D(fx.w, lam);
        CHECK(d.dim() == 2);
        CHECK(d.contains(lam.pluck.dense()));
        CHECK(fx.w.space.contains_subspace(d));
        CHECK_FALSE(in_sigma(fx.w, lam));
    }
}

TEST_CASE("a subspace built inside plane wedge V lies in the jump locus") {
    // W = span{e01, e02, e03, e23, e24} meets (e0,e1-plane)∧V in exactly
    // span{e01, e02, e03}: dimension 3 means jump.
    QMat rows(5, 10);
    const ExtBasis& b2 = ExtBasis::get(5, 2);
    rows.at(0, b2.pos_of(mask_of({0, 1}))) = Rat(1);
    rows.at(1, b2.pos_of(mask_of({0, 2}))) = Rat(1);
    rows.at(2, b2.pos_of(mask_of({0, 3}))) = Rat(1);
    rows.at(3, b2.pos_of(mask_of({2, 3}))) = Rat(1);
    rows.at(4, b2.pos_of(mask_of({2, 4}))) = Rat(1);
    const WSubspace w = WSubspace::from_span(rows);
    const PlanePoint lam = PlanePoint::from_rows(unit5(0), unit5(1));
    CHECK(distribution_D(w, lam).dim() == 3);
    CHECK(in_sigma(w, lam));
}

TEST_CASE("W meets the plane wedges of a 3-space only in the plucker line") {
    const Fixture fx = make_fixture(3);
    const PlanePoint& lam = fx.planes[0];
    const std::vector<Rat> l1 = point_on_plane(lam, Rat(1), Rat(0));
    const std::vector<Rat> l2 = point_on_plane(lam, Rat(0), Rat(1));
    for (unsigned i = 0; i < 5; ++i) {
        const std::vector<Rat> e = unit5(i);
        if (lam.plane.contains(e)) continue;
        const QSubspace l2m = lambda2_of({l1, l2, e});
        REQUIRE(l2m.dim() == 3);
        const QSubspace cut = subspace_meet(fx.w.space, l2m);
        CHECK(cut.dim() == 1);
        CHECK(cut.contains(lam.pluck.dense()));
        break;
    }
}

TEST_CASE("tangent lines of the curve") {
    const Fixture fx = make_fixture(1);
    for (const PlanePoint& lam : fx.planes) {
        const QSubspace t = tangent_line_at(fx.w, lam);
        CHECK(t.dim() == 2);
        CHECK(t.contains(lam.pluck.dense()));
        CHECK(fx.w.space.contains_subspace(t));
    }
    // Presentation of the same plane through different spanning vectors
    // changes nothing.
    const PlanePoint& lam = fx.planes[2];
    const PlanePoint rebased = PlanePoint::from_rows(point_on_plane(lam, Rat(2), Rat(5)),
                                                     point_on_plane(lam, Rat(1), Rat(3)));
    CHECK(rebased.plane == lam.plane);
    CHECK(tangent_line_at(fx.w, rebased) == tangent_line_at(fx.w, lam));

    // A plane whose plucker is not in W is rejected.
    const Fixture other = make_fixture(2);
    CHECK_THROWS_AS(tangent_line_at(fx.w, other.planes[0]), Error);
}

TEST_CASE("the tangent family subspace") {
    const Fixture fx = make_fixture(1);
    const QSubspace tw = t_w_subspace(fx.w);
    CHECK(tw.ambient_dim() == 252);
    CHECK(tw.dim() == 26);
    CHECK(tw.contains(fx.w.plucker.dense()));
    // A 5-dim subspace sharing a 4-dim piece with W has its plucker inside:
    // its top wedge factors through Λ⁴(W∩W′) ⊂ Λ⁴W.
    const SharedPair pr = make_pair_sharing(1, 4);
    const QSubspace tw_base = t_w_subspace(pr.base.w);
    CHECK(tw_base.contains(pr.wprime.plucker.dense()));
    // Sharing only 3 dimensions generically leaves the plucker outside.
    const SharedPair pr3 = make_pair_sharing(1, 3);
    CHECK_FALSE(t_w_subspace(pr3.base.w).contains(pr3.wprime.plucker.dense()));
}

TEST_SUITE_END();
