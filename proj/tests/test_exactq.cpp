#include "doctest.h"

#include "fo52/errors.hpp"
#include "fo52/qmat.hpp"
#include "fo52/rat.hpp"

#include "test_util.hpp"

using namespace fo52;
using testutil::random_qmat;

TEST_SUITE_BEGIN("exactq");

TEST_CASE("rational parse and print round trip") {
    CHECK(rat_str(rat_parse("3/6")) == "1/2");
    CHECK(rat_str(rat_parse("-4/2")) == "-2");
    CHECK(rat_str(rat_parse("0/7")) == "0");
    CHECK(rat_parse("7") == Rat(7));
    CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
    CHECK_THROWS_AS(rat_parse("a/2"), ParseError);
    CHECK_THROWS_AS(rat_parse(""), ParseError);
    CHECK_THROWS_AS(rat_parse("1/ 2"), ParseError);
}

TEST_CASE("rref of a frozen dependent system") {
    // By hand: [[2,4],[1,2]] -> first pivot scales to [1,2], second row
    // eliminates to zero.
    const QMat m = QMat::from_rows({{Rat(2), Rat(4)}, {Rat(1), Rat(2)}});
    const RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.mat.at(0, 0) == Rat(1));
    CHECK(r.mat.at(0, 1) == Rat(2));
    CHECK(r.mat.at(1, 0) == Rat(0));
    CHECK(r.mat.at(1, 1) == Rat(0));
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent and rank respects transpose") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Prng rng(seed);
        const QMat m = random_qmat(rng, 5, 7);
        const RrefResult r = rref(m);
        const RrefResult rr2 = rref(r.mat);
        CHECK(rr2.mat == r.mat);
        CHECK(rr2.rank == r.rank);
        CHECK(rref(m.transpose()).rank == r.rank);
    }
}

TEST_CASE("kernel vectors satisfy the system exactly") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Prng rng(seed + 100);
        const QMat m = random_qmat(rng, 4, 9);
        const QSubspace k = kernel(m);
        CHECK(k.dim() + rref(m).rank == m.cols());
        for (std::size_t i = 0; i < k.dim(); ++i) {
            const std::vector<Rat> mv = m.mul_vec(k.basis().row(i));
            for (const Rat& c : mv) CHECK(rat_is_zero(c));
        }
    }
}

TEST_CASE("kernel of a frozen single equation") {
    // x0 + x1 = 0 in Q^3: kernel is 2-dim, canonical basis rows are RREF'd.
    const QMat m = QMat::from_rows({{Rat(1), Rat(1), Rat(0)}});
    const QSubspace k = kernel(m);
    REQUIRE(k.dim() == 2);
    const QMat expect =
        QMat::from_rows({{Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
    CHECK(k.basis() == expect);
}

TEST_CASE("row space is basis independent") {
    Prng rng(7);
    const QMat m = random_qmat(rng, 3, 6);
    QMat shuffled(3, 6);
    shuffled.set_row(0, m.row(2));
    shuffled.set_row(1, m.row(0));
    shuffled.set_row(2, m.row(1));
    CHECK(QSubspace::from_rows(m) == QSubspace::from_rows(shuffled));

    // Row operations do not change the space either.
    QMat combo(3, 6);
    combo.set_row(0, m.row(0));
    std::vector<Rat> r1 = m.row(1);
    for (std::size_t j = 0; j < 6; ++j) r1[j] += Rat(3) * m.at(0, j);
    combo.set_row(1, r1);
    combo.set_row(2, m.row(2));
    CHECK(QSubspace::from_rows(m) == QSubspace::from_rows(combo));
}

TEST_CASE("determinant matches cofactor expansion") {
    // Independent oracle: recursive cofactor expansion along the first row.
    struct Cofactor {
        static Rat det(const QMat& m, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols) {
            if (rows.size() == 1) return m.at(rows[0], cols[0]);
            Rat acc(0);
            for (std::size_t j = 0; j < cols.size(); ++j) {
                std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
                std::vector<std::size_t> sub_cols;
                for (std::size_t t = 0; t < cols.size(); ++t)
                    if (t != j) sub_cols.push_back(cols[t]);
                const Rat minor = det(m, sub_rows, sub_cols);
                acc += Rat(j % 2 == 0 ? 1 : -1) * m.at(rows[0], cols[j]) * minor;
            }
            return acc;
        }
    };
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Prng rng(seed + 200);
        const QMat m = random_qmat(rng, 4, 4);
        CHECK(qmat_det(m) == Cofactor::det(m, {0, 1, 2, 3}, {0, 1, 2, 3}));
    }
}

TEST_CASE("determinant is multiplicative") {
    Prng rng(55);
    const QMat a = random_qmat(rng, 3, 3);
    const QMat b = random_qmat(rng, 3, 3);
    CHECK(qmat_det(a.mul(b)) == qmat_det(a) * qmat_det(b));
}

TEST_CASE("meet and join obey the dimension law") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Prng rng(seed + 300);
        const QSubspace a = QSubspace::from_rows(random_qmat(rng, 3, 8));
        const QSubspace b = QSubspace::from_rows(random_qmat(rng, 4, 8));
        const QSubspace m = subspace_meet(a, b);
        const QSubspace j = subspace_join(a, b);
        CHECK(a.dim() + b.dim() == m.dim() + j.dim());
        CHECK(a.contains_subspace(m));
        CHECK(b.contains_subspace(m));
        CHECK(j.contains_subspace(a));
        CHECK(j.contains_subspace(b));
        // Meet is the largest common subspace: every common vector reduces to
        // zero against it.
        for (std::size_t i = 0; i < m.dim(); ++i) {
            CHECK(a.contains(m.basis().row(i)));
            CHECK(b.contains(m.basis().row(i)));
        }
    }
}

TEST_CASE("meet with zero and join with full are absorbing") {
    Prng rng(77);
    const QSubspace a = QSubspace::from_rows(random_qmat(rng, 3, 6));
    CHECK(subspace_meet(a, QSubspace::zero(6)).dim() == 0);
    CHECK(subspace_join(a, QSubspace::full(6)) == QSubspace::full(6));
    CHECK(subspace_meet(a, QSubspace::full(6)) == a);
    CHECK(subspace_join(a, QSubspace::zero(6)) == a);
}

TEST_CASE("reduce annihilates members and is idempotent") {
    Prng rng(88);
    const QSubspace a = QSubspace::from_rows(random_qmat(rng, 3, 7));
    // A combination of basis rows reduces to zero.
    std::vector<Rat> v(7, Rat(0));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < 7; ++j) v[j] += Rat(long(i) + 2) * a.basis().at(i, j);
    CHECK(a.contains(v));
    const std::vector<Rat> res = a.reduce(v);
    for (const Rat& c : res) CHECK(rat_is_zero(c));

    const std::vector<Rat> w = testutil::random_vec(rng, 7);
    CHECK(a.reduce(a.reduce(w)) == a.reduce(w));
}

TEST_SUITE_END();
