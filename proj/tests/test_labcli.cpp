#include "doctest.h"

#include "fo52/errors.hpp"
#include "fo52/serialize.hpp"
#include "labcli/experiments.hpp"
#include "labcli/report.hpp"

#include "test_util.hpp"

using namespace fo52;

TEST_SUITE_BEGIN("labcli");

TEST_CASE("experiment output is deterministic apart from the clock") {
    fo52lab::ExperimentReport a = fo52lab::run_jacobi(1);
    fo52lab::ExperimentReport b = fo52lab::run_jacobi(1);
    a.runtime_ms = 0;
    b.runtime_ms = 0;
    CHECK(a.to_json() == b.to_json());
    CHECK(a.anomalies == 0);
    CHECK(a.results.at("jacobi_class_zero").get<bool>());
    CHECK(a.results.at("bracket_nonzero").get<bool>());
}

TEST_CASE("csv layout: alphabetical key union, rows ordered by trial") {
    fo52lab::ExperimentReport rep;
    rep.rows.push_back({{"trial", 1}, {"note", "x,y"}});
    rep.rows.push_back({{"trial", 0}, {"a", 2}});
    CHECK(rep.to_csv() == "a,note,trial\n2,,0\n,\"x,y\",1\n");
}

TEST_CASE("csv cells quote embedded quotes and newlines") {
    fo52lab::ExperimentReport rep;
    rep.rows.push_back({{"trial", 0}, {"msg", "he said \"hi\"\nbye"}});
    CHECK(rep.to_csv() == "msg,trial\n\"he said \"\"hi\"\"\nbye\",0\n");
}

TEST_CASE("compatibility driver reports both regimes") {
    const fo52lab::ExperimentReport big = fo52lab::run_compat(1, 4);
    CHECK(big.results.at("compatible").get<bool>());
    CHECK(big.results.at("shared_dim").get<unsigned>() == 4);
    CHECK(big.anomalies == 0);

    const fo52lab::ExperimentReport small = fo52lab::run_compat(1, 0);
    CHECK_FALSE(small.results.at("compatible").get<bool>());
    CHECK(small.results.at("shared_dim").get<unsigned>() == 0);
    CHECK(small.anomalies == 0);
}

TEST_CASE("multivector json round trip") {
    Prng rng(51);
    const PolyMultivector p = testutil::random_bivector(rng, 2);
    CHECK(multivector_from_json(multivector_to_json(p)) == p);
    // The zero field keeps its shape through the degree tag.
    const PolyMultivector zero(3, 3);
    const PolyMultivector back = multivector_from_json(multivector_to_json(zero));
    CHECK(back == zero);
    CHECK(back.grade() == 3);
    CHECK(back.coeff_degree() == 3);
}

TEST_CASE("multivector json rejects malformed input") {
    CHECK_THROWS_AS(multivector_from_json("not json at all"), ParseError);
    CHECK_THROWS_AS(multivector_from_json("{\"grade\": 2}"), ParseError);
    // Exponent vector of the wrong arity.
    CHECK_THROWS_AS(
        multivector_from_json("{\"grade\":2,\"coeff_degree\":2,\"components\":"
                              "[{\"index\":[0,1],\"poly\":[{\"exp\":[2,0,0],\"coeff\":\"1\"}]}]}"),
        ParseError);
    // Coefficient degree disagrees with the exponents.
    CHECK_THROWS_AS(
        multivector_from_json("{\"grade\":2,\"coeff_degree\":2,\"components\":"
                              "[{\"index\":[0,1],\"poly\":[{\"exp\":[1,0,0,0,0],\"coeff\":\"1\"}]}]}"),
        ParseError);
}

TEST_CASE("fixture json round trip") {
    const Fixture fx = make_fixture(4);
    const Fixture back = fixture_from_json(fixture_to_json(fx));
    CHECK(back.seed == fx.seed);
    CHECK(back.w.space == fx.w.space);
    CHECK(back.w.plucker == fx.w.plucker);
    REQUIRE(back.planes.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(back.planes[i].plane == fx.planes[i].plane);
        CHECK(back.planes[i].pluck == fx.planes[i].pluck);
    }
    CHECK_THROWS_AS(fixture_from_json("{\"seed\": 1}"), ParseError);
}

TEST_CASE("pi52 json round trip preserves exact entries") {
    Pi52Map m;
    m.grid_seed = 7;
    m.n_samples = 30;
    m.rank = 126; // stored claim; certification re-derives it
    m.sample_points = pi52_sample_grid(7, 30);
    m.matrix = QMat(150, 252);
    m.matrix.at(0, 0) = rat_of(-3, 7);
    m.matrix.at(149, 251) = rat_of(22, 5);
    m.matrix.at(77, 100) = Rat(4);
    const Pi52Map back = pi52_from_json(pi52_to_json(m));
    CHECK(back.grid_seed == m.grid_seed);
    CHECK(back.n_samples == m.n_samples);
    CHECK(back.rank == m.rank);
    CHECK(back.matrix == m.matrix);
    CHECK(back.sample_points == m.sample_points);
}

TEST_CASE("certification rejects a rank-deficient matrix") {
    Pi52Map m;
    m.grid_seed = 7;
    m.n_samples = 30;
    m.rank = 126;
    m.sample_points = pi52_sample_grid(7, 30);
    m.matrix = QMat(150, 252); // all zero: canonical but rank 0
    CHECK_THROWS_AS(require_certified(m), RankDeficit);
}

TEST_CASE("pi52 json rejects malformed and mislabeled input") {
    CHECK_THROWS_AS(pi52_from_json("{"), ParseError);
    CHECK_THROWS_AS(pi52_from_json("{\"format\":\"other.v9\",\"grid_seed\":7,"
                                   "\"n_samples\":30,\"rank\":126,\"columns\":[]}"),
                    ParseError);
}

TEST_CASE("missing files surface as input errors") {
    CHECK_THROWS_AS(load_text_file("/nonexistent/fo52/file.json"), ParseError);
}

TEST_SUITE_END();
