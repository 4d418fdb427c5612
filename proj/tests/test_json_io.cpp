#include <doctest.h>

#include <octjordan/json_io.hpp>

#include "test_support.hpp"

using namespace octjordan;
using namespace octjordan::testing;

TEST_CASE("json_io: vector and matrix round trip") {
    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 50; ++trial) {
        const bool quadext = trial % 2 == 1;
        const OctVector v{random_octonion(rng, quadext), random_octonion(rng, quadext),
                          random_octonion(rng, quadext)};
        io::JsonWriter wv(trial % 3 == 0);
        io::write_vector(wv, v);
        REQUIRE(io::vector_from_json_text(wv.str()) == v);

        const JordanMatrix A(random_scalar(rng, quadext), random_scalar(rng, quadext),
                             random_scalar(rng, quadext), random_octonion(rng, quadext),
                             random_octonion(rng, quadext), random_octonion(rng, quadext));
        io::JsonWriter wm(false);
        io::write_matrix(wm, A);
        REQUIRE(io::matrix_from_json_text(wm.str()) == A);
    }
}

TEST_CASE("json_io: params round trip and integer convenience") {
    const SolverParams p{Scalar(1, 2), Scalar(-3), Scalar::sqrt5(), Scalar(0), Scalar(7, 5),
                         Scalar(2)};
    io::JsonWriter w(true);
    io::write_params(w, p);
    CHECK(io::params_from_json_text(w.str()) == p);

    const auto q = io::params_from_json_text(
        R"({"b1": 1, "b4": 0, "b7": 0, "p": -2, "m": 0, "n": 3})");
    CHECK(q.b1 == Scalar(1));
    CHECK(q.p == Scalar(-2));
    CHECK(q.n == Scalar(3));
}

TEST_CASE("json_io: parse errors name the problem") {
    CHECK_THROWS_AS(io::vector_from_json_text("not json"), ParseError);
    CHECK_THROWS_AS(io::octonion_from_json_text(R"({"coeffs": ["1","2","3"]})"), ParseError);
    CHECK_THROWS_AS(io::octonion_from_json_text(
                        R"({"coeffs": ["1","2","3","4","5","6","7","oops"]})"),
                    ParseError);
}

TEST_CASE("json_io: float vector accepts numbers and scalar strings") {
    const auto v = io::float_vector_from_json_text(R"({
        "x": {"coeffs": [0, 1.5, 0, 0, 0, 0, 0, 0]},
        "y": {"coeffs": ["1/2", 0, "sqrt5", 0, 0, 0, 0, 0]},
        "z": {"coeffs": [0, 0, 0, 0, 0, 0, 0, 1]}
    })");
    CHECK(v.x.coeff(1) == 1.5);
    CHECK(v.y.coeff(0) == 0.5);
    CHECK(v.y.coeff(2) == Scalar::sqrt5().to_double());
    CHECK(v.z.coeff(7) == 1.0);
}

TEST_CASE("json_io: deterministic float formatting") {
    CHECK(io::float_repr(0.5) == "0.5");
    // the double nearest sqrt5 is exactly 2.23606797749978980505...
    CHECK(io::float_repr(2.2360679774997896) == "2.2360679774997898");
    io::JsonWriter w(false);
    w.begin_object().key("v").value(1.0 / 3.0).end_object();
    CHECK(w.str() == R"({"v":0.33333333333333331})");
}
