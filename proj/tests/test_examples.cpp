#include <doctest.h>

#include <fstream>

#include <octjordan/examples.hpp>
#include <octjordan/oracle.hpp>

#include "test_support.hpp"

using namespace octjordan;
using namespace octjordan::examples;
using namespace octjordan::testing;

TEST_CASE("examples: expression evaluator") {
    const std::map<std::string, Scalar> syms{{"p", Scalar(2)}, {"t", Scalar(1, 2)}};
    CHECK(evaluate_expression("3/4", {}) == Scalar(3, 4));
    CHECK(evaluate_expression("(1-t*t)/(1+t*t)", syms) == Scalar(3, 5));
    CHECK(evaluate_expression("2*t/(1+t*t)", syms) == Scalar(4, 5));
    CHECK(evaluate_expression("-p*sqrt5/2", syms) == Scalar::quadext(Rational(0), Rational(-1)));
    CHECK(evaluate_expression("sqrt5*sqrt5", {}) == Scalar(5));
    CHECK_THROWS_AS(evaluate_expression("p+", syms), ParseError);
    CHECK_THROWS_AS(evaluate_expression("q", syms), ParseError);
    CHECK_THROWS_AS(evaluate_expression("1/(t-t)", syms), ParseError);
}

TEST_CASE("examples: unit-circle parametrization is exact") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 200; ++trial) {
        const Example1Params params{Scalar(0), Scalar(1), random_rational(rng)};
        const Rational c = params.cos_theta();
        const Rational s = params.sin_theta();
        REQUIRE(c * c + s * s == Rational(1));
    }
}

TEST_CASE("examples: first family verifies for random (p, q, t)") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 25; ++trial) {
        const Example1Params params{random_scalar(rng), random_scalar(rng),
                                    random_rational(rng)};
        // residuals are re-checked exactly inside the loader; reaching here
        // means all six eigenpairs hold
        const auto cases = build_example1(params);
        REQUIRE(cases.size() == 6);

        // eigenvalues match the p +- q conj(s) and p -+ 2q conj(s) families
        const Rational ct = params.cos_theta();
        const Rational st = params.sin_theta();
        Octonion s_bar = Octonion::scalar(Scalar(ct));
        s_bar[Unit::Kl] = Scalar(-st);
        const Octonion p_oct = Octonion::scalar(params.p);
        for (const auto& c : cases) {
            const Octonion qs = s_bar * params.q;
            if (c.id == "u+" || c.id == "v+") REQUIRE(c.pair.eigenvalue == p_oct + qs);
            if (c.id == "u-" || c.id == "v-") REQUIRE(c.pair.eigenvalue == p_oct - qs);
            if (c.id == "w+") REQUIRE(c.pair.eigenvalue == p_oct - qs * Scalar(2));
            if (c.id == "w-") REQUIRE(c.pair.eigenvalue == p_oct + qs * Scalar(2));
        }
    }
}

TEST_CASE("examples: second family verifies over Q(sqrt5) for random (p, q)") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 25; ++trial) {
        const auto cases = build_example2(random_scalar(rng), random_scalar(rng));
        REQUIRE(cases.size() == 6);
    }
}

TEST_CASE("examples: third family verifies for random (p, q)") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 25; ++trial) {
        const auto cases = build_example3(random_scalar(rng), random_scalar(rng));
        REQUIRE(cases.size() == 1);
        REQUIRE(cases[0].id == "v");
    }
}

TEST_CASE("examples: pinned eigenvalues at specific parameters") {
    // first family at t = 0 (s = 1), p = 0, q = 1: the w+ eigenvalue is -2
    const auto ex1 = build_example1({Scalar(0), Scalar(1), Rational(0)});
    for (const auto& c : ex1)
        if (c.id == "w+") CHECK(c.pair.eigenvalue == Octonion::scalar(Scalar(-2)));

    // second family at p = 0, q = 6: the u1 eigenvalue is 3 sqrt5 - 3 kl
    const auto ex2 = build_example2(Scalar(0), Scalar(6));
    Octonion expect = Octonion::scalar(Scalar::quadext(Rational(0), Rational(3)));
    expect[Unit::Kl] = Scalar(-3);
    CHECK(ex2[0].id == "u1");
    CHECK(ex2[0].pair.eigenvalue == expect);

    // third family at p = 0, q = 1: eigenvalue -kl
    const auto ex3 = build_example3(Scalar(0), Scalar(1));
    CHECK(ex3[0].pair.eigenvalue == -Octonion::unit(Unit::Kl));
}

TEST_CASE("examples: the swapped tail reading fails") {
    // Swapping the eigenvalues of the +/- tail variants must break the
    // eigenrelation (both tails share a base vector; only one pairing is
    // an eigenpair).
    const auto cases = build_example1({Scalar(1, 3), Scalar(2), Rational(1, 2)});
    for (std::size_t pair = 0; pair < 3; ++pair) {
        const ExampleCase& plus = cases[2 * pair];
        const ExampleCase& minus = cases[2 * pair + 1];
        const OctVector r1 = residual(plus.matrix, {plus.pair.vector, minus.pair.eigenvalue});
        const OctVector r2 = residual(minus.matrix, {minus.pair.vector, plus.pair.eigenvalue});
        REQUIRE_FALSE(is_zero(r1));
        REQUIRE_FALSE(is_zero(r2));
    }
}

TEST_CASE("examples: a corpus file with a wrong sign fails loudly") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "octjordan_bad_corpus";
    fs::create_directories(dir);
    // the third family with the eigenvalue's kl sign flipped
    std::ofstream(dir / "ex3.json") << R"({
      "example": 3, "symbols": ["p", "q"], "defs": [],
      "matrix": {
        "p": "p", "m": "p", "n": "p",
        "a": {"coeffs": ["0","q","0","0","0","0","0","0"]},
        "b": {"coeffs": ["q","0","0","q","0","0","0","q"]},
        "c": {"coeffs": ["0","0","q","0","0","-q","-q","0"]}
      },
      "cases": [{
        "id": "v",
        "vector": {
          "x": {"coeffs": ["0","0","1","0","0","0","0","0"]},
          "y": {"coeffs": ["0","0","0","0","0","0","0","1"]},
          "z": {"coeffs": ["0","0","0","0","0","0","0","0"]}
        },
        "eigenvalue": {"coeffs": ["p","0","0","0","q","0","0","0"]}
      }]
    })";
    CHECK_THROWS_WITH_AS(build_example3(Scalar(0), Scalar(1), dir),
                         doctest::Contains("nonzero residual"), std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("examples: classification matches the known eligibility") {
    const auto ex1 = build_example1({Scalar(2), Scalar(3), Rational(1, 2)});
    for (const auto& c : ex1) {
        const auto cls = classify_case(c);
        CHECK(cls.re_zero);
        CHECK(cls.associator_kl_multiple);
        if (c.id == "u+" || c.id == "u-") {
            CHECK(cls.associator_zero); // the solver cannot handle these
            CHECK_FALSE(cls.eligible);
        } else {
            CHECK_FALSE(cls.associator_zero);
            CHECK(cls.eligible);
        }
    }

    // every case of the second and third families has a nonzero real part
    // or a vanishing associator
    for (const auto& c : build_example2(Scalar(1), Scalar(2))) {
        const auto cls = classify_case(c);
        CHECK_FALSE(cls.eligible);
        CHECK((!cls.re_zero || cls.associator_zero));
    }
    for (const auto& c : build_example3(Scalar(1), Scalar(2))) {
        const auto cls = classify_case(c);
        CHECK_FALSE(cls.eligible);
        CHECK((!cls.re_zero || cls.associator_zero));
    }
}

TEST_CASE("examples: containment of the first family in the solution family") {
    for (const Rational& t : {Rational(1, 2), Rational(-2, 3), Rational(5, 4), Rational(1)}) {
        const ContainmentInstance inst = example1_containment_instance(t);

        // eigenvalue equals the associator in both frames
        REQUIRE(inst.original_pair.eigenvalue == inst.original_pair.vector.associator());
        REQUIRE(is_zero(residual(inst.original_matrix, inst.original_pair)));
        const OctVector generic_vec = inst.generic_vector.to_vector();
        REQUIRE(is_zero(
            residual(inst.generic_matrix, {generic_vec, inst.generic_vector.associator()})));

        // independent confirmation in the original frame, no basis change:
        // the matrix satisfies the oracle's linear system for (w-, [w-])
        const auto sys = oracle::build_system(inst.original_pair.vector,
                                              inst.original_pair.eigenvalue);
        const auto coords = inst.original_matrix.to_coordinates();
        REQUIRE(satisfies(sys.matrix, sys.rhs,
                          std::vector<Scalar>(coords.begin(), coords.end())));

        // membership decision with witness parameters
        const ContainsResult res = contains(inst.generic_vector, inst.generic_matrix);
        REQUIRE(res.in_family);
        const Scalar two_cos(Rational(2) * Example1Params{Scalar(0), Scalar(0), t}.cos_theta());
        CHECK(res.params->b1.is_zero());
        CHECK(res.params->b4.is_zero());
        CHECK(res.params->b7.is_zero());
        CHECK(res.params->p == two_cos);
        CHECK(res.params->m == two_cos);
        CHECK(res.params->n == two_cos);
    }
    CHECK_THROWS_AS(example1_containment_instance(Rational(0)), DegenerateVector);
}
