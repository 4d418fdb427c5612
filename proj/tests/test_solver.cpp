#include <doctest.h>

#include <octjordan/oracle.hpp>
#include <octjordan/solver.hpp>

#include "test_support.hpp"

using namespace octjordan;
using namespace octjordan::testing;

namespace {

const GenericImaginaryVector kIJL(Scalar(1), Scalar(0), Scalar(1), Scalar(0), Scalar(0),
                                  Scalar(0), Scalar(1));

} // namespace

TEST_CASE("solver: construct for (i, j, l) at zero parameters") {
    // Confirmed against the independent linear solve before freezing the
    // component values below.
    const auto report = oracle::cross_validate(kIJL);
    REQUIRE_MESSAGE(report.ok(), report.witness);

    const JordanMatrix A = construct(kIJL, SolverParams{});
    CHECK(A.b() == -Octonion::unit(Unit::I));
    CHECK(A.a() == -Octonion::unit(Unit::L));
    CHECK(A.c() == -Octonion::unit(Unit::J));
    CHECK(A.p().is_zero());
    CHECK(A.m().is_zero());
    CHECK(A.n().is_zero());
    CHECK(is_zero(residual(A, {kIJL.to_vector(), kIJL.associator()})));
}

TEST_CASE("solver: construct for (i, j, l) keeping diagonal parameters") {
    const SolverParams params{Scalar(0), Scalar(0), Scalar(0),
                              Scalar(5, 3), Scalar(-1, 2), Scalar(7)};
    const JordanMatrix A = construct(kIJL, params);
    // b6 = (m + n - p)/2, b2 = -1, b3 = b5 = b8 = 0
    CHECK(A.b()[Unit::Jl] == (params.m + params.n - params.p) / Scalar(2));
    CHECK(A.b()[Unit::I] == Scalar(-1));
    CHECK(A.b()[Unit::J].is_zero());
    CHECK(A.b()[Unit::Kl].is_zero());
    CHECK(A.b()[Unit::L].is_zero());
    CHECK(is_zero(residual(A, {kIJL.to_vector(), kIJL.associator()})));
}

TEST_CASE("solver: degenerate vectors are rejected") {
    CHECK_THROWS_AS(GenericImaginaryVector(Scalar(1), Scalar(0), Scalar(1), Scalar(0), Scalar(0),
                                           Scalar(0), Scalar(0)),
                    DegenerateVector);
    CHECK_THROWS_AS(GenericImaginaryVector(Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(0),
                                           Scalar(0), Scalar(1)),
                    DegenerateVector);

    OctVector not_generic{Octonion::unit(Unit::J), Octonion::unit(Unit::J),
                          Octonion::unit(Unit::L)};
    CHECK_THROWS_AS(GenericImaginaryVector::from_vector(not_generic), std::invalid_argument);
    OctVector not_imaginary{Octonion::unit(Unit::One) + Octonion::unit(Unit::I),
                            Octonion::unit(Unit::J), Octonion::unit(Unit::L)};
    CHECK_THROWS_AS(GenericImaginaryVector::from_vector(not_imaginary), std::invalid_argument);
}

TEST_CASE("solver: associator accessor agrees with the algebra") {
    std::mt19937_64 rng(149);
    for (int trial = 0; trial < 200; ++trial) {
        const GenericImaginaryVector v = random_generic_vector(rng, trial % 3 == 2);
        REQUIRE(v.associator() == v.to_vector().associator());
    }
}

TEST_CASE("solver: exact eigenrelation on random vectors and parameters") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 400; ++trial) {
        const bool quadext = trial % 8 == 7;
        const GenericImaginaryVector v = random_generic_vector(rng, quadext);
        const SolverParams params = random_params(rng, quadext);
        const JordanMatrix A = construct(v, params);
        REQUIRE(is_zero(residual(A, {v.to_vector(), v.associator()})));
        REQUIRE(A.b()[Unit::Kl].is_zero()); // b5 = 0
        // the reduced single-equation form vanishes as well
        REQUIRE(reduced_constraint_residual(v.to_vector(), v.associator(), A.b(), params.p,
                                            params.m, params.n)
                    .is_zero());
    }
}

TEST_CASE("solver: construct is affine in the parameters") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const GenericImaginaryVector v = random_generic_vector(rng);
        const SolverParams P = random_params(rng);
        const SolverParams Q = random_params(rng);
        const Scalar alpha = random_scalar(rng);
        SolverParams mix;
        const Scalar beta = Scalar(1) - alpha;
        mix.b1 = alpha * P.b1 + beta * Q.b1;
        mix.b4 = alpha * P.b4 + beta * Q.b4;
        mix.b7 = alpha * P.b7 + beta * Q.b7;
        mix.p = alpha * P.p + beta * Q.p;
        mix.m = alpha * P.m + beta * Q.m;
        mix.n = alpha * P.n + beta * Q.n;
        const JordanMatrix lhs = construct(v, mix);
        const JordanMatrix rhs = construct(v, P) * alpha + construct(v, Q) * beta;
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("solver: family_map matches construct and has rank six") {
    std::mt19937_64 rng(67);
    const GenericImaginaryVector v = random_generic_vector(rng);
    const FamilyMap map = family_map(v);
    for (int trial = 0; trial < 100; ++trial) {
        const SolverParams params = random_params(rng);
        REQUIRE(map.evaluate(params) == construct(v, params));
    }
}

TEST_CASE("solver: contains round trip and rejection") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const bool quadext = trial % 4 == 3;
        const GenericImaginaryVector v = random_generic_vector(rng, quadext);
        const SolverParams params = random_params(rng, quadext);
        const JordanMatrix A = construct(v, params);

        const ContainsResult hit = contains(v, A);
        REQUIRE(hit.in_family);
        REQUIRE(*hit.params == params);

        // perturbing b5 leaves the family: b5 = 0 is forced
        JordanMatrix perturbed = A;
        Octonion b = A.b();
        b[Unit::Kl] += Scalar(1);
        perturbed = JordanMatrix(A.p(), A.m(), A.n(), A.a(), b, A.c());
        const ContainsResult miss = contains(v, perturbed);
        REQUIRE_FALSE(miss.in_family);
    }
}

TEST_CASE("solver: imaginary_shift") {
    const GenericImaginaryVector v = kIJL;
    const SolverParams params{Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5), Scalar(6)};
    const JordanMatrix A = construct(v, params);
    Octonion lambda = v.associator();
    lambda[Unit::One] = Scalar(9, 2);
    const JordanMatrix shifted_up = A.shift_identity(lambda.re());

    const auto [back, im] = imaginary_shift(shifted_up, lambda);
    CHECK(back == A);
    CHECK(im == v.associator());
    CHECK(im.re().is_zero());

    // already-imaginary eigenvalue: matrix unchanged
    const auto [same, im2] = imaginary_shift(A, v.associator());
    CHECK(same == A);
    CHECK(im2 == v.associator());

    // real eigenvalue: shifted eigenvalue becomes zero
    const auto [_, im3] = imaginary_shift(A, Octonion::scalar(Scalar(7)));
    CHECK(im3.is_zero());
}

TEST_CASE("solver: dependent component denominators guard degenerate input") {
    GenericTriple t{Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0),
                    Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    // y3 = z8 = 0 here
    CHECK_THROWS_AS(dependent_b8(t, Scalar(0), Scalar(0)), DegenerateVector);
    CHECK_THROWS_AS(dependent_b2(t, Scalar(0), Scalar(0), Scalar(0)), DegenerateVector);
    CHECK_THROWS_AS(dependent_b3(t, Scalar(0), Scalar(0), Scalar(0)), DegenerateVector);
    CHECK_THROWS_AS(dependent_b6(t, SolverParams{}), DegenerateVector);
}
