#include <doctest.h>

#include <octjordan/octonion.hpp>

#include "test_support.hpp"

using namespace octjordan;
using namespace octjordan::testing;

namespace {

const Octonion one = Octonion::unit(Unit::One);
const Octonion i = Octonion::unit(Unit::I);
const Octonion j = Octonion::unit(Unit::J);
const Octonion k = Octonion::unit(Unit::K);
const Octonion kl = Octonion::unit(Unit::Kl);
const Octonion jl = Octonion::unit(Unit::Jl);
const Octonion il = Octonion::unit(Unit::Il);
const Octonion l = Octonion::unit(Unit::L);

} // namespace

TEST_CASE("octonion: multiplication anchors") {
    CHECK(i * j == k);
    CHECK(l * l == -one);
    CHECK(i * l == il);
    CHECK(k * l == kl);
    // the sign anchor: (ij)l - i(jl) = 2kl pins j*kl = -il
    CHECK((i * j) * l - i * (j * l) == kl * Scalar(2));
    CHECK(j * kl == -il);
    for (std::size_t r = 1; r < 8; ++r) {
        const Octonion u = Octonion::unit(static_cast<Unit>(r));
        CHECK(u * u == -one); // every imaginary unit squares to -1
    }
    CHECK(one * one == one);
}

TEST_CASE("octonion: conj, re, im, norm_sq") {
    const Octonion w = one + i; // 1 + i
    CHECK(w.conj() == one - i);
    CHECK(kl.conj() == -kl);
    CHECK(Octonion().conj() == Octonion());
    CHECK(Scalar(3) == (Octonion::scalar(Scalar(3)) + i * Scalar(2)).re());
    CHECK((Octonion::scalar(Scalar(3)) + i * Scalar(2)).im() == i * Scalar(2));
    CHECK((one + i + j + k).norm_sq() == Scalar(4));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const Octonion w2 = random_octonion(rng, trial % 2 == 1);
        CHECK(w2.conj().conj() == w2);
        CHECK(w2 + w2.conj() == Octonion::scalar(Scalar(2) * w2.re()));
        CHECK(w2 * w2.conj() == Octonion::scalar(w2.norm_sq()));
    }
}

TEST_CASE("octonion: associator anchors") {
    CHECK(associator(i, j, l) == kl * Scalar(2));
    CHECK(associator(i, j, k) == Octonion());
    // generic triple with x2=2, y3=3, z8=5 and everything else random
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Octonion x, y, z;
        x[Unit::One] = random_scalar(rng);
        x[Unit::I] = Scalar(2);
        y[Unit::One] = random_scalar(rng);
        y[Unit::I] = random_scalar(rng);
        y[Unit::J] = Scalar(3);
        z[Unit::One] = random_scalar(rng);
        z[Unit::I] = random_scalar(rng);
        z[Unit::J] = random_scalar(rng);
        z[Unit::K] = random_scalar(rng);
        z[Unit::L] = Scalar(5);
        CHECK(associator(x, y, z) == kl * Scalar(60));
    }
}

TEST_CASE("octonion: generic associator formula") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const bool quadext = trial % 4 == 3;
        Octonion x, y, z;
        x[Unit::One] = random_scalar(rng, quadext);
        x[Unit::I] = random_scalar(rng, quadext);
        y[Unit::One] = random_scalar(rng, quadext);
        y[Unit::I] = random_scalar(rng, quadext);
        y[Unit::J] = random_scalar(rng, quadext);
        z[Unit::One] = random_scalar(rng, quadext);
        z[Unit::I] = random_scalar(rng, quadext);
        z[Unit::J] = random_scalar(rng, quadext);
        z[Unit::K] = random_scalar(rng, quadext);
        z[Unit::L] = random_scalar(rng, quadext);
        const Scalar expect = Scalar(2) * x[Unit::I] * y[Unit::J] * z[Unit::L];
        REQUIRE(associator(x, y, z) == Octonion::unit(Unit::Kl, expect));
    }
}

TEST_CASE("octonion: alternativity, antisymmetry, Moufang, composition") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 2000; ++trial) {
        const bool quadext = trial % 5 == 4;
        const Octonion u = random_octonion(rng, quadext);
        const Octonion v = random_octonion(rng, quadext);
        const Octonion w = random_octonion(rng, quadext);
        REQUIRE(associator(u, u, v).is_zero());
        REQUIRE(associator(u, v, v).is_zero());
        const Octonion a = associator(u, v, w);
        REQUIRE(associator(v, u, w) == -a);
        REQUIRE(associator(u, w, v) == -a);
        REQUIRE(associator(w, v, u) == -a);
        REQUIRE(associator(v, w, u) == a);
        REQUIRE(associator(w, u, v) == a);
        REQUIRE(((u * v) * u) * w == u * (v * (u * w)));
        REQUIRE((u * v).norm_sq() == u.norm_sq() * v.norm_sq());
        REQUIRE((u * v).conj() == v.conj() * u.conj());
        REQUIRE(commutator(u, u) == Octonion());
    }
}

TEST_CASE("octonion: text grammar") {
    CHECK(to_string(Octonion()) == "0");
    CHECK(to_string(kl * Scalar(2)) == "2kl");
    CHECK(octonion_from_string("3k") == k * Scalar(3));
    CHECK(octonion_from_string("sqrt5*j-2*il") == j * Scalar::sqrt5() - il * Scalar(2));
    CHECK(octonion_from_string("sqrt5*j-2il") == j * Scalar::sqrt5() - il * Scalar(2));
    CHECK(octonion_from_string("1+sqrt5*kl") == one + kl * Scalar::sqrt5());
    CHECK(octonion_from_string("-7/3l") == l * Scalar(-7, 3));
    CHECK_THROWS_AS(octonion_from_string("2m"), ParseError);
    CHECK_THROWS_AS(octonion_from_string(""), ParseError);
    CHECK_THROWS_AS(octonion_from_string("i j"), ParseError);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        const Octonion o = random_octonion(rng, trial % 3 == 2);
        REQUIRE(octonion_from_string(to_string(o)) == o);
    }
}

TEST_CASE("octonion: exact automorphisms") {
    const Automorphism swap_ij = Automorphism::from_cayley_triple(j, i, l);
    CHECK(swap_ij.apply(i) == j);
    CHECK(swap_ij.apply(j) == i);
    CHECK(swap_ij.apply(k) == -k);
    CHECK(swap_ij.inverse_apply(swap_ij.apply(kl)) == kl);

    CHECK_THROWS_AS(Automorphism::from_cayley_triple(i, i, l), std::invalid_argument);
    CHECK_THROWS_AS(Automorphism::from_cayley_triple(i, j, k), std::invalid_argument);
    CHECK_THROWS_AS(Automorphism::from_cayley_triple(i * Scalar(2), j, l),
                    std::invalid_argument);

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const Automorphism sigma = random_scramble(rng);
        const Octonion u = random_octonion(rng);
        const Octonion v = random_octonion(rng);
        REQUIRE(sigma.apply(u * v) == sigma.apply(u) * sigma.apply(v));
        REQUIRE(sigma.inverse_apply(sigma.apply(u)) == u);
        REQUIRE(sigma.apply(u).norm_sq() == u.norm_sq());
    }
}

TEST_CASE("octonion: dangling operators are rejected") {
    CHECK_THROWS_AS(octonion_from_string("3*"), ParseError);
    CHECK_THROWS_AS(octonion_from_string("sqrt5*"), ParseError);
}
