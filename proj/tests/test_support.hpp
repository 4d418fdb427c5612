#pragma once

#include <random>

#include <octjordan/canonical.hpp>
#include <octjordan/jordan.hpp>
#include <octjordan/solver.hpp>

namespace octjordan {
namespace testing {

inline Rational random_rational(std::mt19937_64& rng, long lo = -10, long hi = 10,
                                long max_den = 10) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long lo = -10, long hi = 10,
                                        long max_den = 10) {
    Rational r;
    do {
        r = random_rational(rng, lo, hi, max_den);
    } while (r.is_zero());
    return r;
}

inline Scalar random_scalar(std::mt19937_64& rng, bool quadext = false) {
    if (!quadext) return Scalar(random_rational(rng));
    return Scalar::quadext(random_rational(rng), random_rational(rng));
}

inline Octonion random_octonion(std::mt19937_64& rng, bool quadext = false) {
    Octonion o;
    for (std::size_t r = 0; r < 8; ++r) o.coeff(r) = random_scalar(rng, quadext);
    return o;
}

inline GenericImaginaryVector random_generic_vector(std::mt19937_64& rng, bool quadext = false) {
    const auto nonzero = [&]() -> Scalar {
        Scalar s;
        do {
            s = random_scalar(rng, quadext);
        } while (s.is_zero());
        return s;
    };
    return GenericImaginaryVector(nonzero(), random_scalar(rng, quadext), nonzero(),
                                  random_scalar(rng, quadext), random_scalar(rng, quadext),
                                  random_scalar(rng, quadext), nonzero());
}

inline SolverParams random_params(std::mt19937_64& rng, bool quadext = false) {
    return {random_scalar(rng, quadext), random_scalar(rng, quadext),
            random_scalar(rng, quadext), random_scalar(rng, quadext),
            random_scalar(rng, quadext), random_scalar(rng, quadext)};
}

inline bool is_zero(const OctVector& v) {
    return v.x.is_zero() && v.y.is_zero() && v.z.is_zero();
}

/// Signed basis permutations preserving the multiplication table, used to
/// scramble vectors for canonicalization tests: a transposition of i and
/// j, the 3-cycle of i, j, k, and the sign flip of l.
inline const std::array<Automorphism, 3>& scrambling_generators() {
    static const std::array<Automorphism, 3> gens = [] {
        const Octonion i = Octonion::unit(Unit::I);
        const Octonion j = Octonion::unit(Unit::J);
        const Octonion k = Octonion::unit(Unit::K);
        const Octonion l = Octonion::unit(Unit::L);
        return std::array<Automorphism, 3>{
            Automorphism::from_cayley_triple(j, i, l),
            Automorphism::from_cayley_triple(j, k, l),
            Automorphism::from_cayley_triple(i, j, -l),
        };
    }();
    return gens;
}

inline Automorphism random_scramble(std::mt19937_64& rng, int length = 8) {
    const auto& gens = scrambling_generators();
    std::uniform_int_distribution<int> pick(0, 2);
    Automorphism sigma = gens[pick(rng)];
    for (int step = 1; step < length; ++step) sigma = sigma.then(gens[pick(rng)]);
    return sigma;
}

inline Rational exact_from_double(double x) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q.get_num(), q.get_den());
}

} // namespace testing
} // namespace octjordan
