#pragma once

#include <cstdint>
#include <string>

#include "octjordan/jordan.hpp"
#include "octjordan/linalg.hpp"
#include "octjordan/solver.hpp"

namespace octjordan {
namespace oracle {

/// A v = v lambda recast as an exact real linear system in the 27 matrix
/// coordinates (p, m, n, a1..a8, b1..b8, c1..c8): 24 equations, one per
/// real component of the three octonion rows. Assembled by evaluating the
/// residual on the Hermitian coordinate basis matrices, which keeps this
/// module free of any solution formula.
struct RealLinearSystem {
    ScalarMatrix matrix; // 24 x 27
    std::vector<Scalar> rhs;
};

/// Works for any v and lambda, including Re(v) != 0; those inputs are
/// exactly what the no-solution checks need.
RealLinearSystem build_system(const OctVector& v, const Octonion& lambda);

AffineSolutionSet solve(const RealLinearSystem& system);

/// Index of the b5 coordinate in the unknown ordering.
inline constexpr std::size_t kCoordB5 = 3 + 8 + 4;

/// Independent confirmation that the constructive solution family and the
/// linear-system solution set agree for a given vector:
///   1. the system's nullity is 6,
///   2. constructed matrices satisfy the system (random parameter draws),
///   3. every solution has b5 = 0,
///   4. the six construction directions span the nullspace exactly.
struct CrossValidationReport {
    bool nullity_is_six = false;
    std::size_t nullity = 0;
    bool constructs_satisfy_system = false;
    bool b5_always_zero = false;
    bool families_coincide = false;
    std::string witness; // first failing check, with the offending value

    bool ok() const {
        return nullity_is_six && constructs_satisfy_system && b5_always_zero &&
               families_coincide;
    }
};

CrossValidationReport cross_validate(const GenericImaginaryVector& v,
                                     std::uint64_t seed = 0x0c70'01d5);

} // namespace oracle
} // namespace octjordan
