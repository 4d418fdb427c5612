#pragma once

#include <array>
#include <cstdint>

#include "octjordan/jordan.hpp"
#include "octjordan/octonion.hpp"

namespace octjordan {
namespace canonical {

using FloatOctonion = BasicOctonion<double>;

struct FloatVector {
    FloatOctonion x, y, z;
};

FloatOctonion to_float(const Octonion& o);
FloatVector to_float(const OctVector& v);

double dot(const FloatOctonion& a, const FloatOctonion& b);
double norm(const FloatOctonion& a);

inline constexpr double kDefaultTolerance = 1e-9;

/// Numeric change of octonionic basis built from a Cayley triple; columns
/// are the images of the basis units (1, i, j, k, kl, jl, il, l). The
/// matrix is orthogonal and multiplicative within tolerance.
struct BasisTransform {
    std::array<FloatOctonion, 8> columns;
    double tol = kDefaultTolerance;

    FloatOctonion apply(const FloatOctonion& w) const;
    /// Transpose application; valid because the columns are orthonormal.
    FloatOctonion inverse_apply(const FloatOctonion& w) const;

    /// max over all 64 basis pairs of |phi(e_r e_s) - phi(e_r) phi(e_s)|.
    double automorphism_defect() const;
};

struct CanonicalizeResult {
    BasisTransform transform;
    FloatVector generic;
    /// Largest component of the transformed vector outside the generic
    /// pattern (exactly zero in exact arithmetic).
    double off_generic_residual = 0.0;
};

/// Builds the basis change carrying v into generic position:
/// u1 along Im(x), u2 the part of Im(y) orthogonal to u1, u4 the part of
/// Im(z) orthogonal to the quaternion subalgebra spanned by {1, u1, u2,
/// u1u2}, each normalized (so the transformed vector has x2 > 0, y3 > 0,
/// z8 > 0). Throws QuaternionicInput when any normalization denominator
/// falls below tol, which happens exactly when the associator of v is
/// numerically zero.
CanonicalizeResult canonicalize(const FloatVector& v, double tol = kDefaultTolerance);

/// Componentwise nearest rational with denominator at most
/// max_denominator (continued-fraction best approximation). The result is
/// only as good as the input floats; callers re-verify exactness
/// downstream, and max_error above the reporting threshold marks
/// components that have no good small-denominator approximation.
inline constexpr double kPoorApproximationThreshold = 1e-6;

struct RationalizedOctonion {
    Octonion value;
    std::array<double, 8> errors{};
    double max_error = 0.0;

    bool poorly_approximated() const { return max_error > kPoorApproximationThreshold; }
};

RationalizedOctonion round_to_rational(const FloatOctonion& w, std::uint64_t max_denominator);

/// Best rational approximation to x with denominator <= max_denominator;
/// the double is first converted to the exact rational it represents.
Rational best_rational(double x, std::uint64_t max_denominator);

} // namespace canonical
} // namespace octjordan
