#pragma once

#include <array>
#include <optional>
#include <utility>

#include "octjordan/jordan.hpp"

namespace octjordan {

/// The six free parameters of the solution family, in the fixed order
/// (b1, b4, b7, p, m, n): three components of the middle off-diagonal
/// entry b plus the real diagonal.
struct SolverParams {
    Scalar b1, b4, b7, p, m, n;

    const Scalar& operator[](std::size_t i) const {
        const Scalar* fields[6] = {&b1, &b4, &b7, &p, &m, &n};
        return *fields[i];
    }
    friend bool operator==(const SolverParams& a, const SolverParams& b) {
        return a.b1 == b.b1 && a.b4 == b.b4 && a.b7 == b.b7 && a.p == b.p && a.m == b.m &&
               a.n == b.n;
    }
    friend bool operator!=(const SolverParams& a, const SolverParams& b) { return !(a == b); }
};

/// Purely imaginary vector in generic position: x = x2 i, y = y2 i + y3 j,
/// z = z2 i + z3 j + z4 k + z8 l, with x2, y3, z8 all nonzero so that the
/// associator [v] = 2 x2 y3 z8 kl does not vanish. Construction enforces
/// the nonzero constraints (DegenerateVector otherwise).
class GenericImaginaryVector {
public:
    GenericImaginaryVector(Scalar x2, Scalar y2, Scalar y3, Scalar z2, Scalar z3, Scalar z4,
                           Scalar z8);

    /// Validates the component pattern of an exact vector. Throws
    /// std::invalid_argument if v is not imaginary in generic form (route
    /// such inputs through canonicalize first), DegenerateVector if the
    /// associator vanishes.
    static GenericImaginaryVector from_vector(const OctVector& v);

    const Scalar& x2() const { return x2_; }
    const Scalar& y2() const { return y2_; }
    const Scalar& y3() const { return y3_; }
    const Scalar& z2() const { return z2_; }
    const Scalar& z3() const { return z3_; }
    const Scalar& z4() const { return z4_; }
    const Scalar& z8() const { return z8_; }

    OctVector to_vector() const;
    /// [v] = 2 x2 y3 z8 kl, nonzero by the class invariant.
    Octonion associator() const;

private:
    Scalar x2_, y2_, y3_, z2_, z3_, z4_, z8_;
};

/// Component symbols appearing in the dependent-component formulas below,
/// for a triple in generic position (components not listed are zero in
/// that basis). The formulas are kept in their full form, with the real
/// parts x1, y1, z1 as symbols; construct() specializes them to zero.
struct GenericTriple {
    Scalar x1, x2, y1, y2, y3, z1, z2, z3, z4, z8;
};

/// The four determined components of b, as functions of the free data.
/// Evaluation order: b6 first (depends only on the free parameters), then
/// b8 (needs b6), then b2 and b3 (need b4, b6, b7). b5 is identically
/// zero whenever [v] != 0. Each function checks its denominator, which is
/// nonzero exactly when x2, y3, z8 are.
Scalar dependent_b6(const GenericTriple& t, const SolverParams& params);
Scalar dependent_b8(const GenericTriple& t, const Scalar& b6, const Scalar& b7);
Scalar dependent_b2(const GenericTriple& t, const Scalar& b4, const Scalar& b6, const Scalar& b7);
Scalar dependent_b3(const GenericTriple& t, const Scalar& b4, const Scalar& b6, const Scalar& b7);

/// Builds the unique member of the solution family for the given free
/// parameters: diagonal (p, m, n); b assembled from b1, b4, b7 plus the
/// dependent components above; then the first row and column recovered by
///   conj(a) = (y(lambda - m) - b z) conj(x) / |x|^2
///   c       = (z(lambda - n) - conj(b) y) conj(x) / |x|^2
/// with lambda = [v] fixed internally. The result satisfies
/// residual(A, (v, [v])) == 0 exactly.
JordanMatrix construct(const GenericImaginaryVector& v, const SolverParams& params);

/// construct(v, .) is affine in the parameters; this is its exact
/// description as a base point and six independent directions, in the
/// parameter order (b1, b4, b7, p, m, n).
struct FamilyMap {
    JordanMatrix base;
    std::array<JordanMatrix, 6> directions;

    JordanMatrix evaluate(const SolverParams& params) const;
};

FamilyMap family_map(const GenericImaginaryVector& v);

struct ContainsResult {
    bool in_family = false;
    std::optional<SolverParams> params;
};

/// Decides membership of A in the family of v by an exact linear solve in
/// the 27 real matrix coordinates; a witness is returned when it exists.
ContainsResult contains(const GenericImaginaryVector& v, const JordanMatrix& A);

/// (A - Re(lambda) I, Im(lambda)): the unique identity shift making the
/// eigenvalue purely imaginary.
std::pair<JordanMatrix, Octonion> imaginary_shift(const JordanMatrix& A, const Octonion& lambda);

/// Residual of the single octonion constraint left after eliminating a and
/// c from the eigenvalue equations:
///   (x (conj(lambda) conj(y) - conj(z) conj(b))) y
///     + (x (conj(lambda) conj(z) - conj(y) b)) z - x lambda |x|^2
///     - x (m |y|^2 + n |z|^2 - p |x|^2).
/// Zero for every matrix produced by construct(); used by tests as an
/// internal consistency probe.
Octonion reduced_constraint_residual(const OctVector& v, const Octonion& lambda,
                                     const Octonion& b, const Scalar& p, const Scalar& m,
                                     const Scalar& n);

} // namespace octjordan
