#pragma once

#include <array>

#include "octjordan/octonion.hpp"

namespace octjordan {

/// Column vector (x, y, z) in O^3.
struct OctVector {
    Octonion x, y, z;

    Octonion associator() const { return octjordan::associator(x, y, z); }
    /// Re(v) = 0 means all three real parts vanish.
    bool real_part_is_zero() const {
        return x.re().is_zero() && y.re().is_zero() && z.re().is_zero();
    }
    /// Component pattern x in span{1,i}, y in span{1,i,j},
    /// z in span{1,i,j,k,l}.
    bool is_generic_form() const;

    friend bool operator==(const OctVector& a, const OctVector& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const OctVector& a, const OctVector& b) { return !(a == b); }
};

struct EigenPair {
    OctVector vector;
    Octonion eigenvalue;
};

inline constexpr std::size_t kJordanCoordinates = 27;

/// Hermitian 3x3 octonionic matrix
///
///     ( p       a       conj(c) )
///     ( conj(a) m       b       )
///     ( c       conj(b) n       )
///
/// with real diagonal p, m, n. Only (p, m, n, a, b, c) are stored; the
/// conjugate entries are derived on read, so Hermiticity holds by
/// construction.
class JordanMatrix {
public:
    JordanMatrix() = default;
    JordanMatrix(Scalar p, Scalar m, Scalar n, Octonion a, Octonion b, Octonion c)
        : p_(std::move(p)), m_(std::move(m)), n_(std::move(n)),
          a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    static JordanMatrix identity();

    const Scalar& p() const { return p_; }
    const Scalar& m() const { return m_; }
    const Scalar& n() const { return n_; }
    const Octonion& a() const { return a_; }
    const Octonion& b() const { return b_; }
    const Octonion& c() const { return c_; }

    /// Matrix-vector product with each entry evaluated exactly as
    /// written, one binary octonion product per term:
    ///   ( p x + a y + conj(c) z,
    ///     conj(a) x + m y + b z,
    ///     c x + conj(b) y + n z ).
    /// No re-association: with nonassociative entries the
    /// parenthesization is part of the meaning.
    OctVector apply(const OctVector& v) const;

    /// A + tI: adds t to each diagonal entry; eigenvalues shift by t.
    JordanMatrix shift_identity(const Scalar& t) const;

    /// Real coordinates in the order (p, m, n, a1..a8, b1..b8, c1..c8).
    std::array<Scalar, kJordanCoordinates> to_coordinates() const;
    static JordanMatrix from_coordinates(const std::array<Scalar, kJordanCoordinates>& coords);
    /// The u-th Hermitian coordinate basis matrix (u in [0, 27)).
    static JordanMatrix coordinate_basis(std::size_t u);

    // Real-linear structure (preserves Hermiticity).
    JordanMatrix& operator+=(const JordanMatrix& o);
    JordanMatrix& operator-=(const JordanMatrix& o);
    JordanMatrix& operator*=(const Scalar& s);
    friend JordanMatrix operator+(JordanMatrix a, const JordanMatrix& b) { return a += b; }
    friend JordanMatrix operator-(JordanMatrix a, const JordanMatrix& b) { return a -= b; }
    friend JordanMatrix operator*(JordanMatrix a, const Scalar& s) { return a *= s; }
    friend JordanMatrix operator*(const Scalar& s, JordanMatrix a) { return a *= s; }

    friend bool operator==(const JordanMatrix& x, const JordanMatrix& y) {
        return x.p_ == y.p_ && x.m_ == y.m_ && x.n_ == y.n_ &&
               x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }
    friend bool operator!=(const JordanMatrix& x, const JordanMatrix& y) { return !(x == y); }

private:
    Scalar p_, m_, n_;
    Octonion a_, b_, c_;
};

/// A v - v lambda with the eigenvalue multiplying from the right; the
/// zero vector exactly when (v, lambda) is a right eigenpair of A.
OctVector residual(const JordanMatrix& A, const EigenPair& pair);

/// Flattens an O^3 vector into 24 real components (x1..x8, y1..y8, z1..z8).
std::array<Scalar, 24> flatten(const OctVector& v);

/// Applies an algebra automorphism entrywise (diagonal reals are fixed).
JordanMatrix transform(const Automorphism& phi, const JordanMatrix& A);
OctVector transform(const Automorphism& phi, const OctVector& v);
OctVector inverse_transform(const Automorphism& phi, const OctVector& v);
JordanMatrix inverse_transform(const Automorphism& phi, const JordanMatrix& A);

} // namespace octjordan
