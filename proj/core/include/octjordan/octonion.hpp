#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include "octjordan/scalar.hpp"

namespace octjordan {

/// Basis units in component order: 1, i, j, k, kl, jl, il, l.
/// Index 0 is the real unit; indices 1..7 square to -1.
enum class Unit : int { One = 0, I, J, K, Kl, Jl, Il, L };

inline constexpr std::size_t kOctonionDim = 8;

/// Signed basis product: e_r * e_s = sign * e_index.
struct UnitProduct {
    int sign;
    int index;
};

/// The full 8x8 signed multiplication table, generated once from the
/// Cayley-Dickson doubling (a,b)(c,d) = (ac - conj(d)b, da + b conj(c))
/// applied from the reals up, then permuted into the component order
/// above. Built on first use; read-only afterwards.
const std::array<std::array<UnitProduct, 8>, 8>& unit_table();

std::string_view unit_name(Unit u);

/// Octonion with coefficients of type T in the component order
/// (1, i, j, k, kl, jl, il, l). T is an exact field type (Scalar) for
/// symbolic work or double for the numeric canonicalization path; both
/// share unit_table().
template <class T>
class BasicOctonion {
public:
    BasicOctonion() : c_{} {}
    explicit BasicOctonion(std::array<T, 8> coeffs) : c_(std::move(coeffs)) {}

    static BasicOctonion unit(Unit u, T coeff = T{1}) {
        BasicOctonion o;
        o.c_[static_cast<std::size_t>(u)] = std::move(coeff);
        return o;
    }
    static BasicOctonion scalar(T value) { return unit(Unit::One, std::move(value)); }

    const T& coeff(std::size_t index) const { return c_[index]; }
    T& coeff(std::size_t index) { return c_[index]; }
    const T& operator[](Unit u) const { return c_[static_cast<std::size_t>(u)]; }
    T& operator[](Unit u) { return c_[static_cast<std::size_t>(u)]; }
    const std::array<T, 8>& coeffs() const { return c_; }

    BasicOctonion operator-() const {
        BasicOctonion o;
        for (std::size_t r = 0; r < 8; ++r) o.c_[r] = -c_[r];
        return o;
    }
    BasicOctonion& operator+=(const BasicOctonion& o) {
        for (std::size_t r = 0; r < 8; ++r) c_[r] += o.c_[r];
        return *this;
    }
    BasicOctonion& operator-=(const BasicOctonion& o) {
        for (std::size_t r = 0; r < 8; ++r) c_[r] -= o.c_[r];
        return *this;
    }
    BasicOctonion& operator*=(const T& s) {
        for (std::size_t r = 0; r < 8; ++r) c_[r] = c_[r] * s;
        return *this;
    }
    friend BasicOctonion operator+(BasicOctonion a, const BasicOctonion& b) { return a += b; }
    friend BasicOctonion operator-(BasicOctonion a, const BasicOctonion& b) { return a -= b; }
    friend BasicOctonion operator*(BasicOctonion a, const T& s) { return a *= s; }
    friend BasicOctonion operator*(const T& s, BasicOctonion a) { return a *= s; }

    friend BasicOctonion operator*(const BasicOctonion& a, const BasicOctonion& b) {
        const auto& tab = unit_table();
        BasicOctonion out;
        for (std::size_t r = 0; r < 8; ++r) {
            if (is_coeff_zero(a.c_[r])) continue;
            for (std::size_t s = 0; s < 8; ++s) {
                if (is_coeff_zero(b.c_[s])) continue;
                const UnitProduct p = tab[r][s];
                T term = a.c_[r] * b.c_[s];
                if (p.sign < 0)
                    out.c_[p.index] -= term;
                else
                    out.c_[p.index] += term;
            }
        }
        return out;
    }

    BasicOctonion conj() const {
        BasicOctonion o = -*this;
        o.c_[0] = c_[0];
        return o;
    }
    T re() const { return c_[0]; }
    BasicOctonion im() const {
        BasicOctonion o = *this;
        o.c_[0] = T{0};
        return o;
    }
    T norm_sq() const {
        T sum{0};
        for (std::size_t r = 0; r < 8; ++r) sum += c_[r] * c_[r];
        return sum;
    }

    friend bool operator==(const BasicOctonion& a, const BasicOctonion& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BasicOctonion& a, const BasicOctonion& b) { return !(a == b); }

    bool is_zero() const {
        for (std::size_t r = 0; r < 8; ++r)
            if (!is_coeff_zero(c_[r])) return false;
        return true;
    }

private:
    static bool is_coeff_zero(const T& v) {
        if constexpr (std::is_same_v<T, Scalar>)
            return v.is_zero();
        else
            return v == T{0};
    }

    std::array<T, 8> c_;
};

using Octonion = BasicOctonion<Scalar>;

template <class T>
BasicOctonion<T> commutator(const BasicOctonion<T>& u, const BasicOctonion<T>& v) {
    return u * v - v * u;
}

/// [x, y, z] = (xy)z - x(yz). Purely imaginary for octonions; zero when
/// any argument is real or all three lie in a quaternionic subalgebra.
template <class T>
BasicOctonion<T> associator(const BasicOctonion<T>& x, const BasicOctonion<T>& y,
                            const BasicOctonion<T>& z) {
    return (x * y) * z - x * (y * z);
}

/// Algebra automorphism determined by a Cayley triple (u1, u2, u4):
/// orthonormal imaginary units with u4 orthogonal to the quaternion
/// subalgebra generated by u1 and u2. Columns are the images of the
/// basis units (1, u1, u2, u1u2, (u1u2)u4, u2u4, u1u4, u4). Construction
/// verifies the multiplicative property on all 64 basis pairs exactly
/// and throws std::invalid_argument otherwise.
class Automorphism {
public:
    static Automorphism from_cayley_triple(const Octonion& u1, const Octonion& u2,
                                           const Octonion& u4);
    /// Signed basis permutation given by unit images (validated the same way).
    static Automorphism from_unit_images(const std::array<Octonion, 8>& columns);

    const std::array<Octonion, 8>& columns() const { return columns_; }

    Octonion apply(const Octonion& w) const;
    /// Inverse image; uses orthogonality of the column set, which the
    /// automorphism property guarantees.
    Octonion inverse_apply(const Octonion& w) const;

    Automorphism then(const Automorphism& next) const;

private:
    explicit Automorphism(std::array<Octonion, 8> columns);

    std::array<Octonion, 8> columns_;
};

/// Octonion text grammar: signed terms over the unit names
/// {1, i, j, k, kl, jl, il, l}, e.g. "3k", "sqrt5*j-2il", "1+sqrt5*kl".
Octonion octonion_from_string(std::string_view text);
std::string to_string(const Octonion& o);

std::ostream& operator<<(std::ostream& os, const Octonion& o);

} // namespace octjordan
