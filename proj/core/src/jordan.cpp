#include "octjordan/jordan.hpp"

#include <stdexcept>

namespace octjordan {

namespace {

bool only_components(const Octonion& o, std::initializer_list<std::size_t> allowed) {
    for (std::size_t r = 0; r < 8; ++r) {
        bool ok = false;
        for (std::size_t a : allowed)
            if (r == a) ok = true;
        if (!ok && !o.coeff(r).is_zero()) return false;
    }
    return true;
}

} // namespace

bool OctVector::is_generic_form() const {
    return only_components(x, {0, 1}) && only_components(y, {0, 1, 2}) &&
           only_components(z, {0, 1, 2, 3, 7});
}

JordanMatrix JordanMatrix::identity() {
    return JordanMatrix(Scalar(1), Scalar(1), Scalar(1), Octonion(), Octonion(), Octonion());
}

OctVector JordanMatrix::apply(const OctVector& v) const {
    OctVector out;
    out.x = v.x * p_ + a_ * v.y + c_.conj() * v.z;
    out.y = a_.conj() * v.x + v.y * m_ + b_ * v.z;
    out.z = c_ * v.x + b_.conj() * v.y + v.z * n_;
    return out;
}

JordanMatrix JordanMatrix::shift_identity(const Scalar& t) const {
    return JordanMatrix(p_ + t, m_ + t, n_ + t, a_, b_, c_);
}

std::array<Scalar, kJordanCoordinates> JordanMatrix::to_coordinates() const {
    std::array<Scalar, kJordanCoordinates> out;
    out[0] = p_;
    out[1] = m_;
    out[2] = n_;
    for (std::size_t r = 0; r < 8; ++r) {
        out[3 + r] = a_.coeff(r);
        out[11 + r] = b_.coeff(r);
        out[19 + r] = c_.coeff(r);
    }
    return out;
}

JordanMatrix JordanMatrix::from_coordinates(const std::array<Scalar, kJordanCoordinates>& coords) {
    Octonion a, b, c;
    for (std::size_t r = 0; r < 8; ++r) {
        a.coeff(r) = coords[3 + r];
        b.coeff(r) = coords[11 + r];
        c.coeff(r) = coords[19 + r];
    }
    return JordanMatrix(coords[0], coords[1], coords[2], std::move(a), std::move(b), std::move(c));
}

JordanMatrix JordanMatrix::coordinate_basis(std::size_t u) {
    if (u >= kJordanCoordinates) throw std::out_of_range("coordinate basis index out of range");
    std::array<Scalar, kJordanCoordinates> coords{};
    coords[u] = Scalar(1);
    return from_coordinates(coords);
}

JordanMatrix& JordanMatrix::operator+=(const JordanMatrix& o) {
    p_ += o.p_;
    m_ += o.m_;
    n_ += o.n_;
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    return *this;
}

JordanMatrix& JordanMatrix::operator-=(const JordanMatrix& o) {
    p_ -= o.p_;
    m_ -= o.m_;
    n_ -= o.n_;
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    return *this;
}

JordanMatrix& JordanMatrix::operator*=(const Scalar& s) {
    p_ *= s;
    m_ *= s;
    n_ *= s;
    a_ *= s;
    b_ *= s;
    c_ *= s;
    return *this;
}

OctVector residual(const JordanMatrix& A, const EigenPair& pair) {
    const OctVector& v = pair.vector;
    const Octonion& lambda = pair.eigenvalue;
    OctVector av = A.apply(v);
    av.x -= v.x * lambda;
    av.y -= v.y * lambda;
    av.z -= v.z * lambda;
    return av;
}

std::array<Scalar, 24> flatten(const OctVector& v) {
    std::array<Scalar, 24> out;
    for (std::size_t r = 0; r < 8; ++r) {
        out[r] = v.x.coeff(r);
        out[8 + r] = v.y.coeff(r);
        out[16 + r] = v.z.coeff(r);
    }
    return out;
}

OctVector transform(const Automorphism& phi, const OctVector& v) {
    return {phi.apply(v.x), phi.apply(v.y), phi.apply(v.z)};
}

OctVector inverse_transform(const Automorphism& phi, const OctVector& v) {
    return {phi.inverse_apply(v.x), phi.inverse_apply(v.y), phi.inverse_apply(v.z)};
}

JordanMatrix transform(const Automorphism& phi, const JordanMatrix& A) {
    return JordanMatrix(A.p(), A.m(), A.n(), phi.apply(A.a()), phi.apply(A.b()),
                        phi.apply(A.c()));
}

JordanMatrix inverse_transform(const Automorphism& phi, const JordanMatrix& A) {
    return JordanMatrix(A.p(), A.m(), A.n(), phi.inverse_apply(A.a()), phi.inverse_apply(A.b()),
                        phi.inverse_apply(A.c()));
}

} // namespace octjordan
