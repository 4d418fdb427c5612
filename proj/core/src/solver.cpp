#include "octjordan/solver.hpp"

#include <stdexcept>

#include "octjordan/linalg.hpp"

namespace octjordan {

namespace {

Scalar sq(const Scalar& s) { return s * s; }
Scalar cube(const Scalar& s) { return s * s * s; }

void require_nonzero(const Scalar& denom, const char* where) {
    if (denom.is_zero())
        throw DegenerateVector(std::string("DegenerateVector: zero denominator in ") + where +
                               " (associator vanishes)");
}

} // namespace

GenericImaginaryVector::GenericImaginaryVector(Scalar x2, Scalar y2, Scalar y3, Scalar z2,
                                               Scalar z3, Scalar z4, Scalar z8)
    : x2_(std::move(x2)), y2_(std::move(y2)), y3_(std::move(y3)), z2_(std::move(z2)),
      z3_(std::move(z3)), z4_(std::move(z4)), z8_(std::move(z8)) {
    if (x2_.is_zero() || y3_.is_zero() || z8_.is_zero())
        throw DegenerateVector("DegenerateVector: associator vanishes (x2, y3 and z8 must all "
                               "be nonzero)");
}

GenericImaginaryVector GenericImaginaryVector::from_vector(const OctVector& v) {
    if (!v.is_generic_form())
        throw std::invalid_argument(
            "vector is not in generic form (x in span{1,i}, y in span{1,i,j}, "
            "z in span{1,i,j,k,l}); canonicalize it first");
    if (!v.real_part_is_zero())
        throw std::invalid_argument("vector is not purely imaginary (Re(v) != 0)");
    return GenericImaginaryVector(v.x[Unit::I], v.y[Unit::I], v.y[Unit::J], v.z[Unit::I],
                                  v.z[Unit::J], v.z[Unit::K], v.z[Unit::L]);
}

OctVector GenericImaginaryVector::to_vector() const {
    OctVector v;
    v.x[Unit::I] = x2_;
    v.y[Unit::I] = y2_;
    v.y[Unit::J] = y3_;
    v.z[Unit::I] = z2_;
    v.z[Unit::J] = z3_;
    v.z[Unit::K] = z4_;
    v.z[Unit::L] = z8_;
    return v;
}

Octonion GenericImaginaryVector::associator() const {
    return Octonion::unit(Unit::Kl, Scalar(2) * x2_ * y3_ * z8_);
}

Scalar dependent_b6(const GenericTriple& t, const SolverParams& params) {
    const Scalar two(2), four(4);
    const Scalar& b1 = params.b1;
    const Scalar& b4 = params.b4;
    const Scalar& b7 = params.b7;
    const Scalar& p = params.p;
    const Scalar& m = params.m;
    const Scalar& n = params.n;
    Scalar numerator =
        -two * t.y3 * t.z4 * t.z8 * cube(t.x2)
        - p * t.z8 * sq(t.x2)
        + two * t.y3 * t.z4 * cube(t.z8) * t.x2
        + two * t.y3 * cube(t.z4) * t.z8 * t.x2
        + two * cube(t.y3) * t.z4 * t.z8 * t.x2
        - two * t.y3 * sq(t.z2) * t.z4 * t.z8 * t.x2
        + two * t.y3 * sq(t.z3) * t.z4 * t.z8 * t.x2
        + two * sq(t.y2) * t.y3 * t.z4 * t.z8 * t.x2
        + four * t.y2 * t.z2 * t.z3 * t.z4 * t.z8 * t.x2
        + n * cube(t.z8)
        - two * b7 * t.y2 * sq(t.z4)
        - two * b7 * t.y2 * sq(t.z8)
        + m * sq(t.y2) * t.z8
        + m * sq(t.y3) * t.z8
        + n * sq(t.z2) * t.z8
        + n * sq(t.z3) * t.z8
        + n * sq(t.z4) * t.z8
        + two * b1 * t.y2 * t.z2 * t.z8
        + two * b4 * t.y3 * t.z2 * t.z8
        - two * b4 * t.y2 * t.z3 * t.z8
        + two * b1 * t.y3 * t.z3 * t.z8;
    Scalar denominator = two * t.y3 * (sq(t.z4) + sq(t.z8));
    require_nonzero(denominator, "b6");
    return numerator / denominator;
}

Scalar dependent_b8(const GenericTriple& t, const Scalar& b6, const Scalar& b7) {
    const Scalar two(2);
    Scalar numerator = two * t.y3 * t.z2 * t.z8 * sq(t.x2) + b6 * t.y1 * t.x2 - b6 * t.x1 * t.y2 +
                       b7 * t.x1 * t.y3;
    Scalar denominator = t.x2 * t.y3;
    require_nonzero(denominator, "b8");
    return numerator / denominator;
}

Scalar dependent_b2(const GenericTriple& t, const Scalar& b4, const Scalar& b6,
                    const Scalar& b7) {
    const Scalar two(2);
    const Scalar x2_5 = sq(t.x2) * cube(t.x2);
    Scalar numerator =
        sq(t.y3) * t.z8 * x2_5
        - sq(t.y3) * cube(t.z8) * cube(t.x2)
        - sq(sq(t.y3)) * t.z8 * cube(t.x2)
        + sq(t.x1) * sq(t.y3) * t.z8 * cube(t.x2)
        + sq(t.y2) * sq(t.y3) * t.z8 * cube(t.x2)
        + sq(t.y3) * sq(t.z2) * t.z8 * cube(t.x2)
        - sq(t.y3) * sq(t.z3) * t.z8 * cube(t.x2)
        - sq(t.y3) * sq(t.z4) * t.z8 * cube(t.x2)
        + b6 * sq(t.y3) * t.z4 * sq(t.x2)
        - two * t.x1 * t.y2 * t.y3 * t.z2 * t.z4 * t.z8 * sq(t.x2)
        + b7 * t.x1 * sq(t.y3) * t.z2 * t.x2
        - b7 * t.x1 * t.y2 * t.y3 * t.z3 * t.x2
        + b4 * t.x1 * t.y2 * t.y3 * t.z8 * t.x2
        + b6 * sq(t.x1) * sq(t.y2) * t.z4
        - b7 * sq(t.x1) * t.y2 * t.y3 * t.z4;
    Scalar denominator = sq(t.x2) * sq(t.y3) * t.z8;
    require_nonzero(denominator, "b2");
    return numerator / denominator;
}

Scalar dependent_b3(const GenericTriple& t, const Scalar& b4, const Scalar& b6,
                    const Scalar& b7) {
    const Scalar two(2);
    Scalar numerator =
        two * t.y2 * sq(t.y3) * t.z8 * cube(t.x2)
        + two * t.y3 * t.z2 * t.z3 * t.z8 * cube(t.x2)
        - b7 * t.y3 * t.z4 * sq(t.x2)
        - two * t.x1 * t.y3 * t.z2 * t.z4 * t.z8 * sq(t.x2)
        + b6 * t.x1 * t.y3 * t.z2 * t.x2
        - b6 * t.x1 * t.y2 * t.z3 * t.x2
        + b4 * t.x1 * t.y3 * t.z8 * t.x2
        + b6 * sq(t.x1) * t.y2 * t.z4
        - b7 * sq(t.x1) * t.y3 * t.z4;
    Scalar denominator = sq(t.x2) * t.y3 * t.z8;
    require_nonzero(denominator, "b3");
    return numerator / denominator;
}

JordanMatrix construct(const GenericImaginaryVector& v, const SolverParams& params) {
    // Specialize the full formulas to the purely imaginary case.
    const GenericTriple t{Scalar(0), v.x2(), Scalar(0), v.y2(), v.y3(),
                          Scalar(0), v.z2(), v.z3(),    v.z4(), v.z8()};

    const Scalar b6 = dependent_b6(t, params);
    const Scalar b8 = dependent_b8(t, b6, params.b7);
    const Scalar b2 = dependent_b2(t, params.b4, b6, params.b7);
    const Scalar b3 = dependent_b3(t, params.b4, b6, params.b7);

    Octonion b;
    b[Unit::One] = params.b1;
    b[Unit::I] = b2;
    b[Unit::J] = b3;
    b[Unit::K] = params.b4;
    // b5 = 0: b is orthogonal to the eigenvalue direction kl whenever
    // the associator is nonzero.
    b[Unit::Jl] = b6;
    b[Unit::Il] = params.b7;
    b[Unit::L] = b8;

    const OctVector vec = v.to_vector();
    const Octonion lambda = v.associator();
    const Scalar x_norm_sq = vec.x.norm_sq();
    require_nonzero(x_norm_sq, "|x|^2");
    const Scalar inv_x_norm = x_norm_sq.inverse();
    const Octonion x_conj = vec.x.conj();

    const Octonion a_bar =
        ((vec.y * (lambda - Octonion::scalar(params.m))) - b * vec.z) * x_conj * inv_x_norm;
    const Octonion a = a_bar.conj();
    const Octonion c =
        ((vec.z * (lambda - Octonion::scalar(params.n))) - b.conj() * vec.y) * x_conj *
        inv_x_norm;

    return JordanMatrix(params.p, params.m, params.n, a, b, c);
}

JordanMatrix FamilyMap::evaluate(const SolverParams& params) const {
    JordanMatrix out = base;
    for (std::size_t i = 0; i < 6; ++i) out += directions[i] * params[i];
    return out;
}

FamilyMap family_map(const GenericImaginaryVector& v) {
    const SolverParams zero{};
    FamilyMap map{construct(v, zero), {}};
    for (std::size_t i = 0; i < 6; ++i) {
        SolverParams step{};
        Scalar* fields[6] = {&step.b1, &step.b4, &step.b7, &step.p, &step.m, &step.n};
        *fields[i] = Scalar(1);
        map.directions[i] = construct(v, step) - map.base;
    }
    return map;
}

ContainsResult contains(const GenericImaginaryVector& v, const JordanMatrix& A) {
    const FamilyMap map = family_map(v);
    const auto base = map.base.to_coordinates();
    const auto target = A.to_coordinates();

    ScalarMatrix system(kJordanCoordinates, 6);
    std::vector<Scalar> rhs(kJordanCoordinates);
    for (std::size_t i = 0; i < 6; ++i) {
        const auto dir = map.directions[i].to_coordinates();
        for (std::size_t r = 0; r < kJordanCoordinates; ++r) system.at(r, i) = dir[r];
    }
    for (std::size_t r = 0; r < kJordanCoordinates; ++r) rhs[r] = target[r] - base[r];

    const AffineSolutionSet sol = solve_affine(system, rhs);
    if (sol.is_empty()) return {};
    if (sol.nullity != 0)
        throw std::logic_error("family directions are not independent");
    SolverParams params{sol.particular[0], sol.particular[1], sol.particular[2],
                        sol.particular[3], sol.particular[4], sol.particular[5]};
    return {true, params};
}

std::pair<JordanMatrix, Octonion> imaginary_shift(const JordanMatrix& A, const Octonion& lambda) {
    const Scalar re = lambda.re();
    return {A.shift_identity(-re), lambda.im()};
}

Octonion reduced_constraint_residual(const OctVector& v, const Octonion& lambda,
                                     const Octonion& b, const Scalar& p, const Scalar& m,
                                     const Scalar& n) {
    const Octonion& x = v.x;
    const Octonion& y = v.y;
    const Octonion& z = v.z;
    const Scalar x_sq = x.norm_sq();
    const Octonion lhs = (x * (lambda.conj() * y.conj() - z.conj() * b.conj())) * y +
                         (x * (lambda.conj() * z.conj() - y.conj() * b)) * z -
                         (x * lambda) * x_sq;
    const Octonion rhs = x * (m * y.norm_sq() + n * z.norm_sq() - p * x_sq);
    return lhs - rhs;
}

} // namespace octjordan
