#include "octjordan/canonical.hpp"

#include <cmath>
#include <stdexcept>

namespace octjordan {
namespace canonical {

FloatOctonion to_float(const Octonion& o) {
    FloatOctonion out;
    for (std::size_t r = 0; r < 8; ++r) out.coeff(r) = o.coeff(r).to_double();
    return out;
}

FloatVector to_float(const OctVector& v) {
    return {to_float(v.x), to_float(v.y), to_float(v.z)};
}

double dot(const FloatOctonion& a, const FloatOctonion& b) {
    double sum = 0.0;
    for (std::size_t r = 0; r < 8; ++r) sum += a.coeff(r) * b.coeff(r);
    return sum;
}

double norm(const FloatOctonion& a) {
    return std::sqrt(a.norm_sq());
}

FloatOctonion BasisTransform::apply(const FloatOctonion& w) const {
    FloatOctonion out;
    for (std::size_t r = 0; r < 8; ++r) out += columns[r] * w.coeff(r);
    return out;
}

FloatOctonion BasisTransform::inverse_apply(const FloatOctonion& w) const {
    FloatOctonion out;
    for (std::size_t r = 0; r < 8; ++r) out.coeff(r) = dot(columns[r], w);
    return out;
}

double BasisTransform::automorphism_defect() const {
    const auto& tab = unit_table();
    double worst = 0.0;
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t s = 0; s < 8; ++s) {
            const UnitProduct p = tab[r][s];
            FloatOctonion expect = columns[p.index];
            if (p.sign < 0) expect = -expect;
            worst = std::max(worst, norm(columns[r] * columns[s] - expect));
        }
    }
    return worst;
}

CanonicalizeResult canonicalize(const FloatVector& v, double tol) {
    const FloatOctonion assoc = associator(v.x, v.y, v.z);
    if (norm(assoc) <= tol)
        throw QuaternionicInput("QuaternionicInput: associator vanishes within tolerance");

    const auto normalized = [&](const FloatOctonion& w, const char* which) -> FloatOctonion {
        const double n = norm(w);
        if (n < tol)
            throw QuaternionicInput(std::string("QuaternionicInput: cannot normalize ") + which +
                                    " (triple is quaternionic within tolerance)");
        return w * (1.0 / n);
    };

    const FloatOctonion u1 = normalized(v.x.im(), "Im(x)");
    FloatOctonion y_perp = v.y.im();
    y_perp -= u1 * dot(y_perp, u1);
    const FloatOctonion u2 = normalized(y_perp, "the part of Im(y) orthogonal to u1");
    const FloatOctonion u3 = u1 * u2;
    FloatOctonion z_perp = v.z.im();
    z_perp -= u1 * dot(z_perp, u1);
    z_perp -= u2 * dot(z_perp, u2);
    z_perp -= u3 * dot(z_perp, u3);
    const FloatOctonion u4 =
        normalized(z_perp, "the part of Im(z) orthogonal to the quaternion subalgebra");

    CanonicalizeResult out;
    out.transform.tol = tol;
    out.transform.columns = {FloatOctonion::unit(Unit::One), u1,      u2,      u3,
                             u3 * u4,                        u2 * u4, u1 * u4, u4};
    out.generic = {out.transform.inverse_apply(v.x), out.transform.inverse_apply(v.y),
                   out.transform.inverse_apply(v.z)};

    static constexpr bool kPattern[3][8] = {
        {true, true, false, false, false, false, false, false},
        {true, true, true, false, false, false, false, false},
        {true, true, true, true, false, false, false, true},
    };
    const FloatOctonion* comps[3] = {&out.generic.x, &out.generic.y, &out.generic.z};
    for (int c = 0; c < 3; ++c)
        for (std::size_t r = 0; r < 8; ++r)
            if (!kPattern[c][r])
                out.off_generic_residual =
                    std::max(out.off_generic_residual, std::abs(comps[c]->coeff(r)));
    return out;
}

Rational best_rational(double x, std::uint64_t max_denominator) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize a non-finite value");
    if (max_denominator == 0) throw std::invalid_argument("max_denominator must be positive");

    // Every finite double is an exact rational; expand that exactly.
    mpq_class exact;
    mpq_set_d(exact.get_mpq_t(), x);
    const mpz_class bound(static_cast<unsigned long>(max_denominator));
    if (exact.get_den() <= bound) return Rational(exact.get_num(), exact.get_den());

    mpz_class n = exact.get_num(), d = exact.get_den();
    mpz_class h_prev(1), k_prev(0); // h_{-1}/k_{-1}
    mpz_class h_pprev(0), k_pprev(1); // h_{-2}/k_{-2}
    const Rational target(exact.get_num(), exact.get_den());

    while (sgn(d) != 0) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        const mpz_class k_next = a * k_prev + k_pprev;
        if (k_next > bound) {
            // Largest admissible semiconvergent against the last convergent.
            const mpz_class t = (bound - k_pprev) / k_prev;
            const Rational convergent(h_prev, k_prev);
            if (t <= 0) return convergent;
            const Rational semi(t * h_prev + h_pprev, t * k_prev + k_pprev);
            const Rational err_conv = (target - convergent).abs();
            const Rational err_semi = (target - semi).abs();
            return err_semi < err_conv ? semi : convergent;
        }
        const mpz_class h_next = a * h_prev + h_pprev;
        h_pprev = h_prev;
        k_pprev = k_prev;
        h_prev = h_next;
        k_prev = k_next;
        const mpz_class r = n - a * d;
        n = d;
        d = r;
    }
    return Rational(h_prev, k_prev);
}

RationalizedOctonion round_to_rational(const FloatOctonion& w, std::uint64_t max_denominator) {
    RationalizedOctonion out;
    for (std::size_t r = 0; r < 8; ++r) {
        const Rational approx = best_rational(w.coeff(r), max_denominator);
        out.value.coeff(r) = Scalar(approx);
        out.errors[r] = std::abs(w.coeff(r) - approx.to_double());
        out.max_error = std::max(out.max_error, out.errors[r]);
    }
    return out;
}

} // namespace canonical
} // namespace octjordan
