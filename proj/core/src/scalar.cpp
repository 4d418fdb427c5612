#include "octjordan/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <utility>

namespace octjordan {

namespace {

mpq_class make_canonical(mpz_class n, mpz_class d) {
    if (sgn(d) == 0) throw std::domain_error("division by zero: denominator is zero");
    mpq_class q(std::move(n), std::move(d));
    q.canonicalize();
    return q;
}

} // namespace

Rational::Rational(long n, long d) : v_(make_canonical(mpz_class(n), mpz_class(d))) {}

Rational::Rational(mpz_class n, mpz_class d) : v_(make_canonical(std::move(n), std::move(d))) {}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational Rational::from_string(std::string_view text) {
    std::size_t pos = 0;
    const auto fail = [&](std::string_view what) -> void {
        throw ParseError("invalid rational '" + std::string(text) + "': " + std::string(what));
    };
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const auto digits = [&]() -> std::string {
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out.push_back(text[pos++]);
        if (out.empty()) fail("expected digits");
        return out;
    };
    mpz_class num(digits(), 10);
    mpz_class den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = mpz_class(digits(), 10);
        if (sgn(den) == 0) fail("denominator is zero");
    }
    if (pos != text.size()) fail("unexpected token '" + std::string(text.substr(pos)) + "'");
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.rat_ = -s.rat_;
    s.surd_ = -s.surd_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    rat_ += o.rat_;
    surd_ += o.surd_;
    if (o.kind_ == Kind::quadext) kind_ = Kind::quadext;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    rat_ -= o.rat_;
    surd_ -= o.surd_;
    if (o.kind_ == Kind::quadext) kind_ = Kind::quadext;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // (a + b*sqrt5)(c + d*sqrt5) = (ac + 5bd) + (ad + bc)*sqrt5
    Rational a = rat_, b = surd_;
    rat_ = a * o.rat_ + Rational(5) * b * o.surd_;
    surd_ = a * o.surd_ + b * o.rat_;
    if (o.kind_ == Kind::quadext) kind_ = Kind::quadext;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero: inverse of zero");
    if (surd_.is_zero()) {
        Scalar s = *this;
        s.rat_ = rat_.inverse();
        return s;
    }
    Rational norm = rat_ * rat_ - Rational(5) * surd_ * surd_;
    // norm == 0 would force rat/surd = +-sqrt5, impossible for rationals.
    Scalar s = *this;
    s.rat_ = rat_ / norm;
    s.surd_ = -surd_ / norm;
    return s;
}

double Scalar::to_double() const {
    double v = rat_.to_double();
    if (!surd_.is_zero()) v += surd_.to_double() * std::sqrt(5.0);
    return v;
}

std::string Scalar::str() const {
    if (surd_.is_zero()) return rat_.str();
    std::string out;
    if (!rat_.is_zero()) out = rat_.str();
    const Rational mag = surd_.abs();
    if (surd_.sign() < 0)
        out += '-';
    else if (!out.empty())
        out += '+';
    if (mag != Rational(1)) {
        out += mag.str();
        out += '*';
    }
    out += "sqrt5";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

Scalar Scalar::from_string(std::string_view text) {
    std::size_t pos = 0;
    const auto fail = [&](std::string_view what) -> void {
        throw ParseError("invalid scalar '" + std::string(text) + "': " + std::string(what));
    };
    const auto parse_number = [&]() -> Rational {
        std::string num;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            num.push_back(text[pos++]);
        if (num.empty()) fail("expected digits");
        mpz_class n(num, 10);
        mpz_class d(1);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::string den;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                den.push_back(text[pos++]);
            if (den.empty()) fail("expected digits after '/'");
            d = mpz_class(den, 10);
            if (sgn(d) == 0) fail("denominator is zero");
        }
        return Rational(std::move(n), std::move(d));
    };

    if (text.empty()) fail("empty string");
    Scalar total(0);
    bool saw_quadext = false;
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-' before '" + std::string(text.substr(pos)) + "'");
        }
        first = false;
        // term: factors joined by '*', each a rational literal or sqrt5
        Rational coeff(1);
        bool has_sqrt5 = false;
        bool any_factor = false;
        bool expect_factor = false;
        while (true) {
            if (text.compare(pos, 5, "sqrt5") == 0) {
                if (has_sqrt5) fail("repeated sqrt5 factor");
                has_sqrt5 = true;
                pos += 5;
            } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coeff *= parse_number();
            } else {
                break;
            }
            any_factor = true;
            expect_factor = false;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                expect_factor = true;
                continue;
            }
            break;
        }
        if (!any_factor)
            fail("unexpected token '" + std::string(text.substr(pos)) + "'");
        if (expect_factor) fail("dangling '*'");
        if (sign < 0) coeff = -coeff;
        if (has_sqrt5) {
            total += quadext(Rational(0), coeff);
            saw_quadext = true;
        } else {
            total += Scalar(coeff);
        }
    }
    if (!saw_quadext) total.kind_ = Kind::rational;
    return total;
}

} // namespace octjordan
