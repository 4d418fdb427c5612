#include "octjordan/octonion.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace octjordan {

namespace {

// Basis products of the dimension-dim Cayley-Dickson algebra in doubling
// order: unit 0 is real, unit h+r (h = dim/2) is e_r * l for the new
// imaginary unit l. Conjugation flips the sign of every unit except 0.
std::vector<std::vector<UnitProduct>> doubling_table(int dim) {
    if (dim == 1) return {{UnitProduct{+1, 0}}};
    const int h = dim / 2;
    const auto sub = doubling_table(h);
    std::vector<std::vector<UnitProduct>> t(dim, std::vector<UnitProduct>(dim));
    for (int r = 0; r < dim; ++r) {
        for (int s = 0; s < dim; ++s) {
            if (r < h && s < h) {
                t[r][s] = sub[r][s];
            } else if (r < h && s >= h) {
                // (a,0)(0,d) = (0, d a)
                const UnitProduct p = sub[s - h][r];
                t[r][s] = {p.sign, p.index + h};
            } else if (r >= h && s < h) {
                // (0,b)(c,0) = (0, b conj(c))
                const int cs = s == 0 ? +1 : -1;
                const UnitProduct p = sub[r - h][s];
                t[r][s] = {cs * p.sign, p.index + h};
            } else {
                // (0,b)(0,d) = (-conj(d) b, 0)
                const int ds = s - h == 0 ? +1 : -1;
                const UnitProduct p = sub[s - h][r - h];
                t[r][s] = {-ds * p.sign, p.index};
            }
        }
    }
    return t;
}

// Doubling order is (1, i, j, k, l, il, jl, kl); the component order used
// throughout is (1, i, j, k, kl, jl, il, l). The permutation is its own
// inverse.
constexpr std::array<int, 8> kPerm{0, 1, 2, 3, 7, 6, 5, 4};

std::array<std::array<UnitProduct, 8>, 8> build_table() {
    const auto cd = doubling_table(8);
    std::array<std::array<UnitProduct, 8>, 8> t{};
    for (int r = 0; r < 8; ++r)
        for (int s = 0; s < 8; ++s) {
            const UnitProduct p = cd[kPerm[r]][kPerm[s]];
            t[r][s] = {p.sign, kPerm[p.index]};
        }
    return t;
}

constexpr std::array<std::string_view, 8> kUnitNames{"1", "i", "j", "k", "kl", "jl", "il", "l"};

} // namespace

const std::array<std::array<UnitProduct, 8>, 8>& unit_table() {
    static const auto table = build_table();
    return table;
}

std::string_view unit_name(Unit u) {
    return kUnitNames[static_cast<std::size_t>(u)];
}

Automorphism::Automorphism(std::array<Octonion, 8> columns) : columns_(std::move(columns)) {
    if (columns_[0] != Octonion::unit(Unit::One))
        throw std::invalid_argument("automorphism must fix the real unit");
    const auto& tab = unit_table();
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t s = 0; s < 8; ++s) {
            const UnitProduct p = tab[r][s];
            Octonion expect = columns_[p.index];
            if (p.sign < 0) expect = -expect;
            if (columns_[r] * columns_[s] != expect)
                throw std::invalid_argument(
                    "not an automorphism: image of unit product mismatch at (" +
                    std::string(kUnitNames[r]) + ", " + std::string(kUnitNames[s]) + ")");
        }
    }
}

Automorphism Automorphism::from_cayley_triple(const Octonion& u1, const Octonion& u2,
                                              const Octonion& u4) {
    const Octonion u3 = u1 * u2;
    return Automorphism({Octonion::unit(Unit::One), u1, u2, u3, u3 * u4, u2 * u4, u1 * u4, u4});
}

Automorphism Automorphism::from_unit_images(const std::array<Octonion, 8>& columns) {
    return Automorphism(columns);
}

Octonion Automorphism::apply(const Octonion& w) const {
    Octonion out;
    for (std::size_t r = 0; r < 8; ++r) {
        if (w.coeff(r).is_zero()) continue;
        out += columns_[r] * w.coeff(r);
    }
    return out;
}

Octonion Automorphism::inverse_apply(const Octonion& w) const {
    Octonion out;
    for (std::size_t r = 0; r < 8; ++r) {
        Scalar dot;
        for (std::size_t s = 0; s < 8; ++s) dot += columns_[r].coeff(s) * w.coeff(s);
        out.coeff(r) = dot;
    }
    return out;
}

Automorphism Automorphism::then(const Automorphism& next) const {
    std::array<Octonion, 8> cols;
    for (std::size_t r = 0; r < 8; ++r) cols[r] = next.apply(columns_[r]);
    return Automorphism(std::move(cols));
}

std::string to_string(const Octonion& o) {
    std::string out;
    const auto emit_part = [&](const Rational& value, bool with_sqrt5, std::size_t unit) {
        if (value.is_zero()) return;
        const Rational mag = value.abs();
        if (value.sign() < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        const bool is_one = mag == Rational(1);
        const bool has_unit = unit != 0;
        if (!is_one || (!with_sqrt5 && !has_unit)) out += mag.str();
        if (with_sqrt5) {
            if (!is_one) out += '*';
            out += "sqrt5";
            if (has_unit) out += '*';
        }
        if (has_unit) out += kUnitNames[unit];
    };
    for (std::size_t r = 0; r < 8; ++r) {
        const Scalar& c = o.coeff(r);
        emit_part(c.rat(), false, r);
        emit_part(c.surd(), true, r);
    }
    if (out.empty()) out = "0";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Octonion& o) {
    return os << to_string(o);
}

Octonion octonion_from_string(std::string_view text) {
    std::size_t pos = 0;
    const auto fail = [&](std::string_view what) -> void {
        throw ParseError("invalid octonion '" + std::string(text) + "': " + std::string(what));
    };
    const auto parse_number = [&]() -> Rational {
        std::string num;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            num.push_back(text[pos++]);
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
    // Longest-match unit name; "sqrt5" is matched before units so the
    // leading digit of "5" cannot confuse it.
    const auto try_unit = [&]() -> int {
        static constexpr struct {
            std::string_view name;
            Unit unit;
        } kNames[] = {{"kl", Unit::Kl}, {"jl", Unit::Jl}, {"il", Unit::Il},
                      {"i", Unit::I},   {"j", Unit::J},   {"k", Unit::K},
                      {"l", Unit::L}};
        for (const auto& n : kNames) {
            if (text.compare(pos, n.name.size(), n.name) == 0) {
                pos += n.name.size();
                return static_cast<int>(n.unit);
            }
        }
        return -1;
    };

    if (text.empty()) fail("empty string");
    Octonion out;
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
        Rational coeff(1);
        bool has_sqrt5 = false;
        bool any_factor = false;
        bool expect_factor = false;
        int unit = -1;
        while (pos < text.size()) {
            if (text.compare(pos, 5, "sqrt5") == 0) {
                if (has_sqrt5) fail("repeated sqrt5 factor");
                has_sqrt5 = true;
                pos += 5;
            } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coeff *= parse_number();
            } else if (int u = try_unit(); u >= 0) {
                if (unit >= 0) fail("more than one unit name in a term");
                unit = u;
            } else {
                break;
            }
            any_factor = true;
            expect_factor = false;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                expect_factor = true;
            }
        }
        if (!any_factor)
            fail("unexpected token '" + std::string(text.substr(pos)) + "'");
        if (expect_factor) fail("dangling '*'");
        if (sign < 0) coeff = -coeff;
        const std::size_t idx = unit >= 0 ? static_cast<std::size_t>(unit) : 0;
        if (has_sqrt5)
            out.coeff(idx) += Scalar::quadext(Rational(0), coeff);
        else
            out.coeff(idx) += Scalar(coeff);
    }
    return out;
}

} // namespace octjordan
