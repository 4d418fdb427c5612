#include "octjordan/examples.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace octjordan {
namespace examples {

namespace {

// Recursive-descent evaluator for the corpus expression grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | atom
//   atom   := integer | 'sqrt5' | symbol | '(' expr ')'
class ExpressionParser {
public:
    ExpressionParser(const std::string& text, const std::map<std::string, Scalar>& symbols)
        : text_(text), symbols_(symbols) {}

    Scalar parse() {
        Scalar value = expr();
        if (pos_ != text_.size()) fail("trailing input");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("invalid expression '" + text_ + "' at position " +
                         std::to_string(pos_) + ": " + what);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    Scalar expr() {
        Scalar value = term();
        while (peek() == '+' || peek() == '-') {
            const char op = text_[pos_++];
            const Scalar rhs = term();
            value = op == '+' ? value + rhs : value - rhs;
        }
        return value;
    }

    Scalar term() {
        Scalar value = unary();
        while (peek() == '*' || peek() == '/') {
            const char op = text_[pos_++];
            const Scalar rhs = unary();
            if (op == '*') {
                value *= rhs;
            } else {
                if (rhs.is_zero()) fail("division by zero");
                value /= rhs;
            }
        }
        return value;
    }

    Scalar unary() {
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return atom();
    }

    Scalar atom() {
        if (peek() == '(') {
            ++pos_;
            Scalar value = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
            return Scalar(Rational(mpz_class(digits, 10), mpz_class(1)));
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek()))) name.push_back(text_[pos_++]);
            if (name == "sqrt5") return Scalar::sqrt5();
            const auto it = symbols_.find(name);
            if (it == symbols_.end()) fail("unknown symbol '" + name + "'");
            return it->second;
        }
        fail("unexpected character");
    }

    const std::string& text_;
    const std::map<std::string, Scalar>& symbols_;
    std::size_t pos_ = 0;
};

using nlohmann::json;

Scalar eval(const json& node, const std::map<std::string, Scalar>& symbols) {
    return evaluate_expression(node.get<std::string>(), symbols);
}

Octonion eval_octonion(const json& node, const std::map<std::string, Scalar>& symbols) {
    const auto& coeffs = node.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != 8)
        throw ParseError("octonion 'coeffs' must be an array of 8 entries");
    Octonion out;
    for (std::size_t r = 0; r < 8; ++r) out.coeff(r) = eval(coeffs[r], symbols);
    return out;
}

OctVector eval_vector(const json& node, const std::map<std::string, Scalar>& symbols) {
    return {eval_octonion(node.at("x"), symbols), eval_octonion(node.at("y"), symbols),
            eval_octonion(node.at("z"), symbols)};
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file " + path.string());
    json doc;
    in >> doc;
    return doc;
}

std::filesystem::path resolve_dir(const std::filesystem::path& dir) {
    return dir.empty() ? default_data_dir() : dir;
}

std::vector<ExampleCase> load_cases(int which, const std::map<std::string, Scalar>& params,
                                    const std::filesystem::path& data_dir) {
    const auto path = resolve_dir(data_dir) / ("ex" + std::to_string(which) + ".json");
    const json doc = load_json(path);

    std::map<std::string, Scalar> symbols = params;
    for (const auto& def : doc.at("defs")) {
        const std::string name = def.at(0).get<std::string>();
        symbols[name] = eval(def.at(1), symbols);
    }

    const auto& m = doc.at("matrix");
    const JordanMatrix matrix(eval(m.at("p"), symbols), eval(m.at("m"), symbols),
                              eval(m.at("n"), symbols), eval_octonion(m.at("a"), symbols),
                              eval_octonion(m.at("b"), symbols),
                              eval_octonion(m.at("c"), symbols));

    std::vector<ExampleCase> out;
    for (const auto& entry : doc.at("cases")) {
        ExampleCase c;
        c.id = entry.at("id").get<std::string>();
        c.matrix = matrix;
        OctVector v = eval_vector(entry.at("vector"), symbols);
        if (entry.contains("tail")) {
            const Octonion tail = eval_octonion(entry.at("tail"), symbols);
            v = {v.x * tail, v.y * tail, v.z * tail};
        }
        c.pair = {std::move(v), eval_octonion(entry.at("eigenvalue"), symbols)};
        const OctVector res = residual(c.matrix, c.pair);
        if (!res.x.is_zero() || !res.y.is_zero() || !res.z.is_zero())
            throw std::runtime_error("bundled case ex" + std::to_string(which) + "/" + c.id +
                                     " has a nonzero residual; corpus and multiplication "
                                     "convention disagree");
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

Scalar evaluate_expression(const std::string& text,
                           const std::map<std::string, Scalar>& symbols) {
    return ExpressionParser(text, symbols).parse();
}

Rational Example1Params::cos_theta() const {
    const Rational t2 = t * t;
    return (Rational(1) - t2) / (Rational(1) + t2);
}

Rational Example1Params::sin_theta() const {
    const Rational t2 = t * t;
    return (Rational(2) * t) / (Rational(1) + t2);
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("OCTJORDAN_DATA_DIR"); env && *env)
        return std::filesystem::path(env);
#ifdef OCTJORDAN_DATA_DIR
    return std::filesystem::path(OCTJORDAN_DATA_DIR);
#else
    return std::filesystem::path("data");
#endif
}

std::vector<ExampleCase> build_example1(const Example1Params& params,
                                        const std::filesystem::path& data_dir) {
    return load_cases(1, {{"p", params.p}, {"q", params.q}, {"t", Scalar(params.t)}}, data_dir);
}

std::vector<ExampleCase> build_example2(const Scalar& p, const Scalar& q,
                                        const std::filesystem::path& data_dir) {
    return load_cases(2, {{"p", p}, {"q", q}}, data_dir);
}

std::vector<ExampleCase> build_example3(const Scalar& p, const Scalar& q,
                                        const std::filesystem::path& data_dir) {
    return load_cases(3, {{"p", p}, {"q", q}}, data_dir);
}

std::vector<ExampleCase> build_example(int which, const Scalar& p, const Scalar& q,
                                       const Rational& t, const std::filesystem::path& data_dir) {
    switch (which) {
        case 1: return build_example1({p, q, t}, data_dir);
        case 2: return build_example2(p, q, data_dir);
        case 3: return build_example3(p, q, data_dir);
        default: throw std::invalid_argument("example index must be 1, 2 or 3");
    }
}

CaseClassification classify_case(const ExampleCase& c) {
    CaseClassification out;
    out.re_zero = c.pair.vector.real_part_is_zero();
    const Octonion assoc = c.pair.vector.associator();
    out.associator_zero = assoc.is_zero();
    out.associator_kl_multiple = true;
    for (std::size_t r = 0; r < 8; ++r)
        if (r != static_cast<std::size_t>(Unit::Kl) && !assoc.coeff(r).is_zero())
            out.associator_kl_multiple = false;
    out.lambda_nonreal = !c.pair.eigenvalue.im().is_zero();
    out.eligible = out.re_zero && !out.associator_zero;
    return out;
}

ContainmentInstance example1_containment_instance(const Rational& t,
                                                  const std::filesystem::path& data_dir) {
    Example1Params params{Scalar(0), Scalar(-1), t};
    const Rational ct = params.cos_theta();
    const Rational st = params.sin_theta();
    if (st.is_zero())
        throw DegenerateVector("DegenerateVector: t = 0 makes the w- associator vanish");
    // q = -1 aligns the imaginary part of the eigenvalue with the
    // associator; p = 2 cos then cancels its real part, so that
    // lambda = [v] exactly.
    params.p = Scalar(Rational(2) * ct);

    const auto cases = build_example1(params, data_dir);
    const ExampleCase* w_minus = nullptr;
    for (const auto& c : cases)
        if (c.id == "w-") w_minus = &c;
    if (!w_minus) throw std::logic_error("corpus file has no w- case");
    if (w_minus->pair.eigenvalue != w_minus->pair.vector.associator())
        throw std::logic_error("eigenvalue does not equal the vector associator after rescaling");

    // Cayley triple aligning (j, -cos k + sin l, i) with the generic
    // pattern; all entries are rational because the three vectors already
    // have unit norm.
    const int sign = st.sign();
    Octonion u1 = Octonion::unit(Unit::J);
    Octonion u2;
    u2[Unit::K] = Scalar(-ct);
    u2[Unit::L] = Scalar(st);
    Octonion u4;
    u4[Unit::I] = Scalar(st * Rational(sign));
    u4[Unit::Jl] = Scalar(ct * Rational(sign));
    const Automorphism phi = Automorphism::from_cayley_triple(u1, u2, u4);

    const OctVector generic = inverse_transform(phi, w_minus->pair.vector);
    ContainmentInstance out{w_minus->matrix, w_minus->pair, inverse_transform(phi, w_minus->matrix),
                            GenericImaginaryVector::from_vector(generic)};
    return out;
}

} // namespace examples
} // namespace octjordan
