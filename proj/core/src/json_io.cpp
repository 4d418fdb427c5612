#include "octjordan/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace octjordan {
namespace io {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON input");
    return doc;
}

Scalar scalar_from_node(const json& node) {
    if (node.is_string()) return Scalar::from_string(node.get<std::string>());
    if (node.is_number_integer()) return Scalar(Rational(node.get<long>()));
    throw ParseError("scalar entries must be strings in the scalar grammar or integers");
}

Octonion octonion_from_node(const json& node) {
    const auto& coeffs = node.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != 8)
        throw ParseError("octonion 'coeffs' must be an array of 8 entries");
    Octonion out;
    for (std::size_t r = 0; r < 8; ++r) out.coeff(r) = scalar_from_node(coeffs[r]);
    return out;
}

OctVector vector_from_node(const json& node) {
    return {octonion_from_node(node.at("x")), octonion_from_node(node.at("y")),
            octonion_from_node(node.at("z"))};
}

canonical::FloatOctonion float_octonion_from_node(const json& node) {
    const auto& coeffs = node.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != 8)
        throw ParseError("octonion 'coeffs' must be an array of 8 entries");
    canonical::FloatOctonion out;
    for (std::size_t r = 0; r < 8; ++r) {
        const auto& c = coeffs[r];
        if (c.is_number())
            out.coeff(r) = c.get<double>();
        else
            out.coeff(r) = scalar_from_node(c).to_double();
    }
    return out;
}

} // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Octonion octonion_from_json_text(const std::string& text) {
    return octonion_from_node(parse(text));
}

OctVector vector_from_json_text(const std::string& text) {
    return vector_from_node(parse(text));
}

JordanMatrix matrix_from_json_text(const std::string& text) {
    const json doc = parse(text);
    return JordanMatrix(scalar_from_node(doc.at("p")), scalar_from_node(doc.at("m")),
                        scalar_from_node(doc.at("n")), octonion_from_node(doc.at("a")),
                        octonion_from_node(doc.at("b")), octonion_from_node(doc.at("c")));
}

SolverParams params_from_json_text(const std::string& text) {
    const json doc = parse(text);
    return {scalar_from_node(doc.at("b1")), scalar_from_node(doc.at("b4")),
            scalar_from_node(doc.at("b7")), scalar_from_node(doc.at("p")),
            scalar_from_node(doc.at("m")),  scalar_from_node(doc.at("n"))};
}

canonical::FloatVector float_vector_from_json_text(const std::string& text) {
    const json doc = parse(text);
    return {float_octonion_from_node(doc.at("x")), float_octonion_from_node(doc.at("y")),
            float_octonion_from_node(doc.at("z"))};
}

std::string float_repr(double d) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return buf;
}

void JsonWriter::separate() {
    if (!has_items_.empty() && !pending_key_) {
        if (has_items_.back()) out_ += ',';
        has_items_.back() = true;
        newline();
    }
    pending_key_ = false;
}

void JsonWriter::newline() {
    if (!pretty_) return;
    out_ += '\n';
    out_.append(2 * has_items_.size(), ' ');
}

JsonWriter& JsonWriter::begin_object() {
    separate();
    out_ += '{';
    has_items_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    const bool had = has_items_.back();
    has_items_.pop_back();
    if (had) newline();
    out_ += '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separate();
    out_ += '[';
    has_items_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    const bool had = has_items_.back();
    has_items_.pop_back();
    if (had) newline();
    out_ += ']';
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
    separate();
    out_ += '"';
    out_ += name;
    out_ += pretty_ ? "\": " : "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
    separate();
    out_ += '"';
    for (char ch : s) {
        // the scalar/octonion grammars never need escapes, but stay safe
        if (ch == '"' || ch == '\\') out_ += '\\';
        out_ += ch;
    }
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(bool b) {
    separate();
    out_ += b ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(long long n) {
    separate();
    out_ += std::to_string(n);
    return *this;
}

JsonWriter& JsonWriter::value(double d) {
    separate();
    out_ += float_repr(d);
    return *this;
}

void write_octonion(JsonWriter& w, const Octonion& o) {
    w.begin_object().key("coeffs").begin_array();
    for (std::size_t r = 0; r < 8; ++r) w.value(o.coeff(r));
    w.end_array().end_object();
}

void write_vector(JsonWriter& w, const OctVector& v) {
    w.begin_object();
    w.key("x");
    write_octonion(w, v.x);
    w.key("y");
    write_octonion(w, v.y);
    w.key("z");
    write_octonion(w, v.z);
    w.end_object();
}

void write_matrix(JsonWriter& w, const JordanMatrix& A) {
    w.begin_object();
    w.key("p").value(A.p());
    w.key("m").value(A.m());
    w.key("n").value(A.n());
    w.key("a");
    write_octonion(w, A.a());
    w.key("b");
    write_octonion(w, A.b());
    w.key("c");
    write_octonion(w, A.c());
    w.end_object();
}

void write_params(JsonWriter& w, const SolverParams& p) {
    w.begin_object();
    w.key("b1").value(p.b1);
    w.key("b4").value(p.b4);
    w.key("b7").value(p.b7);
    w.key("p").value(p.p);
    w.key("m").value(p.m);
    w.key("n").value(p.n);
    w.end_object();
}

void write_float_octonion(JsonWriter& w, const canonical::FloatOctonion& o) {
    w.begin_object().key("coeffs").begin_array();
    for (std::size_t r = 0; r < 8; ++r) w.value(o.coeff(r));
    w.end_array().end_object();
}

void write_float_vector(JsonWriter& w, const canonical::FloatVector& v) {
    w.begin_object();
    w.key("x");
    write_float_octonion(w, v.x);
    w.key("y");
    write_float_octonion(w, v.y);
    w.key("z");
    write_float_octonion(w, v.z);
    w.end_object();
}

} // namespace io
} // namespace octjordan
