#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "octjordan/canonical.hpp"
#include "octjordan/jordan.hpp"
#include "octjordan/linalg.hpp"
#include "octjordan/solver.hpp"

namespace octjordan {
namespace io {

std::string read_file(const std::filesystem::path& path);

// Exact inputs: scalar entries are strings in the scalar text grammar
// (integer JSON numbers are also accepted).
Octonion octonion_from_json_text(const std::string& text);
OctVector vector_from_json_text(const std::string& text);
JordanMatrix matrix_from_json_text(const std::string& text);
SolverParams params_from_json_text(const std::string& text);
// Numeric input for canonicalization: entries may be any JSON numbers or
// scalar strings (converted through to_double).
canonical::FloatVector float_vector_from_json_text(const std::string& text);

/// Deterministic JSON emitter: fixed key order, scalars in the text
/// grammar, doubles with 17 significant digits, so identical inputs give
/// byte-identical output.
class JsonWriter {
public:
    explicit JsonWriter(bool pretty) : pretty_(pretty) {}

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& name);
    JsonWriter& value(const std::string& s);
    JsonWriter& value(const char* s) { return value(std::string(s)); }
    JsonWriter& value(const Scalar& s) { return value(s.str()); }
    JsonWriter& value(bool b);
    JsonWriter& value(long long n);
    JsonWriter& value(std::size_t n) { return value(static_cast<long long>(n)); }
    JsonWriter& value(double d);

    std::string str() const { return out_; }

private:
    void separate();
    void newline();

    std::string out_;
    std::vector<bool> has_items_;
    bool pretty_;
    bool pending_key_ = false;
};

std::string float_repr(double d);

void write_octonion(JsonWriter& w, const Octonion& o);
void write_vector(JsonWriter& w, const OctVector& v);
void write_matrix(JsonWriter& w, const JordanMatrix& A);
void write_params(JsonWriter& w, const SolverParams& p);
void write_float_octonion(JsonWriter& w, const canonical::FloatOctonion& o);
void write_float_vector(JsonWriter& w, const canonical::FloatVector& v);

} // namespace io
} // namespace octjordan
