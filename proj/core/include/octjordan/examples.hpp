#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "octjordan/jordan.hpp"
#include "octjordan/solver.hpp"

namespace octjordan {
namespace examples {

/// Parameters of the first bundled family. The unit-circle factor
/// s = cos + kl sin is parametrized rationally through t:
/// cos = (1 - t^2)/(1 + t^2), sin = 2t/(1 + t^2), so |s| = 1 exactly and
/// everything stays in exact arithmetic.
struct Example1Params {
    Scalar p, q;
    Rational t;

    Rational cos_theta() const;
    Rational sin_theta() const;
};

/// One verified eigenpair of a bundled matrix family. Construction
/// re-checks residual == 0 exactly and fails loudly otherwise, so a
/// convention mismatch cannot slip through silently.
struct ExampleCase {
    std::string id;
    JordanMatrix matrix;
    EigenPair pair;
};

struct CaseClassification {
    bool re_zero = false;
    bool associator_zero = false;
    /// [v] lies on the kl axis (vacuously true when it vanishes).
    bool associator_kl_multiple = false;
    /// The eigenvalue keeps a nonzero imaginary part after the identity
    /// shift that removes its real part.
    bool lambda_nonreal = false;
    /// Vanishing real part and nonvanishing associator: the vector is one
    /// the constructive solver can handle.
    bool eligible = false;
};

CaseClassification classify_case(const ExampleCase& c);

/// Directory holding the bundled corpus files ex1.json, ex2.json,
/// ex3.json; the OCTJORDAN_DATA_DIR environment variable overrides the
/// compiled-in location.
std::filesystem::path default_data_dir();

std::vector<ExampleCase> build_example1(const Example1Params& params,
                                        const std::filesystem::path& data_dir = {});
std::vector<ExampleCase> build_example2(const Scalar& p, const Scalar& q,
                                        const std::filesystem::path& data_dir = {});
std::vector<ExampleCase> build_example3(const Scalar& p, const Scalar& q,
                                        const std::filesystem::path& data_dir = {});
std::vector<ExampleCase> build_example(int which, const Scalar& p, const Scalar& q,
                                       const Rational& t,
                                       const std::filesystem::path& data_dir = {});

/// The first family's w- eigenpair specialized so its eigenvalue equals
/// the eigenvector associator exactly (q = -1, p = 2 cos), expressed in
/// the generic basis through an exact Cayley-triple automorphism. The
/// basis change needs no square roots here, so the whole instance stays
/// rational. Requires t != 0, otherwise the associator vanishes.
struct ContainmentInstance {
    JordanMatrix original_matrix;
    EigenPair original_pair;
    JordanMatrix generic_matrix;
    GenericImaginaryVector generic_vector;
};

ContainmentInstance example1_containment_instance(const Rational& t,
                                                  const std::filesystem::path& data_dir = {});

/// Scalar-valued expression evaluator used by the corpus files:
/// rational literals, sqrt5, named symbols, + - * /, parentheses.
Scalar evaluate_expression(const std::string& text, const std::map<std::string, Scalar>& symbols);

} // namespace examples
} // namespace octjordan
