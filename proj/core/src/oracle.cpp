#include "octjordan/oracle.hpp"

#include <random>
#include <sstream>

namespace octjordan {
namespace oracle {

RealLinearSystem build_system(const OctVector& v, const Octonion& lambda) {
    RealLinearSystem sys{ScalarMatrix(24, kJordanCoordinates), {}};

    // residual(A) is affine in A; the constant term is residual(0) = -v lambda,
    // so column u is residual(E_u) - residual(0) and the right-hand side is
    // -residual(0) = flatten(v lambda).
    const EigenPair probe{v, lambda};
    const auto constant = flatten(residual(JordanMatrix(), probe));
    for (std::size_t u = 0; u < kJordanCoordinates; ++u) {
        const auto column = flatten(residual(JordanMatrix::coordinate_basis(u), probe));
        for (std::size_t r = 0; r < 24; ++r) sys.matrix.at(r, u) = column[r] - constant[r];
    }
    sys.rhs.resize(24);
    for (std::size_t r = 0; r < 24; ++r) sys.rhs[r] = -constant[r];
    return sys;
}

AffineSolutionSet solve(const RealLinearSystem& system) {
    return solve_affine(system.matrix, system.rhs);
}

namespace {

Scalar random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 10);
    return Scalar(Rational(num(rng), den(rng)));
}

SolverParams random_params(std::mt19937_64& rng) {
    return {random_rational(rng), random_rational(rng), random_rational(rng),
            random_rational(rng), random_rational(rng), random_rational(rng)};
}

std::vector<Scalar> to_vector27(const JordanMatrix& A) {
    const auto coords = A.to_coordinates();
    return {coords.begin(), coords.end()};
}

} // namespace

CrossValidationReport cross_validate(const GenericImaginaryVector& v, std::uint64_t seed) {
    CrossValidationReport report;
    std::mt19937_64 rng(seed);

    const RealLinearSystem sys = build_system(v.to_vector(), v.associator());
    const AffineSolutionSet sol = solve(sys);

    report.nullity = sol.nullity;
    report.nullity_is_six = !sol.is_empty() && sol.nullity == 6;
    if (!report.nullity_is_six) {
        std::ostringstream os;
        os << "expected a nonempty solution set of nullity 6, got "
           << (sol.is_empty() ? "an empty set" : "nullity " + std::to_string(sol.nullity));
        report.witness = os.str();
        return report;
    }

    report.constructs_satisfy_system = true;
    for (int trial = 0; trial < 20 && report.constructs_satisfy_system; ++trial) {
        const SolverParams params = random_params(rng);
        const JordanMatrix A = construct(v, params);
        if (!satisfies(sys.matrix, sys.rhs, to_vector27(A))) {
            report.constructs_satisfy_system = false;
            report.witness = "constructed matrix violates the linear system at trial " +
                             std::to_string(trial);
        }
    }
    if (!report.constructs_satisfy_system) return report;

    report.b5_always_zero = sol.particular[kCoordB5].is_zero();
    if (report.b5_always_zero)
        for (const auto& basis : sol.nullspace_basis)
            if (!basis[kCoordB5].is_zero()) {
                report.b5_always_zero = false;
                break;
            }
    if (!report.b5_always_zero) {
        report.witness = "a solution with b5 != 0 exists; b5 of the particular solution is " +
                         sol.particular[kCoordB5].str();
        return report;
    }

    // Mutual containment: base point solves the system (already checked via
    // random draws, but the exact base matters for the affine match) and the
    // six directions span the nullspace, whose dimension is also 6.
    const FamilyMap map = family_map(v);
    std::vector<std::vector<Scalar>> directions;
    for (const auto& dir : map.directions) directions.push_back(to_vector27(dir));

    report.families_coincide = satisfies(sys.matrix, sys.rhs, to_vector27(map.base));
    if (!report.families_coincide) {
        report.witness = "family base point does not satisfy the linear system";
        return report;
    }
    ScalarMatrix dir_matrix(6, kJordanCoordinates);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < kJordanCoordinates; ++c)
            dir_matrix.at(r, c) = directions[r][c];
    if (rank(std::move(dir_matrix)) != 6) {
        report.families_coincide = false;
        report.witness = "construction directions are linearly dependent";
        return report;
    }
    for (std::size_t i = 0; i < 6; ++i) {
        if (!in_span(sol.nullspace_basis, directions[i])) {
            report.families_coincide = false;
            report.witness = "construction direction " + std::to_string(i) +
                             " lies outside the nullspace";
            return report;
        }
    }
    return report;
}

} // namespace oracle
} // namespace octjordan
