#pragma once

#include <cstddef>
#include <vector>

#include "octjordan/scalar.hpp"

namespace octjordan {

/// Dense matrix of exact Scalars, row-major.
class ScalarMatrix {
public:
    ScalarMatrix() : rows_(0), cols_(0) {}
    ScalarMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form in place, exact Gauss-Jordan. Pivot choice is
/// the first nonzero entry in column order: exact arithmetic needs no
/// magnitude heuristics, and the deterministic choice keeps reports
/// reproducible. Returns the pivot column of each pivot row in order.
std::vector<std::size_t> rref_in_place(ScalarMatrix& m);

std::size_t rank(ScalarMatrix m);

/// Solution set of M x = rhs as an affine subspace: one particular
/// solution plus a nullspace basis. nullity = cols - rank whenever the
/// system is consistent.
struct AffineSolutionSet {
    enum class Status { empty, nonempty };

    Status status = Status::empty;
    std::vector<Scalar> particular;
    std::vector<std::vector<Scalar>> nullspace_basis;
    std::size_t nullity = 0;

    bool is_empty() const { return status == Status::empty; }
    /// Exact membership: point - particular lies in the nullspace span.
    bool contains(const std::vector<Scalar>& point) const;
};

AffineSolutionSet solve_affine(const ScalarMatrix& m, const std::vector<Scalar>& rhs);

/// Exact residual check M x - rhs == 0.
bool satisfies(const ScalarMatrix& m, const std::vector<Scalar>& rhs,
               const std::vector<Scalar>& x);

/// Whether target lies in the linear span of the given vectors.
bool in_span(const std::vector<std::vector<Scalar>>& vectors, const std::vector<Scalar>& target);

} // namespace octjordan
