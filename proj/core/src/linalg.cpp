#include "octjordan/linalg.hpp"

#include <stdexcept>

namespace octjordan {

std::vector<std::size_t> rref_in_place(ScalarMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = m.rows();
        for (std::size_t r = pivot_row; r < m.rows(); ++r) {
            if (!m.at(r, col).is_zero()) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) continue;
        if (found != pivot_row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m.at(found, c), m.at(pivot_row, c));
        const Scalar inv = m.at(pivot_row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            const Scalar factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= factor * m.at(pivot_row, c);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

std::size_t rank(ScalarMatrix m) {
    return rref_in_place(m).size();
}

AffineSolutionSet solve_affine(const ScalarMatrix& m, const std::vector<Scalar>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("rhs size does not match row count");
    const std::size_t n = m.cols();
    ScalarMatrix aug(m.rows(), n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n) = rhs[r];
    }
    const auto pivot_cols = rref_in_place(aug);

    AffineSolutionSet out;
    // Inconsistent iff some pivot landed in the rhs column.
    if (!pivot_cols.empty() && pivot_cols.back() == n) {
        out.status = AffineSolutionSet::Status::empty;
        return out;
    }
    out.status = AffineSolutionSet::Status::nonempty;

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    out.particular.assign(n, Scalar(0));
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) out.particular[pivot_cols[r]] = aug.at(r, n);

    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> basis(n, Scalar(0));
        basis[f] = Scalar(1);
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            basis[pivot_cols[r]] = -aug.at(r, f);
        out.nullspace_basis.push_back(std::move(basis));
    }
    out.nullity = n - pivot_cols.size();
    return out;
}

bool AffineSolutionSet::contains(const std::vector<Scalar>& point) const {
    if (is_empty() || point.size() != particular.size()) return false;
    std::vector<Scalar> delta(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) delta[i] = point[i] - particular[i];
    return in_span(nullspace_basis, delta);
}

bool satisfies(const ScalarMatrix& m, const std::vector<Scalar>& rhs,
               const std::vector<Scalar>& x) {
    if (x.size() != m.cols() || rhs.size() != m.rows())
        throw std::invalid_argument("dimension mismatch in satisfies()");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Scalar acc;
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * x[c];
        if (acc != rhs[r]) return false;
    }
    return true;
}

bool in_span(const std::vector<std::vector<Scalar>>& vectors, const std::vector<Scalar>& target) {
    if (vectors.empty()) {
        for (const Scalar& s : target)
            if (!s.is_zero()) return false;
        return true;
    }
    const std::size_t dim = vectors.front().size();
    if (target.size() != dim) throw std::invalid_argument("dimension mismatch in in_span()");
    ScalarMatrix base(vectors.size(), dim);
    ScalarMatrix extended(vectors.size() + 1, dim);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            base.at(r, c) = vectors[r][c];
            extended.at(r, c) = vectors[r][c];
        }
    for (std::size_t c = 0; c < dim; ++c) extended.at(vectors.size(), c) = target[c];
    return rank(std::move(base)) == rank(std::move(extended));
}

} // namespace octjordan
