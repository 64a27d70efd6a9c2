// sparse_operator.hpp — compressed-row complex operators on the truncated space.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace srlab {

using cplx = std::complex<double>;

// Row-compressed storage.  Within each row the column indices are strictly
// increasing and no explicit zeros are stored.
struct SparseOperator {
    std::int64_t dim{0};
    bool hermitian{false};
    std::vector<std::int64_t> row_ptr; // length dim + 1
    std::vector<std::int64_t> col;
    std::vector<cplx> val;

    std::int64_t nnz() const { return static_cast<std::int64_t>(val.size()); }

    // y = A x.  apply() parallelizes over rows with OpenMP; each row is a
    // serial dot product, so the result is bit-identical to apply_serial().
    void apply(const cplx* x, cplx* y) const;
    void apply_serial(const cplx* x, cplx* y) const;
    std::vector<cplx> apply(const std::vector<cplx>& x) const;

    cplx coeff(std::int64_t r, std::int64_t c) const;

    double max_abs() const;      // largest |entry|
    double inf_norm() const;     // max row sum of |entries|, a bound on the spectral norm

    // Hermiticity measured on the stored entries: exact entry comparison for
    // dim <= 512, max |A - A†| entry otherwise.
    bool is_hermitian(double tol = 1e-12) const;
};

struct Triplet {
    std::int64_t row;
    std::int64_t col;
    cplx value;
};

// Duplicate (row, col) entries are summed; entries that cancel to zero are
// dropped.  Set hermitian when the operator is known self-adjoint.
SparseOperator from_triplets(std::int64_t dim, std::vector<Triplet> entries, bool hermitian);

SparseOperator sparse_identity(std::int64_t dim);
SparseOperator add(const SparseOperator& a, const SparseOperator& b, cplx ca = 1.0, cplx cb = 1.0);
SparseOperator multiply(const SparseOperator& a, const SparseOperator& b);
SparseOperator adjoint(const SparseOperator& a);

// max |(AB - BA)| entry, used by the symmetry checks
double commutator_max_abs(const SparseOperator& a, const SparseOperator& b);

} // namespace srlab
