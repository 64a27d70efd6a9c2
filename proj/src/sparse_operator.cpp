// sparse_operator.cpp — CSR assembly, products and matvec kernels.

#include "srlab/sparse_operator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace srlab {

void SparseOperator::apply_serial(const cplx* x, cplx* y) const {
    for (std::int64_t r = 0; r < dim; ++r) {
        cplx acc{0.0, 0.0};
        for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            acc += val[k] * x[col[k]];
        y[r] = acc;
    }
}

void SparseOperator::apply(const cplx* x, cplx* y) const {
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < dim; ++r) {
        cplx acc{0.0, 0.0};
        for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            acc += val[k] * x[col[k]];
        y[r] = acc;
    }
}

std::vector<cplx> SparseOperator::apply(const std::vector<cplx>& x) const {
    if (static_cast<std::int64_t>(x.size()) != dim)
        throw std::invalid_argument("SparseOperator::apply: size mismatch");
    std::vector<cplx> y(x.size());
    apply(x.data(), y.data());
    return y;
}

cplx SparseOperator::coeff(std::int64_t r, std::int64_t c) const {
    for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
        if (col[k] == c) return val[k];
    return {0.0, 0.0};
}

double SparseOperator::max_abs() const {
    double m = 0.0;
    for (const cplx& v : val) m = std::max(m, std::abs(v));
    return m;
}

double SparseOperator::inf_norm() const {
    double m = 0.0;
    for (std::int64_t r = 0; r < dim; ++r) {
        double s = 0.0;
        for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) s += std::abs(val[k]);
        m = std::max(m, s);
    }
    return m;
}

bool SparseOperator::is_hermitian(double tol) const {
    const SparseOperator at = adjoint(*this);
    if (dim <= 512) {
        // exact structural comparison
        if (at.row_ptr != row_ptr || at.col != col) return false;
        for (size_t k = 0; k < val.size(); ++k)
            if (val[k] != at.val[k]) return false;
        return true;
    }
    const SparseOperator diff = add(*this, at, 1.0, -1.0);
    return diff.max_abs() <= tol;
}

SparseOperator from_triplets(std::int64_t dim, std::vector<Triplet> entries, bool hermitian) {
    if (dim <= 0) throw std::invalid_argument("from_triplets: dim must be positive");
    for (const Triplet& t : entries)
        if (t.row < 0 || t.row >= dim || t.col < 0 || t.col >= dim)
            throw std::invalid_argument("from_triplets: index out of range");
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    SparseOperator op;
    op.dim = dim;
    op.hermitian = hermitian;
    op.row_ptr.assign(static_cast<size_t>(dim) + 1, 0);
    size_t i = 0;
    for (std::int64_t r = 0; r < dim; ++r) {
        op.row_ptr[static_cast<size_t>(r)] = static_cast<std::int64_t>(op.val.size());
        while (i < entries.size() && entries[i].row == r) {
            const std::int64_t c = entries[i].col;
            cplx v{0.0, 0.0};
            while (i < entries.size() && entries[i].row == r && entries[i].col == c)
                v += entries[i++].value;
            if (v != cplx{0.0, 0.0}) {
                op.col.push_back(c);
                op.val.push_back(v);
            }
        }
    }
    op.row_ptr[static_cast<size_t>(dim)] = static_cast<std::int64_t>(op.val.size());
    return op;
}

SparseOperator sparse_identity(std::int64_t dim) {
    std::vector<Triplet> t;
    t.reserve(static_cast<size_t>(dim));
    for (std::int64_t r = 0; r < dim; ++r) t.push_back({r, r, cplx{1.0, 0.0}});
    return from_triplets(dim, std::move(t), true);
}

SparseOperator add(const SparseOperator& a, const SparseOperator& b, cplx ca, cplx cb) {
    if (a.dim != b.dim) throw std::invalid_argument("add: dimension mismatch");
    std::vector<Triplet> t;
    t.reserve(a.val.size() + b.val.size());
    for (std::int64_t r = 0; r < a.dim; ++r) {
        for (std::int64_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k)
            t.push_back({r, a.col[k], ca * a.val[k]});
        for (std::int64_t k = b.row_ptr[r]; k < b.row_ptr[r + 1]; ++k)
            t.push_back({r, b.col[k], cb * b.val[k]});
    }
    return from_triplets(a.dim, std::move(t), false);
}

SparseOperator multiply(const SparseOperator& a, const SparseOperator& b) {
    if (a.dim != b.dim) throw std::invalid_argument("multiply: dimension mismatch");
    std::vector<Triplet> t;
    std::map<std::int64_t, cplx> row_acc;
    for (std::int64_t r = 0; r < a.dim; ++r) {
        row_acc.clear();
        for (std::int64_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k) {
            const std::int64_t m = a.col[k];
            const cplx av = a.val[k];
            for (std::int64_t k2 = b.row_ptr[m]; k2 < b.row_ptr[m + 1]; ++k2)
                row_acc[b.col[k2]] += av * b.val[k2];
        }
        for (const auto& [c, v] : row_acc)
            if (v != cplx{0.0, 0.0}) t.push_back({r, c, v});
    }
    return from_triplets(a.dim, std::move(t), false);
}

SparseOperator adjoint(const SparseOperator& a) {
    std::vector<Triplet> t;
    t.reserve(a.val.size());
    for (std::int64_t r = 0; r < a.dim; ++r)
        for (std::int64_t k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k)
            t.push_back({a.col[k], r, std::conj(a.val[k])});
    SparseOperator out = from_triplets(a.dim, std::move(t), a.hermitian);
    return out;
}

double commutator_max_abs(const SparseOperator& a, const SparseOperator& b) {
    return add(multiply(a, b), multiply(b, a), 1.0, -1.0).max_abs();
}

} // namespace srlab
