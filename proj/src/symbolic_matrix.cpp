#include "ctrace/symbolic_matrix.hpp"

#include <algorithm>
#include <functional>

#include "ctrace/errors.hpp"

namespace ctrace {

MinorIndex::MinorIndex(std::vector<unsigned> r, std::vector<unsigned> c)
    : rows(std::move(r)), cols(std::move(c)) {
    if (rows.size() != cols.size()) throw BoundsError("minor needs equally many rows and columns");
    if (rows.empty()) throw BoundsError("minor index sets must be nonempty");
    auto strictly_increasing = [](const std::vector<unsigned>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] < 1 || (i > 0 && v[i] <= v[i - 1])) return false;
        return true;
    };
    if (!strictly_increasing(rows) || !strictly_increasing(cols))
        throw BoundsError("minor index sets must be strictly increasing and 1-based");
}

bool minor_leq(const MinorIndex& u, const MinorIndex& v) {
    if (u.size() < v.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (u.rows[i] > v.rows[i] || u.cols[i] > v.cols[i]) return false;
    return true;
}

SymbolicMatrix::SymbolicMatrix(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial::zero(ring)) {
    if (rows == 0 || cols == 0) throw BoundsError("matrix dimensions must be positive");
}

const Polynomial& SymbolicMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw BoundsError("matrix index out of range");
    return entries_[i * cols_ + j];
}

void SymbolicMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
    if (i >= rows_ || j >= cols_) throw BoundsError("matrix index out of range");
    if (!p.ring().same_context(ring_)) throw MixedContextError("matrix entry from a different ring context");
    entries_[i * cols_ + j] = std::move(p);
}

SymbolicMatrix SymbolicMatrix::transposed() const {
    SymbolicMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

bool SymbolicMatrix::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) return false;
    return true;
}

bool SymbolicMatrix::col_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i)
        if (!at(i, j).is_zero()) return false;
    return true;
}

namespace {

// Cofactor expansion along the row with the fewest nonzero entries; tree
// matrices are very sparse and this prunes most of the work.
Polynomial det_recursive(const SymbolicMatrix& m, std::vector<unsigned>& rows, std::vector<unsigned>& cols) {
    const std::size_t k = rows.size();
    const Ring& ring = m.ring();
    if (k == 1) return m.at(rows[0] - 1, cols[0] - 1);

    std::size_t best = 0, best_nnz = k + 1;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t nnz = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (!m.at(rows[i] - 1, cols[j] - 1).is_zero()) ++nnz;
        if (nnz < best_nnz) {
            best = i;
            best_nnz = nnz;
        }
    }
    if (best_nnz == 0) return Polynomial::zero(ring);

    const unsigned row = rows[best];
    std::vector<unsigned> sub_rows;
    sub_rows.reserve(k - 1);
    for (std::size_t i = 0; i < k; ++i)
        if (i != best) sub_rows.push_back(rows[i]);

    Polynomial det = Polynomial::zero(ring);
    for (std::size_t j = 0; j < k; ++j) {
        const Polynomial& e = m.at(row - 1, cols[j] - 1);
        if (e.is_zero()) continue;
        std::vector<unsigned> sub_cols;
        sub_cols.reserve(k - 1);
        for (std::size_t jj = 0; jj < k; ++jj)
            if (jj != j) sub_cols.push_back(cols[jj]);
        Polynomial cof = det_recursive(m, sub_rows, sub_cols);
        Polynomial contrib = e * cof;
        if ((best + j) % 2 == 1) contrib = -contrib;
        det = det + contrib;
    }
    return det;
}

}  // namespace

Polynomial SymbolicMatrix::minor(const MinorIndex& idx) const {
    if (idx.rows.back() > rows_ || idx.cols.back() > cols_)
        throw BoundsError("minor index out of matrix bounds");
    std::vector<unsigned> r = idx.rows, c = idx.cols;
    return det_recursive(*this, r, c);
}

Polynomial SymbolicMatrix::determinant() const {
    if (rows_ != cols_) throw BoundsError("determinant of a non-square matrix");
    std::vector<unsigned> r(rows_), c(cols_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = static_cast<unsigned>(i + 1);
    for (std::size_t j = 0; j < cols_; ++j) c[j] = static_cast<unsigned>(j + 1);
    return det_recursive(*this, r, c);
}

void for_each_subset(unsigned limit, unsigned k,
                     const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (k == 0 || k > limit) return;
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i + 1;
    for (;;) {
        visit(idx);
        // advance to the next strictly increasing k-subset of [1, limit]
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[static_cast<unsigned>(i)] == limit - (k - 1 - static_cast<unsigned>(i))) --i;
        if (i < 0) return;
        ++idx[static_cast<unsigned>(i)];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

GeneratorIdeal ideal_of_minors(const SymbolicMatrix& m, unsigned t) {
    if (t == 0) return GeneratorIdeal::unit(m.ring());
    if (t > m.rows() || t > m.cols()) throw BoundsError("minor size exceeds matrix shape");

    std::vector<Polynomial> minors;
    for_each_subset(static_cast<unsigned>(m.rows()), t, [&](const std::vector<unsigned>& rows) {
        for_each_subset(static_cast<unsigned>(m.cols()), t, [&](const std::vector<unsigned>& cols) {
            Polynomial p = m.minor(MinorIndex(rows, cols));
            if (!p.is_zero()) minors.push_back(p.sign_normalized());
        });
    });
    return GeneratorIdeal::from_gens(m.ring(), std::move(minors));
}

}  // namespace ctrace
