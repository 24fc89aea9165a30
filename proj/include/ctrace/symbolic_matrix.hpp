#ifndef CTRACE_SYMBOLIC_MATRIX_HPP
#define CTRACE_SYMBOLIC_MATRIX_HPP

#include <functional>
#include <vector>

#include "ctrace/ideal.hpp"
#include "ctrace/polynomial.hpp"

namespace ctrace {

// Row/column index sets of a minor, 1-based and strictly increasing.
struct MinorIndex {
    std::vector<unsigned> rows;
    std::vector<unsigned> cols;

    MinorIndex(std::vector<unsigned> r, std::vector<unsigned> c);
    std::size_t size() const { return rows.size(); }
};

// Partial order on minors: [A|B] <= [C|D] iff size(A) >= size(C) and
// componentwise a_i <= c_i, b_i <= d_i for i up to size(C).
bool minor_leq(const MinorIndex& u, const MinorIndex& v);

// A rectangular matrix of polynomials over one ring context.
class SymbolicMatrix {
public:
    SymbolicMatrix(const Ring& ring, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Ring& ring() const { return ring_; }

    const Polynomial& at(std::size_t i, std::size_t j) const;  // 0-based
    void set(std::size_t i, std::size_t j, Polynomial p);

    SymbolicMatrix transposed() const;

    // Determinant of the square submatrix selected by idx (Leibniz sign
    // convention), by cofactor expansion along the sparsest row.
    Polynomial minor(const MinorIndex& idx) const;
    Polynomial determinant() const;

    bool row_is_zero(std::size_t i) const;
    bool col_is_zero(std::size_t j) const;

private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> entries_;  // row-major
};

// All t-minors of M, zeros dropped, deduplicated up to sign. t = 0 yields
// the unit ideal; t beyond the shape is an error.
GeneratorIdeal ideal_of_minors(const SymbolicMatrix& m, unsigned t);

// Enumerates all strictly increasing 1-based index vectors of length k
// inside [1, limit]; visit receives each one.
void for_each_subset(unsigned limit, unsigned k, const std::function<void(const std::vector<unsigned>&)>& visit);

}  // namespace ctrace

#endif
