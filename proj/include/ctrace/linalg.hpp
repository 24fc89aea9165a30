#ifndef CTRACE_LINALG_HPP
#define CTRACE_LINALG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ctrace/polynomial.hpp"

namespace ctrace {

// Coefficient matrix of a list of equigenerated polynomials: one column per
// monomial (ascending canonical order), one sparse rational row per input.
// Row i reconstructs polynomial i exactly.
struct CoefficientMatrix {
    std::vector<Monomial> columns;
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows;
};

CoefficientMatrix coefficient_matrix(const Ring& ring, std::span<const Polynomial> gens);

// A sparse integer row, entries ascending by column.
using SparseZRow = std::vector<std::pair<std::uint32_t, Integer>>;

// Clears denominators and strips the integer content of each row; neither
// changes the row space.
std::vector<SparseZRow> integer_rows(const CoefficientMatrix& m);

enum class Exec { Serial, Parallel };

// Exact rank by fraction-free Bareiss elimination on sparse integer rows.
// Pivot column is the leftmost nonzero column; the pivot row is chosen by
// minimal bit length of its leading entry (ties by row index), which keeps
// the minor growth tame on the +/-1-heavy matrices minor expansion makes.
// Exec::Parallel runs the per-row updates under OpenMP; results are
// identical to Exec::Serial by construction.
std::size_t bareiss_rank(std::vector<SparseZRow> rows, Exec exec = Exec::Parallel);

// Plain dense Gaussian elimination over the rationals. Slow and simple;
// kept as the reference implementation the fast kernels are tested against.
std::size_t gauss_rank_reference(const CoefficientMatrix& m);

// Rank over Z/p. A lower bound for the exact rank (reduction can only
// collapse rows), never a substitute for it: every reported rank in this
// library comes from exact elimination. Requires an odd prime with
// 2^30 < p < 2^31 (only the range and parity are enforced).
std::size_t rank_mod_p(const std::vector<SparseZRow>& rows, std::uint64_t p, Exec exec = Exec::Serial);

struct SpanOptions {
    Exec exec = Exec::Parallel;
    // When set, a mod-p elimination runs first and its result is checked
    // against the exact rank (mod-p rank may never exceed it).
    bool cross_check_mod_p = false;
    std::uint64_t prime = 2147483647;  // 2^31 - 1
};

// Dimension of the Q-span of the generators. All nonzero generators must
// be homogeneous of one common weighted degree; zeros are ignored and the
// empty list has dimension 0.
std::size_t span_dim(std::span<const Polynomial> gens, const SpanOptions& opts = {});

// True iff the two generator lists span the same vector space.
bool span_equal(std::span<const Polynomial> a, std::span<const Polynomial> b,
                const SpanOptions& opts = {});

// True iff p lies in the Q-span of gens.
bool in_span(const Polynomial& p, std::span<const Polynomial> gens, const SpanOptions& opts = {});

}  // namespace ctrace

#endif
