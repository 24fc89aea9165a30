#ifndef CTRACE_HILBERT_BURCH_HPP
#define CTRACE_HILBERT_BURCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "ctrace/ideal.hpp"
#include "ctrace/symbolic_matrix.hpp"

namespace ctrace {

// A presentation matrix read from text, shape (n-1) x n or n x (n-1),
// with optional degree vectors: deg f_ij = a_i - b_j for nonzero entries
// (a over rows, b over columns, in the as-parsed orientation).
struct GradedMatrixInput {
    Ring ring;
    SymbolicMatrix A;
    std::optional<std::vector<long>> row_degrees;  // a
    std::optional<std::vector<long>> col_degrees;  // b
};

// Text format: one row per line, entries separated by ';', each entry a
// polynomial. '#' starts a comment; blank lines are skipped. Optional
// header lines before the rows:
//   a: d1 d2 ...        row degree vector
//   b: e1 e2 ...        column degree vector
//   w: x=3 y=4 ...      variable weights
GradedMatrixInput parse_matrix_text(std::string_view text);
GradedMatrixInput parse_matrix_file(const std::string& path);

struct GradingViolation {
    unsigned row, col;  // 1-based
    std::string message;
};

struct MinorHomogeneity {
    unsigned omitted;  // 1-based index on the long side
    bool zero;
    bool homogeneous;
    long degree;  // meaningful when homogeneous and nonzero
};

struct HbReport {
    unsigned n;            // generator count implied by the shape
    bool long_side_rows;   // true when parsed as n x (n-1)
    std::vector<GradingViolation> violations;
    std::vector<unsigned> zero_rows, zero_cols;  // 1-based
    std::vector<MinorHomogeneity> maximal_minors;
    std::vector<std::string> assumptions;  // what this tool does not verify
};

// Shape and grading diagnostics. Height and generic Gorensteinness cannot
// be decided here and are reported as user-assumed.
HbReport hb_check(const GradedMatrixInput& input);

struct HbIdealResult {
    GeneratorIdeal ideal;
    std::vector<std::string> warnings;
};

// The n maximal minors, sign-normalized; zero minors are dropped with a
// warning.
HbIdealResult hb_ideal(const GradedMatrixInput& input);

// The (n-2)-minors: the canonical trace presentation for the quotient by
// the maximal minors when that quotient is generically Gorenstein (a user
// assertion). Unit ideal for n = 2.
GeneratorIdeal hb_trace(const GradedMatrixInput& input);

struct SpecializationTrace {
    GeneratorIdeal trace;  // I_r(M)^{n-m}
    bool condition_holds;  // n <= 2m - r
    std::vector<std::string> warnings;
    std::vector<std::string> assumptions;
};

// I_r(M)^{n-m} for an m x n matrix M (transposed on the fly when m > n).
// When the specialization condition fails the result carries a warning:
// the trace formula is then not known to descend to the quotient.
SpecializationTrace trace_of_specialization(const SymbolicMatrix& m, unsigned r);

}  // namespace ctrace

#endif
