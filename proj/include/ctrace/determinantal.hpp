#ifndef CTRACE_DETERMINANTAL_HPP
#define CTRACE_DETERMINANTAL_HPP

#include <map>
#include <optional>

#include "ctrace/ideal.hpp"
#include "ctrace/numbers.hpp"
#include "ctrace/symbolic_matrix.hpp"

namespace ctrace {

// The generic m x n matrix of indeterminates x_i_j together with the minor
// size parameter r, 1 <= r <= m-1. Callers may pass m > n; the context
// transparently transposes (the theory is row/column symmetric) and
// records that it did.
struct GenericMatrixContext {
    unsigned m, n, r;
    bool transposed = false;
    Ring ring;
    SymbolicMatrix X;

    GenericMatrixContext(unsigned m_in, unsigned n_in, unsigned r_in);

    VarId x(unsigned i, unsigned j) const;  // 1-based
};

// The substitution target: matrices Y (m x r) and Z (r x n) of fresh
// indeterminates in one ring, with x_i_j mapping to (Y*Z)_i_j. This is the
// device that turns questions about the determinantal quotient ring into
// honest polynomial-ring questions.
struct SegreContext {
    unsigned m, n, r;
    Ring ring;
    SymbolicMatrix Y, Z;
    Polynomial delta_y, delta_z;
    std::map<VarId, Polynomial> images;  // x_i_j -> sum_k y_i_k * z_k_j

    explicit SegreContext(const GenericMatrixContext& ctx);
};

struct PQDelta {
    GeneratorIdeal P;  // r-minors of the first r rows
    GeneratorIdeal Q;  // r-minors of the first r columns
    Polynomial delta;  // the top-left r x r minor
};

PQDelta build_P_Q_delta(const GenericMatrixContext& ctx);

// Generators of I_r(X)^ell in the ambient polynomial ring (read modulo
// I_{r+1}(X) by the caller). ell defaults to n - m; ell = 0 (the m = n
// Gorenstein case) yields the unit ideal.
GeneratorIdeal trace_generic(const GenericMatrixContext& ctx, std::optional<unsigned> ell = {});

// The ring homomorphism x_i_j -> sum_k y_i_k z_k_j, expanded.
Polynomial phi_substitute(const SegreContext& seg, const Polynomial& p);

// Minimal generator count of an equigenerated ideal of the determinantal
// quotient: push the generators through phi and take the span dimension in
// K[Y,Z]. Exact because phi embeds the quotient into K[Y,Z].
std::size_t mu_in_R(const SegreContext& seg, const GeneratorIdeal& ideal, const SpanOptions& opts = {});

// Checks P*Q = delta * I_r(X) as ideals of the quotient (span equality of
// the phi images in each graded piece).
bool verify_pq_identity(const GenericMatrixContext& ctx, const SegreContext& seg,
                        const SpanOptions& opts = {});

struct LasagnaReport {
    std::size_t mu_pq;  // mu((PQ)^ell)
    std::size_t mu_p;   // mu(P^ell)
    std::size_t mu_q;   // mu(Q^ell)
    bool ok;            // mu_pq == mu_p * mu_q
};

LasagnaReport verify_lasagna(const GenericMatrixContext& ctx, const SegreContext& seg, unsigned ell,
                             const SpanOptions& opts = {});

// det[ binomial(2n-m-j, n-i) ]_{1<=i,j<=r}; requires m < n and 1 <= r <= m-1.
Integer teter_formula(unsigned m, unsigned n, unsigned r);

struct TeterReport {
    Integer formula;
    Integer oracle;  // mu(P^{n-m}) through phi
    bool agree;
};

TeterReport teter_verify(const GenericMatrixContext& ctx, const SegreContext& seg,
                         const SpanOptions& opts = {});

// Whether the canonical trace is known to specialize: n <= 2m - r.
bool specializes_condition(unsigned m, unsigned n, unsigned r);

// (delta^{-1})^exponent * numerator. Exists to house the canonical ideal
// (exponent 0) and the anti-canonical ideal; no general fractional
// arithmetic is provided.
struct FractionalPowerIdeal {
    GeneratorIdeal numerator;
    Polynomial delta;
    unsigned exponent;
};

FractionalPowerIdeal canonical_ideal(const GenericMatrixContext& ctx);       // Q^{n-m}
FractionalPowerIdeal anti_canonical_ideal(const GenericMatrixContext& ctx);  // (delta^{-1} P)^{n-m}

}  // namespace ctrace

#endif
