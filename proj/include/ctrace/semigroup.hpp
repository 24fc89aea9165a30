#ifndef CTRACE_SEMIGROUP_HPP
#define CTRACE_SEMIGROUP_HPP

#include <array>
#include <optional>
#include <vector>

#include "ctrace/ideal.hpp"
#include "ctrace/symbolic_matrix.hpp"

namespace ctrace {

// A numerical semigroup minimally generated by three elements.
struct SemigroupData {
    unsigned long n1, n2, n3;  // ascending
    std::vector<unsigned long> gaps;
    unsigned long frobenius;
    bool symmetric;  // 2 * #gaps == frobenius + 1

    // c[i] = least k >= 1 with k * n_i in the semigroup of the other two.
    std::array<unsigned long, 3> c;

    // Exponents of c_i * n_i = r[i][j] * n_j + r[i][k] * n_k; populated and
    // verified unique with positive parts in the non-symmetric case only.
    std::array<std::array<unsigned long, 3>, 3> r;
    bool decomposition_unique = false;
};

// Validates gcd(n1,n2,n3) = 1 and minimality (no generator lies in the
// semigroup of the other two), then computes gaps by sieve, the Frobenius
// number (certified by an n1-long run of representable values), critical
// exponents, and the decompositions.
SemigroupData semigroup_analyze(unsigned long a, unsigned long b, unsigned long c);

struct SemigroupTrace {
    SemigroupData data;
    Ring ring;  // x, y, z weighted n1, n2, n3
    bool complete_intersection;  // symmetric case: Gorenstein, unit trace
    std::vector<Polynomial> binomials;       // the three critical binomials (non-symmetric)
    std::optional<SymbolicMatrix> matrix;    // 2 x 3 presentation (non-symmetric)
    MonomialIdeal trace;                     // entries of the matrix, minimalized; (1) when symmetric
    bool nearly_gorenstein;                  // maximal ideal contained in the trace
};

// Builds the 2 x 3 presentation matrix whose 2 x 2 minors are the critical
// binomials (deterministic arrangement search, verified symbolically and by
// substituting t-powers), and reads the canonical trace off its entries.
SemigroupTrace semigroup_hb_trace(unsigned long a, unsigned long b, unsigned long c);

// Exact check that f vanishes under x -> t^n1, y -> t^n2, z -> t^n3.
bool vanishes_at_t_powers(const SemigroupTrace& st, const Polynomial& f);

}  // namespace ctrace

#endif
