#ifndef CTRACE_NUMBERS_HPP
#define CTRACE_NUMBERS_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace ctrace {

// Exact coefficient arithmetic. mpq_class keeps rationals in lowest terms
// with positive denominator, which is exactly the canonical form we need.
using Integer = mpz_class;
using Rational = mpq_class;

// binomial(n, k); k < 0 or k > n yields 0, as does n < 0.
Integer binomial(long n, long k);

// Exact determinant of a small dense integer matrix (fraction-free
// elimination). Used for the Teter determinant formula.
Integer det_int(std::vector<std::vector<Integer>> a);

// Number of monomials of the given total degree in `vars` variables,
// counted by a Pascal-style recurrence rather than a closed form, so it
// can serve as an independent cross-check for binomial identities.
Integer monomial_count(unsigned vars, unsigned degree);

inline std::size_t bit_length(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

}  // namespace ctrace

#endif
