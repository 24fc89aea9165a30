#include "ctrace/numbers.hpp"

#include "ctrace/errors.hpp"

namespace ctrace {

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer det_int(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw BoundsError("det_int: matrix is not square");
    if (n == 0) return 1;

    // Bareiss one-step elimination; entries stay exact minors of the input.
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

Integer monomial_count(unsigned vars, unsigned degree) {
    if (vars == 0) return degree == 0 ? 1 : 0;
    // ways[d] = number of monomials of degree d in the variables seen so far
    std::vector<Integer> ways(degree + 1, 0);
    ways[0] = 1;
    for (unsigned v = 0; v < vars; ++v)
        for (unsigned d = 1; d <= degree; ++d) ways[d] += ways[d - 1];
    return ways[degree];
}

}  // namespace ctrace
