#include "ctrace/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "ctrace/errors.hpp"
#include "ctrace/limits.hpp"

namespace ctrace {

CoefficientMatrix coefficient_matrix(const Ring& ring, std::span<const Polynomial> gens) {
    std::size_t total_terms = 0;
    for (const Polynomial& g : gens) {
        if (!g.ring().same_context(ring))
            throw MixedContextError("coefficient matrix over mixed ring contexts");
        total_terms += g.term_count();
    }
    guard_terms(total_terms, "coefficient matrix");

    std::map<Monomial, std::uint32_t, MonomialLess> index{MonomialLess{ring}};
    for (const Polynomial& g : gens)
        for (const auto& t : g.terms()) index.try_emplace(t.mono, 0);

    CoefficientMatrix m;
    m.columns.reserve(index.size());
    for (auto& [mono, col] : index) {
        col = static_cast<std::uint32_t>(m.columns.size());
        m.columns.push_back(mono);
    }

    m.rows.reserve(gens.size());
    for (const Polynomial& g : gens) {
        std::vector<std::pair<std::uint32_t, Rational>> row;
        row.reserve(g.term_count());
        // Terms are descending, columns ascending: reverse while mapping.
        for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it)
            row.push_back({index.at(it->mono), it->coeff});
        m.rows.push_back(std::move(row));
    }
    return m;
}

std::vector<SparseZRow> integer_rows(const CoefficientMatrix& m) {
    std::vector<SparseZRow> rows;
    rows.reserve(m.rows.size());
    for (const auto& qrow : m.rows) {
        Integer denom_lcm = 1;
        for (const auto& [col, val] : qrow) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), val.get_den().get_mpz_t());
        SparseZRow row;
        row.reserve(qrow.size());
        Integer content = 0;
        for (const auto& [col, val] : qrow) {
            Integer e = val.get_num() * (denom_lcm / val.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.get_mpz_t());
            row.push_back({col, std::move(e)});
        }
        if (content > 1)
            for (auto& [col, val] : row) mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), content.get_mpz_t());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

Integer exact_div(const Integer& num, const Integer& den) {
#ifndef NDEBUG
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
        throw InternalInconsistencyError("fraction-free elimination produced a non-exact division");
#endif
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// One Bareiss row update: (p * row - mult * pivot_row) / prev, where the
// leading entries of row and pivot_row share the pivot column and cancel.
SparseZRow combine_rows(const Integer& p, const SparseZRow& row, const Integer& mult,
                        const SparseZRow& pivot_row, const Integer& prev, std::uint32_t pivot_col) {
    SparseZRow out;
    out.reserve(row.size() + pivot_row.size());
    auto i = row.begin();
    auto j = pivot_row.begin();
    while (i != row.end() || j != pivot_row.end()) {
        std::uint32_t ci = i != row.end() ? i->first : std::numeric_limits<std::uint32_t>::max();
        std::uint32_t cj = j != pivot_row.end() ? j->first : std::numeric_limits<std::uint32_t>::max();
        std::uint32_t c = std::min(ci, cj);
        Integer num;
        if (ci == c && cj == c) {
            num = p * i->second - mult * j->second;
            ++i, ++j;
        } else if (ci == c) {
            num = p * i->second;
            ++i;
        } else {
            num = -(mult * j->second);
            ++j;
        }
        if (c == pivot_col) continue;  // cancels identically
        if (num == 0) continue;
        out.push_back({c, exact_div(num, prev)});
    }
    return out;
}

// Rows untouched by the pivot column are rescaled by p/prev (exact).
void scale_row(SparseZRow& row, const Integer& p, const Integer& prev) {
    if (p == prev) return;
    for (auto& [col, val] : row) val = exact_div(val * p, prev);
}

}  // namespace

std::size_t bareiss_rank(std::vector<SparseZRow> rows, Exec exec) {
    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) alive.push_back(i);

    Integer prev = 1;
    std::size_t rank = 0;
    while (!alive.empty()) {
        std::uint32_t pivot_col = std::numeric_limits<std::uint32_t>::max();
        for (std::size_t i : alive) pivot_col = std::min(pivot_col, rows[i].front().first);

        std::size_t pivot_idx = alive.size();
        std::size_t best_bits = 0;
        for (std::size_t k = 0; k < alive.size(); ++k) {
            const SparseZRow& r = rows[alive[k]];
            if (r.front().first != pivot_col) continue;
            std::size_t bits = bit_length(r.front().second);
            if (pivot_idx == alive.size() || bits < best_bits) {
                pivot_idx = k;
                best_bits = bits;
            }
        }
        const std::size_t pivot_row_id = alive[pivot_idx];
        const Integer p = rows[pivot_row_id].front().second;

        // Fork/join only pays off once the row updates carry real work.
        std::size_t work = 0;
        for (std::size_t i : alive) work += rows[i].size();
        const bool parallel = exec == Exec::Parallel && alive.size() > 8 && work > 16384;
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (std::size_t k = 0; k < alive.size(); ++k) {
            if (k == pivot_idx) continue;
            SparseZRow& r = rows[alive[k]];
            if (r.front().first == pivot_col)
                r = combine_rows(p, r, r.front().second, rows[pivot_row_id], prev, pivot_col);
            else
                scale_row(r, p, prev);
        }

        ++rank;
        prev = p;
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(pivot_idx));
        std::erase_if(alive, [&](std::size_t i) { return rows[i].empty(); });
    }
    return rank;
}

std::size_t gauss_rank_reference(const CoefficientMatrix& m) {
    const std::size_t ncols = m.columns.size();
    std::vector<std::vector<Rational>> a;
    a.reserve(m.rows.size());
    for (const auto& row : m.rows) {
        std::vector<Rational> dense(ncols, Rational(0));
        for (const auto& [col, val] : row) dense[col] = val;
        a.push_back(std::move(dense));
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < ncols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (exp) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

using SparsePRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

SparsePRow combine_mod_p(const SparsePRow& row, std::uint64_t mult, const SparsePRow& pivot_row,
                         std::uint64_t p, std::uint32_t pivot_col) {
    // row - mult * pivot_row
    SparsePRow out;
    out.reserve(row.size() + pivot_row.size());
    auto i = row.begin();
    auto j = pivot_row.begin();
    while (i != row.end() || j != pivot_row.end()) {
        std::uint32_t ci = i != row.end() ? i->first : std::numeric_limits<std::uint32_t>::max();
        std::uint32_t cj = j != pivot_row.end() ? j->first : std::numeric_limits<std::uint32_t>::max();
        std::uint32_t c = std::min(ci, cj);
        std::uint64_t v;
        if (ci == c && cj == c) {
            v = (i->second + (p - mult) * j->second) % p;
            ++i, ++j;
        } else if (ci == c) {
            v = i->second;
            ++i;
        } else {
            v = (p - mult) * j->second % p;
            ++j;
        }
        if (c == pivot_col || v == 0) continue;
        out.push_back({c, v});
    }
    return out;
}

}  // namespace

std::size_t rank_mod_p(const std::vector<SparseZRow>& zrows, std::uint64_t p, Exec exec) {
    if (p % 2 == 0 || p <= (1ull << 30) || p >= (1ull << 31))
        throw BoundsError("rank_mod_p requires an odd prime with 2^30 < p < 2^31");
    std::vector<SparsePRow> rows;
    rows.reserve(zrows.size());
    for (const SparseZRow& zr : zrows) {
        SparsePRow r;
        r.reserve(zr.size());
        for (const auto& [col, val] : zr) {
            std::uint64_t v = mpz_fdiv_ui(val.get_mpz_t(), static_cast<unsigned long>(p));
            if (v != 0) r.push_back({col, v});
        }
        rows.push_back(std::move(r));
    }

    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) alive.push_back(i);

    std::size_t rank = 0;
    while (!alive.empty()) {
        std::uint32_t pivot_col = std::numeric_limits<std::uint32_t>::max();
        for (std::size_t i : alive) pivot_col = std::min(pivot_col, rows[i].front().first);
        std::size_t pivot_idx = alive.size();
        std::size_t best_nnz = 0;
        for (std::size_t k = 0; k < alive.size(); ++k) {
            const SparsePRow& r = rows[alive[k]];
            if (r.front().first != pivot_col) continue;
            if (pivot_idx == alive.size() || r.size() < best_nnz) {
                pivot_idx = k;
                best_nnz = r.size();
            }
        }
        const std::size_t pivot_row_id = alive[pivot_idx];
        const std::uint64_t inv = pow_mod(rows[pivot_row_id].front().second, p - 2, p);

        std::size_t work = 0;
        for (std::size_t i : alive) work += rows[i].size();
        const bool parallel = exec == Exec::Parallel && alive.size() > 8 && work > 16384;
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (std::size_t k = 0; k < alive.size(); ++k) {
            if (k == pivot_idx) continue;
            SparsePRow& r = rows[alive[k]];
            if (r.front().first != pivot_col) continue;
            std::uint64_t mult = r.front().second * inv % p;
            r = combine_mod_p(r, mult, rows[pivot_row_id], p, pivot_col);
        }

        ++rank;
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(pivot_idx));
        std::erase_if(alive, [&](std::size_t i) { return rows[i].empty(); });
    }
    return rank;
}

namespace {

// Checks the common-degree precondition and returns the matrix.
CoefficientMatrix span_matrix(std::span<const Polynomial> gens) {
    if (gens.empty()) return CoefficientMatrix{};
    const Ring& ring = gens.front().ring();
    std::optional<long> degree;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        auto d = g.homogeneous_degree();
        if (!d) throw DegreeError("span generators must be homogeneous");
        if (degree && *degree != *d)
            throw DegreeError("span generators have mixed degrees (" + std::to_string(*degree) +
                              " vs " + std::to_string(*d) + ")");
        degree = d;
    }
    return coefficient_matrix(ring, gens);
}

std::size_t rank_of(const CoefficientMatrix& m, const SpanOptions& opts) {
    std::vector<SparseZRow> rows = integer_rows(m);
    std::size_t lower = 0;
    if (opts.cross_check_mod_p) lower = rank_mod_p(rows, opts.prime, opts.exec);
    std::size_t exact = bareiss_rank(std::move(rows), opts.exec);
    if (opts.cross_check_mod_p && lower > exact)
        throw InternalInconsistencyError("mod-p rank exceeds the exact rank");
    return exact;
}

}  // namespace

std::size_t span_dim(std::span<const Polynomial> gens, const SpanOptions& opts) {
    if (gens.empty()) return 0;
    return rank_of(span_matrix(gens), opts);
}

bool span_equal(std::span<const Polynomial> a, std::span<const Polynomial> b, const SpanOptions& opts) {
    std::vector<Polynomial> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    if (all.empty()) return true;
    for (std::size_t i = 1; i < all.size(); ++i)
        if (!all[i].ring().same_context(all[0].ring()))
            throw MixedContextError("span comparison over mixed ring contexts");

    CoefficientMatrix m = span_matrix(all);
    CoefficientMatrix ma{m.columns, {m.rows.begin(), m.rows.begin() + static_cast<std::ptrdiff_t>(a.size())}};
    CoefficientMatrix mb{m.columns, {m.rows.begin() + static_cast<std::ptrdiff_t>(a.size()), m.rows.end()}};
    std::size_t ra = rank_of(ma, opts);
    std::size_t rb = rank_of(mb, opts);
    if (ra != rb) return false;
    return rank_of(m, opts) == ra;
}

bool in_span(const Polynomial& p, std::span<const Polynomial> gens, const SpanOptions& opts) {
    if (p.is_zero()) return true;
    std::vector<Polynomial> all(gens.begin(), gens.end());
    all.push_back(p);
    CoefficientMatrix m = span_matrix(all);
    CoefficientMatrix ma{m.columns, {m.rows.begin(), m.rows.end() - 1}};
    return rank_of(ma, opts) == rank_of(m, opts);
}

}  // namespace ctrace
