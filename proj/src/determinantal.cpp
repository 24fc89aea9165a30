#include "ctrace/determinantal.hpp"

#include <algorithm>
#include <string>

#include "ctrace/errors.hpp"

namespace ctrace {

namespace {

std::string ij_name(const char* base, unsigned i, unsigned j) {
    return std::string(base) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

std::vector<unsigned> first_k(unsigned k) {
    std::vector<unsigned> v(k);
    for (unsigned i = 0; i < k; ++i) v[i] = i + 1;
    return v;
}

SymbolicMatrix generic_matrix(Ring& ring, const char* base, unsigned rows, unsigned cols) {
    SymbolicMatrix m(ring, rows, cols);
    for (unsigned i = 1; i <= rows; ++i)
        for (unsigned j = 1; j <= cols; ++j)
            m.set(i - 1, j - 1, Polynomial::variable(ring, ring.var(ij_name(base, i, j))));
    return m;
}

void validate_mnr(unsigned m, unsigned n, unsigned r) {
    if (m < 2) throw HypothesisError("need at least 2 rows after orienting m <= n");
    if (r < 1 || r + 1 > m)
        throw HypothesisError("minor size parameter must satisfy 1 <= r <= m-1 (got r=" +
                              std::to_string(r) + ", m=" + std::to_string(m) + ")");
    (void)n;
}

SymbolicMatrix build_x_matrix(Ring& ring, unsigned m, unsigned n, unsigned r) {
    validate_mnr(m, n, r);
    return generic_matrix(ring, "x", m, n);
}

}  // namespace

GenericMatrixContext::GenericMatrixContext(unsigned m_in, unsigned n_in, unsigned r_in)
    : m(std::min(m_in, n_in)),
      n(std::max(m_in, n_in)),
      r(r_in),
      transposed(m_in > n_in),
      ring(),
      X(build_x_matrix(ring, m, n, r)) {}

VarId GenericMatrixContext::x(unsigned i, unsigned j) const {
    auto v = ring.find(ij_name("x", i, j));
    if (!v || i < 1 || i > m || j < 1 || j > n) throw BoundsError("matrix variable index out of range");
    return *v;
}

SegreContext::SegreContext(const GenericMatrixContext& ctx)
    : m(ctx.m),
      n(ctx.n),
      r(ctx.r),
      ring(),
      Y(generic_matrix(ring, "y", ctx.m, ctx.r)),
      Z(generic_matrix(ring, "z", ctx.r, ctx.n)),
      delta_y(Y.minor(MinorIndex(first_k(r), first_k(r)))),
      delta_z(Z.minor(MinorIndex(first_k(r), first_k(r)))) {
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            PolyBuilder sum(ring);
            for (unsigned k = 1; k <= r; ++k)
                sum.add_product(Y.at(i - 1, k - 1), Z.at(k - 1, j - 1));
            images.emplace(ctx.x(i, j), sum.build());
        }
}

PQDelta build_P_Q_delta(const GenericMatrixContext& ctx) {
    std::vector<Polynomial> p_gens, q_gens;
    const std::vector<unsigned> top = first_k(ctx.r);
    for_each_subset(ctx.n, ctx.r, [&](const std::vector<unsigned>& cols) {
        p_gens.push_back(ctx.X.minor(MinorIndex(top, cols)));
    });
    for_each_subset(ctx.m, ctx.r, [&](const std::vector<unsigned>& rows) {
        q_gens.push_back(ctx.X.minor(MinorIndex(rows, top)));
    });
    return PQDelta{GeneratorIdeal::from_gens(ctx.ring, std::move(p_gens)),
                   GeneratorIdeal::from_gens(ctx.ring, std::move(q_gens)),
                   ctx.X.minor(MinorIndex(top, top))};
}

GeneratorIdeal trace_generic(const GenericMatrixContext& ctx, std::optional<unsigned> ell) {
    unsigned power = ell ? *ell : ctx.n - ctx.m;
    return ideal_power(ideal_of_minors(ctx.X, ctx.r), power);
}

Polynomial phi_substitute(const SegreContext& seg, const Polynomial& p) {
    return p.substituted(seg.images, seg.ring);
}

namespace {

// phi over a generator list; the per-generator expansions are independent.
std::vector<Polynomial> phi_map(const SegreContext& seg, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> images(gens.size(), Polynomial::zero(seg.ring));
#pragma omp parallel for schedule(dynamic) if (gens.size() > 8)
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = phi_substitute(seg, gens[i]);
    return images;
}

}  // namespace

std::size_t mu_in_R(const SegreContext& seg, const GeneratorIdeal& ideal, const SpanOptions& opts) {
    if (ideal.is_zero()) return 0;
    if (!ideal.equigenerated_degree())
        throw DegreeError("mu_in_R needs an equigenerated ideal");
    return span_dim(phi_map(seg, ideal.gens()), opts);
}

bool verify_pq_identity(const GenericMatrixContext& ctx, const SegreContext& seg,
                        const SpanOptions& opts) {
    PQDelta pq = build_P_Q_delta(ctx);
    GeneratorIdeal left = ideal_product(pq.P, pq.Q);

    GeneratorIdeal minors = ideal_of_minors(ctx.X, ctx.r);
    std::vector<Polynomial> right_gens;
    for (const Polynomial& g : minors.gens()) right_gens.push_back(pq.delta * g);
    GeneratorIdeal right = GeneratorIdeal::from_gens(ctx.ring, std::move(right_gens));

    return span_equal(phi_map(seg, left.gens()), phi_map(seg, right.gens()), opts);
}

LasagnaReport verify_lasagna(const GenericMatrixContext& ctx, const SegreContext& seg, unsigned ell,
                             const SpanOptions& opts) {
    if (ell < 1) throw HypothesisError("lasagna check needs ell >= 1");
    PQDelta pq = build_P_Q_delta(ctx);
    LasagnaReport rep{};
    rep.mu_pq = mu_in_R(seg, ideal_power(ideal_product(pq.P, pq.Q), ell), opts);
    rep.mu_p = mu_in_R(seg, ideal_power(pq.P, ell), opts);
    rep.mu_q = mu_in_R(seg, ideal_power(pq.Q, ell), opts);
    rep.ok = rep.mu_pq == rep.mu_p * rep.mu_q;
    return rep;
}

Integer teter_formula(unsigned m, unsigned n, unsigned r) {
    if (m >= n) throw HypothesisError("Teter formula requires m < n");
    if (r < 1 || r + 1 > m) throw HypothesisError("Teter formula requires 1 <= r <= m-1");
    std::vector<std::vector<Integer>> a(r, std::vector<Integer>(r));
    for (unsigned i = 1; i <= r; ++i)
        for (unsigned j = 1; j <= r; ++j)
            a[i - 1][j - 1] = binomial(2L * n - m - j, static_cast<long>(n) - i);
    return det_int(std::move(a));
}

TeterReport teter_verify(const GenericMatrixContext& ctx, const SegreContext& seg,
                         const SpanOptions& opts) {
    TeterReport rep{teter_formula(ctx.m, ctx.n, ctx.r), 0, false};
    PQDelta pq = build_P_Q_delta(ctx);
    rep.oracle = static_cast<long>(mu_in_R(seg, ideal_power(pq.P, ctx.n - ctx.m), opts));
    rep.agree = rep.formula == rep.oracle;
    return rep;
}

bool specializes_condition(unsigned m, unsigned n, unsigned r) {
    if (m > n) std::swap(m, n);
    validate_mnr(m, n, r);
    return n <= 2 * m - r;
}

FractionalPowerIdeal canonical_ideal(const GenericMatrixContext& ctx) {
    PQDelta pq = build_P_Q_delta(ctx);
    return FractionalPowerIdeal{ideal_power(pq.Q, ctx.n - ctx.m), pq.delta, 0};
}

FractionalPowerIdeal anti_canonical_ideal(const GenericMatrixContext& ctx) {
    PQDelta pq = build_P_Q_delta(ctx);
    return FractionalPowerIdeal{ideal_power(pq.P, ctx.n - ctx.m), pq.delta, ctx.n - ctx.m};
}

}  // namespace ctrace
