#include "ctrace/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "ctrace/errors.hpp"

namespace ctrace {

namespace {

// Membership sieve for the semigroup generated by `gens` up to `limit`.
std::vector<bool> representable(const std::vector<unsigned long>& gens, unsigned long limit) {
    std::vector<bool> rep(limit + 1, false);
    rep[0] = true;
    for (unsigned long v = 1; v <= limit; ++v)
        for (unsigned long g : gens)
            if (g <= v && rep[v - g]) {
                rep[v] = true;
                break;
            }
    return rep;
}

bool in_pair_semigroup(unsigned long value, unsigned long a, unsigned long b) {
    for (unsigned long i = 0; i * a <= value; ++i)
        if ((value - i * a) % b == 0) return true;
    return false;
}

}  // namespace

SemigroupData semigroup_analyze(unsigned long a, unsigned long b, unsigned long c) {
    std::array<unsigned long, 3> g{a, b, c};
    std::sort(g.begin(), g.end());
    SemigroupData data{};
    data.n1 = g[0];
    data.n2 = g[1];
    data.n3 = g[2];

    if (data.n1 == 0) throw HypothesisError("semigroup generators must be positive");
    if (data.n1 == data.n2 || data.n2 == data.n3)
        throw HypothesisError("semigroup generators must be distinct");
    if (std::gcd(std::gcd(data.n1, data.n2), data.n3) != 1)
        throw HypothesisError("semigroup generators must have gcd 1");

    const std::array<std::array<unsigned long, 2>, 3> others{{
        {data.n2, data.n3},
        {data.n1, data.n3},
        {data.n1, data.n2},
    }};
    const std::array<unsigned long, 3> ns{data.n1, data.n2, data.n3};
    for (int i = 0; i < 3; ++i)
        if (in_pair_semigroup(ns[i], others[i][0], others[i][1]))
            throw HypothesisError("generator " + std::to_string(ns[i]) +
                                  " lies in the semigroup of the other two (not minimal)");

    // Sieve; n1 * n3 bounds the Frobenius number, and a trailing run of n1
    // consecutive representable values certifies the maximum found.
    unsigned long limit = data.n1 * data.n3 + data.n1;
    std::vector<bool> rep;
    for (;;) {
        rep = representable({data.n1, data.n2, data.n3}, limit);
        unsigned long f = 0;
        for (unsigned long v = 1; v <= limit; ++v)
            if (!rep[v]) f = v;
        bool certified = f + data.n1 <= limit;
        for (unsigned long v = f + 1; certified && v <= f + data.n1; ++v)
            if (!rep[v]) certified = false;
        if (certified) {
            data.frobenius = f;
            break;
        }
        limit *= 2;
    }
    for (unsigned long v = 1; v <= data.frobenius; ++v)
        if (!rep[v]) data.gaps.push_back(v);
    data.symmetric = 2 * data.gaps.size() == data.frobenius + 1;

    // c_i <= n_j since n_j * n_i is a multiple of n_j.
    for (int i = 0; i < 3; ++i) {
        unsigned long k = 1;
        while (!in_pair_semigroup(k * ns[i], others[i][0], others[i][1])) {
            ++k;
            if (k > others[i][0] * others[i][1])
                throw InternalInconsistencyError("critical exponent search exceeded its bound");
        }
        data.c[i] = k;
    }

    // All decompositions c_i n_i = r_j n_j + r_k n_k with r >= 0.
    static constexpr int other_idx[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    data.decomposition_unique = true;
    for (int i = 0; i < 3; ++i) {
        unsigned long target = data.c[i] * ns[i];
        std::vector<std::pair<unsigned long, unsigned long>> sols;
        for (unsigned long rj = 0; rj * others[i][0] <= target; ++rj)
            if ((target - rj * others[i][0]) % others[i][1] == 0)
                sols.push_back({rj, (target - rj * others[i][0]) / others[i][1]});
        if (sols.empty()) throw InternalInconsistencyError("critical exponent without decomposition");
        if (sols.size() != 1 || sols[0].first == 0 || sols[0].second == 0)
            data.decomposition_unique = false;
        data.r[i][other_idx[i][0]] = sols[0].first;
        data.r[i][other_idx[i][1]] = sols[0].second;
        data.r[i][i] = 0;
    }
    if (!data.symmetric && !data.decomposition_unique)
        throw InternalInconsistencyError(
            "non-symmetric semigroup without a unique positive decomposition");
    return data;
}

SemigroupTrace semigroup_hb_trace(unsigned long a, unsigned long b, unsigned long c) {
    SemigroupData data = semigroup_analyze(a, b, c);

    Ring ring;
    VarId vx = ring.var("x", static_cast<long>(data.n1));
    VarId vy = ring.var("y", static_cast<long>(data.n2));
    VarId vz = ring.var("z", static_cast<long>(data.n3));
    const std::array<VarId, 3> vars{vx, vy, vz};

    SemigroupTrace st{data,        ring, data.symmetric, {}, std::nullopt,
                      MonomialIdeal::zero(ring), false};

    if (data.symmetric) {
        st.trace = MonomialIdeal::unit(ring);
        st.nearly_gorenstein = true;  // Gorenstein: the trace is the unit ideal
        return st;
    }

    // c_i must split as the sum of the two foreign exponents of x_i.
    if (data.c[0] != data.r[1][0] + data.r[2][0] || data.c[1] != data.r[0][1] + data.r[2][1] ||
        data.c[2] != data.r[0][2] + data.r[1][2])
        throw InternalInconsistencyError("critical exponents do not split along the decompositions");

    // f_i = x_i^{c_i} - x_j^{r_ij} x_k^{r_ik}
    for (int i = 0; i < 3; ++i) {
        std::vector<Monomial::Entry> rhs;
        for (int j = 0; j < 3; ++j)
            if (j != i)
                rhs.push_back({vars[static_cast<std::size_t>(j)],
                               static_cast<unsigned>(data.r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])});
        Polynomial f = Polynomial::term(ring, 1,
                                        Monomial::variable(vars[static_cast<std::size_t>(i)],
                                                           static_cast<unsigned>(data.c[static_cast<std::size_t>(i)]))) -
                       Polynomial::term(ring, 1, Monomial::from_entries(ring, std::move(rhs)));
        if (!f.is_homogeneous())
            throw InternalInconsistencyError("critical binomial is not homogeneous under the weights");
        st.binomials.push_back(std::move(f));
    }

    // The six candidate entries: x_i^{r[j][i]} for the two j != i.
    std::vector<Monomial> entries;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (j != i)
                entries.push_back(Monomial::variable(vars[static_cast<std::size_t>(i)],
                                                     static_cast<unsigned>(data.r[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])));
    std::sort(entries.begin(), entries.end(), MonomialLess{ring});

    // Deterministic arrangement search: first permutation whose 2x2 minors
    // reproduce the critical binomials up to sign.
    auto minors_match = [&](const SymbolicMatrix& m) {
        std::vector<bool> used(3, false);
        for (unsigned j1 = 1; j1 <= 2; ++j1)
            for (unsigned j2 = j1 + 1; j2 <= 3; ++j2) {
                Polynomial minor = m.minor(MinorIndex({1, 2}, {j1, j2}));
                bool found = false;
                for (std::size_t i = 0; i < 3 && !found; ++i) {
                    if (used[i]) continue;
                    if (minor == st.binomials[i] || minor == -st.binomials[i]) {
                        used[i] = true;
                        found = true;
                    }
                }
                if (!found) return false;
            }
        return true;
    };

    std::vector<int> p{0, 1, 2, 3, 4, 5};
    std::optional<SymbolicMatrix> found;
    do {
        SymbolicMatrix m(ring, 2, 3);
        for (int pos = 0; pos < 6; ++pos)
            m.set(static_cast<std::size_t>(pos / 3), static_cast<std::size_t>(pos % 3),
                  Polynomial::term(ring, 1, entries[static_cast<std::size_t>(p[static_cast<std::size_t>(pos)])]));
        if (minors_match(m)) {
            found = std::move(m);
            break;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    if (!found)
        throw InternalInconsistencyError(
            "no 2x3 arrangement of the decomposition entries reproduces the critical binomials");
    st.matrix = std::move(found);

    st.trace = MonomialIdeal::from_gens(ring, entries);
    st.nearly_gorenstein = st.trace.contains(Monomial::variable(vx)) &&
                           st.trace.contains(Monomial::variable(vy)) &&
                           st.trace.contains(Monomial::variable(vz));

    for (const Polynomial& f : st.binomials)
        if (!vanishes_at_t_powers(st, f))
            throw InternalInconsistencyError("critical binomial fails the t-power substitution oracle");
    return st;
}

bool vanishes_at_t_powers(const SemigroupTrace& st, const Polynomial& f) {
    Ring univariate;
    VarId t = univariate.var("t");
    std::map<VarId, Polynomial> images;
    const std::array<unsigned long, 3> ns{st.data.n1, st.data.n2, st.data.n3};
    const std::array<const char*, 3> names{"x", "y", "z"};
    for (std::size_t i = 0; i < 3; ++i) {
        VarId v = *st.ring.find(names[i]);
        images.emplace(v, Polynomial::term(univariate, 1,
                                           Monomial::variable(t, static_cast<unsigned>(ns[i]))));
    }
    return f.substituted(images, univariate).is_zero();
}

}  // namespace ctrace
