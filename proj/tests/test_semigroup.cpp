#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ctrace/errors.hpp"
#include "ctrace/semigroup.hpp"

using namespace ctrace;

namespace {

// Independent re-derivation of the critical exponents: the least k >= 1
// such that x_i^k - (monomial in the other two variables) lies in the
// kernel of the degree map, found by enumerating exponent pairs directly.
unsigned long brute_critical(unsigned long ni, unsigned long nj, unsigned long nk,
                             std::vector<std::pair<unsigned long, unsigned long>>* reps = nullptr) {
    for (unsigned long k = 1;; ++k) {
        std::vector<std::pair<unsigned long, unsigned long>> found;
        unsigned long target = k * ni;
        for (unsigned long a = 0; a * nj <= target; ++a)
            if ((target - a * nj) % nk == 0) found.push_back({a, (target - a * nj) / nk});
        if (!found.empty()) {
            if (reps) *reps = found;
            return k;
        }
    }
}

std::set<std::string> trace_names(const SemigroupTrace& st) {
    std::set<std::string> out;
    for (const Monomial& m : st.trace.gens()) out.insert(m.str(st.ring));
    return out;
}

}  // namespace

TEST_CASE("analysis of <3,4,5>") {
    SemigroupData d = semigroup_analyze(3, 4, 5);
    CHECK(d.gaps == std::vector<unsigned long>{1, 2});
    CHECK(d.frobenius == 2);
    CHECK_FALSE(d.symmetric);
    CHECK(d.c == std::array<unsigned long, 3>{3, 2, 2});
    CHECK(d.decomposition_unique);
    // 9 = 4 + 5, 8 = 3 + 5, 10 = 2*3 + 4
    CHECK(d.r[0][1] == 1);
    CHECK(d.r[0][2] == 1);
    CHECK(d.r[1][0] == 1);
    CHECK(d.r[1][2] == 1);
    CHECK(d.r[2][0] == 2);
    CHECK(d.r[2][1] == 1);
}

TEST_CASE("analysis of <4,5,6>") {
    SemigroupData d = semigroup_analyze(4, 5, 6);
    CHECK(d.gaps == std::vector<unsigned long>{1, 2, 3, 7});
    CHECK(d.frobenius == 7);
    CHECK(d.symmetric);
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(semigroup_analyze(2, 4, 5), HypothesisError);  // 4 in <2>
    CHECK_THROWS_AS(semigroup_analyze(4, 6, 8), HypothesisError);  // gcd 2
    CHECK_THROWS_AS(semigroup_analyze(3, 3, 5), HypothesisError);  // repeated
    CHECK_THROWS_AS(semigroup_analyze(0, 3, 5), HypothesisError);
    CHECK_THROWS_AS(semigroup_analyze(3, 5, 8), HypothesisError);  // 8 = 3 + 5
}

TEST_CASE("order of arguments does not matter") {
    SemigroupData d = semigroup_analyze(5, 3, 4);
    CHECK(d.n1 == 3);
    CHECK(d.n3 == 5);
    CHECK(d.frobenius == 2);
}

TEST_CASE("trace of <3,4,5>") {
    SemigroupTrace st = semigroup_hb_trace(3, 4, 5);
    CHECK_FALSE(st.complete_intersection);
    REQUIRE(st.matrix);
    REQUIRE(st.binomials.size() == 3);

    std::set<std::string> binoms;
    for (const Polynomial& f : st.binomials) binoms.insert(f.str());
    CHECK(binoms == std::set<std::string>{"x^3 - y*z", "-1*x*z + y^2", "-1*x^2*y + z^2"});

    CHECK(trace_names(st) == std::set<std::string>{"x", "y", "z"});
    CHECK(st.nearly_gorenstein);

    // every entry of the matrix is one of the six decomposition monomials
    std::multiset<std::string> entries;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) entries.insert(st.matrix->at(i, j).str());
    CHECK(entries == std::multiset<std::string>{"x", "x^2", "y", "y", "z", "z"});

    // the three 2x2 minors vanish under t-power substitution
    for (unsigned j1 = 1; j1 <= 2; ++j1)
        for (unsigned j2 = j1 + 1; j2 <= 3; ++j2)
            CHECK(vanishes_at_t_powers(st, st.matrix->minor(MinorIndex({1, 2}, {j1, j2}))));
}

TEST_CASE("trace of <4,5,6>") {
    SemigroupTrace st = semigroup_hb_trace(4, 5, 6);
    CHECK(st.complete_intersection);
    CHECK_FALSE(st.matrix);
    CHECK(st.trace.is_unit());
}

TEST_CASE("trace of <3,5,7>") {
    SemigroupTrace st = semigroup_hb_trace(3, 5, 7);
    CHECK_FALSE(st.complete_intersection);
    REQUIRE(st.matrix);
    std::multiset<std::string> entries;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) entries.insert(st.matrix->at(i, j).str());
    CHECK(entries.size() == 6);
    for (const Polynomial& f : st.binomials) CHECK(vanishes_at_t_powers(st, f));
    CHECK(st.nearly_gorenstein);  // trace contains x, y and z
}

TEST_CASE("critical data against the brute-force kernel search") {
    for (auto [a, b, c] : {std::array<unsigned long, 3>{3, 4, 5},
                           std::array<unsigned long, 3>{3, 5, 7},
                           std::array<unsigned long, 3>{5, 7, 9},
                           std::array<unsigned long, 3>{7, 9, 11}}) {
        SemigroupData d = semigroup_analyze(a, b, c);
        const std::array<unsigned long, 3> ns{d.n1, d.n2, d.n3};
        static constexpr int other_idx[3][2] = {{1, 2}, {0, 2}, {0, 1}};
        for (int i = 0; i < 3; ++i) {
            std::vector<std::pair<unsigned long, unsigned long>> reps;
            unsigned long kk = brute_critical(ns[static_cast<std::size_t>(i)],
                                              ns[static_cast<std::size_t>(other_idx[i][0])],
                                              ns[static_cast<std::size_t>(other_idx[i][1])], &reps);
            CHECK(kk == d.c[static_cast<std::size_t>(i)]);
            if (!d.symmetric && d.decomposition_unique) {
                REQUIRE(reps.size() == 1);
                CHECK(reps[0].first == d.r[static_cast<std::size_t>(i)][static_cast<std::size_t>(other_idx[i][0])]);
                CHECK(reps[0].second == d.r[static_cast<std::size_t>(i)][static_cast<std::size_t>(other_idx[i][1])]);
            }
        }
    }
}

TEST_CASE("a larger non-symmetric example end to end") {
    SemigroupTrace st = semigroup_hb_trace(5, 7, 9);
    if (!st.complete_intersection) {
        REQUIRE(st.matrix);
        for (const Polynomial& f : st.binomials) CHECK(vanishes_at_t_powers(st, f));
    }
}

TEST_CASE("structural properties across a sweep of semigroups") {
    int analyzed = 0;
    for (unsigned long a = 3; a <= 9; ++a)
        for (unsigned long b = a + 1; b <= 12; ++b)
            for (unsigned long c = b + 1; c <= 15; ++c) {
                SemigroupData d;
                try {
                    d = semigroup_analyze(a, b, c);
                } catch (const HypothesisError&) {
                    continue;  // non-minimal or gcd > 1
                }
                ++analyzed;
                // genus bound: 2 * #gaps >= F + 1, equality iff symmetric
                CHECK(2 * d.gaps.size() >= d.frobenius + 1);
                CHECK((2 * d.gaps.size() == d.frobenius + 1) == d.symmetric);
                // minimality forces every critical exponent above 1
                for (unsigned long ci : d.c) CHECK(ci >= 2);
                if (!d.symmetric) CHECK(d.decomposition_unique);
            }
    CHECK(analyzed > 100);
}
