// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line per criterion. All comparisons are exact; the stated
// wall-clock budgets are asserted with std::chrono.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>
#include <vector>

#include "ctrace/determinantal.hpp"
#include "ctrace/errors.hpp"
#include "ctrace/hilbert_burch.hpp"
#include "ctrace/numbers.hpp"
#include "ctrace/semigroup.hpp"
#include "ctrace/tree.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace ctrace;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CTRACE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, k);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::set<std::string> as_set(const ordered_json& array) {
    std::set<std::string> out;
    for (const auto& v : array) out.insert(v.get<std::string>());
    return out;
}

Tree random_tree(std::mt19937& rng, unsigned n) {
    if (n == 2) return tree_parse("1-2");
    std::uniform_int_distribution<unsigned> label(1, n);
    std::vector<unsigned> seq(n - 2);
    for (unsigned& v : seq) v = label(rng);
    return tree_from_pruefer(seq);
}

// The tree inputs shared by criteria 2 and 7.
std::vector<Tree> criterion_trees() {
    std::vector<Tree> trees;
    trees.push_back(tree_parse("1-2,2-3,3-4,3-5"));
    trees.push_back(tree_parse("1-2"));
    trees.push_back(tree_parse("1-2,2-3"));
    trees.push_back(tree_parse("1-2,1-3,1-4,1-5"));
    std::mt19937 rng(20240801);
    std::uniform_int_distribution<unsigned> size(3, 8);
    for (int t = 0; t < 200; ++t) trees.push_back(random_tree(rng, size(rng)));
    return trees;
}

const std::set<std::string> kExampleIdeal = {"b*d*f*h", "a*d*f*h", "a*c*f*h", "a*c*e*h", "a*c*f*g"};
const std::set<std::string> kExampleTrace = {
    "a*c*e", "a*c*g", "a*c*f", "a*d*f", "a*f*g", "b*d*f", "b*f*g", "c*f*g", "a*c*h",
    "a*d*h", "a*e*h", "b*d*h", "b*e*h", "c*e*h", "a*f*h", "b*f*h", "c*f*h", "d*f*h"};

// 1. The worked 5-vertex example through the CLI, exactly as displayed.
Check criterion_1() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    RunResult res = run_cli("tree 1-2,2-3,3-4,3-5 --alias --json");
    double elapsed = seconds_since(start);
    c.require(res.exit_code == 0, "CLI exited with " + std::to_string(res.exit_code));
    if (!c.ok) return c;
    ordered_json doc = ordered_json::parse(res.output);
    c.require(as_set(doc["ideal"]) == kExampleIdeal, "ideal generators differ from the fixture");
    c.require(as_set(doc["trace_minors"]) == kExampleTrace, "trace generators differ from the fixture");
    c.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s (budget 1 s)");
    c.detail = "5 ideal + 18 trace generators in " + std::to_string(elapsed) + " s";
    return c;
}

// 2. The monomial-localization identity on named and random trees.
Check criterion_2() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    std::vector<Tree> trees = criterion_trees();
    for (const Tree& t : trees) {
        if (!tree_verify_monloc(tree_matrix(t))) {
            std::string edges;
            for (auto [i, j] : t.edges) edges += std::to_string(i) + "-" + std::to_string(j) + ",";
            c.require(false, "identity fails on " + edges);
            return c;
        }
    }
    double elapsed = seconds_since(start);
    c.require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s (budget 30 s)");
    c.detail = std::to_string(trees.size()) + " trees in " + std::to_string(elapsed) + " s";
    return c;
}

// 3. PQ = delta I_r(X) across the stated contexts.
Check criterion_3() {
    Check c;
    std::ostringstream detail;
    for (auto [m, n, r] : {std::array<unsigned, 3>{2, 3, 1}, std::array<unsigned, 3>{2, 4, 1},
                           std::array<unsigned, 3>{3, 4, 2}, std::array<unsigned, 3>{3, 5, 2},
                           std::array<unsigned, 3>{4, 5, 3}}) {
        auto start = std::chrono::steady_clock::now();
        GenericMatrixContext ctx(m, n, r);
        SegreContext seg(ctx);
        bool ok = verify_pq_identity(ctx, seg);
        double elapsed = seconds_since(start);
        c.require(ok, "identity fails on (" + std::to_string(m) + "," + std::to_string(n) + "," +
                          std::to_string(r) + ")");
        c.require(elapsed < 60.0, "case (" + std::to_string(m) + "," + std::to_string(n) + "," +
                                      std::to_string(r) + ") took " + std::to_string(elapsed) + " s");
        detail << "(" << m << "," << n << "," << r << ") " << std::fixed << elapsed << "s ";
    }
    c.detail = detail.str();
    return c;
}

// 4. mu((PQ)^l) = mu(P^l) mu(Q^l) across the stated contexts and powers.
Check criterion_4() {
    Check c;
    std::ostringstream detail;
    auto run_case = [&](unsigned m, unsigned n, unsigned r, unsigned ell) {
        auto start = std::chrono::steady_clock::now();
        GenericMatrixContext ctx(m, n, r);
        SegreContext seg(ctx);
        LasagnaReport rep = verify_lasagna(ctx, seg, ell);
        double elapsed = seconds_since(start);
        std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + "," +
                          std::to_string(r) + ") l=" + std::to_string(ell);
        c.require(rep.ok, "factorization fails on " + tag);
        c.require(elapsed < 120.0, tag + " took " + std::to_string(elapsed) + " s");
        detail << tag << " " << rep.mu_pq << "=" << rep.mu_p << "*" << rep.mu_q << " ";
    };
    for (auto [m, n, r] : {std::array<unsigned, 3>{2, 3, 1}, std::array<unsigned, 3>{2, 4, 1},
                           std::array<unsigned, 3>{3, 4, 2}}) {
        run_case(m, n, r, 1);
        run_case(m, n, r, 2);
    }
    run_case(3, 5, 2, 1);
    c.detail = detail.str();
    return c;
}

// 5. Teter formula against the independent span-rank oracle. The expected
// oracle values were derived here: (2,5,1) computes to 35 (the value 15
// published for that tuple belongs to (3,5,1), asserted alongside).
Check criterion_5() {
    Check c;
    struct Case {
        unsigned m, n, r;
        long expected;
    };
    for (const Case& k : {Case{2, 3, 1, 3}, Case{2, 4, 1, 10}, Case{2, 5, 1, 35},
                          Case{3, 4, 2, 6}, Case{3, 5, 2, 50}}) {
        GenericMatrixContext ctx(k.m, k.n, k.r);
        SegreContext seg(ctx);
        TeterReport rep = teter_verify(ctx, seg);
        std::string tag = "(" + std::to_string(k.m) + "," + std::to_string(k.n) + "," +
                          std::to_string(k.r) + ")";
        c.require(rep.agree, "formula and oracle disagree on " + tag);
        c.require(rep.formula == k.expected,
                  tag + " = " + rep.formula.get_str() + ", expected " + std::to_string(k.expected));
    }
    c.require(teter_formula(3, 5, 1) == 15, "(3,5,1) formula is not 15");
    c.detail = "formula == span oracle on all five tuples";
    return c;
}

// 6. The r = 1 closed form in pure arithmetic.
Check criterion_6() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    for (unsigned m = 2; m <= 12; ++m)
        for (unsigned n = m + 1; n <= 12; ++n) {
            Integer f = teter_formula(m, n, 1);
            c.require(f == binomial(2L * n - m - 1, static_cast<long>(n - m)),
                      "closed form fails at (" + std::to_string(m) + "," + std::to_string(n) + ")");
            c.require(f == monomial_count(n, n - m),
                      "monomial count differs at (" + std::to_string(m) + "," + std::to_string(n) + ")");
        }
    double elapsed = seconds_since(start);
    c.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s (budget 1 s)");
    c.detail = "all 2 <= m < n <= 12";
    return c;
}

// 7. The matrix route and the combinatorial route to the tree trace agree.
Check criterion_7() {
    Check c;
    std::vector<Tree> trees = criterion_trees();
    for (const Tree& t : trees) {
        TreeMatrix tm = tree_matrix(t);
        GradedMatrixInput input{tm.ring, tm.A, {}, {}};
        GeneratorIdeal matrix_trace = hb_trace(input);
        std::vector<Monomial> monos;
        bool monomial = true;
        for (const Polynomial& p : matrix_trace.gens()) {
            if (p.term_count() != 1) {
                monomial = false;
                break;
            }
            monos.push_back(p.terms()[0].mono);
        }
        c.require(monomial, "a matrix-route trace generator is not a monomial");
        if (!c.ok) return c;
        MonomialIdeal lhs = MonomialIdeal::from_gens(tm.ring, std::move(monos));
        if (!mono_equal(lhs, tree_trace_minors(tm))) {
            std::string edges;
            for (auto [i, j] : t.edges) edges += std::to_string(i) + "-" + std::to_string(j) + ",";
            c.require(false, "presentations differ on " + edges);
            return c;
        }
    }
    c.detail = std::to_string(trees.size()) + " trees, both routes identical";
    return c;
}

// 8. The semigroup application end to end through the CLI.
Check criterion_8() {
    Check c;
    auto start = std::chrono::steady_clock::now();
    RunResult res = run_cli("semigroup 3 4 5 --json");
    c.require(res.exit_code == 0, "semigroup 3 4 5 exited with " + std::to_string(res.exit_code));
    if (!c.ok) return c;
    ordered_json doc = ordered_json::parse(res.output);
    c.require(doc.contains("matrix"), "no presentation matrix emitted");
    c.require(as_set(doc["trace"]) == std::set<std::string>{"x", "y", "z"},
              "trace is not the maximal ideal");
    c.require(doc["nearly_gorenstein"] == true, "nearly Gorenstein flag missing");

    // the minors of the emitted matrix are the critical binomials, checked
    // symbolically and through the t-power substitution oracle
    SemigroupTrace st = semigroup_hb_trace(3, 4, 5);
    std::vector<bool> used(3, false);
    for (unsigned j1 = 1; j1 <= 2; ++j1)
        for (unsigned j2 = j1 + 1; j2 <= 3; ++j2) {
            Polynomial minor = st.matrix->minor(MinorIndex({1, 2}, {j1, j2}));
            c.require(vanishes_at_t_powers(st, minor), "a minor fails the t-power oracle");
            bool matched = false;
            for (std::size_t i = 0; i < 3; ++i) {
                if (used[i]) continue;
                if (minor == st.binomials[i] || minor == -st.binomials[i]) {
                    used[i] = true;
                    matched = true;
                    break;
                }
            }
            c.require(matched, "a minor does not match any critical binomial");
        }

    RunResult sym = run_cli("semigroup 4 5 6 --json");
    c.require(sym.exit_code == 0, "semigroup 4 5 6 exited with " + std::to_string(sym.exit_code));
    if (!c.ok) return c;
    ordered_json sdoc = ordered_json::parse(sym.output);
    c.require(sdoc["symmetric"] == true, "4,5,6 not reported symmetric");
    c.require(sdoc["complete_intersection"] == true, "4,5,6 not reported Gorenstein");
    c.require(as_set(sdoc["trace"]) == std::set<std::string>{"1"}, "4,5,6 trace is not the unit ideal");

    double elapsed = seconds_since(start);
    c.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s (budget 1 s)");
    c.detail = "minors == critical binomials; trace (x,y,z) and (1)";
    return c;
}

// 9. Specialization condition and identity-specialization consistency.
Check criterion_9() {
    Check c;
    c.require(specializes_condition(3, 4, 2), "(3,4,2) should satisfy the condition");
    c.require(!specializes_condition(2, 4, 1), "(2,4,1) should fail the condition");
    for (auto [m, n, r] : {std::array<unsigned, 3>{2, 3, 1}, std::array<unsigned, 3>{3, 4, 2},
                           std::array<unsigned, 3>{2, 4, 1}}) {
        GenericMatrixContext ctx(m, n, r);
        SpecializationTrace spec = trace_of_specialization(ctx.X, r);
        c.require(spec.trace == trace_generic(ctx),
                  "identity specialization differs on (" + std::to_string(m) + "," +
                      std::to_string(n) + "," + std::to_string(r) + ")");
    }
    c.detail = "condition values and identity specialization";
    return c;
}

// 10. No code path claims traces of arbitrary ideals; square presentation
// matrices are refused with exit code 2, and the one worked example beyond
// this tool's scope lives in the README as documentation only.
Check criterion_10() {
    Check c;
    std::string path = "/tmp/ctrace_acceptance_square.txt";
    {
        std::ofstream out(path);
        out << "x1*y1; x2*y2\nx1*x2; x2*y3\n";
    }
    RunResult res = run_cli("hb " + path + " --trace");
    c.require(res.exit_code == 2, "square matrix exited with " + std::to_string(res.exit_code) +
                                      " instead of 2");
    RunResult unknown = run_cli("trace-ideal x1*y1,x2*y2");
    c.require(unknown.exit_code != 0, "an unknown trace-of-ideal surface exists");

    std::ifstream readme(std::string(CTRACE_REPO_ROOT) + "/README.md");
    c.require(readme.good(), "README.md not found");
    std::stringstream buf;
    buf << readme.rdbuf();
    std::string text = buf.str();
    for (const char* needle :
         {"x1, x2, x3^2, x3*y1, x3*y2, y1*y2, y1*y3, y2*y3, y3^2", "x2, x3^2, x3*y2, y1, y3"})
        c.require(text.find(needle) != std::string::npos,
                  "README does not document the out-of-scope example values");
    c.detail = "refusal with exit 2; example values documented, never computed";
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 worked 5-vertex example via CLI", criterion_1},
        {"2 localization identity on 204 trees", criterion_2},
        {"3 PQ = delta I_r(X)", criterion_3},
        {"4 mu((PQ)^l) factorization", criterion_4},
        {"5 Teter formula vs span oracle", criterion_5},
        {"6 r = 1 closed form", criterion_6},
        {"7 matrix trace == combinatorial trace", criterion_7},
        {"8 semigroup application via CLI", criterion_8},
        {"9 specialization condition", criterion_9},
        {"10 out-of-scope inputs refused", criterion_10},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        Check result;
        try {
            result = cr.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        std::cout << (result.ok ? "PASS" : "FAIL") << " criterion " << cr.name;
        if (!result.detail.empty()) std::cout << " -- " << result.detail;
        std::cout << std::endl;
        if (!result.ok) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 10 criteria passed" << std::endl;
    return 0;
}
