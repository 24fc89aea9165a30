#include "ctrace/tree.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "ctrace/errors.hpp"

namespace ctrace {

namespace {

std::string edge_var_name(unsigned i, unsigned j) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

// Adjacency over 1-based vertices.
std::vector<std::vector<unsigned>> adjacency(const Tree& t) {
    std::vector<std::vector<unsigned>> adj(t.n + 1);
    for (auto [i, j] : t.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

}  // namespace

Tree Tree::make(unsigned n, std::vector<std::pair<unsigned, unsigned>> edges) {
    if (n < 2) throw BoundsError("a tree needs at least 2 vertices here");
    Tree t;
    t.n = n;
    std::set<std::pair<unsigned, unsigned>> seen;
    for (auto& [i, j] : edges) {
        if (i == j) throw BoundsError("self-loop on vertex " + std::to_string(i));
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n) throw BoundsError("edge endpoint out of range");
        if (!seen.insert({i, j}).second)
            throw BoundsError("duplicate edge " + std::to_string(i) + "-" + std::to_string(j));
    }
    t.edges = std::move(edges);
    if (t.edges.size() != t.n - 1)
        throw BoundsError("a tree on " + std::to_string(t.n) + " vertices needs exactly " +
                          std::to_string(t.n - 1) + " edges, got " + std::to_string(t.edges.size()));

    // n-1 edges + connected implies acyclic.
    auto adj = adjacency(t);
    std::vector<bool> visited(t.n + 1, false);
    std::queue<unsigned> q;
    q.push(1);
    visited[1] = true;
    unsigned reached = 1;
    while (!q.empty()) {
        unsigned v = q.front();
        q.pop();
        for (unsigned w : adj[v])
            if (!visited[w]) {
                visited[w] = true;
                ++reached;
                q.push(w);
            }
    }
    if (reached != t.n) throw BoundsError("edge list is disconnected (or contains a cycle)");
    return t;
}

Tree tree_parse(std::string_view spec, std::optional<unsigned> n) {
    std::vector<std::pair<unsigned, unsigned>> edges;
    unsigned max_label = 0;
    std::size_t pos = 0;
    auto parse_num = [&]() -> unsigned {
        while (pos < spec.size() && spec[pos] == ' ') ++pos;
        std::size_t start = pos;
        while (pos < spec.size() && spec[pos] >= '0' && spec[pos] <= '9') ++pos;
        if (pos == start) throw ParseError("expected a vertex label", start);
        unsigned v = static_cast<unsigned>(std::stoul(std::string(spec.substr(start, pos - start))));
        if (v == 0) throw ParseError("vertex labels start at 1", start);
        return v;
    };
    for (;;) {
        unsigned a = parse_num();
        while (pos < spec.size() && spec[pos] == ' ') ++pos;
        if (pos >= spec.size() || spec[pos] != '-') throw ParseError("expected '-' in edge", pos);
        ++pos;
        unsigned b = parse_num();
        edges.push_back({a, b});
        max_label = std::max({max_label, a, b});
        while (pos < spec.size() && spec[pos] == ' ') ++pos;
        if (pos >= spec.size()) break;
        if (spec[pos] != ',') throw ParseError("expected ',' between edges", pos);
        ++pos;
    }
    return Tree::make(n.value_or(max_label), std::move(edges));
}

Tree tree_from_pruefer(const std::vector<unsigned>& seq) {
    const unsigned n = static_cast<unsigned>(seq.size()) + 2;
    std::vector<unsigned> degree(n + 1, 1);
    for (unsigned v : seq) {
        if (v < 1 || v > n) throw BoundsError("Pruefer entry out of range");
        ++degree[v];
    }
    std::vector<std::pair<unsigned, unsigned>> edges;
    std::set<unsigned> leaves;
    for (unsigned v = 1; v <= n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (unsigned v : seq) {
        unsigned leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({std::min(leaf, v), std::max(leaf, v)});
        if (--degree[v] == 1) leaves.insert(v);
    }
    unsigned a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.push_back({std::min(a, b), std::max(a, b)});
    return Tree::make(n, std::move(edges));
}

Tree with_sorted_edges(Tree t) {
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

VarId TreeMatrix::var(unsigned i, unsigned j) const {
    auto v = ring.find(edge_var_name(i, j));
    if (!v) throw BoundsError("no edge between " + std::to_string(i) + " and " + std::to_string(j));
    return *v;
}

std::vector<VarId> TreeMatrix::vars_row_scan() const {
    std::vector<VarId> out;
    out.reserve(2 * tree.edges.size());
    for (auto [i, j] : tree.edges) {
        out.push_back(var(i, j));
        out.push_back(var(j, i));
    }
    return out;
}

TreeMatrix tree_matrix(const Tree& t) {
    Ring ring;
    // Intern both orientations per edge, in row-scan order.
    for (auto [i, j] : t.edges) {
        ring.var(edge_var_name(i, j));
        ring.var(edge_var_name(j, i));
    }
    SymbolicMatrix a(ring, t.n - 1, t.n);
    for (std::size_t k = 0; k < t.edges.size(); ++k) {
        auto [i, j] = t.edges[k];
        a.set(k, i - 1, -Polynomial::variable(ring, *ring.find(edge_var_name(i, j))));
        a.set(k, j - 1, Polynomial::variable(ring, *ring.find(edge_var_name(j, i))));
    }
    return TreeMatrix{t, ring, std::move(a)};
}

unsigned branch_vertex(const Tree& t, unsigned i, unsigned j) {
    if (i == j) throw BoundsError("branch vertex needs two distinct vertices");
    if (i < 1 || i > t.n || j < 1 || j > t.n) throw BoundsError("vertex out of range");
    auto adj = adjacency(t);
    std::vector<unsigned> parent(t.n + 1, 0);
    std::queue<unsigned> q;
    q.push(i);
    parent[i] = i;
    while (!q.empty()) {
        unsigned v = q.front();
        q.pop();
        if (v == j) break;
        for (unsigned w : adj[v])
            if (parent[w] == 0) {
                parent[w] = v;
                q.push(w);
            }
    }
    unsigned step = j;
    while (parent[step] != i) step = parent[step];
    return step;
}

namespace {

// v_j = prod over i != j of x_{i, b(i,j)}.
Monomial v_monomial(const TreeMatrix& tm, unsigned j) {
    std::vector<Monomial::Entry> entries;
    for (unsigned i = 1; i <= tm.tree.n; ++i) {
        if (i == j) continue;
        entries.push_back({tm.var(i, branch_vertex(tm.tree, i, j)), 1});
    }
    return Monomial::from_entries(tm.ring, std::move(entries));
}

// The two vertex sets obtained by deleting edge k.
std::pair<std::vector<unsigned>, std::vector<unsigned>> split_at_edge(const Tree& t, std::size_t k) {
    auto adj = adjacency(t);
    auto [a, b] = t.edges[k];
    std::vector<bool> side_a(t.n + 1, false);
    std::queue<unsigned> q;
    q.push(a);
    side_a[a] = true;
    while (!q.empty()) {
        unsigned v = q.front();
        q.pop();
        for (unsigned w : adj[v]) {
            if ((v == a && w == b) || (v == b && w == a)) continue;
            if (!side_a[w]) {
                side_a[w] = true;
                q.push(w);
            }
        }
    }
    std::pair<std::vector<unsigned>, std::vector<unsigned>> parts;
    for (unsigned v = 1; v <= t.n; ++v) (side_a[v] ? parts.first : parts.second).push_back(v);
    return parts;
}

// Product over i in `component`, i != j, of x_{i, b(i,j)}; the path stays
// inside the component, so the full-tree branch vertex applies.
void append_component_factors(const TreeMatrix& tm, const std::vector<unsigned>& component,
                              unsigned j, std::vector<Monomial::Entry>& entries) {
    for (unsigned i : component) {
        if (i == j) continue;
        entries.push_back({tm.var(i, branch_vertex(tm.tree, i, j)), 1});
    }
}

}  // namespace

MonomialIdeal tree_ideal(const TreeMatrix& tm) {
    const unsigned n = tm.tree.n;
    std::vector<Monomial> gens;
    std::vector<unsigned> all_rows(n - 1);
    for (unsigned i = 0; i < n - 1; ++i) all_rows[i] = i + 1;
    for (unsigned j = 1; j <= n; ++j) {
        Monomial v = v_monomial(tm, j);

        // Self-check against the Laplace expansion of the same minor.
        std::vector<unsigned> cols;
        for (unsigned c = 1; c <= n; ++c)
            if (c != j) cols.push_back(c);
        Polynomial minor = tm.A.minor(MinorIndex(all_rows, cols));
        bool matches = minor.term_count() == 1 && abs(minor.leading_term().coeff) == 1 &&
                       minor.leading_term().mono == v;
        if (!matches)
            throw InternalInconsistencyError(
                "path-product generator disagrees with the Laplace minor for column " + std::to_string(j));
        gens.push_back(std::move(v));
    }
    return MonomialIdeal::from_gens(tm.ring, std::move(gens));
}

MonomialIdeal tree_trace_minors(const TreeMatrix& tm) {
    const Tree& t = tm.tree;
    if (t.n == 2) return MonomialIdeal::unit(tm.ring);
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < t.edges.size(); ++k) {
        auto [c1, c2] = split_at_edge(t, k);
        for (unsigned j1 : c1)
            for (unsigned j2 : c2) {
                std::vector<Monomial::Entry> entries;
                append_component_factors(tm, c1, j1, entries);
                append_component_factors(tm, c2, j2, entries);
                gens.push_back(Monomial::from_entries(tm.ring, std::move(entries)));
            }
    }
    return MonomialIdeal::from_gens(tm.ring, std::move(gens));
}

MonomialIdeal tree_trace_divided(const TreeMatrix& tm) {
    std::vector<Monomial> gens;
    for (unsigned j = 1; j <= tm.tree.n; ++j) {
        Monomial v = v_monomial(tm, j);
        for (unsigned i = 1; i <= tm.tree.n; ++i) {
            if (i == j) continue;
            gens.push_back(v.without(tm.var(i, branch_vertex(tm.tree, i, j))));
        }
    }
    return MonomialIdeal::from_gens(tm.ring, std::move(gens));
}

MonomialIdeal tree_trace_localizations(const TreeMatrix& tm) {
    MonomialIdeal ideal = tree_ideal(tm);
    MonomialIdeal sum = MonomialIdeal::zero(tm.ring);
    for (VarId v : tm.vars_row_scan()) sum = mono_sum(sum, mono_localize(ideal, v));
    return sum;
}

bool tree_verify_monloc(const TreeMatrix& tm) {
    MonomialIdeal lhs = mono_sum(tree_trace_divided(tm), tree_ideal(tm));
    return mono_equal(lhs, tree_trace_localizations(tm));
}

bool tree_localizations_cover_trace(const TreeMatrix& tm) {
    MonomialIdeal lhs = mono_sum(tree_trace_minors(tm), tree_ideal(tm));
    return mono_equal(lhs, tree_trace_localizations(tm));
}

TreeAlias tree_alias(const TreeMatrix& tm) {
    std::vector<VarId> scan = tm.vars_row_scan();
    if (scan.size() > 26) throw BoundsError("alias names a..z support at most 13 edges");
    TreeAlias alias;
    for (std::size_t k = 0; k < scan.size(); ++k)
        alias.to_alias.emplace(scan[k], alias.ring.var(std::string(1, static_cast<char>('a' + k))));
    return alias;
}

Monomial alias_monomial(const TreeAlias& alias, const Ring& src, const Monomial& m) {
    (void)src;
    std::vector<Monomial::Entry> entries;
    for (const auto& [v, e] : m.entries()) entries.push_back({alias.to_alias.at(v), e});
    return Monomial::from_entries(alias.ring, std::move(entries));
}

Polynomial alias_polynomial(const TreeAlias& alias, const Polynomial& p) {
    std::map<VarId, Polynomial> images;
    for (const auto& [from, to] : alias.to_alias) images.emplace(from, Polynomial::variable(alias.ring, to));
    return p.substituted(images, alias.ring);
}

}  // namespace ctrace
