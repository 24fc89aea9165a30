#ifndef CTRACE_TREE_HPP
#define CTRACE_TREE_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ctrace/ideal.hpp"
#include "ctrace/symbolic_matrix.hpp"

namespace ctrace {

// A tree on the vertex set {1, ..., n} with an ordered edge list (the k-th
// edge produces the k-th matrix row). Connectivity and acyclicity are
// checked at construction.
struct Tree {
    unsigned n = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;  // (i, j) with i < j

    static Tree make(unsigned n, std::vector<std::pair<unsigned, unsigned>> edges);
};

// Parses "1-2,2-3,3-4"; vertices default to 1..max label.
Tree tree_parse(std::string_view spec, std::optional<unsigned> n = {});

// Decodes a Pruefer sequence (entries in [1, n], length n-2) into the tree
// it encodes; deterministic, used to sample random trees.
Tree tree_from_pruefer(const std::vector<unsigned>& seq);

// Same tree with the edge list sorted lexicographically.
Tree with_sorted_edges(Tree t);

// The (n-1) x n matrix attached to a tree: the row of edge {i, j} (i < j)
// holds -x_i_j in column i and x_j_i in column j.
struct TreeMatrix {
    Tree tree;
    Ring ring;
    SymbolicMatrix A;

    VarId var(unsigned i, unsigned j) const;  // x_i_j for an edge direction
    std::vector<VarId> vars_row_scan() const;  // row-major scan of A's entries
};

TreeMatrix tree_matrix(const Tree& t);

// The neighbor of i on the unique path from i to j.
unsigned branch_vertex(const Tree& t, unsigned i, unsigned j);

// The n maximal-minor monomials v_j (signs dropped; squarefree of degree
// n-1), cross-checked against Laplace expansion of the matrix minors.
MonomialIdeal tree_ideal(const TreeMatrix& tm);

// The canonical trace presentation by (n-2)-minors of the matrix, computed
// combinatorially: deleting edge e and one column on each side of e splits
// the minor into the two component products. Minimalized; unit for n = 2.
MonomialIdeal tree_trace_minors(const TreeMatrix& tm);

// The divided generators v_j / x_{i, b(i,j)}, minimalized. A subset of the
// (n-2)-minors: exactly those whose deleted columns include an endpoint of
// the deleted edge.
MonomialIdeal tree_trace_divided(const TreeMatrix& tm);

// Sum of the localizations I(x) over every variable x of the matrix.
MonomialIdeal tree_trace_localizations(const TreeMatrix& tm);

// Localization identity: divided generators + I equals the localization
// sum. Both sides are computed by independent code paths.
bool tree_verify_monloc(const TreeMatrix& tm);

// Whether the localization sum already generates the full minor trace
// (together with I). False in general: minors that avoid the deleted
// edge's endpoints escape every single-variable division of a v_j.
bool tree_localizations_cover_trace(const TreeMatrix& tm);

// Single-letter display names (a, b, c, ...) assigned in row-scan order of
// the matrix. Fails when the tree has more than 26 edge variables.
struct TreeAlias {
    Ring ring;
    std::map<VarId, VarId> to_alias;
};

TreeAlias tree_alias(const TreeMatrix& tm);
Monomial alias_monomial(const TreeAlias& alias, const Ring& src, const Monomial& m);
Polynomial alias_polynomial(const TreeAlias& alias, const Polynomial& p);

}  // namespace ctrace

#endif
