#include "ctrace/hilbert_burch.hpp"

#include <fstream>
#include <sstream>

#include "ctrace/determinantal.hpp"
#include "ctrace/errors.hpp"
#include "ctrace/parse.hpp"

namespace ctrace {

namespace {

std::vector<long> parse_degree_list(const std::string& rest, const char* what) {
    std::vector<long> out;
    std::istringstream in(rest);
    long v;
    while (in >> v) out.push_back(v);
    if (out.empty()) throw ParseError(std::string("empty ") + what + " degree list", 0);
    return out;
}

}  // namespace

GradedMatrixInput parse_matrix_text(std::string_view text) {
    Ring ring;
    std::optional<std::vector<long>> a_deg, b_deg;
    std::vector<std::vector<std::string>> row_texts;

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);

        if (line.rfind("a:", 0) == 0) {
            a_deg = parse_degree_list(line.substr(2), "row");
            continue;
        }
        if (line.rfind("b:", 0) == 0) {
            b_deg = parse_degree_list(line.substr(2), "column");
            continue;
        }
        if (line.rfind("w:", 0) == 0) {
            std::istringstream ws(line.substr(2));
            std::string item;
            while (ws >> item) {
                auto eq = item.find('=');
                if (eq == std::string::npos) throw ParseError("weight entries look like var=weight", 0);
                long w = std::stol(item.substr(eq + 1));
                ring.var(item.substr(0, eq), w);
            }
            continue;
        }

        std::vector<std::string> entries;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t semi = line.find(';', pos);
            std::string cell = semi == std::string::npos ? line.substr(pos) : line.substr(pos, semi - pos);
            entries.push_back(cell);
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        row_texts.push_back(std::move(entries));
    }

    if (row_texts.empty()) throw ParseError("matrix text contains no rows", 0);
    const std::size_t cols = row_texts.front().size();
    for (const auto& row : row_texts)
        if (row.size() != cols) throw ParseError("rows have differing entry counts", 0);

    SymbolicMatrix a(ring, row_texts.size(), cols);
    for (std::size_t i = 0; i < row_texts.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) a.set(i, j, parse_polynomial(ring, row_texts[i][j]));

    return GradedMatrixInput{ring, std::move(a), std::move(a_deg), std::move(b_deg)};
}

GradedMatrixInput parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str());
}

namespace {

// Requires the (n-1) x n shape up to transpose and returns (n, whether the
// long side is the row side).
std::pair<unsigned, bool> hb_shape(const SymbolicMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (rows + 1 == cols) return {static_cast<unsigned>(cols), false};
    if (cols + 1 == rows) return {static_cast<unsigned>(rows), true};
    throw BoundsError("presentation matrix must be (n-1) x n or n x (n-1), got " +
                      std::to_string(rows) + " x " + std::to_string(cols));
}

SymbolicMatrix oriented_short_rows(const GradedMatrixInput& input) {
    auto [n, long_rows] = hb_shape(input.A);
    return long_rows ? input.A.transposed() : input.A;
}

}  // namespace

HbReport hb_check(const GradedMatrixInput& input) {
    auto [n, long_rows] = hb_shape(input.A);
    HbReport rep;
    rep.n = n;
    rep.long_side_rows = long_rows;

    const SymbolicMatrix& a = input.A;
    if (input.row_degrees && input.row_degrees->size() != a.rows())
        throw BoundsError("row degree vector length does not match the row count");
    if (input.col_degrees && input.col_degrees->size() != a.cols())
        throw BoundsError("column degree vector length does not match the column count");

    if (input.row_degrees && input.col_degrees) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                long expected = (*input.row_degrees)[i] - (*input.col_degrees)[j];
                const Polynomial& f = a.at(i, j);
                unsigned ri = static_cast<unsigned>(i + 1), cj = static_cast<unsigned>(j + 1);
                if (expected <= 0) {
                    if (!f.is_zero())
                        rep.violations.push_back({ri, cj,
                                                  "entry must vanish: required degree " +
                                                      std::to_string(expected) + " is not positive"});
                    continue;
                }
                if (f.is_zero()) continue;
                auto d = f.homogeneous_degree();
                if (!d)
                    rep.violations.push_back({ri, cj, "entry is not homogeneous"});
                else if (*d != expected)
                    rep.violations.push_back({ri, cj, "degree " + std::to_string(*d) + ", expected " +
                                                          std::to_string(expected)});
            }
    }

    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.row_is_zero(i)) rep.zero_rows.push_back(static_cast<unsigned>(i + 1));
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (a.col_is_zero(j)) rep.zero_cols.push_back(static_cast<unsigned>(j + 1));

    SymbolicMatrix m = oriented_short_rows(input);
    std::vector<unsigned> all_rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = static_cast<unsigned>(i + 1);
    for (unsigned omit = 1; omit <= m.cols(); ++omit) {
        std::vector<unsigned> cols;
        for (unsigned c = 1; c <= m.cols(); ++c)
            if (c != omit) cols.push_back(c);
        Polynomial minor = m.minor(MinorIndex(all_rows, cols));
        MinorHomogeneity h{omit, minor.is_zero(), minor.is_homogeneous(), 0};
        if (!h.zero && h.homogeneous) h.degree = *minor.homogeneous_degree();
        rep.maximal_minors.push_back(h);
    }

    rep.assumptions = {
        "height of the maximal-minor ideal equals 2 (assumed by user, not verified)",
        "quotient by the maximal minors is generically Gorenstein (assumed by user, not verified)",
    };
    return rep;
}

HbIdealResult hb_ideal(const GradedMatrixInput& input) {
    SymbolicMatrix m = oriented_short_rows(input);
    std::vector<unsigned> all_rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = static_cast<unsigned>(i + 1);

    HbIdealResult result{GeneratorIdeal::zero(input.ring), {}};
    std::vector<Polynomial> gens;
    for (unsigned omit = 1; omit <= m.cols(); ++omit) {
        std::vector<unsigned> cols;
        for (unsigned c = 1; c <= m.cols(); ++c)
            if (c != omit) cols.push_back(c);
        Polynomial minor = m.minor(MinorIndex(all_rows, cols));
        if (minor.is_zero()) {
            result.warnings.push_back("maximal minor omitting column " + std::to_string(omit) +
                                      " vanishes and was dropped");
            continue;
        }
        gens.push_back(minor.sign_normalized());
    }
    result.ideal = GeneratorIdeal::from_gens(input.ring, std::move(gens));
    return result;
}

GeneratorIdeal hb_trace(const GradedMatrixInput& input) {
    SymbolicMatrix m = oriented_short_rows(input);
    unsigned n = static_cast<unsigned>(m.cols());
    return ideal_of_minors(m, n - 2);
}

SpecializationTrace trace_of_specialization(const SymbolicMatrix& matrix, unsigned r) {
    SymbolicMatrix m = matrix.rows() <= matrix.cols() ? matrix : matrix.transposed();
    const unsigned rows = static_cast<unsigned>(m.rows()), cols = static_cast<unsigned>(m.cols());
    if (r < 1 || r + 1 > rows)
        throw HypothesisError("specialized trace requires 1 <= r <= m-1 for the m x n shape");

    SpecializationTrace out{
        ideal_power(ideal_of_minors(m, r), cols - rows),
        specializes_condition(rows, cols, r),
        {},
        {"height of the (r+1)-minor ideal equals (n-r)(m-r) (assumed by user, not verified)",
         "quotient ring is generically Gorenstein (assumed by user, not verified)"},
    };
    if (!out.condition_holds)
        out.warnings.push_back("specialization condition n <= 2m - r fails; the trace formula is not "
                               "known to descend to this quotient");
    return out;
}

}  // namespace ctrace
