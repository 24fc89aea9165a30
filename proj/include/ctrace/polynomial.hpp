#ifndef CTRACE_POLYNOMIAL_HPP
#define CTRACE_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctrace/monomial.hpp"
#include "ctrace/numbers.hpp"
#include "ctrace/ring.hpp"

namespace ctrace {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in descending graded-lex order with no zero coefficients,
// so two polynomials over the same ring are equal iff their term lists are.
// Immutable after construction; safe to share across threads for reading.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        bool operator==(const Term&) const = default;
    };

    explicit Polynomial(const Ring& ring) : ring_(ring) {}

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
    static Polynomial constant(const Ring& ring, Rational c);
    static Polynomial variable(const Ring& ring, VarId v);
    static Polynomial term(const Ring& ring, Rational c, Monomial m);
    static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    // Leading = largest monomial in the canonical order.
    const Term& leading_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    bool operator==(const Polynomial& rhs) const;

    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial pow(unsigned e) const;

    // nullopt when terms have mixed weighted degrees or the polynomial is
    // zero (zero is homogeneous of every degree; test is_zero() first).
    std::optional<long> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    // Scaled so the leading coefficient is positive (identity for zero).
    Polynomial sign_normalized() const;

    // Ring homomorphism: replaces every variable by its image (which must
    // be present for every variable that occurs) and expands in `target`.
    Polynomial substituted(const std::map<VarId, Polynomial>& images, const Ring& target) const;

    // Total order for canonical generator lists: graded on the leading
    // monomial first, so sorting by it orders by degree then term order.
    static int compare(const Polynomial& a, const Polynomial& b);

    std::string str() const;

private:
    Ring ring_;
    std::vector<Term> terms_;  // descending canonical order

    friend class PolyBuilder;
};

// Accumulates terms (cancellation-aware), then freezes into a Polynomial.
class PolyBuilder {
public:
    explicit PolyBuilder(const Ring& ring) : ring_(ring), acc_(MonomialLess{ring}) {}
    void add(const Monomial& m, const Rational& c);
    void add(const Polynomial& p);
    void add_product(const Polynomial& p, const Polynomial& q);
    Polynomial build();

private:
    Ring ring_;
    std::map<Monomial, Rational, MonomialLess> acc_;
};

}  // namespace ctrace

#endif
