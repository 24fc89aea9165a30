#ifndef CTRACE_IDEAL_HPP
#define CTRACE_IDEAL_HPP

#include <vector>

#include "ctrace/linalg.hpp"
#include "ctrace/polynomial.hpp"

namespace ctrace {

// An ideal presented by a finite list of homogeneous generators. Zero
// generators are dropped; the list is deduplicated (exact polynomial
// equality only) and kept in canonical order (degree, then term order).
// The unit ideal is (1); the zero ideal has an empty list.
class GeneratorIdeal {
public:
    static GeneratorIdeal from_gens(const Ring& ring, std::vector<Polynomial> gens);
    static GeneratorIdeal unit(const Ring& ring);
    static GeneratorIdeal zero(const Ring& ring);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    std::size_t gen_count() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    // Common weighted degree when every generator shares one.
    std::optional<long> equigenerated_degree() const;

    bool operator==(const GeneratorIdeal& rhs) const {
        return ring_.same_context(rhs.ring_) && gens_ == rhs.gens_;
    }

private:
    explicit GeneratorIdeal(const Ring& ring) : ring_(ring) {}
    Ring ring_;
    std::vector<Polynomial> gens_;
};

GeneratorIdeal ideal_product(const GeneratorIdeal& a, const GeneratorIdeal& b);
GeneratorIdeal ideal_power(const GeneratorIdeal& a, unsigned ell);

// Minimal number of generators of an equigenerated ideal presented in an
// honest polynomial ring: the span dimension of its generator list (graded
// Nakayama). Errors loudly on non-equigenerated input.
std::size_t mu_equigenerated(const GeneratorIdeal& ideal, const SpanOptions& opts = {});

// An ideal generated by monomials, stored minimally: no generator divides
// another, list in canonical order. The unit ideal is (1).
class MonomialIdeal {
public:
    static MonomialIdeal from_gens(const Ring& ring, std::vector<Monomial> gens);
    static MonomialIdeal unit(const Ring& ring);
    static MonomialIdeal zero(const Ring& ring);

    const Ring& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t gen_count() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    // Membership: some generator divides m.
    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal& rhs) const {
        return ring_.same_context(rhs.ring_) && gens_ == rhs.gens_;
    }

private:
    explicit MonomialIdeal(const Ring& ring) : ring_(ring) {}
    Ring ring_;
    std::vector<Monomial> gens_;
};

// Keeps exactly the divisibility-minimal monomials; idempotent.
std::vector<Monomial> mono_minimalize(const Ring& ring, std::vector<Monomial> gens);

// Substitutes v by 1 in every generator (monomial localization).
MonomialIdeal mono_localize(const MonomialIdeal& ideal, VarId v);

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b);
bool mono_equal(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace ctrace

#endif
