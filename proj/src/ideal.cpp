#include "ctrace/ideal.hpp"

#include <algorithm>

#include "ctrace/errors.hpp"
#include "ctrace/limits.hpp"

namespace ctrace {

GeneratorIdeal GeneratorIdeal::from_gens(const Ring& ring, std::vector<Polynomial> gens) {
    for (const Polynomial& g : gens) {
        if (!g.ring().same_context(ring)) throw MixedContextError("ideal generators over mixed ring contexts");
        if (!g.is_homogeneous()) throw DegreeError("ideal generators must be homogeneous");
    }
    std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
    std::sort(gens.begin(), gens.end(),
              [](const Polynomial& a, const Polynomial& b) { return Polynomial::compare(a, b) < 0; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    GeneratorIdeal ideal(ring);
    ideal.gens_ = std::move(gens);
    return ideal;
}

GeneratorIdeal GeneratorIdeal::unit(const Ring& ring) {
    return from_gens(ring, {Polynomial::constant(ring, 1)});
}

GeneratorIdeal GeneratorIdeal::zero(const Ring& ring) { return GeneratorIdeal(ring); }

bool GeneratorIdeal::is_unit() const {
    for (const Polynomial& g : gens_)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

std::optional<long> GeneratorIdeal::equigenerated_degree() const {
    if (gens_.empty()) return std::nullopt;
    std::optional<long> degree;
    for (const Polynomial& g : gens_) {
        auto d = g.homogeneous_degree();
        if (!d) return std::nullopt;
        if (degree && *degree != *d) return std::nullopt;
        degree = d;
    }
    return degree;
}

GeneratorIdeal ideal_product(const GeneratorIdeal& a, const GeneratorIdeal& b) {
    if (!a.ring().same_context(b.ring()))
        throw MixedContextError("product of ideals over different ring contexts");
    std::vector<Polynomial> products;
    products.reserve(a.gen_count() * b.gen_count());
    std::size_t terms = 0;
    for (const Polynomial& p : a.gens())
        for (const Polynomial& q : b.gens()) {
            products.push_back(p * q);
            terms += products.back().term_count();
            guard_terms(terms, "ideal product");
        }
    return GeneratorIdeal::from_gens(a.ring(), std::move(products));
}

GeneratorIdeal ideal_power(const GeneratorIdeal& a, unsigned ell) {
    if (ell == 0) return GeneratorIdeal::unit(a.ring());
    GeneratorIdeal result = a;
    for (unsigned i = 1; i < ell; ++i) result = ideal_product(result, a);
    return result;
}

std::size_t mu_equigenerated(const GeneratorIdeal& ideal, const SpanOptions& opts) {
    if (ideal.is_zero()) return 0;
    if (!ideal.equigenerated_degree())
        throw DegreeError("mu is only defined here for equigenerated ideals");
    return span_dim(ideal.gens(), opts);
}

std::vector<Monomial> mono_minimalize(const Ring& ring, std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), MonomialLess{ring});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Ascending graded order: a divisor is never preceded by its multiple.
    std::vector<Monomial> minimal;
    for (const Monomial& m : gens) {
        bool divisible = false;
        for (const Monomial& g : minimal)
            if (Monomial::divides(g, m)) {
                divisible = true;
                break;
            }
        if (!divisible) minimal.push_back(m);
    }
    return minimal;
}

MonomialIdeal MonomialIdeal::from_gens(const Ring& ring, std::vector<Monomial> gens) {
    MonomialIdeal ideal(ring);
    ideal.gens_ = mono_minimalize(ring, std::move(gens));
    return ideal;
}

MonomialIdeal MonomialIdeal::unit(const Ring& ring) { return from_gens(ring, {Monomial::one()}); }

MonomialIdeal MonomialIdeal::zero(const Ring& ring) { return MonomialIdeal(ring); }

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (Monomial::divides(g, m)) return true;
    return false;
}

MonomialIdeal mono_localize(const MonomialIdeal& ideal, VarId v) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.gen_count());
    for (const Monomial& g : ideal.gens()) gens.push_back(g.without(v));
    return MonomialIdeal::from_gens(ideal.ring(), std::move(gens));
}

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!a.ring().same_context(b.ring()))
        throw MixedContextError("sum of monomial ideals over different ring contexts");
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal::from_gens(a.ring(), std::move(gens));
}

bool mono_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!a.ring().same_context(b.ring()))
        throw MixedContextError("comparison of monomial ideals over different ring contexts");
    return a.gens() == b.gens();
}

}  // namespace ctrace
