#ifndef CTRACE_MONOMIAL_HPP
#define CTRACE_MONOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "ctrace/ring.hpp"

namespace ctrace {

// A power product of variables. Entries carry strictly positive exponents
// and are kept sorted by the ring's variable order, so equality is plain
// structural equality within one ring context.
class Monomial {
public:
    using Entry = std::pair<VarId, unsigned>;

    Monomial() = default;  // the unit monomial (empty product)

    static Monomial one() { return Monomial(); }
    static Monomial variable(VarId v, unsigned exp = 1);
    static Monomial from_entries(const Ring& ring, std::vector<Entry> entries);

    bool is_one() const { return entries_.empty(); }
    unsigned exponent(VarId v) const;
    const std::vector<Entry>& entries() const { return entries_; }

    long total_degree() const;
    long weighted_degree(const Ring& ring) const;
    bool squarefree() const;

    static Monomial mul(const Ring& ring, const Monomial& a, const Monomial& b);
    static bool divides(const Monomial& a, const Monomial& b);  // a | b
    static Monomial divide(const Monomial& a, const Monomial& b);  // a / b, requires b | a

    // Exponent of v set to zero (monomial localization at v).
    Monomial without(VarId v) const;

    // Graded-lexicographic order: weighted degree first, then the earlier
    // variable with the larger exponent wins. Negative when a < b.
    static int compare(const Ring& ring, const Monomial& a, const Monomial& b);

    std::string str(const Ring& ring) const;  // "x_1_1^2*y" ; "1" for the unit

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Entry> entries_;
};

// Strict weak order functor for std::map / std::sort over one ring.
struct MonomialLess {
    Ring ring;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(ring, a, b) < 0;
    }
};

}  // namespace ctrace

#endif
