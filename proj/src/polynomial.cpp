#include "ctrace/polynomial.hpp"

#include <algorithm>

#include "ctrace/errors.hpp"
#include "ctrace/limits.hpp"

namespace ctrace {

static void require_same_context(const Ring& a, const Ring& b, const char* op) {
    if (!a.same_context(b))
        throw MixedContextError(std::string("operands of ") + op + " live in different ring contexts");
}

Polynomial Polynomial::constant(const Ring& ring, Rational c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(const Ring& ring, VarId v) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(v), Rational(1)});
    return p;
}

Polynomial Polynomial::term(const Ring& ring, Rational c, Monomial m) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
    PolyBuilder b(ring);
    for (Term& t : terms) b.add(t.mono, t.coeff);
    return b.build();
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw BoundsError("zero polynomial has no leading term");
    return terms_.front();
}

Polynomial Polynomial::operator-() const {
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.mono, Rational(-t.coeff)});
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_context(ring_, rhs.ring_, "+");
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + rhs.terms_.size());
    auto i = terms_.begin(), j = rhs.terms_.begin();
    while (i != terms_.end() && j != rhs.terms_.end()) {
        int c = Monomial::compare(ring_, i->mono, j->mono);
        if (c > 0)
            out.terms_.push_back(*i++);
        else if (c < 0)
            out.terms_.push_back(*j++);
        else {
            Rational s = i->coeff + j->coeff;
            if (s != 0) out.terms_.push_back({i->mono, std::move(s)});
            ++i, ++j;
        }
    }
    out.terms_.insert(out.terms_.end(), i, terms_.end());
    out.terms_.insert(out.terms_.end(), j, rhs.terms_.end());
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_context(ring_, rhs.ring_, "*");
    PolyBuilder b(ring_);
    b.add_product(*this, rhs);
    return b.build();
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return ring_.same_context(rhs.ring_) && terms_ == rhs.terms_;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return zero(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.mono, Rational(t.coeff * c)});
    return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    // Multiplying by a fixed monomial preserves the term order.
    for (const Term& t : terms_) p.terms_.push_back({Monomial::mul(ring_, t.mono, m), t.coeff});
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::optional<long> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    long d = terms_.front().mono.weighted_degree(ring_);
    for (const Term& t : terms_)
        if (t.mono.weighted_degree(ring_) != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::sign_normalized() const {
    if (terms_.empty()) return *this;
    if (leading_term().coeff > 0) return *this;
    return -*this;
}

Polynomial Polynomial::substituted(const std::map<VarId, Polynomial>& images, const Ring& target) const {
    PolyBuilder out(target);
    // Per-variable power cache; exponents in our workloads are small.
    std::map<VarId, std::vector<Polynomial>> powers;
    for (const Term& t : terms_) {
        Polynomial factor = Polynomial::constant(target, t.coeff);
        for (const auto& [v, e] : t.mono.entries()) {
            auto img = images.find(v);
            if (img == images.end())
                throw MixedContextError("no substitution image for variable '" + ring_.name(v) + "'");
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
            while (cache.size() <= e) cache.push_back(cache.back() * img->second);
            factor = factor * cache[e];
        }
        out.add(factor);
    }
    return out.build();
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() && j != b.terms_.end()) {
        int c = Monomial::compare(a.ring_, i->mono, j->mono);
        if (c != 0) return c;
        int cc = cmp(i->coeff, j->coeff);
        if (cc != 0) return cc;
        ++i, ++j;
    }
    if (i != a.terms_.end()) return 1;
    if (j != b.terms_.end()) return -1;
    return 0;
}

static void append_rational(std::string& s, const Rational& q) {
    s += q.get_num().get_str();
    if (q.get_den() != 1) {
        s += '/';
        s += q.get_den().get_str();
    }
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                // Keep output within the grammar: a leading negative term
                // carries an explicit coefficient ("-1*x", "-3/2*y").
                if (t.mono.is_one()) {
                    append_rational(s, c);
                    first = false;
                    continue;
                }
                append_rational(s, c);
                s += '*';
                s += t.mono.str(ring_);
                first = false;
                continue;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            c = abs(c);
        }
        if (t.mono.is_one()) {
            append_rational(s, c);
        } else if (c == 1) {
            s += t.mono.str(ring_);
        } else {
            append_rational(s, c);
            s += '*';
            s += t.mono.str(ring_);
        }
        first = false;
    }
    return s;
}

void PolyBuilder::add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc_.erase(it);
    }
}

void PolyBuilder::add(const Polynomial& p) {
    for (const auto& t : p.terms()) add(t.mono, t.coeff);
}

void PolyBuilder::add_product(const Polynomial& p, const Polynomial& q) {
    guard_terms(p.term_count() * q.term_count(), "polynomial product");
    for (const auto& tp : p.terms())
        for (const auto& tq : q.terms()) add(Monomial::mul(ring_, tp.mono, tq.mono), tp.coeff * tq.coeff);
}

Polynomial PolyBuilder::build() {
    Polynomial p(ring_);
    p.terms_.reserve(acc_.size());
    // The map is ascending; terms are stored descending.
    for (auto it = acc_.rbegin(); it != acc_.rend(); ++it) p.terms_.push_back({it->first, it->second});
    acc_.clear();
    return p;
}

}  // namespace ctrace
