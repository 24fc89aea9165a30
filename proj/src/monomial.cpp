#include "ctrace/monomial.hpp"

#include <algorithm>

#include "ctrace/errors.hpp"

namespace ctrace {

Monomial Monomial::variable(VarId v, unsigned exp) {
    Monomial m;
    if (exp > 0) m.entries_.push_back({v, exp});
    return m;
}

Monomial Monomial::from_entries(const Ring& ring, std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
        return ring.compare_vars(a.first, b.first) < 0;
    });
    Monomial m;
    for (const Entry& e : entries) {
        if (e.second == 0) continue;
        if (!m.entries_.empty() && m.entries_.back().first == e.first)
            m.entries_.back().second += e.second;
        else
            m.entries_.push_back(e);
    }
    return m;
}

unsigned Monomial::exponent(VarId v) const {
    for (const Entry& e : entries_)
        if (e.first == v) return e.second;
    return 0;
}

long Monomial::total_degree() const {
    long d = 0;
    for (const Entry& e : entries_) d += e.second;
    return d;
}

long Monomial::weighted_degree(const Ring& ring) const {
    long d = 0;
    for (const Entry& e : entries_) d += ring.weight(e.first) * static_cast<long>(e.second);
    return d;
}

bool Monomial::squarefree() const {
    for (const Entry& e : entries_)
        if (e.second > 1) return false;
    return true;
}

Monomial Monomial::mul(const Ring& ring, const Monomial& a, const Monomial& b) {
    Monomial m;
    m.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin(), j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
        int c = ring.compare_vars(i->first, j->first);
        if (c < 0)
            m.entries_.push_back(*i++);
        else if (c > 0)
            m.entries_.push_back(*j++);
        else {
            m.entries_.push_back({i->first, i->second + j->second});
            ++i, ++j;
        }
    }
    m.entries_.insert(m.entries_.end(), i, a.entries_.end());
    m.entries_.insert(m.entries_.end(), j, b.entries_.end());
    return m;
}

bool Monomial::divides(const Monomial& a, const Monomial& b) {
    for (const Entry& e : a.entries_)
        if (b.exponent(e.first) < e.second) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& a, const Monomial& b) {
    if (!divides(b, a)) throw BoundsError("monomial division is not exact");
    Monomial m;
    for (const Entry& e : a.entries_) {
        unsigned sub = b.exponent(e.first);
        if (e.second > sub) m.entries_.push_back({e.first, e.second - sub});
    }
    return m;
}

Monomial Monomial::without(VarId v) const {
    Monomial m;
    for (const Entry& e : entries_)
        if (e.first != v) m.entries_.push_back(e);
    return m;
}

int Monomial::compare(const Ring& ring, const Monomial& a, const Monomial& b) {
    long da = a.weighted_degree(ring), db = b.weighted_degree(ring);
    if (da != db) return da < db ? -1 : 1;
    auto i = a.entries_.begin(), j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
        int c = ring.compare_vars(i->first, j->first);
        // The monomial holding the earlier variable has the larger lex order.
        if (c < 0) return 1;
        if (c > 0) return -1;
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i, ++j;
    }
    if (i != a.entries_.end()) return 1;
    if (j != b.entries_.end()) return -1;
    return 0;
}

std::string Monomial::str(const Ring& ring) const {
    if (entries_.empty()) return "1";
    std::string s;
    for (const Entry& e : entries_) {
        if (!s.empty()) s += '*';
        s += ring.name(e.first);
        if (e.second > 1) {
            s += '^';
            s += std::to_string(e.second);
        }
    }
    return s;
}

}  // namespace ctrace
