#include "ctrace/ring.hpp"

#include <algorithm>
#include <cctype>

#include "ctrace/errors.hpp"

namespace ctrace {

namespace {

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Splits "x_1_2" into base "x" and indices {1, 2}. Returns false when the
// name is not base + underscore-separated nonnegative integers.
bool decompose(std::string_view name, std::string& base, std::vector<unsigned long>& indices) {
    if (name.empty() || !is_letter(name[0])) return false;
    std::size_t i = 0;
    while (i < name.size() && (is_letter(name[i]) || is_digit(name[i]))) ++i;
    base.assign(name.substr(0, i));
    indices.clear();
    while (i < name.size()) {
        if (name[i] != '_') return false;
        ++i;
        std::size_t start = i;
        while (i < name.size() && is_digit(name[i])) ++i;
        if (i == start) return false;
        indices.push_back(std::stoul(std::string(name.substr(start, i - start))));
    }
    return true;
}

}  // namespace

Ring::Ring() : impl_(std::make_shared<Impl>()) {}

bool Ring::valid_name(std::string_view name) {
    std::string base;
    std::vector<unsigned long> idx;
    return decompose(name, base, idx);
}

VarId Ring::var(std::string_view name) {
    if (auto v = find(name)) return *v;
    VarInfo info;
    if (!decompose(name, info.base, info.indices))
        throw ParseError("invalid variable name '" + std::string(name) + "'", 0);
    info.name.assign(name);
    VarId id = static_cast<VarId>(impl_->vars.size());
    impl_->by_name.emplace(info.name, id);
    impl_->vars.push_back(std::move(info));
    recompute_ranks();
    return id;
}

VarId Ring::var(std::string_view name, long weight) {
    VarId id = var(name);
    set_weight(id, weight);
    return id;
}

std::optional<VarId> Ring::find(std::string_view name) const {
    auto it = impl_->by_name.find(name);
    if (it == impl_->by_name.end()) return std::nullopt;
    return it->second;
}

const std::string& Ring::name(VarId v) const { return impl_->vars.at(v).name; }

long Ring::weight(VarId v) const { return impl_->vars.at(v).weight; }

void Ring::set_weight(VarId v, long w) {
    if (w <= 0) throw BoundsError("variable weights must be positive");
    impl_->vars.at(v).weight = w;
}

std::size_t Ring::var_count() const { return impl_->vars.size(); }

int Ring::compare_vars(VarId a, VarId b) const {
    std::uint32_t ra = impl_->vars.at(a).rank, rb = impl_->vars.at(b).rank;
    return ra < rb ? -1 : (ra > rb ? 1 : 0);
}

void Ring::recompute_ranks() {
    std::vector<VarId> ids(impl_->vars.size());
    for (VarId v = 0; v < ids.size(); ++v) ids[v] = v;
    std::sort(ids.begin(), ids.end(), [&](VarId a, VarId b) {
        const VarInfo& va = impl_->vars[a];
        const VarInfo& vb = impl_->vars[b];
        if (va.base != vb.base) return va.base < vb.base;
        return va.indices < vb.indices;
    });
    for (std::uint32_t r = 0; r < ids.size(); ++r) impl_->vars[ids[r]].rank = r;
}

}  // namespace ctrace
