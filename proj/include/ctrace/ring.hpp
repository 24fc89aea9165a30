#ifndef CTRACE_RING_HPP
#define CTRACE_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctrace {

using VarId = std::uint32_t;

// A ring context: the set of named variables a family of polynomials lives
// over, together with a positive integer weight per variable (the grading).
//
// Variable names have the shape base + underscore-separated nonnegative
// integer indices: "x", "delta2", "x_1_2", "y_12_3". The total order on
// variables is lexicographic on (base, index tuple) and is intrinsic to the
// names, so interning more variables never reorders existing ones.
//
// Ring is a cheap shared handle; two polynomials may be combined only if
// they hold the same underlying context. Interning is not thread-safe:
// create all variables up front, then share freely across threads.
class Ring {
public:
    Ring();

    // Interns a variable (validating the name) or returns the existing id.
    VarId var(std::string_view name);
    VarId var(std::string_view name, long weight);

    std::optional<VarId> find(std::string_view name) const;
    const std::string& name(VarId v) const;
    long weight(VarId v) const;
    void set_weight(VarId v, long w);

    std::size_t var_count() const;

    // Intrinsic variable order; negative when a precedes b.
    int compare_vars(VarId a, VarId b) const;

    bool same_context(const Ring& other) const { return impl_ == other.impl_; }

    // True when `name` is a well-formed variable name for this grammar.
    static bool valid_name(std::string_view name);

private:
    struct VarInfo {
        std::string name;
        std::string base;
        std::vector<unsigned long> indices;
        long weight = 1;
        std::uint32_t rank = 0;  // position in the intrinsic order
    };
    struct Impl {
        std::vector<VarInfo> vars;
        std::map<std::string, VarId, std::less<>> by_name;
    };
    std::shared_ptr<Impl> impl_;

    void recompute_ranks();
};

}  // namespace ctrace

#endif
