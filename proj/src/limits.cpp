#include "ctrace/limits.hpp"

#include <cstdlib>
#include <string>

#include "ctrace/errors.hpp"

namespace ctrace {

static ResourceLimits make_limits() {
    ResourceLimits l;
    if (const char* env = std::getenv("CTRACE_MAX_TERMS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) l.max_terms = static_cast<std::size_t>(v);
    }
    return l;
}

ResourceLimits& limits() {
    static ResourceLimits l = make_limits();
    return l;
}

void guard_terms(std::size_t count, const char* where) {
    if (count > limits().max_terms)
        throw ResourceError(std::string(where) + ": term expansion exceeds cap of " +
                            std::to_string(limits().max_terms) + " (set CTRACE_MAX_TERMS to raise)");
}

}  // namespace ctrace
