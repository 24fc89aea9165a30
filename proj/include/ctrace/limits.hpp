#ifndef CTRACE_LIMITS_HPP
#define CTRACE_LIMITS_HPP

#include <cstddef>

namespace ctrace {

// Guard against runaway term expansion. The cap counts nonzero
// term/matrix entries accumulated by one operation; exceeding it raises
// ResourceError instead of exhausting memory. CTRACE_MAX_TERMS in the
// environment overrides the default.
struct ResourceLimits {
    std::size_t max_terms = 2'000'000;
};

ResourceLimits& limits();

// Throws ResourceError if count exceeds the cap.
void guard_terms(std::size_t count, const char* where);

}  // namespace ctrace

#endif
