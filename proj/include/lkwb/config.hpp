#ifndef LKWB_CONFIG_HPP
#define LKWB_CONFIG_HPP

#include <atomic>
#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace lkwb {

namespace detail {
inline std::atomic<long>& exponent_bound_storage() {
    static std::atomic<long> bound = [] {
        long b = 1L << 16;
        if (const char* env = std::getenv("LKWB_MAX_DEGREE")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) b = v;
        }
        return b;
    }();
    return bound;
}
}  // namespace detail

/// Largest |exponent| allowed in Laurent monomials. Defaults to 2^16 and can be
/// overridden by the LKWB_MAX_DEGREE environment variable.
inline long exponent_bound() { return detail::exponent_bound_storage().load(std::memory_order_relaxed); }

inline void set_exponent_bound(long b) { detail::exponent_bound_storage().store(b, std::memory_order_relaxed); }

inline long checked_exponent(long e) {
    long b = exponent_bound();
    if (e > b || e < -b)
        throw Error(ErrorKind::ExponentOverflow, "exponent " + std::to_string(e) + " exceeds bound " + std::to_string(b));
    return e;
}

}  // namespace lkwb

#endif
