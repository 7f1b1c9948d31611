#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psh {

// Size limits for quotient and family-space computations. Exceeding a cap
// throws cap_error instead of silently truncating.
struct SizeLimits {
    std::size_t coend_items = 1000000;     // disjoint-union size for coends
    std::size_t family_space = 1000000;    // search space for end enumeration
    std::size_t hom_enumeration = 1000000; // fiber hom-set enumeration bound
};

struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant broke (non-natural canonical map, ill-defined induced
// action). This is a bug in the engine, never a failed law.
struct engine_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct parse_error : std::runtime_error {
    int line = 0;
    int col = 0;
    parse_error(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg), line(line_), col(col_) {}
};

} // namespace psh
