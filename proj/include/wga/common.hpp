#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wga {

struct division_by_zero_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct non_unit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct context_mismatch_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Subsets of the generator set are bitmasks over generator indices 0..rank-1.
using Subset = std::uint32_t;

inline int popcount(Subset s) { return __builtin_popcount(s); }

inline bool contains(Subset set, int i) { return (set >> i) & 1u; }

inline std::vector<int> subset_members(Subset s) {
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

}  // namespace wga
