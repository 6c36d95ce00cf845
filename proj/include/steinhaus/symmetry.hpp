#pragma once

#include <cstddef>
#include <vector>

#include "steinhaus/bit_seq.hpp"

namespace steinhaus {

// The six maps {id, r, l, i, ri, li} act on generators by rotating or
// mirroring the drawn triangle; all of them preserve triangle weight.

/// Entry j is the last entry of row j (clockwise 120 degree rotation).
BitSeq rot_r(const BitSeq& x);

/// Entry j is the first entry of row n-1-j (240 degree rotation); inverse of rot_r.
BitSeq rot_l(const BitSeq& x);

/// x read right to left.
BitSeq invert_i(const BitSeq& x);

/// Equivalence class of a sequence under the six maps.
struct Orbit {
    std::vector<BitSeq> members;  // distinct, lexicographically sorted
    BitSeq canonical;             // members.front()

    std::size_t size() const noexcept { return members.size(); }
    bool contains(const BitSeq& x) const;
};

/// The six images {x, r(x), l(x), i(x), r(i(x)), l(i(x))} in that order, not deduplicated.
std::vector<BitSeq> images(const BitSeq& x);

Orbit orbit(const BitSeq& x);

/// Lexicographically least member of the orbit, x_0 most significant.
BitSeq canonical(const BitSeq& x);

}  // namespace steinhaus
