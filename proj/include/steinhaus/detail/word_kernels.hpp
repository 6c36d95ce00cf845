#pragma once

// Single-word kernels for sequences of length n <= 64. The enumeration
// engine calls these 2^n times, so they stay inline and branch-light.

#include <bit>
#include <cstdint>

namespace steinhaus::detail {

using Word = std::uint64_t;

constexpr Word low_mask(unsigned len) noexcept {
    return len >= 64 ? ~Word{0} : (Word{1} << len) - 1;
}

/// One derivative step. `len` is the length of x; the result has len-1 bits.
constexpr Word derive(Word x, unsigned len) noexcept {
    return (x ^ (x >> 1)) & low_mask(len - 1);
}

constexpr unsigned triangle_weight(Word x, unsigned n) noexcept {
    unsigned total = 0;
    for (unsigned len = n; len > 0 && x != 0; --len) {
        total += static_cast<unsigned>(std::popcount(x));
        x = derive(x, len);
    }
    return total;
}

constexpr unsigned s3(Word x, unsigned n) noexcept {
    unsigned total = 0;
    for (unsigned len = n; len + 3 > n && len > 0; --len) {
        total += static_cast<unsigned>(std::popcount(x));
        x = derive(x, len);
    }
    return total;
}

/// Entry j = last entry of row j.
constexpr Word rot_r(Word x, unsigned n) noexcept {
    Word out = 0;
    for (unsigned j = 0; j < n; ++j) {
        const unsigned len = n - j;
        out |= ((x >> (len - 1)) & 1u) << j;
        x = derive(x, len);
    }
    return out;
}

/// Entry j = first entry of row n-1-j.
constexpr Word rot_l(Word x, unsigned n) noexcept {
    Word out = 0;
    for (unsigned row = 0; row < n; ++row) {
        out |= (x & 1u) << (n - 1 - row);
        x = derive(x, n - row);
    }
    return out;
}

constexpr Word reverse64(Word x) noexcept {
    x = ((x >> 1) & 0x5555555555555555ull) | ((x & 0x5555555555555555ull) << 1);
    x = ((x >> 2) & 0x3333333333333333ull) | ((x & 0x3333333333333333ull) << 2);
    x = ((x >> 4) & 0x0F0F0F0F0F0F0F0Full) | ((x & 0x0F0F0F0F0F0F0F0Full) << 4);
    x = ((x >> 8) & 0x00FF00FF00FF00FFull) | ((x & 0x00FF00FF00FF00FFull) << 8);
    x = ((x >> 16) & 0x0000FFFF0000FFFFull) | ((x & 0x0000FFFF0000FFFFull) << 16);
    return (x >> 32) | (x << 32);
}

/// Reversal within n bits (n >= 1).
constexpr Word reverse(Word x, unsigned n) noexcept {
    return n == 0 ? 0 : reverse64(x) >> (64 - n);
}

}  // namespace steinhaus::detail
