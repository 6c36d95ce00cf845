#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "steinhaus/bit_seq.hpp"

namespace steinhaus {

/// Materialized Steinhaus triangle: rows x, dx, ..., d^{n-1}x.
struct Triangle {
    std::vector<BitSeq> rows;

    std::size_t size() const noexcept { return rows.size(); }
    std::size_t entry_count() const noexcept { return size() * (size() + 1) / 2; }
    std::size_t weight() const noexcept;
};

Triangle build(const BitSeq& x);

/// Number of ones in T(x), streamed row by row without materializing.
std::size_t triangle_weight(const BitSeq& x);

/// The k consecutive entries of row j starting at `start`.
BitSeq subtriangle_generator(const BitSeq& x, std::size_t row, std::size_t start, std::size_t k);

/// |x| + |dx| + |d^2 x|; requires n >= 3.
std::size_t s3(const BitSeq& x);

struct RenderOptions {
    char one = '1';
    char zero = '.';
};

/// Centered text pyramid, one row per line, x on top.
std::string render(const BitSeq& x, const RenderOptions& options = {});

}  // namespace steinhaus
