#pragma once

// Naive reference implementations on plain int vectors. They share no
// code with the library and favour obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "steinhaus/bit_seq.hpp"

namespace oracle {

using Seq = std::vector<int>;

inline Seq from_text(const std::string& s) {
    Seq v;
    for (char c : s) v.push_back(c == '1' ? 1 : 0);
    return v;
}

inline std::string to_text(const Seq& v) {
    std::string s;
    for (int b : v) s += b ? '1' : '0';
    return s;
}

inline Seq from_bits(std::uint64_t bits, std::size_t n) {
    Seq v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<int>((bits >> j) & 1);
    return v;
}

inline steinhaus::BitSeq to_bitseq(const Seq& v) { return steinhaus::from_string(to_text(v)); }

inline Seq derivative(const Seq& x) {
    Seq d;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) d.push_back((x[j] + x[j + 1]) % 2);
    return d;
}

inline std::vector<Seq> rows(const Seq& x) {
    std::vector<Seq> out;
    for (Seq r = x; !r.empty(); r = derivative(r)) out.push_back(r);
    return out;
}

inline std::size_t count_ones(const Seq& x) { return static_cast<std::size_t>(std::count(x.begin(), x.end(), 1)); }

inline std::size_t triangle_weight(const Seq& x) {
    std::size_t w = 0;
    for (const auto& r : rows(x)) w += count_ones(r);
    return w;
}

/// Last entry of every row.
inline Seq rot_r(const Seq& x) {
    Seq out;
    for (const auto& r : rows(x)) out.push_back(r.back());
    return out;
}

/// First entry of every row, bottom row first.
inline Seq rot_l(const Seq& x) {
    Seq out;
    const auto rs = rows(x);
    for (auto it = rs.rbegin(); it != rs.rend(); ++it) out.push_back(it->front());
    return out;
}

inline Seq reversed(Seq x) {
    std::reverse(x.begin(), x.end());
    return x;
}

/// Row j, entry l, read off Pascal's triangle mod 2.
inline int row_entry(const Seq& x, std::size_t j, std::size_t l) {
    std::vector<std::vector<int>> pascal(j + 1);
    for (std::size_t a = 0; a <= j; ++a) {
        pascal[a].assign(a + 1, 1);
        for (std::size_t b = 1; b < a; ++b) pascal[a][b] = (pascal[a - 1][b - 1] + pascal[a - 1][b]) % 2;
    }
    int acc = 0;
    for (std::size_t k = 0; k <= j; ++k) acc = (acc + pascal[j][k] * x[k + l]) % 2;
    return acc;
}

/// weight -> number of generators of length n.
inline std::map<std::size_t, std::uint64_t> spectrum(std::size_t n) {
    std::map<std::size_t, std::uint64_t> out;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) ++out[triangle_weight(from_bits(b, n))];
    return out;
}

/// All generators of length n with triangle weight w, in text order.
inline std::vector<std::string> with_weight(std::size_t n, std::size_t w) {
    std::vector<std::string> out;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const Seq x = from_bits(b, n);
        if (triangle_weight(x) == w) out.push_back(to_text(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t s3(const Seq& x) {
    const auto rs = rows(x);
    return count_ones(rs[0]) + count_ones(rs[1]) + count_ones(rs[2]);
}

}  // namespace oracle
