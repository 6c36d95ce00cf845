#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace steinhaus {

/// Longest sequence a BitSeq can hold.
inline constexpr std::size_t kMaxLength = 128;

/**
 * A binary sequence x = x_0 x_1 ... x_{n-1} packed LSB-first into two
 * 64-bit words: bit j of the container is x_j.
 *
 * Bits at positions >= n are always zero, so equality and hashing can
 * work on the raw words.
 */
class BitSeq {
  public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;
    static constexpr std::size_t kWords = kMaxLength / kWordBits;

    BitSeq() = default;

    /// All-zero sequence of length n.
    explicit BitSeq(std::size_t n);

    /// Sequence of length n <= 64 whose bit j is bit j of `bits`.
    static BitSeq from_word(Word bits, std::size_t n);

    /// Sequence of length n built from raw words; bits past n are cleared.
    static BitSeq from_words(const std::array<Word, kWords>& words, std::size_t n);

    static BitSeq zeros(std::size_t n) { return BitSeq(n); }
    static BitSeq ones(std::size_t n);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    /// Unchecked access.
    bool operator[](std::size_t j) const noexcept {
        return (words_[j / kWordBits] >> (j % kWordBits)) & 1u;
    }

    /// Checked access; throws std::out_of_range.
    bool at(std::size_t j) const;

    void set(std::size_t j, bool value = true);

    Word word(std::size_t k) const noexcept { return words_[k]; }
    const std::array<Word, kWords>& words() const noexcept { return words_; }

    /// Number of ones.
    std::size_t weight() const noexcept {
        return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
    }

    /// x_0 first.
    std::string to_string(char one = '1', char zero = '0') const;

    BitSeq& operator^=(const BitSeq& other);
    friend BitSeq operator^(BitSeq a, const BitSeq& b) { return a ^= b; }

    friend bool operator==(const BitSeq&, const BitSeq&) = default;

  private:
    void normalize() noexcept;

    std::uint32_t size_ = 0;
    std::array<Word, kWords> words_{};
};

std::ostream& operator<<(std::ostream& os, const BitSeq& x);

/// Lexicographic order of the text rendering. Shorter sequences sort first.
bool lex_less(const BitSeq& a, const BitSeq& b) noexcept;

struct LexLess {
    bool operator()(const BitSeq& a, const BitSeq& b) const noexcept { return lex_less(a, b); }
};

/// Parses a word of '0'/'1' characters; the leftmost character is x_0.
BitSeq from_string(std::string_view text);

/// First n entries of the infinite repetition of `pattern`.
BitSeq from_pattern(const BitSeq& pattern, std::size_t n);
BitSeq from_pattern(std::string_view pattern, std::size_t n);

BitSeq concat(const BitSeq& a, const BitSeq& b);

inline std::size_t weight(const BitSeq& x) noexcept { return x.weight(); }

/// (x_0+x_1, x_1+x_2, ..., x_{n-2}+x_{n-1}); requires n >= 1.
BitSeq derivative(const BitSeq& x);

/// k-fold derivative, 0 <= k <= n.
BitSeq derivative_k(const BitSeq& x, std::size_t k);

/// The two sequences whose derivative is y. The first one starts with 0.
std::pair<BitSeq, BitSeq> primitives(const BitSeq& y);

/**
 * Entry l of row j of the triangle, evaluated directly from x as the
 * XOR of x_{k+l} over the k with C(j,k) odd. By Lucas' theorem C(j,k)
 * is odd exactly when the bits of k are a subset of the bits of j.
 */
bool row_entry(const BitSeq& x, std::size_t j, std::size_t l);

struct BitSeqHash {
    std::size_t operator()(const BitSeq& x) const noexcept;
};

}  // namespace steinhaus
