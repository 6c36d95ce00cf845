#include "steinhaus/bit_seq.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace steinhaus {

namespace {

void check_length(std::size_t n) {
    if (n > kMaxLength) {
        throw std::length_error("sequence length " + std::to_string(n) + " exceeds maximum " +
                                std::to_string(kMaxLength));
    }
}

}  // namespace

BitSeq::BitSeq(std::size_t n) {
    check_length(n);
    size_ = static_cast<std::uint32_t>(n);
}

BitSeq BitSeq::from_word(Word bits, std::size_t n) {
    if (n > kWordBits) {
        throw std::length_error("from_word supports at most 64 entries");
    }
    BitSeq x(n);
    x.words_[0] = bits;
    x.normalize();
    return x;
}

BitSeq BitSeq::from_words(const std::array<Word, kWords>& words, std::size_t n) {
    BitSeq x(n);
    x.words_ = words;
    x.normalize();
    return x;
}

BitSeq BitSeq::ones(std::size_t n) {
    BitSeq x(n);
    x.words_.fill(~Word{0});
    x.normalize();
    return x;
}

bool BitSeq::at(std::size_t j) const {
    if (j >= size_) {
        throw std::out_of_range("index " + std::to_string(j) + " out of range for length " +
                                std::to_string(size_));
    }
    return (*this)[j];
}

void BitSeq::set(std::size_t j, bool value) {
    if (j >= size_) {
        throw std::out_of_range("index " + std::to_string(j) + " out of range for length " +
                                std::to_string(size_));
    }
    const Word bit = Word{1} << (j % kWordBits);
    if (value) {
        words_[j / kWordBits] |= bit;
    } else {
        words_[j / kWordBits] &= ~bit;
    }
}

std::string BitSeq::to_string(char one, char zero) const {
    std::string s(size_, zero);
    for (std::size_t j = 0; j < size_; ++j) {
        if ((*this)[j]) s[j] = one;
    }
    return s;
}

BitSeq& BitSeq::operator^=(const BitSeq& other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("XOR of sequences with different lengths");
    }
    words_[0] ^= other.words_[0];
    words_[1] ^= other.words_[1];
    return *this;
}

void BitSeq::normalize() noexcept {
    for (std::size_t k = 0; k < kWords; ++k) {
        const std::size_t lo = k * kWordBits;
        if (size_ <= lo) {
            words_[k] = 0;
        } else if (size_ - lo < kWordBits) {
            words_[k] &= (Word{1} << (size_ - lo)) - 1;
        }
    }
}

std::ostream& operator<<(std::ostream& os, const BitSeq& x) { return os << x.to_string(); }

bool lex_less(const BitSeq& a, const BitSeq& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    // The first differing position decides; x_0 is the most significant one.
    for (std::size_t k = 0; k < BitSeq::kWords; ++k) {
        const BitSeq::Word diff = a.word(k) ^ b.word(k);
        if (diff != 0) {
            const auto j = static_cast<std::size_t>(std::countr_zero(diff));
            return ((b.word(k) >> j) & 1u) != 0;
        }
    }
    return false;
}

BitSeq from_string(std::string_view text) {
    check_length(text.size());
    BitSeq x(text.size());
    for (std::size_t j = 0; j < text.size(); ++j) {
        const char c = text[j];
        if (c == '1') {
            x.set(j);
        } else if (c != '0') {
            throw std::invalid_argument("invalid character '" + std::string(1, c) +
                                        "' in sequence \"" + std::string(text) + "\"");
        }
    }
    return x;
}

BitSeq from_pattern(const BitSeq& pattern, std::size_t n) {
    if (pattern.empty()) throw std::invalid_argument("empty repetition pattern");
    BitSeq x(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (pattern[j % pattern.size()]) x.set(j);
    }
    return x;
}

BitSeq from_pattern(std::string_view pattern, std::size_t n) {
    return from_pattern(from_string(pattern), n);
}

BitSeq concat(const BitSeq& a, const BitSeq& b) {
    BitSeq x(a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j]) x.set(j);
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j]) x.set(a.size() + j);
    }
    return x;
}

BitSeq derivative(const BitSeq& x) {
    if (x.empty()) throw std::invalid_argument("derivative of the empty sequence");
    const std::size_t n = x.size();
    const BitSeq::Word lo = x.word(0) ^ ((x.word(0) >> 1) | (x.word(1) << 63));
    const BitSeq::Word hi = x.word(1) ^ (x.word(1) >> 1);
    // Position n-1 holds x_{n-1} XOR 0; the length-(n-1) mask drops it.
    return BitSeq::from_words({lo, hi}, n - 1);
}

BitSeq derivative_k(const BitSeq& x, std::size_t k) {
    if (k > x.size()) {
        throw std::invalid_argument("derivative order " + std::to_string(k) +
                                    " exceeds length " + std::to_string(x.size()));
    }
    BitSeq d = x;
    for (std::size_t i = 0; i < k; ++i) d = derivative(d);
    return d;
}

std::pair<BitSeq, BitSeq> primitives(const BitSeq& y) {
    const std::size_t n = y.size() + 1;
    BitSeq x0(n);
    bool acc = false;
    for (std::size_t j = 0; j < y.size(); ++j) {
        acc ^= y[j];
        if (acc) x0.set(j + 1);
    }
    return {x0, x0 ^ BitSeq::ones(n)};
}

bool row_entry(const BitSeq& x, std::size_t j, std::size_t l) {
    const std::size_t n = x.size();
    if (j >= n || l > n - 1 - j) {
        throw std::out_of_range("row_entry(" + std::to_string(j) + ", " + std::to_string(l) +
                                ") out of range for length " + std::to_string(n));
    }
    bool acc = false;
    // Enumerate the submasks k of j, including 0.
    for (std::size_t k = j;; k = (k - 1) & j) {
        acc ^= x[k + l];
        if (k == 0) break;
    }
    return acc;
}

std::size_t BitSeqHash::operator()(const BitSeq& x) const noexcept {
    std::size_t h = x.size();
    for (auto w : x.words()) {
        h ^= std::hash<BitSeq::Word>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace steinhaus
