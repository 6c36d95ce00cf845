#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steinhaus/bit_seq.hpp"

namespace steinhaus {

/**
 * Named sequence families with known triangle weights.
 *
 *  a1-a3  all-ones and its two rotations (minimum nonzero weight)
 *  b1-b6  period-2 patterns and their images (second level)
 *  c1-c6  period-4 patterns and their images (third level, even n)
 *  z1-z3  period-3 patterns 110/011/101 (maximum weight)
 *  u1-u9  period-3 patterns 100/001/010 and images, n = 0 mod 3
 *  v1-v6  period-3 patterns 100/010 and images, n = 2 mod 3
 *  e<k>   canonical basis vector with a single one at position k
 */
struct FamilyName {
    enum class Kind { A, B, C, Z, U, V, E };

    Kind kind = Kind::A;
    unsigned index = 1;  // 1-based member index, or k for E

    /// Lowercase identifier such as "b3" or "e13".
    std::string to_string() const;

    friend bool operator==(const FamilyName&, const FamilyName&) = default;
};

/// Case-insensitive parse of "a1", "B3", "e13", ...; throws std::invalid_argument.
FamilyName parse_family(std::string_view text);

/// Empty when valid, otherwise the violated condition.
std::optional<std::string> family_violation(const FamilyName& f, std::size_t n);

bool family_valid(const FamilyName& f, std::size_t n);

/// All family members defined at length n, in a fixed display order.
std::vector<FamilyName> families_at(std::size_t n);

/// The family sequence of length n; throws std::invalid_argument naming the violated condition.
BitSeq family_seq(const FamilyName& f, std::size_t n);

bool has_closed_form(const FamilyName& f, std::size_t n);

/// Closed-form |T(f^{(n)})|; throws std::invalid_argument when none is known.
std::size_t predicted_triangle_weight(const FamilyName& f, std::size_t n);

/// Which rung of the weight ladder w_0 < w_1 < ... < w_m.
struct Level {
    enum class Kind { fixed, top, below_top };

    Kind kind = Kind::fixed;
    unsigned index = 1;  // only for Kind::fixed

    static Level fixed(unsigned i) { return {Kind::fixed, i}; }
    static Level top() { return {Kind::top, 0}; }
    static Level below_top() { return {Kind::below_top, 0}; }

    /// "1", "2", "3", "m" or "m-1".
    std::string label() const;

    friend bool operator==(const Level&, const Level&) = default;
};

Level parse_level(std::string_view text);

enum class PredictionStatus { theorem, conjecture };

std::string to_string(PredictionStatus status);

struct LevelPrediction {
    Level level;
    std::size_t n = 0;
    std::size_t value = 0;
    std::vector<BitSeq> set;  // distinct, lexicographically sorted
    PredictionStatus status = PredictionStatus::theorem;
};

/**
 * Predicted w_i and W_i at length n.
 *
 * Lengths up to 4 come from the complete small-n classification. Beyond
 * that, each level is covered only on the ranges where a closed result
 * is known; anything else throws std::invalid_argument rather than
 * extrapolating.
 */
LevelPrediction predicted_level(Level level, std::size_t n);

/// Whether predicted_level(level, n) would succeed.
bool level_covered(Level level, std::size_t n);

}  // namespace steinhaus
