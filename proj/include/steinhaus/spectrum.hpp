#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "steinhaus/bit_seq.hpp"

namespace steinhaus {

/// Default upper bound on n for exhaustive runs (about 10^9 triangles).
inline constexpr std::size_t kDefaultEnumerationCeiling = 30;

/// Hard limit: enumeration counters are 64-bit.
inline constexpr std::size_t kEnumerationHardLimit = 40;

inline constexpr std::size_t kDefaultCaptureCap = 4096;

struct EnumerationOptions {
    unsigned workers = 0;  // 0 = hardware concurrency
    std::size_t ceiling = kDefaultEnumerationCeiling;
    bool force = false;  // allow n above the ceiling (never above the hard limit)
    std::size_t capture_cap = kDefaultCaptureCap;
};

/// Weight histogram of all 2^n triangles of size n.
struct WeightSpectrum {
    std::size_t n = 0;
    std::vector<std::uint64_t> counts;  // indexed by weight, 0..n(n+1)/2
    std::vector<std::size_t> levels;    // weights with nonzero count, ascending

    /// m(n): index of the top level.
    std::size_t top_index() const noexcept { return levels.empty() ? 0 : levels.size() - 1; }
    std::size_t level_weight(std::size_t i) const { return levels.at(i); }
    std::uint64_t total() const noexcept;

    friend bool operator==(const WeightSpectrum&, const WeightSpectrum&) = default;
};

/// W_i: the generators whose triangles have weight w_i.
struct LevelSet {
    std::size_t index = 0;
    std::size_t weight = 0;
    std::uint64_t count = 0;       // exact size of W_i
    std::vector<BitSeq> members;   // lexicographically sorted, at most capture_cap
    bool truncated = false;

    friend bool operator==(const LevelSet&, const LevelSet&) = default;
};

struct WeightSearch {
    std::vector<BitSeq> members;  // lexicographically sorted
    std::uint64_t count = 0;
    bool truncated = false;
};

/// Throws std::invalid_argument when n is outside [1, ceiling] (or the hard limit with force).
void check_enumeration_size(std::size_t n, const EnumerationOptions& options);

unsigned resolve_workers(unsigned requested) noexcept;

WeightSpectrum full_spectrum(std::size_t n, const EnumerationOptions& options = {});

/// Same histogram, enumerating only canonical orbit representatives.
WeightSpectrum symmetry_reduced_spectrum(std::size_t n, const EnumerationOptions& options = {});

/// W_0, W_1, ..., W_k.
std::vector<LevelSet> level_sets_low(std::size_t n, std::size_t k, const EnumerationOptions& options = {});

/// W_m, W_{m-1}, ..., W_{m-k+1}.
std::vector<LevelSet> level_sets_high(std::size_t n, std::size_t k, const EnumerationOptions& options = {});

/// W_i for each requested index of an existing spectrum, in request order, from one capture pass.
/// Throws std::invalid_argument for an index above m(n).
std::vector<LevelSet> level_sets(const WeightSpectrum& spectrum, const std::vector<std::size_t>& indices,
                                 const EnumerationOptions& options = {});

/// Both ends of the ladder from one spectrum pass plus one capture pass.
struct LadderEnds {
    WeightSpectrum spectrum;
    std::vector<LevelSet> low;   // W_0..W_k_low
    std::vector<LevelSet> high;  // W_m..W_{m-k_high+1}
};

LadderEnds ladder_ends(std::size_t n, std::size_t k_low, std::size_t k_high,
                       const EnumerationOptions& options = {});

/// All x of length n with |T(x)| = w.
WeightSearch find_weight(std::size_t n, std::size_t w, const EnumerationOptions& options = {});

/// max s3(x) over all x of length n, and the sequences attaining it.
struct S3Maximum {
    std::size_t n = 0;
    std::size_t max = 0;
    WeightSearch argmax;
};

S3Maximum s3_maximum(std::size_t n, const EnumerationOptions& options = {});

}  // namespace steinhaus
