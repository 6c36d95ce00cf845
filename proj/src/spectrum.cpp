#include "steinhaus/spectrum.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "steinhaus/detail/word_kernels.hpp"

namespace steinhaus {

namespace {

using detail::Word;

std::size_t max_weight(std::size_t n) { return n * (n + 1) / 2; }

/**
 * Splits [0, 2^n) into one contiguous block per worker, runs
 * `visit(state, begin, end)` on each block, and merges the per-worker
 * states in block order. Merging only starts once every worker is done.
 */
template <class State, class Make, class Visit, class Merge>
State run_blocks(std::size_t n, unsigned workers, Make make, Visit visit, Merge merge) {
    const Word total = Word{1} << n;
    const Word blocks = std::max<Word>(1, std::min<Word>(workers, total));
    std::vector<State> states;
    states.reserve(static_cast<std::size_t>(blocks));
    for (Word b = 0; b < blocks; ++b) states.push_back(make());

    auto bounds = [&](Word b) { return total / blocks * b + std::min(b, total % blocks); };
    if (blocks == 1) {
        visit(states[0], Word{0}, total);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(static_cast<std::size_t>(blocks));
        for (Word b = 0; b < blocks; ++b) {
            threads.emplace_back([&, b] { visit(states[b], bounds(b), bounds(b + 1)); });
        }
    }
    State merged = std::move(states[0]);
    for (std::size_t b = 1; b < states.size(); ++b) merge(merged, std::move(states[b]));
    return merged;
}

WeightSpectrum finish(std::size_t n, std::vector<std::uint64_t> counts) {
    WeightSpectrum s;
    s.n = n;
    s.counts = std::move(counts);
    for (std::size_t w = 0; w < s.counts.size(); ++w) {
        if (s.counts[w] != 0) s.levels.push_back(w);
    }
    return s;
}

void add_into(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
    for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

std::vector<BitSeq> to_sorted_seqs(const std::vector<Word>& words, std::size_t n) {
    std::vector<BitSeq> out;
    out.reserve(words.size());
    for (Word w : words) out.push_back(BitSeq::from_word(w, n));
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

// Per-worker captured members, one bucket per requested weight.
struct Capture {
    std::vector<std::vector<Word>> buckets;
    std::vector<std::uint64_t> seen;
};

/// Collects members for each weight in `weights` in one enumeration pass.
std::vector<LevelSet> capture_weights(std::size_t n, const std::vector<std::size_t>& weights,
                                      const EnumerationOptions& options) {
    const unsigned un = static_cast<unsigned>(n);
    std::vector<int> slot(max_weight(n) + 1, -1);
    for (std::size_t i = 0; i < weights.size(); ++i) slot[weights[i]] = static_cast<int>(i);
    const std::size_t cap = options.capture_cap;

    Capture merged = run_blocks<Capture>(
        n, resolve_workers(options.workers),
        [&] {
            return Capture{std::vector<std::vector<Word>>(weights.size()),
                           std::vector<std::uint64_t>(weights.size(), 0)};
        },
        [&](Capture& c, Word begin, Word end) {
            for (Word x = begin; x < end; ++x) {
                const int s = slot[detail::triangle_weight(x, un)];
                if (s < 0) continue;
                ++c.seen[s];
                if (c.buckets[s].size() < cap) c.buckets[s].push_back(x);
            }
        },
        [&](Capture& into, Capture&& from) {
            for (std::size_t s = 0; s < into.buckets.size(); ++s) {
                into.seen[s] += from.seen[s];
                for (Word x : from.buckets[s]) {
                    if (into.buckets[s].size() >= cap) break;
                    into.buckets[s].push_back(x);
                }
            }
        });

    std::vector<LevelSet> out(weights.size());
    for (std::size_t s = 0; s < weights.size(); ++s) {
        out[s].weight = weights[s];
        out[s].count = merged.seen[s];
        out[s].members = to_sorted_seqs(merged.buckets[s], n);
        out[s].truncated = merged.seen[s] > out[s].members.size();
    }
    return out;
}

}  // namespace

std::uint64_t WeightSpectrum::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

void check_enumeration_size(std::size_t n, const EnumerationOptions& options) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > kEnumerationHardLimit) {
        throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the hard enumeration limit " +
                                    std::to_string(kEnumerationHardLimit));
    }
    if (n > options.ceiling && !options.force) {
        throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the enumeration ceiling " +
                                    std::to_string(options.ceiling) + " (use force to override)");
    }
}

unsigned resolve_workers(unsigned requested) noexcept {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

WeightSpectrum full_spectrum(std::size_t n, const EnumerationOptions& options) {
    check_enumeration_size(n, options);
    const unsigned un = static_cast<unsigned>(n);
    const std::size_t size = max_weight(n) + 1;
    auto counts = run_blocks<std::vector<std::uint64_t>>(
        n, resolve_workers(options.workers), [&] { return std::vector<std::uint64_t>(size, 0); },
        [&](std::vector<std::uint64_t>& hist, Word begin, Word end) {
            for (Word x = begin; x < end; ++x) ++hist[detail::triangle_weight(x, un)];
        },
        [](std::vector<std::uint64_t>& into, std::vector<std::uint64_t>&& from) { add_into(into, from); });
    return finish(n, std::move(counts));
}

WeightSpectrum symmetry_reduced_spectrum(std::size_t n, const EnumerationOptions& options) {
    check_enumeration_size(n, options);
    const unsigned un = static_cast<unsigned>(n);
    const std::size_t size = max_weight(n) + 1;
    auto counts = run_blocks<std::vector<std::uint64_t>>(
        n, resolve_workers(options.workers), [&] { return std::vector<std::uint64_t>(size, 0); },
        [&](std::vector<std::uint64_t>& hist, Word begin, Word end) {
            for (Word x = begin; x < end; ++x) {
                const Word ix = detail::reverse(x, un);
                const std::array<Word, 6> img = {x,  detail::rot_r(x, un),  detail::rot_l(x, un),
                                                  ix, detail::rot_r(ix, un), detail::rot_l(ix, un)};
                // Text order with x_0 most significant is integer order of the reversal.
                const Word key = ix;
                bool is_canonical = true;
                for (std::size_t k = 1; k < img.size() && is_canonical; ++k) {
                    if (detail::reverse(img[k], un) < key) is_canonical = false;
                }
                if (!is_canonical) continue;
                std::array<Word, 6> distinct = img;
                std::sort(distinct.begin(), distinct.end());
                const auto orbit_size = static_cast<std::uint64_t>(
                    std::unique(distinct.begin(), distinct.end()) - distinct.begin());
                hist[detail::triangle_weight(x, un)] += orbit_size;
            }
        },
        [](std::vector<std::uint64_t>& into, std::vector<std::uint64_t>&& from) { add_into(into, from); });
    return finish(n, std::move(counts));
}

std::vector<LevelSet> level_sets(const WeightSpectrum& spectrum, const std::vector<std::size_t>& indices,
                                 const EnumerationOptions& options) {
    const std::size_t m = spectrum.top_index();
    for (auto i : indices) {
        if (i > m) {
            throw std::invalid_argument("level index " + std::to_string(i) + " exceeds m(" +
                                        std::to_string(spectrum.n) + ")=" + std::to_string(m));
        }
    }
    std::vector<std::size_t> unique_indices = indices;
    std::sort(unique_indices.begin(), unique_indices.end());
    unique_indices.erase(std::unique(unique_indices.begin(), unique_indices.end()), unique_indices.end());
    std::vector<std::size_t> weights;
    for (auto i : unique_indices) weights.push_back(spectrum.levels[i]);

    auto sets = capture_weights(spectrum.n, weights, options);
    for (std::size_t s = 0; s < sets.size(); ++s) sets[s].index = unique_indices[s];
    std::vector<LevelSet> out;
    out.reserve(indices.size());
    for (auto i : indices) {
        const auto pos = std::lower_bound(unique_indices.begin(), unique_indices.end(), i);
        out.push_back(sets[static_cast<std::size_t>(pos - unique_indices.begin())]);
    }
    return out;
}

LadderEnds ladder_ends(std::size_t n, std::size_t k_low, std::size_t k_high, const EnumerationOptions& options) {
    LadderEnds ends;
    ends.spectrum = full_spectrum(n, options);
    const std::size_t m = ends.spectrum.top_index();
    if (k_low > m) {
        throw std::invalid_argument("requested " + std::to_string(k_low) + " low levels but m(" +
                                    std::to_string(n) + ")=" + std::to_string(m));
    }
    if (k_high > m) {
        throw std::invalid_argument("requested " + std::to_string(k_high) + " high levels but m(" +
                                    std::to_string(n) + ")=" + std::to_string(m));
    }
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i <= k_low; ++i) indices.push_back(i);
    for (std::size_t j = 0; j < k_high; ++j) indices.push_back(m - j);
    auto sets = level_sets(ends.spectrum, indices, options);
    ends.low.assign(sets.begin(), sets.begin() + static_cast<std::ptrdiff_t>(k_low + 1));
    ends.high.assign(sets.begin() + static_cast<std::ptrdiff_t>(k_low + 1), sets.end());
    return ends;
}

std::vector<LevelSet> level_sets_low(std::size_t n, std::size_t k, const EnumerationOptions& options) {
    if (k < 1) throw std::invalid_argument("level_sets_low needs k >= 1");
    return ladder_ends(n, k, 0, options).low;
}

std::vector<LevelSet> level_sets_high(std::size_t n, std::size_t k, const EnumerationOptions& options) {
    if (k < 1) throw std::invalid_argument("level_sets_high needs k >= 1");
    return ladder_ends(n, 0, k, options).high;
}

WeightSearch find_weight(std::size_t n, std::size_t w, const EnumerationOptions& options) {
    check_enumeration_size(n, options);
    if (w > max_weight(n)) {
        throw std::invalid_argument("weight " + std::to_string(w) + " exceeds n(n+1)/2 for n=" + std::to_string(n));
    }
    const auto sets = capture_weights(n, {w}, options);
    return {sets[0].members, sets[0].count, sets[0].truncated};
}

S3Maximum s3_maximum(std::size_t n, const EnumerationOptions& options) {
    check_enumeration_size(n, options);
    if (n < 3) throw std::invalid_argument("s3 needs n >= 3");
    const unsigned un = static_cast<unsigned>(n);
    const std::size_t cap = options.capture_cap;
    struct Best {
        unsigned max = 0;
        std::uint64_t count = 0;
        std::vector<Word> argmax;
    };
    Best best = run_blocks<Best>(
        n, resolve_workers(options.workers), [] { return Best{}; },
        [&](Best& b, Word begin, Word end) {
            for (Word x = begin; x < end; ++x) {
                const unsigned v = detail::s3(x, un);
                if (v > b.max) {
                    b.max = v;
                    b.count = 0;
                    b.argmax.clear();
                }
                if (v == b.max) {
                    ++b.count;
                    if (b.argmax.size() < cap) b.argmax.push_back(x);
                }
            }
        },
        [&](Best& into, Best&& from) {
            if (from.max > into.max) {
                into = std::move(from);
            } else if (from.max == into.max) {
                into.count += from.count;
                for (Word x : from.argmax) {
                    if (into.argmax.size() >= cap) break;
                    into.argmax.push_back(x);
                }
            }
        });
    S3Maximum out;
    out.n = n;
    out.max = best.max;
    out.argmax.members = to_sorted_seqs(best.argmax, n);
    out.argmax.count = best.count;
    out.argmax.truncated = best.count > out.argmax.members.size();
    return out;
}

}  // namespace steinhaus
