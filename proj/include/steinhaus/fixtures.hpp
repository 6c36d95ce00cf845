#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace steinhaus {

/**
 * One line of a golden-table fixture:
 *
 *     <n> <level> <w> <seq1> <seq2> ...
 *
 * `level` is a free label ("2", "m-1", "e4", "*"). Sequence tokens are
 * kept as text so that malformed entries in a transcribed table survive
 * parsing and can be reported. A tail token `count:<k>` records a set
 * size without listing members. `#` starts a comment.
 */
struct FixtureRecord {
    std::size_t n = 0;
    std::string level;
    std::size_t weight = 0;
    std::vector<std::string> sequences;
    std::optional<std::uint64_t> count;
    std::size_t line = 0;

    friend bool operator==(const FixtureRecord& a, const FixtureRecord& b) {
        return a.n == b.n && a.level == b.level && a.weight == b.weight && a.sequences == b.sequences &&
               a.count == b.count;
    }
};

/// Throws std::invalid_argument with the offending line number.
std::vector<FixtureRecord> parse_fixture(std::string_view text);

std::string format_fixture(const std::vector<FixtureRecord>& records);

std::vector<FixtureRecord> load_fixture_file(const std::filesystem::path& path);

/// Names of the fixtures compiled into the library.
std::vector<std::string> builtin_fixture_names();

/// Text of a compiled-in fixture; throws std::invalid_argument for unknown names.
std::string_view builtin_fixture_text(std::string_view name);

std::vector<FixtureRecord> builtin_fixture(std::string_view name);

}  // namespace steinhaus
