#include "steinhaus/fixtures.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fixtures_data.hpp"

namespace steinhaus {

namespace {

template <class T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("fixture line " + std::to_string(line) + ": invalid " + what + " \"" +
                                    std::string(token) + "\"");
    }
    return value;
}

}  // namespace

std::vector<FixtureRecord> parse_fixture(std::string_view text) {
    std::vector<FixtureRecord> records;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        if (tokens.size() < 3) {
            throw std::invalid_argument("fixture line " + std::to_string(line_no) +
                                        ": expected <n> <level> <w> [sequences...]");
        }
        FixtureRecord r;
        r.line = line_no;
        r.n = parse_number<std::size_t>(tokens[0], line_no, "length");
        r.level = tokens[1];
        r.weight = parse_number<std::size_t>(tokens[2], line_no, "weight");
        for (std::size_t i = 3; i < tokens.size(); ++i) {
            std::string_view t = tokens[i];
            if (t.starts_with("count:")) {
                r.count = parse_number<std::uint64_t>(t.substr(6), line_no, "count");
            } else if (t.find_first_not_of("01") == std::string_view::npos) {
                r.sequences.emplace_back(t);
            } else {
                throw std::invalid_argument("fixture line " + std::to_string(line_no) + ": bad token \"" +
                                            std::string(t) + "\"");
            }
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::string format_fixture(const std::vector<FixtureRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += std::to_string(r.n) + ' ' + r.level + ' ' + std::to_string(r.weight);
        for (const auto& s : r.sequences) out += ' ' + s;
        if (r.count) out += " count:" + std::to_string(*r.count);
        out += '\n';
    }
    return out;
}

std::vector<FixtureRecord> load_fixture_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture(buf.str());
}

std::vector<std::string> builtin_fixture_names() {
    std::vector<std::string> names;
    for (const auto& f : detail::kFixtures) names.emplace_back(f.name);
    return names;
}

std::string_view builtin_fixture_text(std::string_view name) {
    for (const auto& f : detail::kFixtures) {
        if (f.name == name) return f.text;
    }
    throw std::invalid_argument("unknown fixture \"" + std::string(name) + "\"");
}

std::vector<FixtureRecord> builtin_fixture(std::string_view name) {
    return parse_fixture(builtin_fixture_text(name));
}

}  // namespace steinhaus
