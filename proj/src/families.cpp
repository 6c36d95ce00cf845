#include "steinhaus/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace steinhaus {

namespace {

using Kind = FamilyName::Kind;

constexpr std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

unsigned member_count(Kind kind) {
    switch (kind) {
        case Kind::A: return 3;
        case Kind::B: return 6;
        case Kind::C: return 6;
        case Kind::Z: return 3;
        case Kind::U: return 9;
        case Kind::V: return 6;
        case Kind::E: return 0;
    }
    return 0;
}

char kind_letter(Kind kind) {
    switch (kind) {
        case Kind::A: return 'a';
        case Kind::B: return 'b';
        case Kind::C: return 'c';
        case Kind::Z: return 'z';
        case Kind::U: return 'u';
        case Kind::V: return 'v';
        case Kind::E: return 'e';
    }
    return '?';
}

BitSeq zeros(std::size_t n) { return BitSeq::zeros(n); }
BitSeq word(std::string_view s) { return from_string(s); }
BitSeq rep(std::string_view p, std::size_t n) { return from_pattern(p, n); }

std::vector<BitSeq> sorted_unique(std::vector<BitSeq> v) {
    std::sort(v.begin(), v.end(), LexLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<BitSeq> members(Kind kind, std::initializer_list<unsigned> indices, std::size_t n) {
    std::vector<BitSeq> out;
    for (unsigned i : indices) out.push_back(family_seq({kind, i}, n));
    return out;
}

std::vector<BitSeq> all_members(Kind kind, std::size_t n) {
    std::vector<BitSeq> out;
    for (unsigned i = 1; i <= member_count(kind); ++i) out.push_back(family_seq({kind, i}, n));
    return out;
}

std::vector<BitSeq> words(std::initializer_list<std::string_view> list) {
    std::vector<BitSeq> out;
    for (auto s : list) out.push_back(word(s));
    return out;
}

// Complete weight ladders for n <= 4: weights w_0..w_m and the sets W_1..W_m.
struct SmallCase {
    std::vector<std::size_t> weights;
    std::vector<std::vector<std::string_view>> sets;
};

const SmallCase& small_case(std::size_t n) {
    static const std::array<SmallCase, 4> cases = {{
        {{0, 1}, {{"1"}}},
        {{0, 2}, {{"11", "10", "01"}}},
        {{0, 3, 4}, {{"111", "100", "001", "010"}, {"110", "011", "101"}}},
        {{0, 4, 5, 6, 7},
         {{"1111", "1000", "0001"},
          {"0100", "0010", "1100", "1010", "0101", "0011"},
          {"1001", "0110", "1110", "0111"},
          {"1101", "1011"}}},
    }};
    return cases.at(n - 1);
}

[[noreturn]] void not_covered(const Level& level, std::size_t n, const std::string& why) {
    throw std::invalid_argument("level " + level.label() + " at n=" + std::to_string(n) +
                                " is not covered: " + why);
}

}  // namespace

std::string FamilyName::to_string() const {
    return std::string(1, kind_letter(kind)) + std::to_string(index);
}

FamilyName parse_family(std::string_view text) {
    if (text.size() < 2) throw std::invalid_argument("invalid family name \"" + std::string(text) + "\"");
    FamilyName f;
    switch (std::tolower(static_cast<unsigned char>(text[0]))) {
        case 'a': f.kind = Kind::A; break;
        case 'b': f.kind = Kind::B; break;
        case 'c': f.kind = Kind::C; break;
        case 'z': f.kind = Kind::Z; break;
        case 'u': f.kind = Kind::U; break;
        case 'v': f.kind = Kind::V; break;
        case 'e': f.kind = Kind::E; break;
        default: throw std::invalid_argument("unknown family \"" + std::string(text) + "\"");
    }
    const auto digits = text.substr(1);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), f.index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("invalid family index in \"" + std::string(text) + "\"");
    }
    if (f.kind != Kind::E && (f.index < 1 || f.index > member_count(f.kind))) {
        throw std::invalid_argument("family " + std::string(1, kind_letter(f.kind)) + " has members 1.." +
                                    std::to_string(member_count(f.kind)));
    }
    return f;
}

std::optional<std::string> family_violation(const FamilyName& f, std::size_t n) {
    if (f.kind != Kind::E && (f.index < 1 || f.index > member_count(f.kind))) {
        return "family index out of range";
    }
    switch (f.kind) {
        case Kind::A:
            if (n < 1) return "A family requires n >= 1";
            break;
        case Kind::B:
            if (n < 4) return "B family requires n >= 4";
            break;
        case Kind::C:
            if (n < 4 || n % 2 != 0) return "C family requires n even and n >= 4";
            break;
        case Kind::Z:
            if (n < 2) return "Z family requires n >= 2";
            break;
        case Kind::U:
            if (n % 3 != 0 || n < 11) return "U family requires n ≡ 0 (mod 3) and n >= 11";
            break;
        case Kind::V:
            if (n % 3 != 2 || n < 11) return "V family requires n ≡ 2 (mod 3) and n >= 11";
            break;
        case Kind::E:
            if (f.index >= n) return "E(k) requires k <= n-1";
            break;
    }
    return std::nullopt;
}

bool family_valid(const FamilyName& f, std::size_t n) { return !family_violation(f, n).has_value(); }

std::vector<FamilyName> families_at(std::size_t n) {
    std::vector<FamilyName> out;
    for (Kind kind : {Kind::A, Kind::B, Kind::C, Kind::Z, Kind::U, Kind::V}) {
        for (unsigned i = 1; i <= member_count(kind); ++i) {
            if (family_valid({kind, i}, n)) out.push_back({kind, i});
        }
    }
    for (unsigned k = 0; k < n; ++k) out.push_back({Kind::E, k});
    return out;
}

BitSeq family_seq(const FamilyName& f, std::size_t n) {
    if (auto why = family_violation(f, n)) {
        throw std::invalid_argument(f.to_string() + " at n=" + std::to_string(n) + ": " + *why);
    }
    const unsigned i = f.index;
    switch (f.kind) {
        case Kind::A:
            if (i == 1) return BitSeq::ones(n);
            if (i == 2) return concat(word("1"), zeros(n - 1));
            return concat(zeros(n - 1), word("1"));
        case Kind::B:
            switch (i) {
                case 1: return rep("10", n);
                case 2: return concat(word("01"), zeros(n - 2));
                case 3: return concat(zeros(n - 2), word("11"));
                case 4: return rep("01", n);
                case 5: return concat(word("11"), zeros(n - 2));
                default: return concat(zeros(n - 2), word("10"));
            }
        case Kind::C:
            switch (i) {
                case 1: return rep("0011", n);
                case 2: return concat(word("101"), zeros(n - 3));
                case 3: return concat(zeros(n - 3), word("100"));
                case 4: return rep("1100", n);
                case 5: return concat(word("001"), zeros(n - 3));
                default: return concat(zeros(n - 3), word("101"));
            }
        case Kind::Z:
            if (i == 1) return rep("110", n);
            if (i == 2) return rep("011", n);
            return rep("101", n);
        case Kind::U:
            switch (i) {
                case 1: return rep("100", n);
                case 2: return concat(word("0"), rep("011", n - 1));
                case 3: return concat(rep("110", n - 1), word("1"));
                case 4: return rep("001", n);
                case 5: return concat(word("1"), rep("110", n - 1));
                case 6: return concat(rep("101", n - 1), word("0"));
                case 7: return rep("010", n);
                case 8: return concat(word("0"), rep("101", n - 1));
                default: return concat(rep("011", n - 1), word("0"));
            }
        case Kind::V:
            switch (i) {
                case 1: return rep("100", n);
                case 2: return concat(word("0"), rep("101", n - 1));
                case 3: return concat(rep("101", n - 1), word("1"));
                case 4: return rep("010", n);
                case 5: return concat(word("1"), rep("110", n - 1));
                default: return concat(rep("110", n - 1), word("0"));
            }
        case Kind::E: {
            BitSeq x(n);
            x.set(i);
            return x;
        }
    }
    throw std::logic_error("unreachable family kind");
}

bool has_closed_form(const FamilyName& f, std::size_t n) {
    if (!family_valid(f, n)) return false;
    if (f.kind != Kind::E) return true;
    const std::size_t k = std::min<std::size_t>(f.index, n - 1 - f.index);
    return k <= 3;
}

std::size_t predicted_triangle_weight(const FamilyName& f, std::size_t n) {
    if (auto why = family_violation(f, n)) {
        throw std::invalid_argument(f.to_string() + " at n=" + std::to_string(n) + ": " + *why);
    }
    const unsigned i = f.index;
    switch (f.kind) {
        case Kind::A:
            return n;
        case Kind::B:
            if (n % 2 == 0) return (3 * n - 2) / 2;
            return i % 2 == 1 ? (3 * n - 1) / 2 : (3 * n - 3) / 2;
        case Kind::C:
            if (n % 4 == 0) return 2 * n - 3;
            return i % 2 == 1 ? 2 * n - 4 : 2 * n - 2;
        case Kind::Z:
            if (n % 3 != 1) return n * (n + 1) / 3;
            return i == 2 ? (n - 1) * (n + 2) / 3 : (n - 1) * (n + 2) / 3 + 1;
        case Kind::U:
        case Kind::V:
            return ceil_div(n * n, 3);
        case Kind::E: {
            // e_{n-1-k} is the mirror image of e_k.
            const std::size_t k = std::min<std::size_t>(i, n - 1 - i);
            switch (k) {
                case 0: return n;
                case 1: return (3 * n - 2) / 2;
                case 2: return n % 4 == 2 ? 2 * n - 4 : 2 * n - 3;
                case 3: return n % 4 == 3 ? (9 * n - 27) / 4 : (9 * n - 20) / 4;
                default:
                    throw std::invalid_argument("no closed form for " + f.to_string() + " at n=" +
                                                std::to_string(n) + " (only |T| >= 2n-3 is known)");
            }
        }
    }
    throw std::logic_error("unreachable family kind");
}

std::string Level::label() const {
    switch (kind) {
        case Kind::fixed: return std::to_string(index);
        case Kind::top: return "m";
        case Kind::below_top: return "m-1";
    }
    return "?";
}

Level parse_level(std::string_view text) {
    if (text == "m") return Level::top();
    if (text == "m-1") return Level::below_top();
    unsigned i = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), i);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("invalid level \"" + std::string(text) + "\"");
    }
    return Level::fixed(i);
}

std::string to_string(PredictionStatus status) {
    return status == PredictionStatus::theorem ? "theorem" : "conjecture";
}

LevelPrediction predicted_level(Level level, std::size_t n) {
    if (n == 0) not_covered(level, n, "empty sequences have no ladder");
    LevelPrediction p;
    p.level = level;
    p.n = n;

    if (n <= 4) {
        const SmallCase& sc = small_case(n);
        const std::size_t m = sc.weights.size() - 1;
        std::size_t idx = 0;
        switch (level.kind) {
            case Level::Kind::fixed:
                if (level.index < 1 || level.index > m) {
                    not_covered(level, n, "the ladder has m(" + std::to_string(n) + ")=" + std::to_string(m));
                }
                idx = level.index;
                break;
            case Level::Kind::top: idx = m; break;
            case Level::Kind::below_top: idx = m - 1; break;
        }
        p.value = sc.weights[idx];
        if (idx == 0) {
            p.set = {BitSeq::zeros(n)};
        } else {
            for (auto s : sc.sets[idx - 1]) p.set.push_back(word(s));
        }
        p.set = sorted_unique(std::move(p.set));
        return p;
    }

    switch (level.kind) {
        case Level::Kind::fixed:
            switch (level.index) {
                case 1:
                    p.value = n;
                    p.set = all_members(Kind::A, n);
                    break;
                case 2:
                    if (n == 5) {
                        p.value = 6;
                        p.set = words({"01000", "00010", "01010"});
                        break;
                    }
                    p.value = (3 * n - 2) / 2;
                    if (n % 2 == 0) {
                        p.set = all_members(Kind::B, n);
                    } else {
                        p.set = members(Kind::B, {2, 4, 6}, n);
                    }
                    if (n == 6) {
                        for (auto& x : words({"001000", "000100", "001100"})) p.set.push_back(x);
                    } else if (n == 7) {
                        p.set.push_back(word("0001000"));
                    }
                    break;
                case 3:
                    if (n % 2 == 1 && n >= 7) {
                        p.value = (3 * n - 1) / 2;
                        p.set = members(Kind::B, {1, 3, 5}, n);
                    } else if (n == 8) {
                        p.value = 13;
                        p.set = all_members(Kind::C, n);
                        for (auto& x : words({"11110000", "00001000", "00010001", "00001111", "10001000",
                                              "00010000"})) {
                            p.set.push_back(x);
                        }
                    } else if (n % 2 == 0 && n >= 10) {
                        if (n % 4 == 0) {
                            p.value = 2 * n - 3;
                            p.set = all_members(Kind::C, n);
                        } else {
                            p.value = 2 * n - 4;
                            p.set = members(Kind::C, {1, 3, 5}, n);
                        }
                    } else {
                        not_covered(level, n, "w_3 is only known for n <= 4, n = 8, odd n >= 7 and even n >= 10");
                    }
                    break;
                default:
                    not_covered(level, n, "fixed levels above 3 are only known for n <= 4");
            }
            break;
        case Level::Kind::top:
            p.value = ceil_div(n * (n + 1), 3);
            p.set = n % 3 == 1 ? members(Kind::Z, {1, 3}, n) : all_members(Kind::Z, n);
            break;
        case Level::Kind::below_top:
            if (n % 3 == 1 && n >= 7) {
                p.value = (n * n + n - 2) / 3;
                p.set = members(Kind::Z, {2}, n);
            } else if (n % 3 != 1 && n >= 11) {
                p.value = ceil_div(n * n, 3);
                p.set = all_members(n % 3 == 0 ? Kind::U : Kind::V, n);
                p.status = PredictionStatus::conjecture;
            } else {
                not_covered(level, n, "w_{m-1} is only known for n <= 4, n ≡ 1 (mod 3) with n >= 7, "
                                      "and conjectured for n >= 11");
            }
            break;
    }
    p.set = sorted_unique(std::move(p.set));
    return p;
}

bool level_covered(Level level, std::size_t n) {
    try {
        (void)predicted_level(level, n);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace steinhaus
