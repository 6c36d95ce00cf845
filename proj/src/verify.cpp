#include "steinhaus/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <map>
#include <stdexcept>

#include "steinhaus/fixtures.hpp"
#include "steinhaus/symmetry.hpp"
#include "steinhaus/triangle.hpp"

namespace steinhaus {

namespace {

using Clock = std::chrono::steady_clock;

std::string str(std::size_t v) { return std::to_string(v); }

std::vector<BitSeq> sorted_seqs(std::vector<BitSeq> v) {
    std::sort(v.begin(), v.end(), LexLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<BitSeq> parse_seqs(const std::vector<std::string>& tokens) {
    std::vector<BitSeq> out;
    for (const auto& t : tokens) out.push_back(from_string(t));
    return sorted_seqs(std::move(out));
}

std::vector<FixtureRecord> fixture_rows(std::string_view name, std::size_t n) {
    std::vector<FixtureRecord> out;
    for (auto& r : builtin_fixture(name)) {
        if (r.n == n) out.push_back(std::move(r));
    }
    return out;
}

CheckRecord skipped(std::string reason) {
    CheckRecord r;
    r.status = CheckStatus::skipped;
    r.detail = std::move(reason);
    return r;
}

CheckRecord failed(const BitSeq& witness, std::size_t observed, std::optional<std::size_t> predicted,
                   std::string detail) {
    CheckRecord r;
    r.status = CheckStatus::fail;
    r.witness = witness;
    r.observed = observed;
    r.predicted = predicted;
    r.detail = std::move(detail);
    return r;
}

CheckRecord passed(std::optional<std::size_t> observed, std::optional<std::size_t> predicted, std::string detail) {
    CheckRecord r;
    r.status = CheckStatus::pass;
    r.observed = observed;
    r.predicted = predicted;
    r.detail = std::move(detail);
    return r;
}

/**
 * Value and set equality of an enumerated level against a prediction.
 * Any mismatch yields a witness whose triangle weight is `observed`.
 */
CheckRecord compare_level(const LevelSet& got, std::size_t want_w, const std::vector<BitSeq>& want_set,
                          const std::string& name) {
    if (got.weight != want_w) {
        return failed(got.members.front(), got.weight, want_w,
                      name + " has weight " + str(got.weight) + ", predicted " + str(want_w));
    }
    std::vector<BitSeq> extra, missing;
    std::set_difference(got.members.begin(), got.members.end(), want_set.begin(), want_set.end(),
                        std::back_inserter(extra), LexLess{});
    std::set_difference(want_set.begin(), want_set.end(), got.members.begin(), got.members.end(),
                        std::back_inserter(missing), LexLess{});
    if (!extra.empty()) {
        return failed(extra.front(), triangle_weight(extra.front()), want_w,
                      str(extra.size()) + " member(s) of " + name + " not predicted; |" + name +
                          "|=" + str(got.count) + ", predicted " + str(want_set.size()));
    }
    if (!missing.empty()) {
        return failed(missing.front(), triangle_weight(missing.front()), want_w,
                      str(missing.size()) + " predicted member(s) not in " + name + "; |" + name +
                          "|=" + str(got.count) + ", predicted " + str(want_set.size()));
    }
    return passed(got.weight, want_w, "|" + name + "|=" + str(got.count));
}

CheckRecord compare_search(std::size_t w, const WeightSearch& got, const std::vector<BitSeq>& want_set,
                           const std::string& name) {
    LevelSet as_level{0, w, got.count, got.members, got.truncated};
    if (got.members.empty() && want_set.empty()) return passed(w, w, "no sequences of weight " + str(w));
    if (got.members.empty()) {
        return failed(want_set.front(), triangle_weight(want_set.front()), w,
                      "no sequences of weight " + str(w) + ", expected " + str(want_set.size()));
    }
    return compare_level(as_level, w, want_set, name);
}

std::string level_id(const Level& level) {
    switch (level.kind) {
        case Level::Kind::fixed: return "level" + str(level.index);
        case Level::Kind::top: return "level_m";
        case Level::Kind::below_top: return "level_m-1";
    }
    return "level";
}

std::string level_name(const Level& level) { return "W_" + level.label(); }

/// Everything computed once per n and shared by the checks at that n.
class Context {
public:
    Context(std::size_t n, const VerifyOptions& options) : n_(n), options_(options) {}

    std::size_t n() const noexcept { return n_; }
    const VerifyOptions& options() const noexcept { return options_; }

    bool enumerable() const {
        try {
            check_enumeration_size(n_, options_.enumeration);
            return true;
        } catch (const std::invalid_argument&) {
            return false;
        }
    }

    const WeightSpectrum& spectrum() {
        load();
        return spectrum_;
    }

    std::size_t m() { return spectrum().top_index(); }

    /// Captured W_i; the low end up to W_3 and the top two levels are available.
    const LevelSet& level(std::size_t index) {
        load();
        const auto it = sets_.find(index);
        if (it == sets_.end()) throw std::logic_error("level " + str(index) + " was not captured");
        return it->second;
    }

private:
    void load() {
        if (loaded_) return;
        spectrum_ = full_spectrum(n_, options_.enumeration);
        const std::size_t m = spectrum_.top_index();
        std::vector<std::size_t> indices;
        for (std::size_t i = 0; i <= std::min<std::size_t>(3, m); ++i) indices.push_back(i);
        if (m >= 1) indices.push_back(m - 1);
        indices.push_back(m);
        auto sets = level_sets(spectrum_, indices, options_.enumeration);
        for (std::size_t k = 0; k < indices.size(); ++k) sets_.emplace(indices[k], std::move(sets[k]));
        loaded_ = true;
    }

    std::size_t n_;
    const VerifyOptions& options_;
    bool loaded_ = false;
    WeightSpectrum spectrum_;
    std::map<std::size_t, LevelSet> sets_;
};

template <class F>
CheckRecord timed(const std::string& id, std::size_t n, F&& body) {
    const auto start = Clock::now();
    CheckRecord r = body();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    r.id = id;
    r.n_min = r.n_max = n;
    return r;
}

CheckRecord level_check(Context& ctx, Level level) {
    const std::size_t n = ctx.n();
    if (!ctx.enumerable()) return skipped("n=" + str(n) + " is above the enumeration ceiling");
    LevelPrediction pred;
    try {
        pred = predicted_level(level, n);
    } catch (const std::invalid_argument& e) {
        return skipped(e.what());
    }
    if (pred.status == PredictionStatus::conjecture) return skipped("conjectured; see the conjecture check");
    const std::size_t m = ctx.m();
    std::size_t index = 0;
    switch (level.kind) {
        case Level::Kind::fixed: index = level.index; break;
        case Level::Kind::top: index = m; break;
        case Level::Kind::below_top: index = m - 1; break;
    }
    if (index > m) {
        const LevelSet& top = ctx.level(m);
        return failed(top.members.front(), top.weight, pred.value,
                      "ladder stops at m(" + str(n) + ")=" + str(m));
    }
    return compare_level(ctx.level(index), pred.value, pred.set, level_name(level));
}

CheckRecord conjecture_check(Context& ctx) {
    const std::size_t n = ctx.n();
    const LevelPrediction pred = predicted_level(Level::below_top(), n);
    CheckRecord r = compare_level(ctx.level(ctx.m() - 1), pred.value, pred.set, "W_m-1");
    r.status = r.status == CheckStatus::pass ? CheckStatus::conjecture_confirmed : CheckStatus::conjecture_refuted;
    return r;
}

std::optional<std::string> conjecture_violation(std::size_t n, const VerifyOptions& options) {
    if (n < 11) return "the conjecture needs n >= 11";
    if (n % 3 == 1) return "the conjecture needs n = 0 or 2 (mod 3)";
    try {
        check_enumeration_size(n, options.enumeration);
    } catch (const std::invalid_argument& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

CheckRecord families_check(std::size_t n) {
    std::size_t checked = 0;
    for (const auto& f : families_at(n)) {
        if (!has_closed_form(f, n)) continue;
        const BitSeq x = family_seq(f, n);
        const std::size_t want = predicted_triangle_weight(f, n);
        const std::size_t got = triangle_weight(x);
        if (got != want) return failed(x, got, want, f.to_string() + " weight differs from its closed form");
        ++checked;
    }
    if (checked == 0) return skipped("no closed-form family at n=" + str(n));
    return passed(std::nullopt, std::nullopt, str(checked) + " closed forms match");
}

CheckRecord ek_check(std::size_t n) {
    if (n < 9) return skipped("the basis-vector bound needs n >= 9");
    const std::size_t bound = 2 * n - 3;
    const bool strict = n % 2 == 0;
    std::size_t least = SIZE_MAX;
    for (std::size_t k = 4; k <= (n - 1) / 2; ++k) {
        const BitSeq x = family_seq({FamilyName::Kind::E, static_cast<unsigned>(k)}, n);
        const std::size_t w = triangle_weight(x);
        if (strict ? w <= bound : w < bound) {
            return failed(x, w, bound, "e" + str(k) + " breaks the bound " + std::string(strict ? ">" : ">=") + " " +
                                           str(bound));
        }
        least = std::min(least, w);
    }
    std::size_t table_rows = 0;
    for (const auto& row : fixture_rows("table1_ek", n)) {
        const BitSeq x = from_string(row.sequences.at(0));
        const std::size_t w = triangle_weight(x);
        if (w != row.weight) return failed(x, w, row.weight, row.level + " differs from the stored table");
        ++table_rows;
    }
    std::string detail = "min over 4<=k<=" + str((n - 1) / 2) + " is " + str(least) + (strict ? " > " : " >= ") +
                         str(bound);
    if (table_rows > 0) detail += "; " + str(table_rows) + " table entries match";
    return passed(least, bound, detail);
}

std::vector<BitSeq> s3_equality_set(std::size_t n) {
    if (n == 4) return sorted_seqs({from_string("0110"), from_string("1001"), from_string("1011"), from_string("1101")});
    return sorted_seqs({from_string("01101"), from_string("10011"), from_string("10110"), from_string("11001"),
                        from_string("11011")});
}

CheckRecord s3_check(const Context& ctx) {
    const std::size_t n = ctx.n();
    const VerifyOptions& options = ctx.options();
    if (n < 4) return skipped("the s3 bound is checked for n >= 4");
    if (n > options.s3_ceiling) return skipped("n=" + str(n) + " is above the s3 ceiling " + str(options.s3_ceiling));
    if (!ctx.enumerable()) return skipped("n=" + str(n) + " is above the enumeration ceiling");
    const std::size_t bound = 2 * n - 2;
    const S3Maximum best = s3_maximum(n, options.enumeration);
    if (best.max > bound) {
        return failed(best.argmax.members.front(), best.max, bound, "s3 exceeds 2n-2");
    }
    if (n == 4 || n == 5) {
        const auto want = s3_equality_set(n);
        if (best.max < bound) {
            return failed(want.front(), s3(want.front()), bound, "2n-2 is never attained");
        }
        std::vector<BitSeq> diff;
        std::set_symmetric_difference(best.argmax.members.begin(), best.argmax.members.end(), want.begin(),
                                      want.end(), std::back_inserter(diff), LexLess{});
        if (!diff.empty()) return failed(diff.front(), s3(diff.front()), bound, "equality set differs");
        return passed(best.max, bound, "equality set of size " + str(want.size()) + " matches");
    }
    return passed(best.max, bound, str(best.argmax.count) + " sequences attain the maximum");
}

CheckRecord table2_check(Context& ctx) {
    const auto rows = fixture_rows("table2_w2", ctx.n());
    if (rows.empty()) return skipped("no table row at n=" + str(ctx.n()));
    return compare_level(ctx.level(2), rows[0].weight, parse_seqs(rows[0].sequences), "W_2");
}

CheckRecord table3_check(const Context& ctx) {
    const std::size_t n = ctx.n();
    const auto rows = fixture_rows("table3_floor3n2", n);
    if (rows.empty()) return skipped("no table row at n=" + str(n));
    const std::size_t w = 3 * n / 2;
    if (rows[0].weight != w) throw std::logic_error("table3 fixture row at n=" + str(n) + " is not floor(3n/2)");
    return compare_search(w, find_weight(n, w, ctx.options().enumeration), parse_seqs(rows[0].sequences),
                          "weight " + str(w));
}

CheckRecord table7_check(Context& ctx) {
    const std::size_t n = ctx.n();
    const auto rows = fixture_rows("table7_below_top", n);
    if (rows.empty()) return skipped("no table row at n=" + str(n));
    const auto& row = rows[0];
    const std::size_t m = ctx.m();
    const LevelSet& below = ctx.level(m - 1);
    const std::size_t want_m = std::stoul(row.level) + 1;
    if (m != want_m) {
        return failed(below.members.front(), below.weight, row.weight,
                      "m(" + str(n) + ")=" + str(m) + ", table gives " + str(want_m));
    }
    if (below.weight != row.weight) {
        return failed(below.members.front(), below.weight, row.weight, "w_m-1 differs from the table");
    }
    if (below.count != row.count.value_or(0)) {
        return failed(below.members.front(), below.weight, row.weight,
                      "|W_m-1|=" + str(below.count) + ", table gives " + str(row.count.value_or(0)));
    }
    return passed(below.weight, row.weight, "m=" + str(m) + ", |W_m-1|=" + str(below.count));
}

CheckRecord table8_check(Context& ctx) {
    const auto rows = fixture_rows("table8_below_top", ctx.n());
    if (rows.empty()) return skipped("no table row at n=" + str(ctx.n()));
    return compare_level(ctx.level(ctx.m() - 1), rows[0].weight, parse_seqs(rows[0].sequences), "W_m-1");
}

/**
 * The printed W_{m-1} listing may contain entries of the wrong length.
 * The stored cardinality is authoritative; every well-formed entry must
 * lie in W_{m-1}, and discrepancies are reported in the detail.
 */
CheckRecord table12_check(Context& ctx) {
    const std::size_t n = ctx.n();
    const auto rows = fixture_rows("table12_below_top", n);
    if (rows.empty()) return skipped("no listing at n=" + str(n));
    const auto counts = fixture_rows("table7_below_top", n);
    const auto& row = rows[0];
    const LevelSet& below = ctx.level(ctx.m() - 1);
    if (below.weight != row.weight) {
        return failed(below.members.front(), below.weight, row.weight, "w_m-1 differs from the listing");
    }
    std::vector<std::string> malformed;
    std::vector<BitSeq> listed;
    for (const auto& t : row.sequences) {
        if (t.size() == n) {
            listed.push_back(from_string(t));
        } else {
            malformed.push_back(t);
        }
    }
    listed = sorted_seqs(std::move(listed));
    for (const auto& x : listed) {
        if (!std::binary_search(below.members.begin(), below.members.end(), x, LexLess{})) {
            return failed(x, triangle_weight(x), row.weight, "listed entry " + x.to_string() + " is not in W_m-1");
        }
    }
    const std::uint64_t want_count = counts.empty() ? listed.size() : counts[0].count.value_or(listed.size());
    if (below.count != want_count) {
        return failed(below.members.front(), below.weight, row.weight,
                      "|W_m-1|=" + str(below.count) + ", expected " + str(want_count));
    }
    std::vector<BitSeq> unlisted;
    std::set_difference(below.members.begin(), below.members.end(), listed.begin(), listed.end(),
                        std::back_inserter(unlisted), LexLess{});
    std::string detail = "|W_m-1|=" + str(below.count) + ", " + str(listed.size()) + " well-formed entries listed";
    for (const auto& t : malformed) detail += "; malformed entry " + t;
    for (const auto& x : unlisted) detail += "; unlisted member " + x.to_string();
    return passed(below.weight, row.weight, detail);
}

CheckRecord weight_search_check(const Context& ctx) {
    const std::size_t n = ctx.n();
    if (n == 10) {
        const std::vector<BitSeq> want =
            sorted_seqs({from_string("0000001000"), from_string("0000001100"), from_string("0001000000"),
                         from_string("0001000100"), from_string("0010001000"), from_string("0011000000")});
        const auto got = find_weight(10, 17, ctx.options().enumeration);
        CheckRecord r = compare_search(17, got, want, "weight 17");
        if (r.status == CheckStatus::pass && orbit(want.front()).members != want) {
            return failed(want.front(), 17, 17, "the listed set is not a single orbit");
        }
        if (r.status == CheckStatus::pass) r.detail = "6 sequences, one orbit";
        return r;
    }
    if (n == 14) {
        const auto got = find_weight(14, 25, ctx.options().enumeration);
        return compare_search(25, got, {}, "weight 25");
    }
    return skipped("weight searches run at n=10 and n=14");
}

std::size_t id_rank(const std::string& id) {
    const auto& ids = check_ids();
    return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

std::vector<CheckRecord> checks_at(std::size_t n, const VerifyOptions& options) {
    Context ctx(n, options);
    std::vector<CheckRecord> out;
    for (const Level level : {Level::fixed(1), Level::fixed(2), Level::fixed(3), Level::top(), Level::below_top()}) {
        out.push_back(timed(level_id(level), n, [&] { return level_check(ctx, level); }));
    }
    out.push_back(timed("conjecture", n, [&] {
        if (const auto why = conjecture_violation(n, options)) return skipped(*why);
        return conjecture_check(ctx);
    }));
    out.push_back(timed("families", n, [&] { return families_check(n); }));
    out.push_back(timed("ek", n, [&] { return ek_check(n); }));
    out.push_back(timed("s3", n, [&] { return s3_check(ctx); }));
    out.push_back(timed("table2", n, [&] { return table2_check(ctx); }));
    out.push_back(timed("table3", n, [&] { return table3_check(ctx); }));
    out.push_back(timed("table7", n, [&] { return table7_check(ctx); }));
    out.push_back(timed("table8", n, [&] { return table8_check(ctx); }));
    out.push_back(timed("table12", n, [&] { return table12_check(ctx); }));
    out.push_back(timed("weight_search", n, [&] { return weight_search_check(ctx); }));
    return out;
}

}  // namespace

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::conjecture_confirmed: return "conjecture-confirmed";
        case CheckStatus::conjecture_refuted: return "conjecture-refuted";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

CheckStatus parse_check_status(std::string_view text) {
    for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::conjecture_confirmed,
                   CheckStatus::conjecture_refuted, CheckStatus::skipped}) {
        if (to_string(s) == text) return s;
    }
    throw std::invalid_argument("unknown check status \"" + std::string(text) + "\"");
}

bool CheckRecord::same_outcome(const CheckRecord& o) const {
    return id == o.id && n_min == o.n_min && n_max == o.n_max && status == o.status && witness == o.witness &&
           observed == o.observed && predicted == o.predicted && detail == o.detail;
}

std::size_t VerificationReport::count(CheckStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const CheckRecord& r) { return r.status == status; }));
}

bool VerificationReport::same_outcome(const VerificationReport& o) const {
    return n_min == o.n_min && n_max == o.n_max &&
           std::equal(checks.begin(), checks.end(), o.checks.begin(), o.checks.end(),
                      [](const CheckRecord& a, const CheckRecord& b) { return a.same_outcome(b); });
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = {
        "small_n", "level1", "level2", "level3",  "level_m", "level_m-1", "conjecture",   "families",
        "ek",      "s3",     "table2", "table3",  "table7",  "table8",    "table12", "weight_search"};
    return ids;
}

CheckRecord verify_level(std::size_t n, Level level, const VerifyOptions& options) {
    Context ctx(n, options);
    return timed(level_id(level), n, [&] { return level_check(ctx, level); });
}

std::vector<CheckRecord> verify_small_n(const VerifyOptions& options) {
    const auto table = builtin_fixture("small_n");
    std::vector<CheckRecord> out;
    for (std::size_t n = 1; n <= 4; ++n) {
        out.push_back(timed("small_n", n, [&]() -> CheckRecord {
            std::vector<FixtureRecord> rows;
            for (const auto& r : table) {
                if (r.n == n) rows.push_back(r);
            }
            const WeightSpectrum spec = full_spectrum(n, options.enumeration);
            const std::size_t m = spec.top_index();
            std::vector<std::size_t> indices(m + 1);
            for (std::size_t i = 0; i <= m; ++i) indices[i] = i;
            const auto sets = level_sets(spec, indices, options.enumeration);
            if (m != rows.size()) {
                return failed(sets[m].members.front(), sets[m].weight, rows.back().weight,
                              "m(" + str(n) + ")=" + str(m) + ", expected " + str(rows.size()));
            }
            const CheckRecord zero = compare_level(sets[0], 0, {BitSeq::zeros(n)}, "W_0");
            if (zero.status != CheckStatus::pass) return zero;
            for (const auto& row : rows) {
                const std::size_t i = std::stoul(row.level);
                CheckRecord r = compare_level(sets[i], row.weight, parse_seqs(row.sequences), "W_" + row.level);
                if (r.status != CheckStatus::pass) return r;
            }
            std::string detail = "weights";
            for (auto w : spec.levels) detail += " " + str(w);
            return passed(spec.levels.back(), rows.back().weight, detail);
        }));
        out.back().n_min = out.back().n_max = n;
    }
    return out;
}

CheckRecord verify_ek(std::size_t n, const VerifyOptions&) {
    return timed("ek", n, [&] { return ek_check(n); });
}

CheckRecord verify_s3(std::size_t n, const VerifyOptions& options) {
    const Context ctx(n, options);
    return timed("s3", n, [&] { return s3_check(ctx); });
}

CheckRecord check_conjecture(std::size_t n, const VerifyOptions& options) {
    if (const auto why = conjecture_violation(n, options)) {
        throw std::invalid_argument("check_conjecture(" + str(n) + "): " + *why);
    }
    Context ctx(n, options);
    return timed("conjecture", n, [&] { return conjecture_check(ctx); });
}

VerificationReport verify_all(std::size_t n_min, std::size_t n_max, const VerifyOptions& options) {
    if (n_min < 1 || n_min > n_max) {
        throw std::invalid_argument("verify_all needs 1 <= n_min <= n_max, got " + str(n_min) + ".." + str(n_max));
    }
    check_enumeration_size(n_max, options.enumeration);
    VerificationReport report;
    report.n_min = n_min;
    report.n_max = n_max;
    report.checks = verify_small_n(options);
    for (std::size_t n = n_min; n <= n_max; ++n) {
        auto at_n = checks_at(n, options);
        std::move(at_n.begin(), at_n.end(), std::back_inserter(report.checks));
    }
    std::stable_sort(report.checks.begin(), report.checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
        if (a.n_min != b.n_min) return a.n_min < b.n_min;
        return id_rank(a.id) < id_rank(b.id);
    });
    return report;
}

int exit_code(const VerificationReport& report) {
    if (report.count(CheckStatus::fail) > 0) return 1;
    if (report.count(CheckStatus::conjecture_refuted) > 0) return 3;
    return 0;
}

}  // namespace steinhaus
