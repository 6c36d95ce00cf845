// steinhaus: command-line front end for the library.
//
// Exit codes: 0 success, 1 a theorem check failed, 2 usage error,
// 3 a conjecture was refuted.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include "steinhaus/bit_seq.hpp"
#include "steinhaus/document.hpp"
#include "steinhaus/families.hpp"
#include "steinhaus/spectrum.hpp"
#include "steinhaus/symmetry.hpp"
#include "steinhaus/triangle.hpp"
#include "steinhaus/verify.hpp"

namespace {

using namespace steinhaus;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t ceiling_from_env() {
    const char* raw = std::getenv("STEINHAUS_MAX_N");
    if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCeiling;
    std::string_view text(raw);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1 || value > kEnumerationHardLimit) {
        throw UsageError("STEINHAUS_MAX_N must be an integer in 1.." + std::to_string(kEnumerationHardLimit));
    }
    return value;
}

void print(const std::string& command, nlohmann::json payload) {
    std::cout << emit({kSchemaVersion, command, std::move(payload)});
}

struct Args {
    std::string seq;
    std::size_t n = 0;
    bool zeros = false;
    unsigned workers = 0;
    std::string format;
    bool reduced = false;
    bool force = false;
    std::size_t low = 3;
    std::size_t high = 2;
    std::size_t from = 4;
    std::size_t to = 12;
};

EnumerationOptions enumeration(const Args& a) {
    EnumerationOptions o;
    o.workers = a.workers;
    o.ceiling = ceiling_from_env();
    o.force = a.force;
    return o;
}

int cmd_triangle(const Args& a) {
    const BitSeq x = from_string(a.seq);
    if (x.empty()) throw UsageError("empty sequence");
    if (a.format == "json") {
        print("triangle", triangle_payload(x));
        return 0;
    }
    RenderOptions ro;
    if (a.zeros) ro.zero = '0';
    std::cout << render(x, ro);
    std::cout << "length " << x.size() << "\nweight " << x.weight() << "\ntriangle_weight " << triangle_weight(x)
              << '\n';
    if (x.size() >= 3) std::cout << "s3 " << s3(x) << '\n';
    return 0;
}

int cmd_spectrum(const Args& a) {
    const auto opts = enumeration(a);
    const WeightSpectrum s = a.reduced ? symmetry_reduced_spectrum(a.n, opts) : full_spectrum(a.n, opts);
    if (a.format == "csv") {
        std::cout << spectrum_csv(s);
    } else {
        print("spectrum", spectrum_payload(s, a.reduced));
    }
    return 0;
}

int cmd_levels(const Args& a) {
    const auto opts = enumeration(a);
    const WeightSpectrum s = full_spectrum(a.n, opts);
    const std::size_t m = s.top_index();
    if (a.low > m || a.high > m) {
        throw UsageError("--low and --high must not exceed m(" + std::to_string(a.n) + ")=" + std::to_string(m));
    }
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i <= a.low; ++i) indices.push_back(i);
    for (std::size_t j = 0; j < a.high; ++j) indices.push_back(m - j);
    auto sets = level_sets(s, indices, opts);
    std::vector<LevelSet> low(sets.begin(), sets.begin() + static_cast<std::ptrdiff_t>(a.low + 1));
    std::vector<LevelSet> high(sets.begin() + static_cast<std::ptrdiff_t>(a.low + 1), sets.end());
    print("levels", levels_payload(s, low, high));
    return 0;
}

int cmd_orbit(const Args& a) {
    const BitSeq x = from_string(a.seq);
    if (x.empty()) throw UsageError("empty sequence");
    print("orbit", orbit_payload(x, orbit(x)));
    return 0;
}

int cmd_families(const Args& a) {
    if (a.n < 1 || a.n > kMaxLength) throw UsageError("n must be in 1.." + std::to_string(kMaxLength));
    const auto payload = families_payload(a.n);
    if (a.format == "json") {
        print("families", payload);
        return 0;
    }
    for (const auto& row : payload.at("families")) {
        std::cout << row.at("name").get<std::string>() << ' ' << row.at("sequence").get<std::string>() << " actual "
                  << row.at("actual").get<std::size_t>();
        if (row.contains("predicted")) {
            std::cout << " predicted " << row.at("predicted").get<std::size_t>()
                      << (row.at("match").get<bool>() ? " match" : " MISMATCH");
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_verify(const Args& a) {
    VerifyOptions vo;
    vo.enumeration = enumeration(a);
    if (a.from < 1 || a.from > a.to) throw UsageError("need 1 <= --from <= --to");
    const VerificationReport report = verify_all(a.from, a.to, vo);
    if (a.format == "json") {
        print("verify", report_payload(report));
    } else {
        std::cout << report_text(report);
    }
    return exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary Steinhaus triangles: weights, symmetry orbits, spectra and verification"};
    app.require_subcommand(1);
    Args a;

    auto* tri = app.add_subcommand("triangle", "Render a triangle and report its weights");
    tri->add_option("seq", a.seq, "Generator as 0/1 text")->required();
    tri->add_flag("--zeros", a.zeros, "Print zeros as 0 instead of .");
    tri->add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");

    auto* spec = app.add_subcommand("spectrum", "Weight histogram over all 2^n generators");
    spec->add_option("n", a.n, "Length")->required();
    spec->add_option("--workers", a.workers, "Worker threads (0 = all cores)");
    spec->add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");
    spec->add_flag("--reduced", a.reduced, "Enumerate orbit representatives only");
    spec->add_flag("--force", a.force, "Allow n above the enumeration ceiling");

    auto* lev = app.add_subcommand("levels", "Lowest and highest level sets");
    lev->add_option("n", a.n, "Length")->required();
    lev->add_option("--low", a.low, "Report W_0..W_k")->default_val(3);
    lev->add_option("--high", a.high, "Report the top k levels")->default_val(2);
    lev->add_option("--workers", a.workers, "Worker threads (0 = all cores)");
    lev->add_flag("--force", a.force, "Allow n above the enumeration ceiling");

    auto* orb = app.add_subcommand("orbit", "Symmetry orbit of a sequence");
    orb->add_option("seq", a.seq, "Generator as 0/1 text")->required();

    auto* fam = app.add_subcommand("families", "Named families at length n with predicted and actual weights");
    fam->add_option("n", a.n, "Length")->required();
    fam->add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");

    auto* ver = app.add_subcommand("verify", "Check every known result against enumeration");
    ver->add_option("--from", a.from, "Smallest n")->default_val(4);
    ver->add_option("--to", a.to, "Largest n")->default_val(12);
    ver->add_option("--workers", a.workers, "Worker threads (0 = all cores)");
    ver->add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*tri) return cmd_triangle(a);
        if (*spec) return cmd_spectrum(a);
        if (*lev) return cmd_levels(a);
        if (*orb) return cmd_orbit(a);
        if (*fam) return cmd_families(a);
        if (*ver) return cmd_verify(a);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
