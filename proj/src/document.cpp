#include "steinhaus/document.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "steinhaus/families.hpp"
#include "steinhaus/triangle.hpp"

namespace steinhaus {

using nlohmann::json;

namespace {

json seq_list(std::vector<BitSeq> seqs) {
    std::sort(seqs.begin(), seqs.end(), LexLess{});
    json out = json::array();
    for (const auto& x : seqs) out.push_back(x.to_string());
    return out;
}

std::vector<BitSeq> seqs_from(const json& list) {
    std::vector<BitSeq> out;
    for (const auto& s : list) out.push_back(from_string(s.get<std::string>()));
    return out;
}

}  // namespace

std::string emit(const OutputDocument& doc) {
    const json j = {{"schema_version", doc.schema_version}, {"command", doc.command}, {"payload", doc.payload}};
    return j.dump(2) + "\n";
}

OutputDocument parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("schema_version") || !j.contains("command") || !j.contains("payload")) {
        throw std::invalid_argument("document needs schema_version, command and payload");
    }
    OutputDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != kSchemaVersion) {
        throw std::invalid_argument("unsupported schema version " + std::to_string(doc.schema_version));
    }
    doc.command = j.at("command").get<std::string>();
    doc.payload = j.at("payload");
    return doc;
}

json spectrum_payload(const WeightSpectrum& spectrum, bool reduced) {
    json counts = json::array();
    for (auto w : spectrum.levels) counts.push_back({{"weight", w}, {"count", spectrum.counts[w]}});
    const std::size_t m = spectrum.top_index();
    json derived = json::object();
    for (std::size_t i = 1; i <= std::min<std::size_t>(3, m); ++i) {
        derived["w_" + std::to_string(i)] = spectrum.levels[i];
    }
    if (m >= 1) derived["w_m-1"] = spectrum.levels[m - 1];
    derived["w_m"] = spectrum.levels[m];
    return {{"n", spectrum.n},   {"m", m},          {"counts", counts},
            {"derived", derived}, {"total", spectrum.total()}, {"reduced", reduced}};
}

WeightSpectrum spectrum_from_payload(const json& payload) {
    WeightSpectrum s;
    s.n = payload.at("n").get<std::size_t>();
    s.counts.assign(s.n * (s.n + 1) / 2 + 1, 0);
    for (const auto& row : payload.at("counts")) {
        const auto w = row.at("weight").get<std::size_t>();
        s.counts.at(w) = row.at("count").get<std::uint64_t>();
        s.levels.push_back(w);
    }
    return s;
}

std::string spectrum_csv(const WeightSpectrum& spectrum) {
    std::string out = "weight,count\n";
    for (auto w : spectrum.levels) out += std::to_string(w) + "," + std::to_string(spectrum.counts[w]) + "\n";
    return out;
}

json level_set_payload(const LevelSet& set) {
    return {{"index", set.index},
            {"weight", set.weight},
            {"count", set.count},
            {"members", seq_list(set.members)},
            {"truncated", set.truncated}};
}

LevelSet level_set_from_payload(const json& payload) {
    LevelSet s;
    s.index = payload.at("index").get<std::size_t>();
    s.weight = payload.at("weight").get<std::size_t>();
    s.count = payload.at("count").get<std::uint64_t>();
    s.members = seqs_from(payload.at("members"));
    s.truncated = payload.at("truncated").get<bool>();
    return s;
}

json levels_payload(const WeightSpectrum& spectrum, const std::vector<LevelSet>& low,
                    const std::vector<LevelSet>& high) {
    json lo = json::array(), hi = json::array();
    for (const auto& s : low) lo.push_back(level_set_payload(s));
    for (const auto& s : high) hi.push_back(level_set_payload(s));
    return {{"n", spectrum.n}, {"m", spectrum.top_index()}, {"low", lo}, {"high", hi}};
}

json orbit_payload(const BitSeq& input, const Orbit& orbit) {
    return {{"input", input.to_string()},
            {"members", seq_list(orbit.members)},
            {"canonical", orbit.canonical.to_string()},
            {"size", orbit.size()},
            {"triangle_weight", triangle_weight(input)}};
}

json triangle_payload(const BitSeq& x) {
    const Triangle t = build(x);
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back(r.to_string());
    json j = {{"sequence", x.to_string()},
              {"n", x.size()},
              {"rows", rows},
              {"weight", x.weight()},
              {"triangle_weight", t.weight()}};
    if (x.size() >= 3) j["s3"] = s3(x);
    return j;
}

json families_payload(std::size_t n) {
    json rows = json::array();
    for (const auto& f : families_at(n)) {
        const BitSeq x = family_seq(f, n);
        const std::size_t actual = triangle_weight(x);
        json row = {{"name", f.to_string()}, {"sequence", x.to_string()}, {"actual", actual}};
        if (has_closed_form(f, n)) {
            const std::size_t predicted = predicted_triangle_weight(f, n);
            row["predicted"] = predicted;
            row["match"] = predicted == actual;
        }
        rows.push_back(row);
    }
    return {{"n", n}, {"families", rows}};
}

json check_payload(const CheckRecord& r) {
    json j = {{"id", r.id},         {"n_min", r.n_min},   {"n_max", r.n_max},
              {"status", to_string(r.status)}, {"detail", r.detail}, {"elapsed_ms", r.elapsed_ms}};
    if (r.witness) j["witness"] = r.witness->to_string();
    if (r.observed) j["observed"] = *r.observed;
    if (r.predicted) j["predicted"] = *r.predicted;
    return j;
}

CheckRecord check_from_payload(const json& j) {
    CheckRecord r;
    r.id = j.at("id").get<std::string>();
    r.n_min = j.at("n_min").get<std::size_t>();
    r.n_max = j.at("n_max").get<std::size_t>();
    r.status = parse_check_status(j.at("status").get<std::string>());
    r.detail = j.at("detail").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (j.contains("witness")) r.witness = from_string(j.at("witness").get<std::string>());
    if (j.contains("observed")) r.observed = j.at("observed").get<std::size_t>();
    if (j.contains("predicted")) r.predicted = j.at("predicted").get<std::size_t>();
    return r;
}

json report_payload(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& r : report.checks) checks.push_back(check_payload(r));
    json summary = json::object();
    for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::conjecture_confirmed,
                   CheckStatus::conjecture_refuted, CheckStatus::skipped}) {
        summary[to_string(s)] = report.count(s);
    }
    return {{"n_min", report.n_min},
            {"n_max", report.n_max},
            {"checks", checks},
            {"summary", summary},
            {"exit_code", exit_code(report)}};
}

VerificationReport report_from_payload(const json& payload) {
    VerificationReport report;
    report.n_min = payload.at("n_min").get<std::size_t>();
    report.n_max = payload.at("n_max").get<std::size_t>();
    for (const auto& c : payload.at("checks")) report.checks.push_back(check_from_payload(c));
    return report;
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    for (const auto& r : report.checks) {
        out << to_string(r.status) << ' ' << r.id << " n=" << r.n_min;
        if (r.witness) out << " witness=" << *r.witness;
        if (r.observed) out << " observed=" << *r.observed;
        if (r.predicted) out << " predicted=" << *r.predicted;
        if (!r.detail.empty()) out << " (" << r.detail << ')';
        out << '\n';
    }
    out << "summary:";
    for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::conjecture_confirmed,
                   CheckStatus::conjecture_refuted, CheckStatus::skipped}) {
        out << ' ' << to_string(s) << '=' << report.count(s);
    }
    out << '\n';
    return out.str();
}

}  // namespace steinhaus
