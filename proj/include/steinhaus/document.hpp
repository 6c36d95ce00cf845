#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "steinhaus/bit_seq.hpp"
#include "steinhaus/spectrum.hpp"
#include "steinhaus/symmetry.hpp"
#include "steinhaus/verify.hpp"

namespace steinhaus {

inline constexpr int kSchemaVersion = 1;

/// Envelope of every JSON document the CLI prints.
struct OutputDocument {
    int schema_version = kSchemaVersion;
    std::string command;
    nlohmann::json payload;

    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

/// Pretty-printed JSON with sorted keys.
std::string emit(const OutputDocument& doc);

/// Throws std::invalid_argument on malformed input or an unsupported schema version.
OutputDocument parse_document(std::string_view text);

nlohmann::json spectrum_payload(const WeightSpectrum& spectrum, bool reduced);
WeightSpectrum spectrum_from_payload(const nlohmann::json& payload);

/// "weight,count" header, one row per nonzero weight, ascending.
std::string spectrum_csv(const WeightSpectrum& spectrum);

nlohmann::json level_set_payload(const LevelSet& set);
LevelSet level_set_from_payload(const nlohmann::json& payload);

nlohmann::json levels_payload(const WeightSpectrum& spectrum, const std::vector<LevelSet>& low,
                              const std::vector<LevelSet>& high);

nlohmann::json orbit_payload(const BitSeq& input, const Orbit& orbit);

nlohmann::json triangle_payload(const BitSeq& x);

nlohmann::json families_payload(std::size_t n);

nlohmann::json check_payload(const CheckRecord& record);
CheckRecord check_from_payload(const nlohmann::json& payload);

nlohmann::json report_payload(const VerificationReport& report);
VerificationReport report_from_payload(const nlohmann::json& payload);

/// One line per check: "<status> <id> n=<n> <detail>".
std::string report_text(const VerificationReport& report);

}  // namespace steinhaus
