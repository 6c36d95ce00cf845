#include <gtest/gtest.h>

#include <stdexcept>

#include "steinhaus/document.hpp"
#include "steinhaus/spectrum.hpp"
#include "steinhaus/symmetry.hpp"
#include "steinhaus/verify.hpp"

using namespace steinhaus;

TEST(Document, EmitParseRoundTrip) {
    const WeightSpectrum s = full_spectrum(6);
    const OutputDocument doc{kSchemaVersion, "spectrum 6", spectrum_payload(s, false)};
    const OutputDocument back = parse_document(emit(doc));
    EXPECT_EQ(back, doc);
    EXPECT_EQ(spectrum_from_payload(back.payload), s);
    EXPECT_EQ(emit(back), emit(doc));
}

TEST(Document, KeysSorted) {
    const std::string text = emit({kSchemaVersion, "orbit", orbit_payload(from_string("0001001"),
                                                                          orbit(from_string("0001001")))});
    EXPECT_LT(text.find("\"command\""), text.find("\"payload\""));
    EXPECT_LT(text.find("\"payload\""), text.find("\"schema_version\""));
    EXPECT_LT(text.find("\"canonical\""), text.find("\"members\""));
}

TEST(Document, RejectsBadDocuments) {
    EXPECT_THROW(parse_document("{"), std::invalid_argument);
    EXPECT_THROW(parse_document("{\"command\":\"x\"}"), std::invalid_argument);
    EXPECT_THROW(parse_document("{\"command\":\"x\",\"payload\":{},\"schema_version\":99}"), std::invalid_argument);
}

TEST(Document, SpectrumPayload) {
    const auto p = spectrum_payload(full_spectrum(4), false);
    EXPECT_EQ(p.at("m"), 4);
    EXPECT_EQ(p.at("derived").at("w_1"), 4);
    EXPECT_EQ(p.at("derived").at("w_3"), 6);
    EXPECT_EQ(p.at("derived").at("w_m-1"), 6);
    EXPECT_EQ(p.at("derived").at("w_m"), 7);
    EXPECT_EQ(p.at("total"), 16);
    const auto one = spectrum_payload(full_spectrum(1), true);
    EXPECT_FALSE(one.at("derived").contains("w_2"));
    EXPECT_EQ(one.at("derived").at("w_m-1"), 0);
}

TEST(Document, SpectrumCsv) {
    EXPECT_EQ(spectrum_csv(full_spectrum(4)), "weight,count\n0,1\n4,3\n5,6\n6,4\n7,2\n");
    EXPECT_EQ(spectrum_csv(full_spectrum(1)), "weight,count\n0,1\n1,1\n");
}

TEST(Document, LevelSetRoundTrip) {
    for (const auto& set : level_sets_high(9, 2)) {
        const auto p = level_set_payload(set);
        EXPECT_EQ(level_set_from_payload(p), set);
        std::vector<std::string> members = p.at("members").get<std::vector<std::string>>();
        EXPECT_TRUE(std::is_sorted(members.begin(), members.end()));
    }
}

TEST(Document, ReportRoundTrip) {
    const auto report = verify_all(4, 8);
    const OutputDocument doc{kSchemaVersion, "verify", report_payload(report)};
    const OutputDocument back = parse_document(emit(doc));
    EXPECT_EQ(back, doc);
    const auto again = report_from_payload(back.payload);
    EXPECT_TRUE(again.same_outcome(report));
    ASSERT_EQ(again.checks.size(), report.checks.size());
    for (std::size_t k = 0; k < again.checks.size(); ++k) {
        EXPECT_EQ(again.checks[k].elapsed_ms, report.checks[k].elapsed_ms);
    }
    EXPECT_EQ(back.payload.at("exit_code"), 0);
    EXPECT_EQ(back.payload.at("checks").at(0).at("status"), "pass");
}

TEST(Document, ReportWitnessSerialized) {
    CheckRecord r;
    r.id = "level2";
    r.n_min = r.n_max = 6;
    r.status = CheckStatus::fail;
    r.witness = from_string("010000");
    r.observed = 8;
    r.predicted = 9;
    r.detail = "x";
    const auto back = check_from_payload(check_payload(r));
    EXPECT_TRUE(back.same_outcome(r));
    VerificationReport rep;
    rep.checks.push_back(r);
    EXPECT_NE(report_text(rep).find("fail level2 n=6 witness=010000 observed=8 predicted=9"), std::string::npos);
}

TEST(Document, TriangleAndFamilies) {
    const auto t = triangle_payload(from_string("1011"));
    EXPECT_EQ(t.at("triangle_weight"), 7);
    EXPECT_EQ(t.at("rows").size(), 4u);
    EXPECT_EQ(t.at("s3"), 6);
    EXPECT_FALSE(triangle_payload(from_string("10")).contains("s3"));
    const auto f = families_payload(12);
    bool all_match = true;
    for (const auto& row : f.at("families")) {
        if (row.contains("match")) all_match = all_match && row.at("match").get<bool>();
    }
    EXPECT_TRUE(all_match);
}
