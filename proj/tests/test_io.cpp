#include <gtest/gtest.h>

#include "ncspec/harness.hpp"
#include "ncspec/io.hpp"

using namespace ncspec;

namespace {

const std::filesystem::path fixture_dir = FIXTURE_DIR;

}  // namespace

TEST(Io, AlgebraRoundTrip) {
  const auto m2 = matrix_algebra<Rational>(FieldSpec::rationals(), 2);
  const Json doc = algebra_to_json(*m2);
  const auto back = algebra_from_json<Rational>(parse_json_text(dump_document(doc), "m2"));
  EXPECT_EQ(algebra_to_json(*back), doc);
}

TEST(Io, ResidueAlgebraRoundTrip) {
  const auto t2 = upper_triangular_algebra<Residue>(FieldSpec::prime(5), 2);
  const Json doc = algebra_to_json(*t2);
  EXPECT_EQ(algebra_field(doc), FieldSpec::prime(5));
  EXPECT_EQ(algebra_to_json(*algebra_from_json<Residue>(doc)), doc);
}

TEST(Io, ShippedFixturesMatchBuiltIns) {
  const std::vector<std::pair<std::string, Fixture>> cases{{"ex-2.4iii.hom.json", fixture_ex1()},
                                                           {"ex-diag-t2.hom.json", fixture_ex2()},
                                                           {"ex-diag-m2.hom.json", fixture_ex3()}};
  for (const auto& [file, fixture] : cases) {
    const auto f = hom_from_json<Rational>(read_json_file(fixture_dir / file), fixture_dir);
    EXPECT_EQ(f.matrix(), fixture.hom.matrix()) << file;
    EXPECT_EQ(algebra_to_json(*f.source()), algebra_to_json(*fixture.hom.source())) << file;
    EXPECT_EQ(algebra_to_json(*f.target()), algebra_to_json(*fixture.hom.target())) << file;
  }
}

TEST(Io, ParseErrorReportsLineAndColumn) {
  try {
    parse_json_text("{\n  \"dim\": 2,\n  \"mul\": [}\n", "bad.json");
    FAIL() << "malformed JSON accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Io, BadEntryNamesItsPath) {
  Json doc = algebra_to_json(*matrix_algebra<Rational>(FieldSpec::rationals(), 2));
  doc["mul"][0][1][0] = "x";
  try {
    algebra_from_json<Rational>(doc);
    FAIL() << "bad scalar accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("mul[0][1]"), std::string::npos) << e.what();
  }
}

TEST(Io, CorruptedTableIsRejected) {
  Json doc = read_json_file(fixture_dir / "t2_q.json");
  doc["mul"][1][1] = doc["mul"][2][2];
  EXPECT_THROW(algebra_from_json<Rational>(doc), ValidationError);
}

TEST(Io, AnalysisReportSatisfiesSchema) {
  for (const auto& fixture : all_fixtures()) {
    const HomContext<Rational> ctx(fixture.hom);
    const Json report = analysis_to_json(ctx, theorem_3_15_verify(ctx));
    EXPECT_TRUE(report_schema_violations(report).empty()) << fixture.name;
    EXPECT_EQ(parse_json_text(dump_document(report), "report"), report);
  }
}

TEST(Io, SchemaViolationsAreReported) {
  const HomContext<Rational> ctx(fixture_ex2().hom);
  Json report = analysis_to_json(ctx, theorem_3_15_verify(ctx));
  report.erase("witnesses");
  EXPECT_FALSE(report_schema_violations(report).empty());
  EXPECT_FALSE(report_schema_violations(Json::object()).empty());
}

TEST(Io, DumpKeepsScalarArraysOnOneLine) {
  const std::string text = dump_document(parse_json_text(R"({"a":[1,2,3],"b":{"c":[[1],[2]]}})", "t"));
  EXPECT_NE(text.find("[1,2,3]"), std::string::npos) << text;
}
