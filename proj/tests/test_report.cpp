#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "agkit/report.hpp"

using namespace agkit;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Report& reference() {
  static const Report r = verify_paper();
  return r;
}

Catalog tampered() {
  Catalog c = Catalog::standard();
  AlgebraTables t = c.si[1].tables();
  t.quote[1] = 1;
  c.si[1] = FiniteAlgebra(t);
  return c;
}

}  // namespace

TEST(FullRun, EveryExpectationIsMet) {
  const Report& r = reference();
  EXPECT_EQ(r.records.size(), expectations().size());
  EXPECT_EQ(r.mismatches(), 0u);
  EXPECT_EQ(r.exit_code(), 0);
  for (const auto& rec : r.records) EXPECT_TRUE(rec.ok()) << rec.id << " " << rec.detail.dump();
}

TEST(FullRun, ExpectationsComeFromTheTable) {
  for (const auto& rec : reference().records) {
    const Expectation& e = find_expectation(rec.id);
    ASSERT_TRUE(rec.expected);
    EXPECT_EQ(*rec.expected, e.expected) << rec.id;
    EXPECT_EQ(rec.label, e.label);
  }
  EXPECT_THROW(find_expectation("no/such/record"), Error);
}

TEST(FullRun, TamperedTablesAreCaught) {
  const Report r = verify_paper(tampered());
  EXPECT_GE(r.mismatches(), 3u);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_FALSE(r.find("ap/G")->ok() && r.find("axioms/3_dblst/DUAL_STONE")->ok() &&
               r.find("base/3_dblst/RDBLST")->ok());
}

TEST(FullRun, IndependentOfThreadCount) {
  Limits one, many;
  one.threads = 1;
  many.threads = 8;
  EXPECT_EQ(dump_report(verify_paper(Catalog::standard(), one)), dump_report(verify_paper(Catalog::standard(), many)));
}

TEST(ReportJson, RoundTrips) {
  const std::string text = dump_report(reference());
  const Report back = load_report(text);
  EXPECT_EQ(back, reference());
  EXPECT_EQ(dump_report(back), text);
  const Json j = Json::parse(text);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["command"], "verify-paper");
}

TEST(ReportJson, MalformedInputIsAParseError) {
  EXPECT_THROW(load_report("{\"records\": [}"), ParseError);
  EXPECT_THROW(load_report("[]"), Error);
}

TEST(Certificates, ObstructionCarriesCensus) {
  const Diagram d = Diagram::first(builtin("2"), builtin("3_dblst"), builtin("3_klst"));
  const Json j = certificate_json(d, decide_amalgamation(variety("G"), d));
  EXPECT_EQ(j["amalgamable"], false);
  EXPECT_EQ(j["side"], "LEFT");
  EXPECT_EQ(j["hom_census"].size(), 3u);
}

TEST(Expectations, FileMatchesSerializer) {
  EXPECT_EQ(read(AGKIT_SOURCE_DIR "/data/expectations.tsv"), serialize_expectations());
}

TEST(Markdown, SummaryLine) {
  const std::string md = render_markdown(reference());
  EXPECT_NE(md.find(std::to_string(reference().records.size()) + " records, 0 mismatches"), std::string::npos);
}

TEST(Markdown, LatticeMarksAPVarieties) {
  std::vector<APReport> reports;
  for (const auto& v : all_varieties()) reports.push_back(classify_ap(v));
  const std::string grid = render_ap_lattice(reports);
  std::vector<std::string> rows;
  std::istringstream in(grid);
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_NE(rows[2].find("AG V(2,3_dblst,3_klst,4_dmba): AP no"), std::string::npos) << rows[2];
  EXPECT_NE(rows[4].find("RDBLST"), std::string::npos);
  EXPECT_NE(rows[4].find("AP yes"), std::string::npos);
  EXPECT_NE(rows[5].find("| BA "), std::string::npos) << rows[5];
}
