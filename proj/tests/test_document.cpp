#include "detvar/detvar.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace detvar;

namespace {

OutputDocument sample(const std::string& kind) {
  CliOptions o;
  o.command = kind;
  o.m = 4, o.n = 3, o.k = 1;
  if (kind == "fulton" || kind == "milnor") o.m = 3;
  if (kind == "scan") o.m = 3, o.n = 3, o.k.reset();
  o.check = true;
  return compute_document(o);
}

} // namespace

TEST(Document, RoundTripEveryKind) {
  for (auto kind : document_kinds) {
    if (kind == "tables") continue; // covered in test_scan_tables
    const OutputDocument doc = sample(std::string(kind));
    const OutputDocument back = parse_document(to_json_string(doc));
    EXPECT_EQ(back, doc) << kind;
    EXPECT_EQ(to_json_string(back), to_json_string(doc)) << kind;
  }
}

TEST(Document, KnownKinds) {
  EXPECT_TRUE(is_document_kind("cm"));
  EXPECT_TRUE(is_document_kind("charcycle_open"));
  EXPECT_FALSE(is_document_kind("chern"));
}

TEST(Document, JsonFieldsAndOrder) {
  const auto j = to_json(sample("cm"));
  std::vector<std::string> keys;
  for (const auto& [key, v] : j.items()) keys.push_back(key);
  const std::vector<std::string> expected = {"version", "kind",         "m",      "n",    "k", "basis",
                                             "index_origin", "coefficients", "checks", "meta"};
  EXPECT_EQ(keys, expected);
  EXPECT_EQ(j["basis"], "P^l");
  EXPECT_EQ(j["coefficients"][0], to_decimal(cm_class(4, 3, 1)[0]));
  EXPECT_EQ(j["meta"]["tool_version"], DETVAR_VERSION);
}

TEST(Document, ScalarAndMatrixPayloads) {
  const auto g = sample("ged");
  EXPECT_EQ(g.basis, "scalar");
  ASSERT_EQ(g.coefficients.size(), 1u);
  const auto a = sample("amatrix");
  ASSERT_TRUE(a.shape.has_value());
  EXPECT_EQ(a.coefficients.size(), static_cast<std::size_t>(a.shape->first * a.shape->second));
  const auto con = sample("conormal");
  EXPECT_EQ(con.index_origin, 1);
  EXPECT_EQ(con.coefficients.size(), 11u);
}

TEST(Document, Csv) {
  OutputDocument d;
  d.kind = "csm";
  d.m = d.n = 3;
  d.k = 1;
  set_payload(d, csm_class(3, 3, 1));
  EXPECT_EQ(to_csv(d), "9,36,78,108,96,54,18,3,0\n");
  d.checks.push_back({"x", false});
  EXPECT_EQ(to_csv(d), "9,36,78,108,96,54,18,3,0\ncheck,x,fail\n");
}

TEST(Document, CsvMatrixRows) {
  OutputDocument d;
  d.kind = "amatrix";
  set_payload(d, a_matrix(3, 3, 1));
  const std::string csv = to_csv(d);
  EXPECT_EQ(csv.substr(0, 32), "3,9,3,0,0,0,0\n0,-9,-9,0,0,0,0\n0,");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}

TEST(Document, Markdown) {
  OutputDocument d;
  d.kind = "cm";
  d.m = d.n = 2;
  d.k = 1;
  set_payload(d, cm_class(2, 2, 1));
  const std::string md = to_markdown(d);
  EXPECT_NE(md.find("| P^0 | P^1 | P^2 | P^3 |"), std::string::npos) << md;
  EXPECT_NE(md.find("| 4 | 4 | 2 | 0 |"), std::string::npos) << md;
}

TEST(Document, MarkdownBiprojectiveLabels) {
  const std::string md = to_markdown(sample("conormal"));
  EXPECT_NE(md.find("| h1^11h2 |"), std::string::npos) << md;
  EXPECT_NE(md.find("| h1h2^11 |"), std::string::npos) << md;
}

TEST(Document, RejectsMalformed) {
  EXPECT_THROW(parse_document("{"), ContractViolation);
  EXPECT_THROW(parse_document("[]"), ContractViolation);
  auto j = to_json(sample("cm"));
  auto bad = j;
  bad["version"] = 2;
  EXPECT_THROW(parse_document(bad.dump()), ContractViolation);
  bad = j;
  bad["kind"] = "nonsense";
  EXPECT_THROW(parse_document(bad.dump()), ContractViolation);
  bad = j;
  bad["coefficients"][0] = "12a";
  EXPECT_THROW(parse_document(bad.dump()), ContractViolation);
  bad = j;
  bad["coefficients"][0] = 12;
  EXPECT_THROW(parse_document(bad.dump()), ContractViolation);
  bad = j;
  bad.erase("m");
  EXPECT_THROW(parse_document(bad.dump()), ContractViolation);
}

TEST(Document, BigIntegersSurviveAsStrings) {
  OutputDocument d;
  d.kind = "ged";
  set_payload(d, Integer("123456789012345678901234567890"));
  EXPECT_EQ(parse_document(to_json_string(d)).coefficients[0], "123456789012345678901234567890");
}
