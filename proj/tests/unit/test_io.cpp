#include <gtest/gtest.h>

#include <sstream>

#include "daha_lab/io.hpp"

using namespace dahalab;

TEST(Io, WalkRecord) {
  const io::Json r = io::walk_record({Weight::fundamental(3, 1), {1, 2, 3}});
  EXPECT_EQ(r["flavor"], "sl");
  EXPECT_EQ(r["base"], (io::Json{1, 0, 0}));
  EXPECT_EQ(r["weights"], (io::Json{"4/3", "-8/3", "-14/3"}));
}

TEST(Io, JsonDocumentShape) {
  io::Emitter em(io::Format::Json, "walks", io::Json{{"N", 2}});
  em.record(io::Json{{"a", 1}});
  em.summary("count", 1);
  std::ostringstream os;
  em.write(os);
  const io::Json doc = io::Json::parse(os.str());
  EXPECT_EQ(doc["schema"], io::kSchema);
  EXPECT_EQ(doc["command"], "walks");
  EXPECT_EQ(doc["records"].size(), 1u);
  EXPECT_EQ(doc["summary"]["count"], 1);
}

TEST(Io, CsvQuotesNestedValues) {
  io::Emitter em(io::Format::Csv, "walks", io::Json::object());
  em.record(io::Json{{"id", 0}, {"steps", {1, 2}}});
  std::ostringstream os;
  em.write(os);
  EXPECT_EQ(os.str(), "id,steps\n0,\"[1,2]\"\n");
}

TEST(Io, TableauFromJson) {
  const auto T = io::tableau_from_json(io::Json::parse(R"({"lambda":[1,0],"rows":[[1,2],[3,4]]})"), Flavor::GL, 2);
  EXPECT_EQ(T.diag_vector(), (std::vector<Rational>{1, 2, -1, 0}));
  EXPECT_THROW(io::tableau_from_json(io::Json::parse(R"({"rows":[[1]]})"), Flavor::GL, 1), std::invalid_argument);
  EXPECT_THROW(io::tableau_from_json(io::Json::parse(R"({"lambda":[0,1],"rows":[[1],[2]]})"), Flavor::GL, 1),
               std::invalid_argument);
  EXPECT_THROW(io::tableau_from_json(io::Json::parse(R"({"lambda":[0,0],"rows":[[1,2]]})"), Flavor::GL, 1),
               std::invalid_argument);
}

TEST(Io, ParseFormat) {
  EXPECT_EQ(io::parse_format("csv"), io::Format::Csv);
  EXPECT_THROW(io::parse_format("xml"), std::invalid_argument);
}
