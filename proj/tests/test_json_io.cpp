#include <gtest/gtest.h>

#include <sstream>

#include "skewbrace/json_io.hpp"

using namespace skewbrace;

TEST(JsonIo, RecordFieldOrder) {
  const auto r = structured_enumerate(make_context(Family::P2QType1, 3, 2));
  const auto j = to_json(r.braces.front());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items())
    keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"group", "gamma", "circle_type", "kernel_size", "orbit_id"}));
  EXPECT_EQ(j["group"]["family"], "P2Q-Type1");
  EXPECT_EQ(j["gamma"].size(), 18u);
}

TEST(JsonIo, JsonLinesWithSummary) {
  const auto r = structured_enumerate(make_context(Family::P2QType4, 3, 2));
  std::ostringstream out;
  write_jsonl(out, r);
  std::istringstream in(out.str());
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line))
    lines.push_back(line);
  ASSERT_EQ(lines.size(), 57u);
  const auto s = nlohmann::json::parse(lines.back()).at("summary");
  EXPECT_EQ(s["total"], 56);
  EXPECT_EQ(s["method"], "structured");
  EXPECT_EQ(s["counts"]["Type1"], 54);
  EXPECT_EQ(s["counts"]["Type4"], 2);
  std::int64_t sum = 0;
  for (const auto& o : s["orbits"])
    sum += o["length"].get<std::int64_t>();
  EXPECT_EQ(sum, 56);
}

TEST(JsonIo, CayleyRoundTrip) {
  const Group g(make_group(Family::P2QType2, 3, 7));
  const CayleyTable t = g.cayley();
  std::istringstream in(to_json(t).dump());
  const CayleyTable back = read_cayley(in);
  EXPECT_EQ(back.size(), t.size());
  EXPECT_EQ(back.data(), t.data());
  EXPECT_EQ(classify_iso_type(back).type, IsoType::Type2);
}

TEST(JsonIo, MalformedInput) {
  auto code = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_cayley(in);
    } catch (const InvalidInput& e) {
      return e.code();
    }
    return std::string("none");
  };
  EXPECT_EQ(code("{\"n\":3,\"table\":[[0,1,2],[1,2]]}"), "malformed-table");
  EXPECT_EQ(code("not json"), "malformed-table");
  EXPECT_EQ(code("{\"n\":2}"), "malformed-table");
  EXPECT_EQ(code("{\"n\":2,\"table\":[[0,\"x\"],[1,0]]}"), "malformed-table");
  EXPECT_EQ(code("{\"n\":2,\"table\":[[0,1],[1,0]]}"), "none");
}

TEST(JsonIo, FingerprintFields) {
  const auto c = classify_iso_type(Group(make_group(Family::P2QType3, 3, 19)).cayley());
  const auto j = fingerprint_json(c.fingerprint);
  EXPECT_EQ(j["order"], 171);
  EXPECT_EQ(j["center_size"], 1);
  EXPECT_EQ(j.begin().key(), "order");
}
