#include "dyadic/io.h"

#include <gtest/gtest.h>

#include <sstream>

#include "dyadic/status.h"

namespace dyadic {
namespace {

TEST(PointPairs, RoundTrip) {
  const Scene scene = GenScene(11, SceneParams{});
  std::stringstream buffer;
  WritePointPairs(buffer, scene.pairs);
  const std::vector<PointPair> back = ReadPointPairs(buffer);
  ASSERT_EQ(back.size(), scene.pairs.size());
  for (size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].u, scene.pairs[i].u);
    EXPECT_EQ(back[i].v, scene.pairs[i].v);
  }
}

TEST(PointPairs, AcceptsStringsAndBlankLines) {
  std::istringstream in(
      "{\"u\":[1,\"123456789012345678901234567890\",-3],\"v\":[4,5,6]}\n\n"
      "{\"v\":[0,0,1],\"u\":[1,0,0]}\n");
  const auto pairs = ReadPointPairs(in);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].u[1], mpz_class("123456789012345678901234567890"));
  EXPECT_EQ(pairs[0].u[2], -3);
  EXPECT_EQ(pairs[1].v[2], 1);
}

TEST(PointPairs, MalformedInput) {
  for (const char* text : {"{\"u\":[1,2],\"v\":[1,2,3]}", "not json", "[1,2,3]",
                           "{\"u\":[1,2,3.5],\"v\":[1,2,3]}",
                           "{\"u\":[1,2,\"x\"],\"v\":[1,2,3]}"}) {
    std::istringstream in(text);
    try {
      ReadPointPairs(in);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.status(), Status::kMalformedInput) << text;
    }
  }
}

TEST(Candidates, RoundTrip) {
  EssentialCandidate c;
  c.e = {0, 0, 0, 0, 0, 65535, 0, 1, 0};
  c.precision = 16;
  c.method = Method::kSevenPoint;
  c.seed = "x=1";
  c.iterations = 15;
  c.witness = FindUnitMinor(c.e);
  c.valid = true;
  const std::string line = CandidateToJson(c);
  EXPECT_NE(line.find("\"2:16:1111111111111111\""), std::string::npos);
  const EssentialCandidate back = CandidateFromJson(line);
  EXPECT_EQ(back.e, c.e);
  EXPECT_EQ(back.precision, 16);
  EXPECT_EQ(back.method, Method::kSevenPoint);
  EXPECT_EQ(back.seed, "x=1");
  EXPECT_EQ(back.iterations, 15);
  ASSERT_TRUE(back.witness.has_value());
  EXPECT_EQ(back.witness->row, c.witness->row);
  EXPECT_TRUE(back.valid);
}

TEST(Candidates, SkipsCommentLines) {
  EssentialCandidate c;
  c.e = {0, 0, 0, 0, 0, 1, 0, 1, 0};
  c.precision = 4;
  std::istringstream in(CandidateToJson(c) + "\n# iterations: 3\n\n");
  EXPECT_EQ(ReadCandidates(in).size(), 1u);
}

TEST(Candidates, Malformed) {
  EXPECT_THROW(CandidateFromJson("{\"method\":\"9pt\",\"precision\":4,\"E\":[]}"), Error);
  EXPECT_THROW(CandidateFromJson("{\"method\":\"8pt\",\"precision\":4,\"E\":[1]}"), Error);
  EXPECT_THROW(CandidateFromJson("{"), Error);
}

TEST(GroundTruth, RoundTrip) {
  const Scene scene = GenScene(5, SceneParams{});
  std::stringstream buffer;
  WriteGroundTruth(buffer, scene);
  EXPECT_EQ(ReadGroundTruthEssential(buffer), scene.essential_numerator);
}

}  // namespace
}  // namespace dyadic
