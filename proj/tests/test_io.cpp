#include "kerov/io.hpp"

#include <gtest/gtest.h>

#include "testing_util.hpp"

namespace kerov {
namespace {

TEST(Json, DiagramRoundTrip) {
  auto d = convert_diagram<double>(to_diagram(profile_of(Partition({4, 2, 2, 2}))));
  auto back = diagram_from_json(to_json(d));
  EXPECT_EQ(back, d);
}

TEST(Json, PartitionFileGivesProfile) {
  json j{{"partition", {2, 1}}};
  auto d = diagram_from_json(j);
  EXPECT_EQ(d, convert_diagram<double>(to_diagram(profile_of(Partition({2, 1})))));
}

TEST(Json, RejectsUnknownShape) {
  EXPECT_THROW(diagram_from_json(json{{"something", 1}}), std::invalid_argument);
}

TEST(Json, ExactMeasureFormat) {
  auto mu = transition_measure(profile_of(staircase(2)));
  json j = to_json_exact(mu);
  ASSERT_EQ(j.at("atoms").size(), 3u);
  // {-2: 3/8}
  EXPECT_EQ(j["atoms"][0][0].get<long long>(), -2);
  EXPECT_EQ(j["atoms"][0][1].get<long long>(), 3);
  EXPECT_EQ(j["atoms"][0][2].get<long long>(), 8);
}

TEST(Json, FloatMeasureFormat) {
  auto mu = convert_measure<double>(transition_measure(profile_of(Partition({1}))));
  json j = to_json(mu);
  EXPECT_DOUBLE_EQ(j["atoms"][0][0].get<double>(), -1.0);
  EXPECT_DOUBLE_EQ(j["atoms"][0][1].get<double>(), 0.5);
}

TEST(Json, Reports) {
  CdfEstimate est{0.5, 0.01, 256, true};
  json j = to_json(est);
  EXPECT_EQ(j["resolution"], 256);
  EXPECT_TRUE(j["converged"].get<bool>());

  BoundReport<double> rep{0.2, 0.75, BoundSide::upper, 0.05, 0.0};
  json jr = to_json(rep);
  EXPECT_EQ(jr["side"], "upper");
  EXPECT_DOUBLE_EQ(jr["bound_value"].get<double>(), 0.75);
}

TEST(Csv, SeventeenDigits) {
  EXPECT_EQ(format_float(0.1), "0.10000000000000001");
  EXPECT_EQ(format_float(1.0), "1");
}

}  // namespace
}  // namespace kerov
