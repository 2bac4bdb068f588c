#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "tauroot/error.hpp"
#include "tauroot/mckay.hpp"

using namespace tauroot;

namespace {

const CyclicWeights k5{5, {1, 3, 3, 3}};
const CyclicWeights k6{6, {1, 1, 1, 4, 5}};

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no tauroot::Error thrown";
  return Errc::InvalidArgument;
}

ColoredQuiver quiver_of(std::vector<std::string> vs, std::vector<std::tuple<std::string, std::string, int>> as) {
  ColoredQuiver q;
  for (auto& v : vs) q.add_vertex(v);
  for (auto& [s, d, m] : as) q.add_arrow(s, d, m);
  return q;
}

}  // namespace

TEST(McKay, FiveOneThreeThreeThree) {
  const auto q = mckay_quiver(k5);
  ASSERT_EQ(q.vertex_count(), 5u);
  for (int j = 0; j < 5; ++j) {
    const auto s = std::to_string(j);
    EXPECT_EQ(q.multiplicity(s, std::to_string((j + 1) % 5)), 1);
    EXPECT_EQ(q.multiplicity(s, std::to_string((j + 3) % 5)), 3);
  }
  for (const auto& a : q.arrows) {
    ASSERT_TRUE(a.color.has_value());
    EXPECT_EQ(a.mult, 1);
  }
}

TEST(McKay, SixOneOneOneFourFive) {
  const auto q = mckay_quiver(k6);
  for (int j = 0; j < 6; ++j) {
    const auto s = std::to_string(j);
    EXPECT_EQ(q.multiplicity(s, std::to_string((j + 1) % 6)), 3);
    EXPECT_EQ(q.multiplicity(s, std::to_string((j + 4) % 6)), 1);
    EXPECT_EQ(q.multiplicity(s, std::to_string((j + 5) % 6)), 1);
  }
}

TEST(McKay, TrivialGroup) {
  const auto q = mckay_quiver({1, {0, 0}});
  ASSERT_EQ(q.vertex_count(), 1u);
  EXPECT_EQ(q.arrows.size(), 2u);
  EXPECT_EQ(q.multiplicity("0", "0"), 2);
}

TEST(McKay, Errors) {
  EXPECT_EQ(code_of([] { mckay_quiver({5, {1, 3, 3, 4}}); }), Errc::NotSL);
  EXPECT_EQ(code_of([] { mckay_quiver({5, {1, 3, 3, 8}}); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { mckay_quiver({0, {0}}); }), Errc::InvalidArgument);
}

TEST(McKay, DegreesPerColor) {
  const auto q = mckay_quiver(k6);
  for (int c = 0; c < 5; ++c)
    for (const auto& v : q.vertices) {
      int in = 0, out = 0;
      for (const auto& a : q.arrows) {
        if (a.color != c) continue;
        out += a.src == v.id ? a.mult : 0;
        in += a.dst == v.id ? a.mult : 0;
      }
      EXPECT_EQ(in, 1);
      EXPECT_EQ(out, 1);
    }
}

TEST(Hereditary, Examples) {
  EXPECT_TRUE(is_hereditary_quotient(mckay_quiver(k5), {{1, 2}}));
  EXPECT_TRUE(is_hereditary_quotient(mckay_quiver(k6), {{0, 3}}));
  EXPECT_TRUE(quotient_quiver(mckay_quiver(k6), {{0, 3}}).arrows.empty());
  EXPECT_FALSE(is_hereditary_quotient(mckay_quiver(k6), {{0, 1}}));
  EXPECT_FALSE(is_hereditary_quotient(mckay_quiver(k5), {{0, 1, 2, 3, 4}}));
  const auto quot = quotient_quiver(mckay_quiver(k5), {{1, 2}});
  EXPECT_EQ(quot, quiver_of({"1", "2"}, {{"1", "2", 1}}));
}

TEST(Hereditary, MonochromaticCycle) {
  // Color 0 is 0 -> 1 -> 2 -> 0 on Z/3.
  EXPECT_FALSE(is_hereditary_quotient(mckay_quiver({3, {1, 2}}), {{0, 1, 2}}));
  EXPECT_TRUE(is_hereditary_quotient(mckay_quiver({3, {1, 2}}), {{0}}));
}

TEST(SubsetSum, Examples) {
  EXPECT_EQ(subset_sum_count(k6, 2, 0), 3u);
  EXPECT_EQ(subset_sum_count(k5, 0, 0), 1u);
  EXPECT_EQ(subset_sum_count(k5, 2, 1), 3u);
  EXPECT_EQ(subset_sum_count(k5, 2, -4), 3u);
  EXPECT_EQ(subset_sum_count(k5, 5, 0), 0u);
  for (int k = 0; k <= 5; ++k)
    for (int s = -6; s < 12; ++s) EXPECT_EQ(subset_sum_count(k6, k, s), oracle::subset_count(6, k6.weights, k, s));
}

TEST(ARAngle, FiveExample) {
  const auto a = ar_angle(k5, {{1, 2}}, 1);
  ASSERT_EQ(a.terms.size(), 3u);
  EXPECT_EQ(a.terms[0], (std::map<int, std::uint64_t>{{2, 1}}));
  EXPECT_EQ(a.terms[1], (std::map<int, std::uint64_t>{{2, 3}}));
  EXPECT_TRUE(a.terms[2].empty());
  EXPECT_EQ(a.term_size(0), 3);
  EXPECT_EQ(a.term_size(2), 1);
}

TEST(ARAngle, SixExample) {
  const auto a = ar_angle(k6, {{0}}, 0);
  ASSERT_EQ(a.terms.size(), 4u);
  EXPECT_TRUE(a.terms[0].empty());
  EXPECT_EQ(a.terms[1], (std::map<int, std::uint64_t>{{0, 3}}));
  EXPECT_EQ(a.terms[2], (std::map<int, std::uint64_t>{{0, 3}}));
  EXPECT_TRUE(a.terms[3].empty());
}

TEST(ARAngle, FullCutSinkTermIsInArrows) {
  const auto q = mckay_quiver(k6);
  for (int j = 0; j < 6; ++j) {
    const auto a = ar_angle(k6, {{0, 1, 2, 3, 4, 5}}, j);
    std::map<int, std::uint64_t> in;
    for (const auto& arr : q.arrows)
      if (arr.dst == std::to_string(j)) in[std::stoi(arr.src)] += static_cast<std::uint64_t>(arr.mult);
    EXPECT_EQ(a.terms.back(), in);
  }
}

TEST(ARAngle, Errors) {
  EXPECT_EQ(code_of([] { ar_angle(k5, {{1, 2}}, 3); }), Errc::VertexNotKept);
  EXPECT_EQ(code_of([] { ar_angle({5, {1, 3, 3, 4}}, {{1}}, 1); }), Errc::NotSL);
  EXPECT_EQ(code_of([] { ar_angle(k5, {{1, 1}}, 1); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { ar_angle(k5, {{7}}, 7); }), Errc::InvalidArgument);
}

TEST(HQuiver, D3Figure) {
  const auto h = h_quiver_d3(k5, {{1, 2}});
  const auto want = quiver_of({"(1,0)", "(2,0)", "(1,-1)", "(2,-1)"},
                              {{"(1,0)", "(2,0)", 1}, {"(1,-1)", "(2,-1)", 1}, {"(1,0)", "(2,-1)", 3}, {"(2,0)", "(1,-1)", 3}});
  EXPECT_EQ(merge_colors(h).arrows.size(), 4u);
  ColoredQuiver plain = h;
  for (auto& v : plain.vertices) v.level.reset();
  EXPECT_EQ(plain, want);
}

TEST(HQuiver, D3EmptyAndKronecker) {
  EXPECT_EQ(h_quiver_d3(k5, {{}}), ColoredQuiver{});
  // 1/4(1,1,3,3): four pairs sum to 0, so a single kept vertex gives the
  // 4-Kronecker quiver.
  const CyclicWeights k4{4, {1, 1, 3, 3}};
  ASSERT_EQ(subset_sum_count(k4, 2, 0), 4u);
  const auto h = h_quiver_d3(k4, {{0}});
  ASSERT_EQ(h.vertex_count(), 2u);
  EXPECT_EQ(h.multiplicity("(0,0)", "(0,-1)"), 4);
  EXPECT_EQ(h.arrows.size(), 1u);
  // No pair of 1/5(1,3,3,3) sums to 0: two isolated vertices.
  EXPECT_TRUE(h_quiver_d3(k5, {{0}}).arrows.empty());
}

TEST(HQuiver, D3Errors) {
  EXPECT_EQ(code_of([] { h_quiver_d3(k6, {{0}}); }), Errc::WrongDimension);
  EXPECT_EQ(code_of([] { h_quiver_d3(k5, {{0, 1, 2, 3, 4}}); }), Errc::NotHereditary);
}

TEST(HQuiver, D4SingleColumn) {
  const auto h = h_quiver_d4(k6, {{0}});
  ASSERT_EQ(h.vertex_count(), 3u);
  EXPECT_EQ(h.multiplicity("(0,0)", "(0,-1)"), 3);
  EXPECT_EQ(h.multiplicity("(0,-1)", "(0,-2)"), 3);
  EXPECT_EQ(h.multiplicity("(0,0)", "(0,-2)"), 3);
  EXPECT_EQ(h.arrows.size(), 3u);
}

TEST(HQuiver, D4TwoColumns) {
  const auto h = h_quiver_d4(k6, {{0, 3}});
  ASSERT_EQ(h.vertex_count(), 6u);
  for (const char* j : {"0", "3"}) {
    const std::string c = j;
    EXPECT_EQ(h.multiplicity("(" + c + ",0)", "(" + c + ",-1)"), 3);
    EXPECT_EQ(h.multiplicity("(" + c + ",-1)", "(" + c + ",-2)"), 3);
    EXPECT_EQ(h.multiplicity("(" + c + ",0)", "(" + c + ",-2)"), 3);
  }
  for (auto [j, l] : {std::pair{"0", "3"}, std::pair{"3", "0"}}) {
    const std::string a = j, b = l;
    EXPECT_EQ(h.multiplicity("(" + a + ",0)", "(" + b + ",-1)"), 1);
    EXPECT_EQ(h.multiplicity("(" + a + ",-1)", "(" + b + ",-2)"), 1);
    EXPECT_EQ(h.multiplicity("(" + a + ",0)", "(" + b + ",-2)"), 1);
  }
  EXPECT_EQ(h.arrows.size(), 12u);
}

TEST(HQuiver, D4Errors) {
  EXPECT_EQ(code_of([] { h_quiver_d4(k6, {{0, 1}}); }), Errc::NotSemisimple);
  EXPECT_EQ(code_of([] { h_quiver_d4(k5, {{1}}); }), Errc::WrongDimension);
  EXPECT_EQ(h_quiver_d4(k6, {{}}), ColoredQuiver{});
}

TEST(McKayJson, RoundTrips) {
  EXPECT_EQ(weights_to_json(k6).dump(), R"({"n":6,"weights":[1,1,1,4,5]})");
  const auto w = weights_from_json(weights_to_json(k6));
  EXPECT_EQ(w.n, 6);
  EXPECT_EQ(w.weights, k6.weights);
  EXPECT_EQ(cut_from_json(Json::parse(R"({"kept":[3,0]})")).kept, (std::vector<int>{3, 0}));
  EXPECT_EQ(code_of([] { weights_from_json(Json::parse(R"({"n":6})")); }), Errc::SchemaError);
  EXPECT_EQ(ar_angle_to_json(ar_angle(k5, {{1, 2}}, 1)).dump(),
            R"({"source":1,"terms":[{"size":3,"mult":{"2":1}},{"size":2,"mult":{"2":3}},{"size":1,"mult":{}}]})");
}
