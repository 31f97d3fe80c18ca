#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gkm/builtins.hpp"
#include "gkm/dsl.hpp"
#include "gkm/errors.hpp"
#include "gkm/moment_graph.hpp"

using namespace gkm;

namespace {

LinearForm L(const char* text, std::size_t k) { return dsl::parseLinearForm(text, k); }

CheckResult check(const ValidationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no check " + name);
}

MomentGraph triangle() {
  MomentGraph g(2);
  g.addVertex("a", std::vector<Rational>{0, 0});
  g.addVertex("b", std::vector<Rational>{1, 0});
  g.addVertex("c", std::vector<Rational>{0, 1});
  g.addEdge("a", "b", L("t1", 2));
  g.addEdge("a", "c", L("t2", 2));
  g.addEdge("b", "c", L("t2 - t1", 2));
  g.setXi(std::vector<Rational>{1, 2});
  return g;
}

}  // namespace

TEST(MomentGraph, ShapeChecks) {
  MomentGraph g(2);
  EXPECT_THROW(g.addVertex("x", std::vector<Rational>{1}), std::invalid_argument);
  EXPECT_THROW(g.addEdge("a", "b", L("t1", 3)), std::invalid_argument);
  EXPECT_THROW(g.setXi(std::vector<Rational>{1, 2, 3}), std::invalid_argument);
  EXPECT_THROW((void)g.requireIndex("nope"), std::invalid_argument);
}

TEST(Validate, TriangleIsValid) {
  const auto r = validate(triangle());
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.firstFailure(), nullptr);
  EXPECT_EQ(r.checks.size(), 6U);
  EXPECT_EQ(check(r, kCheckPositions).status, CheckStatus::Pass);
}

TEST(Validate, DuplicateNames) {
  MomentGraph g(1);
  g.addVertex("a");
  g.addVertex("a");
  const auto r = validate(g);
  EXPECT_EQ(check(r, kCheckUniqueNames).status, CheckStatus::Fail);
  EXPECT_THROW(requireValid(g), ValidationError);
}

TEST(Validate, MissingEndpoint) {
  MomentGraph g(1);
  g.addVertex("a");
  g.addEdge("a", "ghost", L("t1", 1));
  const auto& c = check(validate(g), kCheckEndpointsExist);
  EXPECT_EQ(c.status, CheckStatus::Fail);
  EXPECT_EQ(c.offenders, std::vector<std::string>{"a->ghost"});
}

TEST(Validate, CycleAndSelfLoop) {
  MomentGraph g(2);
  g.addVertex("a");
  g.addVertex("b");
  g.addEdge("a", "b", L("t1", 2));
  g.addEdge("b", "a", L("t2", 2));
  EXPECT_EQ(check(validate(g), kCheckAcyclic).status, CheckStatus::Fail);

  MomentGraph loop(1);
  loop.addVertex("a");
  loop.addEdge("a", "a", L("t1", 1));
  EXPECT_EQ(check(validate(loop), kCheckAcyclic).status, CheckStatus::Fail);
}

TEST(Validate, ProportionalDirectionsAtVertex) {
  MomentGraph g(2);
  g.addVertex("a");
  g.addVertex("b");
  g.addVertex("c");
  g.addEdge("a", "b", L("t1 - t2", 2));
  g.addEdge("a", "c", L("2*t2 - 2*t1", 2));
  const auto& c = check(validate(g), kCheckDistinctDirections);
  EXPECT_EQ(c.status, CheckStatus::Fail);
  ASSERT_EQ(c.offenders.size(), 1U);
  EXPECT_NE(c.offenders[0].find("a"), std::string::npos);
}

TEST(Validate, XiMustBeGeneric) {
  auto g = triangle();
  g.setXi(std::vector<Rational>{1, 1});  // kills t2 - t1
  EXPECT_EQ(check(validate(g), kCheckXiGeneric).status, CheckStatus::Fail);
  g.setXi(std::nullopt);
  EXPECT_EQ(check(validate(g), kCheckXiGeneric).status, CheckStatus::Skipped);
}

TEST(Validate, PositionsMustBePositiveMultiples) {
  MomentGraph g(1);
  g.addVertex("s", std::vector<Rational>{0});
  g.addVertex("n", std::vector<Rational>{-1});
  g.addEdge("s", "n", L("t1", 1));
  EXPECT_EQ(check(validate(g), kCheckPositions).status, CheckStatus::Fail);

  MomentGraph bare(1);
  bare.addVertex("s");
  bare.addVertex("n");
  bare.addEdge("s", "n", L("t1", 1));
  EXPECT_EQ(check(validate(bare), kCheckPositions).status, CheckStatus::Skipped);
}

TEST(Order, DownDegreesAndPalaisSmale) {
  const auto g = triangle();
  EXPECT_EQ(downDegrees(g), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(downDegree(g, "c"), 2);
  EXPECT_TRUE(palaisSmaleCheck(g).holds);
  EXPECT_THROW(downDegree(g, "zzz"), std::invalid_argument);
}

TEST(Order, OrientFromXiFlipsEdges) {
  auto g = triangle();
  std::vector<Edge> flipped;
  for (const auto& e : g.edges()) flipped.push_back(Edge{e.north, e.south, -e.direction});
  g.setEdges(flipped);
  const auto oriented = orientFromXi(g);
  EXPECT_EQ(oriented.edges().front().south, "a");
  EXPECT_EQ(oriented.edges().front().north, "b");
  EXPECT_TRUE(validate(oriented).valid());

  auto noXi = triangle();
  noXi.setXi(std::nullopt);
  EXPECT_THROW(orientFromXi(noXi), std::invalid_argument);
}

TEST(Order, UpSetsAndLinearExtension) {
  const auto g = triangle();
  const auto up = upSets(g);
  EXPECT_TRUE(up[0][2]);
  EXPECT_TRUE(up[1][1]);
  EXPECT_FALSE(up[2][0]);
  EXPECT_EQ(linearExtension(g), (std::vector<std::size_t>{0, 1, 2}));
  const auto inc = incidence(g);
  EXPECT_EQ(inc.below[2].size(), 2U);
  EXPECT_EQ(inc.above[0].size(), 2U);
}

TEST(Builtins, SizesAndValidity) {
  struct Case {
    MomentGraph g;
    std::size_t vertices;
    std::size_t edges;
  };
  const std::vector<Case> cases{
      {builtins::cp1(), 2, 1},
      {builtins::cpn(3), 4, 6},
      {builtins::flag(3), 6, 9},
      {builtins::flag(4), 24, 72},
      {builtins::grassmannian(2, 4), 6, 12},
      {builtins::grassmannian(2, 5), 10, 30},
      {builtins::paperFlag3(), 6, 9},
      {builtins::paperQuadric(), 6, 12},
      {builtins::paperHessenberg(), 6, 6},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(c.g.vertexCount(), c.vertices);
    EXPECT_EQ(c.g.edges().size(), c.edges);
    EXPECT_TRUE(validate(c.g).valid());
  }
}

TEST(Builtins, EdgesPerVertex) {
  for (int n = 2; n <= 5; ++n) {
    const auto g = builtins::flag(n);
    std::vector<int> deg(g.vertexCount(), 0);
    for (const auto& e : g.edges()) {
      ++deg[g.requireIndex(e.south)];
      ++deg[g.requireIndex(e.north)];
    }
    for (int d : deg) EXPECT_EQ(d, n * (n - 1) / 2);
  }
  for (auto [k, n] : {std::pair{1, 3}, {2, 4}, {2, 5}, {3, 6}}) {
    const auto g = builtins::grassmannian(k, n);
    std::vector<int> deg(g.vertexCount(), 0);
    for (const auto& e : g.edges()) {
      ++deg[g.requireIndex(e.south)];
      ++deg[g.requireIndex(e.north)];
    }
    for (int d : deg) EXPECT_EQ(d, k * (n - k));
  }
}

TEST(Builtins, FlagDownDegreeIsInversionCount) {
  const auto g = builtins::flag(4);
  for (const auto& v : g.vertices()) {
    int inversions = 0;
    for (std::size_t i = 0; i < v.name.size(); ++i) {
      for (std::size_t j = i + 1; j < v.name.size(); ++j) inversions += v.name[i] > v.name[j] ? 1 : 0;
    }
    EXPECT_EQ(downDegree(g, v.name), inversions) << v.name;
  }
}

TEST(Builtins, HessenbergIsNotPalaisSmale) {
  const auto ps = palaisSmaleCheck(builtins::paperHessenberg());
  EXPECT_FALSE(ps.holds);
  EXPECT_FALSE(ps.violatingEdges.empty());
  EXPECT_TRUE(palaisSmaleCheck(builtins::paperFlag3()).holds);
  EXPECT_TRUE(palaisSmaleCheck(builtins::paperQuadric()).holds);
}

TEST(Builtins, ByNameAndParameterErrors) {
  EXPECT_EQ(builtins::byName("cpn", {.n = 2}), builtins::cpn(2));
  EXPECT_EQ(builtins::byName("grassmannian", {.n = 4, .k = 2}), builtins::grassmannian(2, 4));
  EXPECT_THROW(builtins::byName("cpn"), std::invalid_argument);
  EXPECT_THROW(builtins::byName("nope"), std::invalid_argument);
  EXPECT_THROW(builtins::flag(0), std::invalid_argument);
  EXPECT_THROW(builtins::grassmannian(3, 2), std::invalid_argument);
}
