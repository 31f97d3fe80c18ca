#include <gtest/gtest.h>

#include "gkm/builtins.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "support.hpp"

using namespace gkm;
using support::tuple;

TEST(GkmClass, ZeroValuesAreNotStored) {
  const auto g = builtins::cpn(2);
  auto c = tuple(g, 1, {"0", "t1", "t2"});
  EXPECT_EQ(c.values().size(), 2U);
  EXPECT_TRUE(c.at("p1").isZero());
  EXPECT_EQ(formatTuple(g, c), "(0,t1,t2)");
  c.set("p2", Polynomial(2));
  EXPECT_EQ(formatTuple(g, c), "(0,0,t2)");
  EXPECT_EQ(GkmClass::unit(g), tuple(g, 0, {"1", "1", "1"}));
}

TEST(Sections, Cp2Dimensions) {
  const auto g = builtins::cpn(2);
  std::vector<std::size_t> dims;
  for (int d = 0; d <= 4; ++d) dims.push_back(sectionDimension(g, d));
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 3, 6, 9, 12}));
}

TEST(Sections, BasisClassesPassTheEdgeConditions) {
  const auto g = builtins::paperQuadric();
  for (int d = 0; d <= 3; ++d) {
    const auto basis = sectionBasis(g, d);
    EXPECT_EQ(basis.dimension, sectionDimension(g, d));
    EXPECT_EQ(basis.basis.size(), basis.dimension);
    for (const auto& c : basis.basis) {
      EXPECT_TRUE(checkClass(g, c).ok);
      EXPECT_EQ(c.degree(), d);
    }
  }
}

TEST(Sections, NegativeDegreeRejected) {
  EXPECT_THROW(sectionDimension(builtins::cp1(), -1), std::invalid_argument);
}

TEST(Hilbert, Cp1) {
  const auto h = hilbert(builtins::cp1(), 4);
  EXPECT_EQ(h.dims, (std::vector<std::size_t>{1, 2, 2, 2, 2}));
  ASSERT_TRUE(h.betti);
  EXPECT_EQ(*h.betti, (std::vector<long>{1, 1}));
  EXPECT_TRUE(h.free);
}

TEST(Hilbert, ThreadCountDoesNotChangeResult) {
  const auto g = builtins::grassmannian(2, 4);
  const auto a = hilbert(g, 6, 1);
  const auto b = hilbert(g, 6, 3);
  EXPECT_EQ(a.dims, b.dims);
  EXPECT_EQ(a.betti, b.betti);
}

TEST(Hilbert, UndersizedWindowRejected) {
  EXPECT_THROW(hilbert(builtins::paperQuadric(), 4), std::invalid_argument);
  EXPECT_NO_THROW(hilbert(builtins::paperQuadric(), 5));
}

TEST(Hilbert, NonFreeModuleIsReported) {
  // triangle with independent labels in rank 3
  MomentGraph g(3);
  g.addVertex("a");
  g.addVertex("b");
  g.addVertex("c");
  g.addEdge("a", "b", dsl::parseLinearForm("t1", 3));
  g.addEdge("b", "c", dsl::parseLinearForm("t2", 3));
  g.addEdge("a", "c", dsl::parseLinearForm("t3", 3));
  ASSERT_TRUE(validate(g).valid());
  const auto h = hilbert(g, 4);
  EXPECT_EQ(h.dims, (std::vector<std::size_t>{1, 3, 9, 18, 30}));
  EXPECT_FALSE(h.free);
  EXPECT_FALSE(h.betti.has_value());
  EXPECT_EQ(h.firstBadDegree, 3);
  EXPECT_EQ(h.deconvolved, (std::vector<long>{1, 0, 3, -1, 0}));
  EXPECT_THROW(allGenerators(g), InfeasibleError);
}

TEST(CheckClass, ReportsViolatedEdges) {
  const auto g = builtins::cpn(2);
  const auto good = tuple(g, 1, {"0", "t1", "t2"});
  EXPECT_TRUE(checkClass(g, good).ok);
  const auto bad = tuple(g, 1, {"0", "t2", "t1"});
  const auto r = checkClass(g, bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violatedEdges, (std::vector<std::size_t>{0, 1}));

  GkmClass mixed(2, 1);
  mixed.set("p2", dsl::parsePolynomial("t1^2", 2));
  EXPECT_EQ(checkClass(g, mixed).badVertices, std::vector<std::string>{"p2"});
}

TEST(FlowUp, Cp2Generators) {
  const auto g = builtins::cpn(2);
  const auto gens = allGenerators(g);
  ASSERT_EQ(gens.generators.size(), 3U);
  EXPECT_TRUE(gens.consistent);
  EXPECT_EQ(gens.generators[0].cls, tuple(g, 0, {"1", "1", "1"}));
  EXPECT_EQ(gens.generators[1].cls, tuple(g, 1, {"0", "t1", "t2"}));
  EXPECT_EQ(gens.generators[2].cls, tuple(g, 2, {"0", "0", "t2*(t2-t1)"}));
  for (const auto& gen : gens.generators) EXPECT_EQ(gen.ambiguity, 0U);
}

TEST(FlowUp, UnknownVertex) {
  EXPECT_THROW(flowUpGenerator(builtins::cp1(), "Q"), std::invalid_argument);
}

TEST(FlowUp, InfeasibleWhenDegreeTooSmall) {
  MomentGraph g(3);
  g.addVertex("a");
  g.addVertex("b");
  g.addVertex("c");
  g.addEdge("a", "b", dsl::parseLinearForm("t1", 3));
  g.addEdge("b", "c", dsl::parseLinearForm("t2", 3));
  g.addEdge("a", "c", dsl::parseLinearForm("t3", 3));
  // f_b = t1, so f_c = t1 mod t2 and f_c = 0 mod t3: no linear solution
  try {
    (void)flowUpGenerator(g, "b");
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("'c'"), std::string::npos);
    EXPECT_NE(what.find("degree-1"), std::string::npos);
  }
}

TEST(FlowUp, HessenbergAmbiguity) {
  const auto g = builtins::paperHessenberg();
  const auto f = flowUpGenerator(g, "lowerright");
  EXPECT_GE(f.ambiguity, 1U);
  EXPECT_TRUE(checkClass(g, f.cls).ok);
}

TEST(Ring, MultiplyAndExpand) {
  const auto g = builtins::cpn(2);
  const auto gens = allGenerators(g);
  const auto u = gens.generators[1].cls;
  const auto square = multiply(g, u, u);
  EXPECT_EQ(square, tuple(g, 2, {"0", "t1^2", "t2^2"}));
  const auto e = expand(g, gens, square);
  EXPECT_EQ(e.coefficients[0], Polynomial(2));
  EXPECT_EQ(e.coefficients[1], dsl::parsePolynomial("t1", 2));
  EXPECT_EQ(e.coefficients[2], dsl::parsePolynomial("1", 2));
}

TEST(Ring, MultiplyRejectsNonClasses) {
  const auto g = builtins::cpn(2);
  EXPECT_THROW(multiply(g, tuple(g, 1, {"t1", "0", "0"}), GkmClass::unit(g)), Error);
}

TEST(Ring, ExpandRejectsClassOutsideSpan) {
  const auto g = builtins::cpn(2);
  auto gens = allGenerators(g);
  gens.generators.pop_back();
  EXPECT_THROW(expand(g, gens, tuple(g, 2, {"0", "0", "t2*(t2-t1)"})), InfeasibleError);
}

TEST(Ring, ExpandRejectsDependentGenerators) {
  const auto g = builtins::cpn(2);
  auto gens = allGenerators(g);
  gens.generators.push_back(gens.generators[1]);
  EXPECT_THROW(expand(g, gens, tuple(g, 1, {"0", "t1", "t2"})), Error);
}

TEST(Ring, OrdinaryTableCp2) {
  const auto g = builtins::cpn(2);
  const auto t = ordinaryTable(g, allGenerators(g));
  using Entry = std::vector<std::pair<std::size_t, Rational>>;
  EXPECT_EQ(t.degrees, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(t.table[1][1], (Entry{{2, 1}}));
  EXPECT_EQ(t.table[1][2], Entry{});
  EXPECT_EQ(t.table[2][1], Entry{});
  EXPECT_EQ(t.table[0][2], (Entry{{2, 1}}));
}
