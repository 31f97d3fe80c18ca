#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkm/cohomology.hpp"
#include "gkm/moment_graph.hpp"
#include "gkm/polynomial.hpp"

namespace gkm::dsl {

/// Polynomial text: terms joined by + / -, optional rational coefficient `a` or
/// `a/b`, optional `*`, variables `t<i>` with optional `^e`, and parentheses.
/// Whitespace is ignored. Throws ParseError (line 1, column of the offending char).
Polynomial parsePolynomial(std::string_view text, std::size_t varCount);

/// As parsePolynomial, restricted to nonzero homogeneous degree-one forms.
LinearForm parseLinearForm(std::string_view text, std::size_t varCount);

struct SourceSpan {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// A parsed graph together with where each declaration came from.
struct GraphDocument {
  MomentGraph graph{1};
  SourceSpan rank;
  std::vector<SourceSpan> vertices;  // parallel to graph.vertices()
  std::vector<SourceSpan> edges;     // parallel to graph.edges()
  std::optional<SourceSpan> xi;
};

/// Line-oriented graph language:
///
///     # comment
///     rank 2
///     vertex a [pos 0 0]
///     edge a b : t1 - t2
///     xi 1 3
///
/// `rank` comes first. Syntax errors throw ParseError; the parsed graph is then
/// validated and a failed check throws ValidationError naming the check, the
/// offending element and its line.
GraphDocument parseGraphDocument(std::string_view text);
MomentGraph parseGraph(std::string_view text);

/// Text in the graph language; parseGraph(serializeGraph(g)) == g.
std::string serializeGraph(const MomentGraph& g);

/// `{"format":1,"rank":k,"vertices":[{"name","pos"?}],"edges":[{"south","north","direction"}],"xi"?}`
/// with every rational written as a string.
std::string emitJson(const MomentGraph& g);
/// Inverse of emitJson, followed by validation.
MomentGraph parseGraphJson(std::string_view text);

/// JSON when the first non-blank character is `{`, the graph language otherwise.
MomentGraph parseGraphAuto(std::string_view text);

/// Graphviz digraph: one node per vertex, one labelled edge south -> north; node
/// coordinates from the first two position coordinates when positions exist.
std::string emitDot(const MomentGraph& g);

/// `{"degree": d, "values": {"<vertex>": "<poly>", ...}}`; omitted vertices are 0.
/// Throws ParseError for malformed JSON, unknown vertices, non-homogeneous values
/// or values whose degree differs from the declared one.
GkmClass parseClass(std::string_view text, const MomentGraph& g);

/// Class file for c with every vertex listed in vertex order.
std::string emitClassJson(const MomentGraph& g, const GkmClass& c);

}  // namespace gkm::dsl
