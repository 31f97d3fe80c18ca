#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkm/polynomial.hpp"
#include "gkm/rational.hpp"

namespace gkm {

/// A torus-fixed point, optionally placed in the dual of the torus Lie algebra.
struct Vertex {
  std::string name;
  std::optional<std::vector<Rational>> position;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Closure of a one-dimensional orbit, oriented south -> north.
struct Edge {
  std::string south;
  std::string north;
  LinearForm direction;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Moment graph: fixed points, one-dimensional orbits with their directions, and an
/// optional generic covector. Vertex order is significant; every tuple reported by
/// the library follows it.
///
/// The mutators only enforce shape (rank-consistent vectors, nonzero directions);
/// the GKM conditions are checked by validate().
class MomentGraph {
 public:
  explicit MomentGraph(std::size_t rank);

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] const std::vector<Vertex>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::optional<std::vector<Rational>>& xi() const { return xi_; }
  [[nodiscard]] std::size_t vertexCount() const { return vertices_.size(); }

  void addVertex(std::string name, std::optional<std::vector<Rational>> position = std::nullopt);
  void addEdge(std::string south, std::string north, LinearForm direction);
  void setXi(std::optional<std::vector<Rational>> xi);
  /// Replaces the edge list wholesale (used by orientation changes).
  void setEdges(std::vector<Edge> edges);

  /// Index of the first vertex with this name.
  [[nodiscard]] std::optional<std::size_t> indexOf(const std::string& name) const;
  /// Like indexOf, but throws std::invalid_argument for unknown names.
  [[nodiscard]] std::size_t requireIndex(const std::string& name) const;

  friend bool operator==(const MomentGraph&, const MomentGraph&) = default;

 private:
  std::size_t rank_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::optional<std::vector<Rational>> xi_;
  std::map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Validation

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::string> offenders;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool valid() const;
  /// First failing check, if any.
  [[nodiscard]] const CheckResult* firstFailure() const;
};

inline constexpr const char* kCheckUniqueNames = "unique-names";
inline constexpr const char* kCheckEndpointsExist = "endpoints-exist";
inline constexpr const char* kCheckAcyclic = "acyclic-orientation";
inline constexpr const char* kCheckDistinctDirections = "distinct-directions-at-vertex";
inline constexpr const char* kCheckXiGeneric = "xi-generic";
inline constexpr const char* kCheckPositions = "positions-parallel-to-directions";

/// Runs every structural check; failures are reported, never thrown.
ValidationReport validate(const MomentGraph& g);

/// Throws ValidationError naming the first failed check and its offenders.
void requireValid(const MomentGraph& g);

/// Human-readable edge identifier `south->north`.
std::string edgeLabel(const Edge& e);

// ---------------------------------------------------------------------------
// Order structure

/// Every edge reoriented so that <north - south, xi> > 0; flipped edges get the
/// negated label so positions stay positive multiples of their directions.
/// Throws std::invalid_argument when xi or a position is missing, or xi is not generic.
MomentGraph orientFromXi(const MomentGraph& g);

/// Number of edges whose north pole is v. Throws std::invalid_argument for unknown v.
int downDegree(const MomentGraph& g, const std::string& v);
/// Down-degrees of all vertices, in vertex order.
std::vector<int> downDegrees(const MomentGraph& g);

struct PalaisSmaleResult {
  bool holds = true;
  std::vector<std::size_t> violatingEdges;  // indices into g.edges()
};

/// Down-degree strictly increases from south to north along every edge.
PalaisSmaleResult palaisSmaleCheck(const MomentGraph& g);

/// up[v][w] is true iff w >= v in the partial order generated by south < north.
std::vector<std::vector<bool>> upSets(const MomentGraph& g);

/// Vertex indices in the processing order used by the flow-up construction:
/// a topological order that prefers smaller down-degree, then smaller <position, xi>
/// when available, then name. Throws ValidationError on a directed cycle.
std::vector<std::size_t> linearExtension(const MomentGraph& g);

/// Edge indices incident to each vertex, split by role.
struct Incidence {
  std::vector<std::vector<std::size_t>> below;  // edges with this vertex as north
  std::vector<std::vector<std::size_t>> above;  // edges with this vertex as south
};
Incidence incidence(const MomentGraph& g);

}  // namespace gkm
