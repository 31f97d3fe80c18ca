#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkm/moment_graph.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

/// A tuple of polynomials, one per fixed point, of a declared degree. Zero values
/// are never stored, so two classes compare equal iff their tuples agree.
/// Satisfying the edge relations is checked by checkClass(), not enforced here.
class GkmClass {
 public:
  GkmClass() = default;
  GkmClass(std::size_t varCount, int degree) : varCount_(varCount), degree_(degree) {}
  /// Builds a class from a tuple in the graph's vertex order.
  static GkmClass fromTuple(const MomentGraph& g, int degree, const std::vector<Polynomial>& tuple);
  /// (1, 1, ..., 1).
  static GkmClass unit(const MomentGraph& g);

  [[nodiscard]] std::size_t varCount() const { return varCount_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const std::map<std::string, Polynomial>& values() const { return values_; }

  /// Value at a vertex; zero when absent.
  [[nodiscard]] Polynomial at(const std::string& vertex) const;
  void set(const std::string& vertex, Polynomial value);

  /// Values in the graph's vertex order.
  [[nodiscard]] std::vector<Polynomial> tuple(const MomentGraph& g) const;

  friend bool operator==(const GkmClass&, const GkmClass&) = default;

 private:
  std::size_t varCount_ = 0;
  int degree_ = 0;
  std::map<std::string, Polynomial> values_;
};

/// `(0,t1,t2)`.
std::string formatTuple(const MomentGraph& g, const GkmClass& c);

// ---------------------------------------------------------------------------
// Sections of a fixed degree

struct SectionBasis {
  std::size_t dimension = 0;
  std::vector<GkmClass> basis;  // reduced echelon w.r.t. (vertex order x grlex) coordinates
};

/// Degree-d part of the GKM module: tuples (f_v) of degree-d forms with
/// f_north - f_south divisible by the edge direction on every edge.
SectionBasis sectionBasis(const MomentGraph& g, int d);

/// Dimension of the degree-d part, by an exact rank computation.
std::size_t sectionDimension(const MomentGraph& g, int d);

struct HilbertData {
  int maxDegree = 0;
  std::vector<std::size_t> dims;            // dims[d] for d = 0..maxDegree
  std::vector<long> deconvolved;            // dims * (1 - q)^k, truncated at maxDegree
  std::optional<std::vector<long>> betti;   // deconvolved without trailing zeros, when nonnegative
  bool free = false;
  std::optional<int> firstBadDegree;
  std::string diagnostic;
};

/// Largest down-degree, the smallest admissible maxDegree is this plus one.
int maxDownDegree(const MomentGraph& g);

/// Default deconvolution window: max down-degree + 2.
int defaultMaxDegree(const MomentGraph& g);

/// Hilbert function through degree D and the Betti numbers it implies for a free
/// module. Throws std::invalid_argument when D <= max down-degree. Degrees are
/// computed on up to `threads` worker threads; results do not depend on it.
HilbertData hilbert(const MomentGraph& g, int maxDegree, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Classes

struct ClassCheck {
  bool ok = true;
  std::vector<std::size_t> violatedEdges;  // indices into g.edges()
  std::vector<std::string> badVertices;    // unknown names or values of the wrong degree
};

/// Homogeneity of every value plus divisibility along every edge.
ClassCheck checkClass(const MomentGraph& g, const GkmClass& c);

struct FlowUpClass {
  GkmClass cls;
  std::size_t ambiguity = 0;  // free parameters met while labelling the up-set
};

/// Minimal-degree class supported on the up-set of v whose value at v is the
/// product of the downward edge labels. Throws InfeasibleError when some vertex
/// admits no value of that degree.
FlowUpClass flowUpGenerator(const MomentGraph& g, const std::string& v);

struct Generator {
  std::string base;
  int degree = 0;
  GkmClass cls;
  std::size_t ambiguity = 0;
};

struct GeneratorSet {
  std::vector<Generator> generators;  // in vertex order
  bool consistent = true;             // degree multiset agrees with the Betti numbers
  std::string diagnostic;
};

/// One flow-up class per vertex, cross-checked against hilbert().
GeneratorSet allGenerators(const MomentGraph& g, unsigned threads = 1);

/// Coordinatewise product. Throws gkm::Error if either factor fails checkClass.
GkmClass multiply(const MomentGraph& g, const GkmClass& a, const GkmClass& b);

struct Expansion {
  std::vector<Polynomial> coefficients;  // one per generator; zero where unused
};

/// Unique coefficients with sum c_i g_i = c. Throws InfeasibleError when c is not
/// in the span and gkm::Error when the coefficients are not unique.
Expansion expand(const MomentGraph& g, const GeneratorSet& gens, const GkmClass& c);

struct OrdinaryTable {
  std::vector<int> degrees;
  /// table[i][j] lists (l, q) with u_i u_j = sum q u_l in ordinary cohomology.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> table;
};

/// Structure constants after setting every t_i to zero.
OrdinaryTable ordinaryTable(const MomentGraph& g, const GeneratorSet& gens);

}  // namespace gkm
