#include <algorithm>
#include <stdexcept>

#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

ClassCheck checkClass(const MomentGraph& g, const GkmClass& c) {
  ClassCheck out;
  if (c.varCount() != g.rank()) {
    out.ok = false;
    out.badVertices.push_back("<variable count " + std::to_string(c.varCount()) + ">");
    return out;
  }
  for (const auto& [name, value] : c.values()) {
    if (!g.indexOf(name) || !value.isHomogeneous(c.degree())) out.badVertices.push_back(name);
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    if (!dividesLinear(e.direction, c.at(e.north) - c.at(e.south))) out.violatedEdges.push_back(i);
  }
  out.ok = out.badVertices.empty() && out.violatedEdges.empty();
  return out;
}

namespace {

std::string describeEdges(const MomentGraph& g, const std::vector<std::size_t>& edges) {
  std::string out;
  for (auto i : edges) {
    if (!out.empty()) out += ", ";
    out += edgeLabel(g.edges()[i]) + " (" + g.edges()[i].direction.str() + ")";
  }
  return out;
}

}  // namespace

FlowUpClass flowUpGenerator(const MomentGraph& g, const std::string& v) {
  requireValid(g);
  const std::size_t base = g.requireIndex(v);
  const std::size_t k = g.rank();
  const auto inc = incidence(g);
  const int d = static_cast<int>(inc.below[base].size());
  const auto above = upSets(g)[base];
  const auto basis = monomialBasis(k, d);

  std::vector<Polynomial> values(g.vertexCount(), Polynomial(k));
  Polynomial product = Polynomial::constant(k, Rational(1));
  for (auto e : inc.below[base]) product = product * g.edges()[e].direction.toPolynomial();
  values[base] = product;

  FlowUpClass out;
  for (auto w : linearExtension(g)) {
    if (w == base || !above[w]) continue;
    // f_w restricted to each lower edge's hyperplane must match the lower neighbour.
    std::vector<SparseVector> rows;
    std::vector<Rational> rhs;
    for (auto e : inc.below[w]) {
      const auto& edge = g.edges()[e];
      const HyperplaneRestriction restriction(edge.direction, d);
      std::vector<SparseVector> block(restriction.targetCount());
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (const auto& [t, c] : restriction.image(i)) block[t].emplace_back(i, c);
      }
      const auto target = restriction.restrictCoordinates(values[g.requireIndex(edge.south)]);
      for (std::size_t t = 0; t < block.size(); ++t) {
        rows.push_back(std::move(block[t]));
        rhs.push_back(target[t]);
      }
    }
    const auto solution = solveAffine(rows, rhs, basis.size());
    if (!solution.feasible) {
      throw InfeasibleError("no degree-" + std::to_string(d) + " flow-up value at vertex '" + g.vertices()[w].name +
                            "' for base '" + v + "'; constraints from " + describeEdges(g, inc.below[w]));
    }
    Polynomial f(k);
    for (std::size_t i = 0; i < basis.size(); ++i) f.addTerm(basis[i], solution.values[i]);
    values[w] = std::move(f);
    out.ambiguity += solution.freeCount;
  }
  out.cls = GkmClass::fromTuple(g, d, values);
  return out;
}

GeneratorSet allGenerators(const MomentGraph& g, unsigned threads) {
  requireValid(g);
  GeneratorSet out;
  for (const auto& v : g.vertices()) {
    auto flow = flowUpGenerator(g, v.name);
    out.generators.push_back(Generator{v.name, flow.cls.degree(), std::move(flow.cls), flow.ambiguity});
  }

  const auto h = hilbert(g, defaultMaxDegree(g), threads);
  if (!h.free || !h.betti) {
    out.consistent = false;
    out.diagnostic = "module does not look free: " + h.diagnostic;
    return out;
  }
  std::vector<long> counts(h.betti->size(), 0);
  for (const auto& gen : out.generators) {
    if (static_cast<std::size_t>(gen.degree) >= counts.size()) counts.resize(gen.degree + 1, 0);
    ++counts[gen.degree];
  }
  std::vector<long> betti = *h.betti;
  betti.resize(counts.size(), 0);
  if (counts != betti) {
    out.consistent = false;
    std::string have;
    std::string want;
    for (auto c : counts) have += (have.empty() ? "" : " ") + std::to_string(c);
    for (auto b : betti) want += (want.empty() ? "" : " ") + std::to_string(b);
    out.diagnostic = "generator degree counts (" + have + ") differ from Betti numbers (" + want + ")";
  }
  return out;
}

}  // namespace gkm
