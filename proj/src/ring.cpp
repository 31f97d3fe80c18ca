#include <map>
#include <stdexcept>

#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

namespace {

void requireSection(const MomentGraph& g, const GkmClass& c, const char* role) {
  const auto check = checkClass(g, c);
  if (check.ok) return;
  std::string why;
  for (const auto& v : check.badVertices) why += " vertex " + v + ";";
  for (auto e : check.violatedEdges) why += " edge " + edgeLabel(g.edges()[e]) + ";";
  throw Error(std::string(role) + " is not a GKM class:" + why);
}

}  // namespace

GkmClass multiply(const MomentGraph& g, const GkmClass& a, const GkmClass& b) {
  requireSection(g, a, "left factor");
  requireSection(g, b, "right factor");
  GkmClass out(g.rank(), a.degree() + b.degree());
  for (const auto& v : g.vertices()) out.set(v.name, a.at(v.name) * b.at(v.name));
  return out;
}

Expansion expand(const MomentGraph& g, const GeneratorSet& gens, const GkmClass& c) {
  requireSection(g, c, "expanded class");
  const std::size_t k = g.rank();
  const int degree = c.degree();
  const auto rowBasis = monomialBasis(k, degree);
  std::map<Monomial, std::size_t, GrlexDescending> rowIndex;
  for (std::size_t i = 0; i < rowBasis.size(); ++i) rowIndex.emplace(rowBasis[i], i);

  // Unknowns: coefficients of each c_i in degree (deg c - deg g_i).
  struct Block {
    std::size_t generator;
    std::size_t offset;
    std::vector<Monomial> monomials;
  };
  std::vector<Block> blocks;
  std::size_t columns = 0;
  for (std::size_t i = 0; i < gens.generators.size(); ++i) {
    const int shift = degree - gens.generators[i].degree;
    if (shift < 0) continue;
    blocks.push_back(Block{i, columns, monomialBasis(k, shift)});
    columns += blocks.back().monomials.size();
  }

  const std::size_t rowCount = g.vertexCount() * rowBasis.size();
  std::vector<SparseVector> rows(rowCount);
  for (const auto& block : blocks) {
    const auto& gen = gens.generators[block.generator].cls;
    for (std::size_t w = 0; w < g.vertexCount(); ++w) {
      const Polynomial value = gen.at(g.vertices()[w].name);
      if (value.isZero()) continue;
      for (std::size_t j = 0; j < block.monomials.size(); ++j) {
        for (const auto& [m, coeff] : value.terms()) {
          rows[w * rowBasis.size() + rowIndex.at(m * block.monomials[j])].emplace_back(block.offset + j, coeff);
        }
      }
    }
  }
  std::vector<Rational> rhs(rowCount);
  for (std::size_t w = 0; w < g.vertexCount(); ++w) {
    const Polynomial value = c.at(g.vertices()[w].name);
    for (const auto& [m, coeff] : value.terms()) rhs[w * rowBasis.size() + rowIndex.at(m)] = coeff;
  }

  const auto solution = solveAffine(rows, rhs, columns);
  if (!solution.feasible) throw InfeasibleError("class is not in the span of the generators");
  if (solution.freeCount != 0) {
    throw Error("expansion is not unique (" + std::to_string(solution.freeCount) +
                " free parameters): generators are not independent");
  }
  Expansion out;
  out.coefficients.assign(gens.generators.size(), Polynomial(k));
  for (const auto& block : blocks) {
    Polynomial coeff(k);
    for (std::size_t j = 0; j < block.monomials.size(); ++j) {
      coeff.addTerm(block.monomials[j], solution.values[block.offset + j]);
    }
    out.coefficients[block.generator] = std::move(coeff);
  }
  return out;
}

OrdinaryTable ordinaryTable(const MomentGraph& g, const GeneratorSet& gens) {
  const std::size_t n = gens.generators.size();
  OrdinaryTable out;
  for (const auto& gen : gens.generators) out.degrees.push_back(gen.degree);
  out.table.assign(n, std::vector<std::vector<std::pair<std::size_t, Rational>>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto product = multiply(g, gens.generators[i].cls, gens.generators[j].cls);
      const auto expansion = expand(g, gens, product);
      std::vector<std::pair<std::size_t, Rational>> entry;
      for (std::size_t l = 0; l < n; ++l) {
        const Rational q = evalAtZero(expansion.coefficients[l]);
        if (!q.isZero()) entry.emplace_back(l, q);
      }
      out.table[i][j] = entry;
      out.table[j][i] = std::move(entry);
    }
  }
  return out;
}

}  // namespace gkm
