#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gkm/cohomology.hpp"
#include "gkm/dsl.hpp"
#include "gkm/moment_graph.hpp"
#include "oracle/dense_oracle.hpp"

namespace support {

inline gkm::GkmClass tuple(const gkm::MomentGraph& g, int degree, const std::vector<std::string>& values) {
  std::vector<gkm::Polynomial> ps;
  for (const auto& v : values) ps.push_back(gkm::dsl::parsePolynomial(v, g.rank()));
  return gkm::GkmClass::fromTuple(g, degree, ps);
}

// Random valid graph: edges go from lower to higher vertex index, small integer labels.
struct RandomGraph {
  gkm::MomentGraph graph{1};
  oracle::Graph plain;
};

inline RandomGraph randomGraph(std::mt19937& rng, std::size_t rank, std::size_t maxVertices, std::size_t maxEdges,
                               int coeffBound = 3) {
  std::uniform_int_distribution<std::size_t> vcount(2, std::max<std::size_t>(2, maxVertices));
  std::uniform_int_distribution<std::size_t> ecount(1, std::max<std::size_t>(1, maxEdges));
  std::uniform_int_distribution<int> coeff(-coeffBound, coeffBound);
  for (;;) {
    RandomGraph out;
    out.graph = gkm::MomentGraph(rank);
    out.plain.rank = rank;
    const std::size_t n = vcount(rng);
    out.plain.vertices = n;
    for (std::size_t i = 0; i < n; ++i) out.graph.addVertex("v" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t m = ecount(rng);
    // edges go from lower to higher index; retry labels that clash at an endpoint
    for (int attempt = 0; out.plain.edges.size() < m && attempt < 50; ++attempt) {
      std::size_t a = pick(rng);
      std::size_t b = pick(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      std::vector<long> dir(rank);
      bool nonzero = false;
      for (auto& c : dir) {
        c = coeff(rng);
        nonzero = nonzero || c != 0;
      }
      if (!nonzero) continue;
      const gkm::LinearForm form(std::vector<gkm::Rational>(dir.begin(), dir.end()));
      bool clash = false;
      for (const auto& e : out.graph.edges()) {
        const bool touches = e.south == "v" + std::to_string(a) || e.north == "v" + std::to_string(a) ||
                             e.south == "v" + std::to_string(b) || e.north == "v" + std::to_string(b);
        clash = clash || (touches && e.direction.isProportionalTo(form));
      }
      if (clash) continue;
      out.graph.addEdge("v" + std::to_string(a), "v" + std::to_string(b), form);
      out.plain.edges.push_back(oracle::Edge{a, b, dir});
    }
    if (gkm::validate(out.graph).valid()) return out;
  }
}

}  // namespace support
