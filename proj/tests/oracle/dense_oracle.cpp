#include "dense_oracle.hpp"

#include <map>

namespace oracle {

std::size_t rank(std::vector<std::vector<Q>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Q factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

void enumerate(std::size_t k, std::size_t i, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (i + 1 == k) {
    cur[i] = left;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= left; ++e) {
    cur[i] = e;
    enumerate(k, i + 1, left - e, cur, out);
  }
}

}  // namespace

std::vector<std::vector<int>> monomials(std::size_t k, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  std::vector<int> cur(k, 0);
  enumerate(k, 0, d, cur, out);
  return out;
}

std::size_t sectionDimension(const Graph& g, int d) {
  const auto top = monomials(g.rank, d);
  const auto low = monomials(g.rank, d - 1);
  std::map<std::vector<int>, std::size_t> row;
  for (std::size_t i = 0; i < top.size(); ++i) row[top[i]] = i;

  const std::size_t fCols = g.vertices * top.size();
  const std::size_t cols = fCols + g.edges.size() * low.size();
  std::vector<std::vector<Q>> m;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    std::vector<std::vector<Q>> block(top.size(), std::vector<Q>(cols));
    for (std::size_t i = 0; i < top.size(); ++i) {
      block[i][edge.north * top.size() + i] += 1;
      block[i][edge.south * top.size() + i] -= 1;
    }
    for (std::size_t j = 0; j < low.size(); ++j) {
      for (std::size_t v = 0; v < g.rank; ++v) {
        if (edge.direction[v] == 0) continue;
        auto m2 = low[j];
        ++m2[v];
        block[row.at(m2)][fCols + e * low.size() + j] -= edge.direction[v];
      }
    }
    for (auto& r : block) m.push_back(std::move(r));
  }
  return cols - rank(std::move(m));
}

}  // namespace oracle
