#include "gkm/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "gkm/errors.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

GkmClass GkmClass::fromTuple(const MomentGraph& g, int degree, const std::vector<Polynomial>& tuple) {
  if (tuple.size() != g.vertexCount()) throw std::invalid_argument("tuple length differs from vertex count");
  GkmClass c(g.rank(), degree);
  for (std::size_t i = 0; i < tuple.size(); ++i) c.set(g.vertices()[i].name, tuple[i]);
  return c;
}

GkmClass GkmClass::unit(const MomentGraph& g) {
  GkmClass c(g.rank(), 0);
  for (const auto& v : g.vertices()) c.set(v.name, Polynomial::constant(g.rank(), Rational(1)));
  return c;
}

Polynomial GkmClass::at(const std::string& vertex) const {
  auto it = values_.find(vertex);
  return it == values_.end() ? Polynomial(varCount_) : it->second;
}

void GkmClass::set(const std::string& vertex, Polynomial value) {
  if (value.varCount() != varCount_) throw std::invalid_argument("class value has wrong variable count");
  if (value.isZero()) {
    values_.erase(vertex);
  } else {
    values_.insert_or_assign(vertex, std::move(value));
  }
}

std::vector<Polynomial> GkmClass::tuple(const MomentGraph& g) const {
  std::vector<Polynomial> out;
  out.reserve(g.vertexCount());
  for (const auto& v : g.vertices()) out.push_back(at(v.name));
  return out;
}

std::string formatTuple(const MomentGraph& g, const GkmClass& c) {
  std::string out = "(";
  bool first = true;
  for (const auto& p : c.tuple(g)) {
    if (!first) out += ',';
    out += p.str();
    first = false;
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

namespace {

// Rows of the degree-d edge system over coordinates (vertex index * B + monomial index).
std::vector<SparseVector> edgeSystem(const MomentGraph& g, int d) {
  const std::size_t basisSize = monomialCount(g.rank(), d);
  std::vector<SparseVector> rows;
  for (const auto& e : g.edges()) {
    const std::size_t south = g.requireIndex(e.south);
    const std::size_t north = g.requireIndex(e.north);
    const HyperplaneRestriction restriction(e.direction, d);
    std::vector<SparseVector> block(restriction.targetCount());
    for (std::size_t i = 0; i < basisSize; ++i) {
      for (const auto& [t, c] : restriction.image(i)) {
        block[t].emplace_back(north * basisSize + i, c);
        block[t].emplace_back(south * basisSize + i, -c);
      }
    }
    for (auto& row : block) {
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

GkmClass classFromCoordinates(const MomentGraph& g, int d, const SparseVector& coords) {
  const auto basis = monomialBasis(g.rank(), d);
  std::vector<Polynomial> tuple(g.vertexCount(), Polynomial(g.rank()));
  for (const auto& [col, value] : coords) tuple[col / basis.size()].addTerm(basis[col % basis.size()], value);
  return GkmClass::fromTuple(g, d, tuple);
}

long binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  long out = 1;
  for (long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace

SectionBasis sectionBasis(const MomentGraph& g, int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  requireValid(g);
  const std::size_t columns = g.vertexCount() * monomialCount(g.rank(), d);
  RowReducer reducer(columns);
  for (const auto& row : edgeSystem(g, d)) reducer.addRow(row);
  SectionBasis out;
  const auto basis = rowReduce(reducer.kernelBasis(), columns);
  out.dimension = basis.size();
  for (const auto& v : basis) out.basis.push_back(classFromCoordinates(g, d, v));
  return out;
}

std::size_t sectionDimension(const MomentGraph& g, int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  const std::size_t columns = g.vertexCount() * monomialCount(g.rank(), d);
  RowReducer reducer(columns);
  for (const auto& row : edgeSystem(g, d)) reducer.addRow(row);
  return reducer.nullity();
}

int maxDownDegree(const MomentGraph& g) {
  const auto deg = downDegrees(g);
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int defaultMaxDegree(const MomentGraph& g) { return maxDownDegree(g) + 2; }

HilbertData hilbert(const MomentGraph& g, int maxDegree, unsigned threads) {
  requireValid(g);
  const int needed = maxDownDegree(g) + 1;
  if (maxDegree < needed) {
    throw std::invalid_argument("max degree " + std::to_string(maxDegree) + " is too small; need at least " +
                                std::to_string(needed));
  }
  HilbertData h;
  h.maxDegree = maxDegree;
  h.dims.assign(static_cast<std::size_t>(maxDegree) + 1, 0);

  // Largest degrees first so the expensive systems start early.
  std::atomic<int> next{maxDegree};
  auto worker = [&] {
    for (int d = next--; d >= 0; d = next--) h.dims[static_cast<std::size_t>(d)] = sectionDimension(g, d);
  };
  const unsigned count = std::clamp(threads, 1U, static_cast<unsigned>(maxDegree + 1));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const long k = static_cast<long>(g.rank());
  h.deconvolved.assign(h.dims.size(), 0);
  for (std::size_t n = 0; n < h.dims.size(); ++n) {
    long b = 0;
    for (long j = 0; j <= k && j <= static_cast<long>(n); ++j) {
      const long term = binomial(k, j) * static_cast<long>(h.dims[n - static_cast<std::size_t>(j)]);
      b += (j % 2 == 0) ? term : -term;
    }
    h.deconvolved[n] = b;
  }

  h.free = true;
  for (std::size_t n = 0; n < h.deconvolved.size(); ++n) {
    if (h.deconvolved[n] < 0) {
      h.free = false;
      h.firstBadDegree = static_cast<int>(n);
      h.diagnostic = "negative Betti number in degree " + std::to_string(n);
      break;
    }
  }
  if (h.free) {
    std::vector<long> betti = h.deconvolved;
    while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
    h.betti = betti;
    for (std::size_t d = 0; d < h.dims.size() && h.free; ++d) {
      long rebuilt = 0;
      for (std::size_t i = 0; i <= d && i < betti.size(); ++i) {
        rebuilt += betti[i] * binomial(static_cast<long>(d - i) + k - 1, k - 1);
      }
      if (rebuilt != static_cast<long>(h.dims[d])) {
        h.free = false;
        h.firstBadDegree = static_cast<int>(d);
        h.diagnostic = "Betti numbers do not reconstruct dims in degree " + std::to_string(d);
      }
    }
    const long total = std::accumulate(betti.begin(), betti.end(), 0L);
    if (h.free && total != static_cast<long>(g.vertexCount())) {
      h.free = false;
      h.firstBadDegree = maxDegree;
      h.diagnostic = "Betti numbers sum to " + std::to_string(total) + " but the graph has " +
                     std::to_string(g.vertexCount()) + " vertices";
    }
  }
  return h;
}

}  // namespace gkm
