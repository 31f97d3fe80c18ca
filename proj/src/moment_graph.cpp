#include "gkm/moment_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

#include "gkm/errors.hpp"

namespace gkm {

MomentGraph::MomentGraph(std::size_t rank) : rank_(rank) {
  if (rank == 0) throw std::invalid_argument("torus rank must be at least 1");
}

void MomentGraph::addVertex(std::string name, std::optional<std::vector<Rational>> position) {
  if (position && position->size() != rank_) {
    throw std::invalid_argument("position of '" + name + "' has " + std::to_string(position->size()) +
                                " coordinates, expected " + std::to_string(rank_));
  }
  index_.try_emplace(name, vertices_.size());
  vertices_.push_back(Vertex{std::move(name), std::move(position)});
}

void MomentGraph::addEdge(std::string south, std::string north, LinearForm direction) {
  if (direction.varCount() != rank_) {
    throw std::invalid_argument("direction of edge " + south + "->" + north + " has wrong variable count");
  }
  edges_.push_back(Edge{std::move(south), std::move(north), std::move(direction)});
}

void MomentGraph::setXi(std::optional<std::vector<Rational>> xi) {
  if (xi && xi->size() != rank_) throw std::invalid_argument("xi has wrong dimension");
  xi_ = std::move(xi);
}

void MomentGraph::setEdges(std::vector<Edge> edges) {
  for (const auto& e : edges) {
    if (e.direction.varCount() != rank_) throw std::invalid_argument("edge direction has wrong variable count");
  }
  edges_ = std::move(edges);
}

std::optional<std::size_t> MomentGraph::indexOf(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MomentGraph::requireIndex(const std::string& name) const {
  auto i = indexOf(name);
  if (!i) throw std::invalid_argument("unknown vertex '" + name + "'");
  return *i;
}

// ---------------------------------------------------------------------------

bool ValidationReport::valid() const { return firstFailure() == nullptr; }

const CheckResult* ValidationReport::firstFailure() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return &c;
  }
  return nullptr;
}

std::string edgeLabel(const Edge& e) { return e.south + "->" + e.north; }

namespace {

bool endpointsKnown(const MomentGraph& g, const Edge& e) {
  return g.indexOf(e.south).has_value() && g.indexOf(e.north).has_value();
}

CheckResult checkUniqueNames(const MomentGraph& g) {
  CheckResult r{kCheckUniqueNames, CheckStatus::Pass, {}};
  std::set<std::string> seen;
  for (const auto& v : g.vertices()) {
    if (!seen.insert(v.name).second) r.offenders.push_back(v.name);
  }
  if (!r.offenders.empty()) r.status = CheckStatus::Fail;
  return r;
}

CheckResult checkEndpoints(const MomentGraph& g) {
  CheckResult r{kCheckEndpointsExist, CheckStatus::Pass, {}};
  for (const auto& e : g.edges()) {
    if (!endpointsKnown(g, e)) r.offenders.push_back(edgeLabel(e));
  }
  if (!r.offenders.empty()) r.status = CheckStatus::Fail;
  return r;
}

// Vertices left over by Kahn's algorithm lie on or above a directed cycle.
std::vector<std::size_t> cyclicVertices(const MomentGraph& g) {
  const std::size_t n = g.vertexCount();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& e : g.edges()) {
    if (!endpointsKnown(g, e)) continue;
    const auto s = *g.indexOf(e.south);
    const auto t = *g.indexOf(e.north);
    out[s].push_back(t);
    ++indegree[t];
  }
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) stack.push_back(v);
  }
  std::vector<bool> done(n, false);
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    done[v] = true;
    for (auto w : out[v]) {
      if (--indegree[w] == 0) stack.push_back(w);
    }
  }
  std::vector<std::size_t> left;
  for (std::size_t v = 0; v < n; ++v) {
    if (!done[v]) left.push_back(v);
  }
  return left;
}

CheckResult checkAcyclic(const MomentGraph& g) {
  CheckResult r{kCheckAcyclic, CheckStatus::Pass, {}};
  for (const auto& e : g.edges()) {
    if (e.south == e.north) r.offenders.push_back("self-loop " + edgeLabel(e));
  }
  for (auto v : cyclicVertices(g)) r.offenders.push_back(g.vertices()[v].name);
  if (!r.offenders.empty()) r.status = CheckStatus::Fail;
  return r;
}

CheckResult checkDistinctDirections(const MomentGraph& g) {
  CheckResult r{kCheckDistinctDirections, CheckStatus::Pass, {}};
  std::vector<std::vector<std::size_t>> at(g.vertexCount());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    if (!endpointsKnown(g, e)) continue;
    at[*g.indexOf(e.south)].push_back(i);
    if (e.north != e.south) at[*g.indexOf(e.north)].push_back(i);
  }
  for (std::size_t v = 0; v < at.size(); ++v) {
    for (std::size_t a = 0; a < at[v].size(); ++a) {
      for (std::size_t b = a + 1; b < at[v].size(); ++b) {
        const auto& ea = g.edges()[at[v][a]];
        const auto& eb = g.edges()[at[v][b]];
        if (ea.direction.isProportionalTo(eb.direction)) {
          r.offenders.push_back(g.vertices()[v].name + ": " + edgeLabel(ea) + " (" + ea.direction.str() + ") ~ " +
                                edgeLabel(eb) + " (" + eb.direction.str() + ")");
        }
      }
    }
  }
  if (!r.offenders.empty()) r.status = CheckStatus::Fail;
  return r;
}

CheckResult checkXiGeneric(const MomentGraph& g) {
  CheckResult r{kCheckXiGeneric, CheckStatus::Pass, {}};
  if (!g.xi()) {
    r.status = CheckStatus::Skipped;
    return r;
  }
  for (const auto& e : g.edges()) {
    if (e.direction.evaluate(*g.xi()).isZero()) r.offenders.push_back(edgeLabel(e) + " (" + e.direction.str() + ")");
  }
  if (!r.offenders.empty()) r.status = CheckStatus::Fail;
  return r;
}

// Some lambda > 0 with diff = lambda * direction.
bool positiveMultiple(const std::vector<Rational>& diff, const LinearForm& direction) {
  const std::size_t p = direction.pivot();
  const Rational lambda = diff[p] / direction[p];
  if (lambda.sign() <= 0) return false;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] != lambda * direction[i]) return false;
  }
  return true;
}

CheckResult checkPositions(const MomentGraph& g) {
  CheckResult r{kCheckPositions, CheckStatus::Skipped, {}};
  for (const auto& e : g.edges()) {
    if (!endpointsKnown(g, e)) continue;
    const auto& s = g.vertices()[*g.indexOf(e.south)].position;
    const auto& n = g.vertices()[*g.indexOf(e.north)].position;
    if (!s || !n) continue;
    if (r.status == CheckStatus::Skipped) r.status = CheckStatus::Pass;
    std::vector<Rational> diff(g.rank());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = (*n)[i] - (*s)[i];
    if (!positiveMultiple(diff, e.direction)) r.offenders.push_back(edgeLabel(e) + " (" + e.direction.str() + ")");
  }
  if (!r.offenders.empty()) r.status = CheckStatus::Fail;
  return r;
}

}  // namespace

ValidationReport validate(const MomentGraph& g) {
  ValidationReport report;
  report.checks.push_back(checkUniqueNames(g));
  report.checks.push_back(checkEndpoints(g));
  report.checks.push_back(checkAcyclic(g));
  report.checks.push_back(checkDistinctDirections(g));
  report.checks.push_back(checkXiGeneric(g));
  report.checks.push_back(checkPositions(g));
  return report;
}

void requireValid(const MomentGraph& g) {
  const auto report = validate(g);
  if (const auto* failure = report.firstFailure()) {
    std::string what;
    for (const auto& o : failure->offenders) what += (what.empty() ? "" : ", ") + o;
    throw ValidationError(failure->name, what);
  }
}

// ---------------------------------------------------------------------------

MomentGraph orientFromXi(const MomentGraph& g) {
  if (!g.xi()) throw std::invalid_argument("orientation needs xi");
  for (const auto& v : g.vertices()) {
    if (!v.position) throw std::invalid_argument("orientation needs a position for vertex '" + v.name + "'");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    if (e.direction.evaluate(*g.xi()).isZero()) {
      throw std::invalid_argument("xi is not generic: it annihilates edge " + edgeLabel(e));
    }
    const auto& s = *g.vertices()[g.requireIndex(e.south)].position;
    const auto& n = *g.vertices()[g.requireIndex(e.north)].position;
    Rational height;
    for (std::size_t i = 0; i < g.rank(); ++i) height += ((n[i] - s[i]) * (*g.xi())[i]);
    if (height.isZero()) throw std::invalid_argument("edge " + edgeLabel(e) + " has coincident heights under xi");
    edges.push_back(height.sign() > 0 ? e : Edge{e.north, e.south, -e.direction});
  }
  MomentGraph out = g;
  out.setEdges(std::move(edges));
  return out;
}

Incidence incidence(const MomentGraph& g) {
  Incidence inc;
  inc.below.resize(g.vertexCount());
  inc.above.resize(g.vertexCount());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    inc.below[g.requireIndex(e.north)].push_back(i);
    inc.above[g.requireIndex(e.south)].push_back(i);
  }
  return inc;
}

int downDegree(const MomentGraph& g, const std::string& v) {
  (void)g.requireIndex(v);
  return static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(),
                                        [&](const Edge& e) { return e.north == v; }));
}

std::vector<int> downDegrees(const MomentGraph& g) {
  std::vector<int> out(g.vertexCount(), 0);
  for (const auto& e : g.edges()) ++out[g.requireIndex(e.north)];
  return out;
}

PalaisSmaleResult palaisSmaleCheck(const MomentGraph& g) {
  PalaisSmaleResult r;
  const auto deg = downDegrees(g);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    if (deg[g.requireIndex(e.north)] <= deg[g.requireIndex(e.south)]) r.violatingEdges.push_back(i);
  }
  r.holds = r.violatingEdges.empty();
  return r;
}

std::vector<std::vector<bool>> upSets(const MomentGraph& g) {
  const std::size_t n = g.vertexCount();
  const auto inc = incidence(g);
  std::vector<std::vector<bool>> up(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> stack{v};
    up[v][v] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto e : inc.above[u]) {
        const auto w = g.requireIndex(g.edges()[e].north);
        if (!up[v][w]) {
          up[v][w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return up;
}

std::vector<std::size_t> linearExtension(const MomentGraph& g) {
  const std::size_t n = g.vertexCount();
  const auto deg = downDegrees(g);
  std::vector<Rational> height(n);
  const bool useHeight = g.xi().has_value() &&
                         std::all_of(g.vertices().begin(), g.vertices().end(),
                                     [](const Vertex& v) { return v.position.has_value(); });
  if (useHeight) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < g.rank(); ++i) height[v] += (*g.vertices()[v].position)[i] * (*g.xi())[i];
    }
  }
  auto key = [&](std::size_t v) { return std::tie(deg[v], height[v], g.vertices()[v].name); };
  auto later = [&](std::size_t a, std::size_t b) {
    if (key(a) != key(b)) return key(b) < key(a);
    return b < a;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
  const auto inc = incidence(g);
  std::vector<std::size_t> pending(n);
  for (std::size_t v = 0; v < n; ++v) {
    pending[v] = inc.below[v].size();
    if (pending[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const auto v = ready.top();
    ready.pop();
    order.push_back(v);
    for (auto e : inc.above[v]) {
      const auto w = g.requireIndex(g.edges()[e].north);
      if (--pending[w] == 0) ready.push(w);
    }
  }
  if (order.size() != n) throw ValidationError(kCheckAcyclic, "orientation has a directed cycle");
  return order;
}

}  // namespace gkm
