#include "gkm/builtins.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gkm::builtins {

namespace {

// c_1 t_1 + ... from small integer coefficients
LinearForm form(std::initializer_list<long> coefficients) {
  std::vector<Rational> c;
  for (long x : coefficients) c.emplace_back(x);
  return LinearForm(std::move(c));
}

std::vector<Rational> point(std::initializer_list<long> coords) {
  std::vector<Rational> out;
  for (long x : coords) out.emplace_back(x);
  return out;
}

// t_i - t_j in k variables, 1-based, with index 0 standing for the zero form.
LinearForm difference(std::size_t k, int i, int j) {
  std::vector<Rational> c(k);
  if (i > 0) c[i - 1] += Rational(1);
  if (j > 0) c[j - 1] -= Rational(1);
  return LinearForm(std::move(c));
}

std::string joinIndices(const std::vector<int>& values, int bound) {
  std::string out;
  for (int v : values) {
    if (!out.empty() && bound >= 10) out += '_';
    out += std::to_string(v);
  }
  return out;
}

int inversions(const std::vector<int>& w) {
  int count = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) count += w[a] > w[b] ? 1 : 0;
  }
  return count;
}

}  // namespace

MomentGraph cp1() {
  MomentGraph g(1);
  g.addVertex("S", point({0}));
  g.addVertex("N", point({1}));
  g.addEdge("S", "N", form({1}));
  g.setXi(point({1}));
  return g;
}

MomentGraph cpn(int n) {
  if (n < 1) throw std::invalid_argument("cpn needs n >= 1");
  const auto k = static_cast<std::size_t>(n);
  MomentGraph g(k);
  auto name = [](int i) { return "p" + std::to_string(i + 1); };
  for (int i = 0; i <= n; ++i) {
    std::vector<Rational> pos(k);
    if (i > 0) pos[i - 1] = Rational(1);
    g.addVertex(name(i), std::move(pos));
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) g.addEdge(name(i), name(j), difference(k, j, i));
  }
  std::vector<Rational> xi;
  for (int i = 1; i <= n; ++i) xi.emplace_back(i);
  g.setXi(std::move(xi));
  return g;
}

MomentGraph flag(int n) {
  if (n < 1) throw std::invalid_argument("flag needs n >= 1");
  if (n > 6) throw std::invalid_argument("flag supports n <= 6");
  const auto k = static_cast<std::size_t>(n);
  MomentGraph g(k);
  std::vector<int> w(k);
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));

  for (const auto& p : perms) {
    std::vector<Rational> pos(k);
    for (std::size_t a = 0; a < k; ++a) pos[p[a] - 1] = Rational(static_cast<long>(a + 1));
    g.addVertex(joinIndices(p, n), std::move(pos));
  }
  for (const auto& p : perms) {
    const int len = inversions(p);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        std::vector<int> q = p;
        for (auto& x : q) x = (x == i) ? j : (x == j ? i : x);
        if (inversions(q) > len) g.addEdge(joinIndices(p, n), joinIndices(q, n), difference(k, i, j));
      }
    }
  }
  std::vector<Rational> xi;
  for (int i = n; i >= 1; --i) xi.emplace_back(i);
  g.setXi(std::move(xi));
  return g;
}

MomentGraph grassmannian(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("grassmannian needs 1 <= k < n");
  if (n > 12) throw std::invalid_argument("grassmannian supports n <= 12");
  const auto rank = static_cast<std::size_t>(n);
  MomentGraph g(rank);
  std::vector<std::vector<int>> subsets;
  std::vector<bool> chosen(rank, false);
  std::fill(chosen.begin(), chosen.begin() + k, true);
  do {
    std::vector<int> s;
    for (std::size_t i = 0; i < rank; ++i) {
      if (chosen[i]) s.push_back(static_cast<int>(i + 1));
    }
    subsets.push_back(std::move(s));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));

  for (const auto& s : subsets) {
    std::vector<Rational> pos(rank);
    for (int i : s) pos[i - 1] = Rational(1);
    g.addVertex(joinIndices(s, n), std::move(pos));
  }
  for (const auto& s : subsets) {
    for (int i : s) {
      for (int j = i + 1; j <= n; ++j) {
        if (std::find(s.begin(), s.end(), j) != s.end()) continue;
        std::vector<int> t = s;
        std::replace(t.begin(), t.end(), i, j);
        std::sort(t.begin(), t.end());
        g.addEdge(joinIndices(s, n), joinIndices(t, n), difference(rank, j, i));
      }
    }
  }
  std::vector<Rational> xi;
  for (int i = 1; i <= n; ++i) xi.emplace_back(i);
  g.setXi(std::move(xi));
  return g;
}

MomentGraph paperFlag3() {
  MomentGraph g(2);
  for (const char* v : {"bottom", "lowerleft", "lowerright", "upperleft", "upperright", "top"}) g.addVertex(v);
  g.addEdge("bottom", "lowerleft", form({1, 0}));
  g.addEdge("bottom", "lowerright", form({0, 1}));
  g.addEdge("bottom", "top", form({1, -1}));
  g.addEdge("lowerleft", "upperleft", form({1, -1}));
  g.addEdge("lowerright", "upperright", form({1, -1}));
  // Diagonal labels fixed by the flow-up class (0, t1, 0, t1, t1-t2, t1-t2) at lowerleft.
  g.addEdge("lowerleft", "upperright", form({0, 1}));
  g.addEdge("lowerright", "upperleft", form({1, 0}));
  g.addEdge("upperleft", "top", form({0, 1}));
  g.addEdge("upperright", "top", form({1, 0}));
  return g;
}

// Edge labels follow from the generic section
//   x1: p1
//   x2: p1 + t3 p2
//   x3: p1 + t2 p2 + t2(t2-t3) p3
//   y3: p1 + (t3-t1) p2 + t1(t1-t3) p4
//   y2: p1 + (t2-t1) p2 + (t2-t1)(t2-t3) p3 + t1(t1-t2) p4 + t1(t1-t2)(t2-t3) p5
//   y1: p1 + (t3+t2-t1) p2 + t2(t2-t1) p3 + (t1-t3)(t1-t2) p4
//          + t2(t1-t2)(t1-t3) p5 + t2 t3 (t1-t2)(t1-t3) p6
// since the difference along an edge must be divisible by its label for every
// choice of p1..p6. Each label occurs on exactly two parallel edges. Positions are
// the coordinate weights (x1: t1+t2+t3, x2: t1+t2, x3: t1+t3, y1: 0, y2: t3,
// y3: t2) after the change of basis e1 -> -t1, negated so that every edge points
// up; labels are written as north minus south.
MomentGraph paperQuadric() {
  MomentGraph g(3);
  g.addVertex("x1", point({1, -1, -1}));
  g.addVertex("x2", point({1, -1, 0}));
  g.addVertex("x3", point({1, 0, -1}));
  g.addVertex("y3", point({0, -1, 0}));
  g.addVertex("y2", point({0, 0, -1}));
  g.addVertex("y1", point({0, 0, 0}));
  g.addEdge("x1", "x2", form({0, 0, 1}));
  g.addEdge("x1", "x3", form({0, 1, 0}));
  g.addEdge("x2", "x3", form({0, 1, -1}));
  g.addEdge("x1", "y3", form({-1, 0, 1}));
  g.addEdge("x2", "y3", form({-1, 0, 0}));
  g.addEdge("x1", "y2", form({-1, 1, 0}));
  g.addEdge("x3", "y2", form({-1, 0, 0}));
  g.addEdge("y3", "y2", form({0, 1, -1}));
  g.addEdge("x2", "y1", form({-1, 1, 0}));
  g.addEdge("x3", "y1", form({-1, 0, 1}));
  g.addEdge("y3", "y1", form({0, 1, 0}));
  g.addEdge("y2", "y1", form({0, 0, 1}));
  g.setXi(point({-1, 3, 2}));
  return g;
}

MomentGraph paperHessenberg() {
  MomentGraph full = paperFlag3();
  MomentGraph g(2);
  for (const auto& v : full.vertices()) g.addVertex(v.name, v.position);
  for (const auto& e : full.edges()) {
    const bool diagonal = (e.south == "bottom" && e.north == "top") ||
                          (e.south == "lowerleft" && e.north == "upperright") ||
                          (e.south == "lowerright" && e.north == "upperleft");
    if (!diagonal) g.addEdge(e.south, e.north, e.direction);
  }
  return g;
}

MomentGraph byName(const std::string& name, const Params& params) {
  auto need = [&](const std::optional<int>& v, const char* what) {
    if (!v) throw std::invalid_argument("builtin '" + name + "' needs parameter " + what);
    return *v;
  };
  if (name == "cp1") return cp1();
  if (name == "cpn") return cpn(need(params.n, "n"));
  if (name == "flag") return flag(need(params.n, "n"));
  if (name == "grassmannian") return grassmannian(need(params.k, "k"), need(params.n, "n"));
  if (name == "paper-flag3") return paperFlag3();
  if (name == "paper-quadric") return paperQuadric();
  if (name == "paper-hessenberg") return paperHessenberg();
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

std::vector<std::string> catalogue() {
  return {"cp1", "cpn(n)", "flag(n)", "grassmannian(k,n)", "paper-flag3", "paper-quadric", "paper-hessenberg"};
}

}  // namespace gkm::builtins
