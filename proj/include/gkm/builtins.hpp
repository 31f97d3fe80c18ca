#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkm/moment_graph.hpp"

namespace gkm::builtins {

/// CP^1 with rank-1 torus: vertices S (position 0) and N (position 1), edge S->N labelled t1.
MomentGraph cp1();

/// CP^n, rank n: vertices p1..p(n+1), where p(i+1) sits at e_i (e_0 = 0) and edge
/// p(i+1)->p(j+1) for i < j is labelled t_j - t_i with t_0 = 0.
MomentGraph cpn(int n);

/// Full flags in C^n, rank n. Vertices are permutations in one-line notation;
/// w -> (i j)w whenever swapping the values i < j raises the length, labelled t_i - t_j.
MomentGraph flag(int n);

/// Gr(k, n), rank n. Vertices are k-subsets; I -> I - {i} + {j} for i in I, j not
/// in I, i < j, labelled t_j - t_i.
MomentGraph grassmannian(int k, int n);

/// Three-step flags with the rank-2 torus diag(t1, 1, t2); the nine edges of the
/// hexagon-with-diagonals picture, vertices (bottom, lowerleft, lowerright,
/// upperleft, upperright, top).
MomentGraph paperFlag3();

/// The quadric x1 y1 + x2 y2 + x3 y3 = 0 in CP^5 (Gr(2,4) in its Pluecker embedding).
MomentGraph paperQuadric();

/// paperFlag3() without its three diagonals: the hexagon of a Hessenberg variety,
/// which is not Palais-Smale.
MomentGraph paperHessenberg();

struct Params {
  std::optional<int> n;
  std::optional<int> k;
};

/// Dispatch by name: cp1, cpn, flag, grassmannian, paper-flag3, paper-quadric,
/// paper-hessenberg. Throws std::invalid_argument for unknown names or out-of-range
/// parameters.
MomentGraph byName(const std::string& name, const Params& params = {});

/// Builtin names with their parameter signature, e.g. "grassmannian(k,n)".
std::vector<std::string> catalogue();

}  // namespace gkm::builtins
