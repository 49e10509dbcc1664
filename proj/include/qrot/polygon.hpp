#ifndef QROT_POLYGON_HPP
#define QROT_POLYGON_HPP

#include <array>
#include <map>
#include <vector>

#include "qrot/farey.hpp"
#include "qrot/laurent.hpp"

namespace qrot {

// Triangle of the strip; vertices listed as {left, right, apex} where left
// and right span the base.  base_up means the base lies on the top row.
struct FanTriangle {
  std::array<int, 3> v;
  bool base_up;
};

struct OrientedEdge {
  int from, to;
  int weight_exp;
};

// Fan triangulation of a convex n-gon presented as a strip of triangles
// between two horizontal rows.  Vertex 0 sits bottom-left, the top row holds
// 1..k+1 left to right, the bottom row continues n-1, n-2, ..., k+2.
// Triangles are kept in strip order with t0 = {0, 1, n-1} leftmost.  Edges
// carry the orientation rules and the Farey weight exponents; the leftmost
// edge {0,1} is the single unoriented, unweighted edge.
class FanTriangulation {
 public:
  static FanTriangulation build(const RegularCF& a);
  static FanTriangulation build(const NegativeCF& c);

  int vertex_count() const { return n_; }
  int inner_count() const { return k_; }  // k: top vertices are 1..k+1
  const Seq& a_seq() const { return a_; }
  const Seq& c_seq() const { return c_; }
  const std::vector<FanTriangle>& triangles() const { return triangles_; }
  const std::vector<OrientedEdge>& oriented_edges() const { return edges_; }

  // Scaled embedding: returned coordinates are 3x the conceptual (x, y) with
  // rows y = 0 and y = 1, so everything stays integral.
  std::array<long long, 2> coords(int v) const;

  bool is_top(int v) const { return v >= 1 && v <= k_ + 1; }
  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  // Triangles incident to each vertex.
  std::vector<int> quiddity() const;

  // Weight exponent of the oriented edge u -> v; throws if absent.
  int weight_exponent(int u, int v) const;
  const std::vector<std::vector<int>>& out_edges() const { return out_; }

 private:
  FanTriangulation() = default;
  static FanTriangulation build_from(Seq a, Seq c);
  void assert_acyclic() const;

  int n_ = 0, k_ = 0;
  Seq a_, c_;
  std::vector<FanTriangle> triangles_;
  std::vector<OrientedEdge> edges_;
  std::vector<std::vector<int>> out_;            // adjacency: v -> targets
  std::map<std::pair<int, int>, int> weight_;    // directed edge -> exponent
  std::vector<int> bottom_col_, top_col_;        // label -> column
  std::vector<int> parent_left_, parent_right_;  // Farey parents (-1 at 0, 1)
};

struct Path {
  std::vector<int> vertices;
  int area = 0;
  int coarea = 0;
  int weight_exp = 0;
};

enum class PathStatistic { kArea, kCoarea, kWeight };

// All simple oriented paths between two vertices, with area, coarea and
// total weight exponent attached.  The orientation relation is acyclic, so
// the search is a plain DFS.
std::vector<Path> enumerate_paths(const FanTriangulation& t, int from, int to);

// Sum of q^statistic over enumerate_paths(t, from, to).
LaurentPoly path_generating_poly(const FanTriangulation& t, int from, int to,
                                 PathStatistic stat);

}  // namespace qrot

#endif  // QROT_POLYGON_HPP
