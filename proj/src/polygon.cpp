#include "qrot/polygon.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qrot {
namespace {

struct Pt {
  long long x, y;
};

long long cross(const Pt& a, const Pt& b, const Pt& p) {
  return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
}

// Standard winding number of a closed polyline (first point repeated at the
// end) around p; p must avoid the polyline, which holds for triangle
// centroids against edge segments in this embedding.
int winding(const std::vector<Pt>& poly, const Pt& p) {
  int w = 0;
  for (size_t i = 0; i + 1 < poly.size(); ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[i + 1];
    if (a.y <= p.y && p.y < b.y && cross(a, b, p) > 0) ++w;
    if (b.y <= p.y && p.y < a.y && cross(a, b, p) < 0) --w;
  }
  return w;
}

}  // namespace

FanTriangulation FanTriangulation::build(const RegularCF& a) {
  return build_from(a.terms(), hirzebruch_convert(a).terms());
}

FanTriangulation FanTriangulation::build(const NegativeCF& c) {
  return build_from(hirzebruch_invert(c).terms(), c.terms());
}

FanTriangulation FanTriangulation::build_from(Seq a, Seq c) {
  FanTriangulation t;
  t.a_ = std::move(a);
  t.c_ = std::move(c);

  long long total = 0, even = 0;
  for (size_t i = 0; i < t.a_.size(); ++i) {
    total += t.a_[i];
    if (i % 2 == 1) even += t.a_[i];
  }
  if (total + 2 > 4000)
    throw std::invalid_argument("triangulation too large");
  t.n_ = static_cast<int>(total + 2);
  t.k_ = static_cast<int>(even);

  const int n = t.n_, k = t.k_;
  // label <-> column maps.  bottom row: 0, n-1, n-2, ..., k+2; top: 1..k+1.
  t.bottom_col_.assign(n, -1);
  t.top_col_.assign(n, -1);
  t.bottom_col_[0] = 0;
  for (int col = 1; col <= n - k - 2; ++col) t.bottom_col_[n - col] = col;
  for (int col = 0; col <= k; ++col) t.top_col_[col + 1] = col;

  auto bottom_label = [&](int col) { return col == 0 ? 0 : n - col; };
  auto top_label = [&](int col) { return col + 1; };

  // Strip of triangles: runs of a_1 base-down, a_2 base-up, ...
  int bcol = 0, tcol = 0;
  for (size_t run = 0; run < t.a_.size(); ++run) {
    const bool up = (run % 2 == 1);
    for (long long i = 0; i < t.a_[run]; ++i) {
      if (up) {
        t.triangles_.push_back(
            {{top_label(tcol), top_label(tcol + 1), bottom_label(bcol)}, true});
        ++tcol;
      } else {
        t.triangles_.push_back(
            {{bottom_label(bcol), bottom_label(bcol + 1), top_label(tcol)},
             false});
        ++bcol;
      }
    }
  }
  assert(bcol == n - k - 2 && tcol == k);

  // Replay of the weighted mediant rule along the strip.  Each triangle
  // introduces one vertex (the Farey median); its edge toward the bottom-row
  // parent gets exponent 0 and the edge toward the top-row parent gets d,
  // where the parents' shared edge carries d-1.  The leftmost edge {0,1}
  // seeds the replay at the virtual exponent -1.
  std::map<std::pair<int, int>, int> undirected_weight;
  undirected_weight[{0, 1}] = -1;
  auto uw = [&](int u, int v) -> int& {
    return undirected_weight[{std::min(u, v), std::max(u, v)}];
  };

  std::vector<int> parent_left(n, -1), parent_right(n, -1);
  for (size_t i = 0; i < t.triangles_.size(); ++i) {
    const FanTriangle& tri = t.triangles_[i];
    int w, shared_a, shared_b;
    if (i == 0) {
      w = tri.v[1];  // n-1, the first median
      shared_a = tri.v[0];
      shared_b = tri.v[2];
    } else {
      const auto& prev = t.triangles_[i - 1].v;
      auto in_prev = [&](int x) {
        return x == prev[0] || x == prev[1] || x == prev[2];
      };
      w = -1;
      for (int x : tri.v)
        if (!in_prev(x)) w = x;
      assert(w != -1);
      shared_a = shared_b = -1;
      for (int x : tri.v)
        if (x != w) (shared_a == -1 ? shared_a : shared_b) = x;
    }
    const int bp = t.is_top(shared_a) ? shared_b : shared_a;
    const int tp = t.is_top(shared_a) ? shared_a : shared_b;
    const int d = uw(bp, tp) + 1;
    uw(w, bp) = 0;
    uw(w, tp) = d;
    parent_left[w] = bp;
    parent_right[w] = tp;
  }

  // Oriented edges are exactly the median-to-parent edges.
  t.out_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    if (parent_left[v] == -1) continue;
    for (int p : {parent_left[v], parent_right[v]}) {
      t.edges_.push_back({v, p, uw(v, p)});
      t.out_[v].push_back(p);
      t.weight_[{v, p}] = uw(v, p);
    }
  }
  t.parent_left_ = std::move(parent_left);
  t.parent_right_ = std::move(parent_right);

  // Cross-check against the stated orientation rules: base edges leftward,
  // rightmost edge downward, interior edge upward exactly when the triangle
  // on its left is base-down.
  {
    std::map<std::pair<int, int>, int> dir;  // undirected -> oriented source
    for (const auto& e : t.edges_)
      dir[{std::min(e.from, e.to), std::max(e.from, e.to)}] = e.from;
    auto check = [&](int from, int to) {
      auto it = dir.find({std::min(from, to), std::max(from, to)});
      if (it == dir.end() || it->second != from)
        throw std::logic_error("orientation rule mismatch");
    };
    for (int col = 0; col + 1 <= k; ++col)
      check(top_label(col + 1), top_label(col));
    for (int col = 0; col + 1 <= n - k - 2; ++col)
      check(bottom_label(col + 1), bottom_label(col));
    check(top_label(k), bottom_label(n - k - 2));
    for (size_t i = 0; i + 1 < t.triangles_.size(); ++i) {
      // shared edge of strip neighbors, one endpoint per row
      const auto& left = t.triangles_[i];
      const auto& right = t.triangles_[i + 1];
      int sa = -1, sb = -1;
      for (int x : right.v)
        if (x == left.v[0] || x == left.v[1] || x == left.v[2])
          (sa == -1 ? sa : sb) = x;
      const int bottom = t.is_top(sa) ? sb : sa;
      const int top = t.is_top(sa) ? sa : sb;
      if (!left.base_up)
        check(bottom, top);  // upward
      else
        check(top, bottom);  // downward
    }
  }

  t.assert_acyclic();

  // Quiddity sanity: positions 1..k must reproduce c, and the two ends of
  // the top row carry a single triangle.
  std::vector<int> quid = t.quiddity();
  if (quid[0] != 1 || quid[k + 1] != 1)
    throw std::logic_error("quiddity: ends of the fan must carry 1");
  for (int i = 1; i <= k; ++i)
    if (quid[i] != t.c_[i - 1]) throw std::logic_error("quiddity mismatch");

  for (int v = 0; v < n; ++v) {
    size_t expect = (v == 0 || v == 1) ? 0 : 2;
    if (t.out_[v].size() != expect)
      throw std::logic_error("out-degree invariant violated");
  }
  return t;
}

void FanTriangulation::assert_acyclic() const {
  std::vector<int> indeg(n_, 0);
  for (const auto& e : edges_) ++indeg[e.to];
  std::vector<int> stack;
  for (int v = 0; v < n_; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int u : out_[v])
      if (--indeg[u] == 0) stack.push_back(u);
  }
  if (seen != n_)
    throw std::logic_error("oriented edge relation has a cycle");
}

std::array<long long, 2> FanTriangulation::coords(int v) const {
  if (!has_vertex(v)) throw std::invalid_argument("no such vertex");
  if (is_top(v)) return {9LL * top_col_[v] + 6, 3};
  return {9LL * bottom_col_[v], 0};
}

std::vector<int> FanTriangulation::quiddity() const {
  std::vector<int> q(n_, 0);
  for (const auto& tri : triangles_)
    for (int v : tri.v) ++q[v];
  return q;
}

int FanTriangulation::weight_exponent(int u, int v) const {
  auto it = weight_.find({u, v});
  if (it == weight_.end())
    throw std::invalid_argument("no oriented edge between these vertices");
  return it->second;
}

namespace {

// Canonical boundary-hugging route between two vertices: prefer the
// weight-0 edge toward the bottom-left parent (low) or the top parent
// (high) whenever the target stays reachable.  For paths ending at vertex 1
// or 0 the low route is the bottom path of the triangulation.
std::vector<int> extreme_route(const FanTriangulation& t, int from, int to,
                               const std::vector<char>& reaches, bool low) {
  std::vector<int> route{from};
  int cur = from;
  while (cur != to) {
    int next = -1;
    const auto& outs = t.out_edges()[cur];
    std::vector<int> order(outs);
    // out_edges stores {left parent, right parent}
    if (!low) std::reverse(order.begin(), order.end());
    for (int cand : order) {
      if (cand == to || reaches[cand]) {
        next = cand;
        break;
      }
    }
    if (next == -1) throw std::logic_error("route construction failed");
    route.push_back(next);
    cur = next;
  }
  return route;
}

int enclosed_count(const FanTriangulation& t, const std::vector<int>& path,
                   const std::vector<int>& back_route) {
  std::vector<Pt> loop;
  for (int v : path) {
    auto c = t.coords(v);
    loop.push_back({c[0], c[1]});
  }
  for (size_t i = back_route.size() - 1; i-- > 0;) {
    auto c = t.coords(back_route[i]);
    loop.push_back({c[0], c[1]});
  }
  loop.push_back(loop.front());

  int count = 0;
  const auto& tris = t.triangles();
  for (size_t i = 1; i < tris.size(); ++i) {
    long long sx = 0, sy = 0;
    for (int v : tris[i].v) {
      auto c = t.coords(v);
      sx += c[0];
      sy += c[1];
    }
    Pt centroid{sx / 3, sy / 3};
    if (winding(loop, centroid) != 0) ++count;
  }
  return count;
}

}  // namespace

std::vector<Path> enumerate_paths(const FanTriangulation& t, int from,
                                  int to) {
  if (!t.has_vertex(from) || !t.has_vertex(to))
    throw std::invalid_argument("path endpoints must be vertices");

  // vertices from which `to` is reachable
  std::vector<char> reaches(t.vertex_count(), 0);
  {
    std::vector<std::vector<int>> in(t.vertex_count());
    for (const auto& e : t.oriented_edges()) in[e.to].push_back(e.from);
    std::vector<int> stack{to};
    std::vector<char> seen(t.vertex_count(), 0);
    seen[to] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : in[v])
        if (!seen[u]) {
          seen[u] = 1;
          reaches[u] = 1;
          stack.push_back(u);
        }
    }
  }

  std::vector<Path> out;
  std::vector<int> cur{from};
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == to) {
      Path p;
      p.vertices = cur;
      out.push_back(std::move(p));
    }
    for (int u : t.out_edges()[v]) {
      if (u != to && !reaches[u]) continue;
      cur.push_back(u);
      self(self, u);
      cur.pop_back();
    }
  };
  dfs(dfs, from);
  if (out.empty()) return out;

  std::vector<int> low = extreme_route(t, from, to, reaches, true);
  std::vector<int> high = extreme_route(t, from, to, reaches, false);
  for (Path& p : out) {
    p.coarea = enclosed_count(t, p.vertices, low);
    p.area = enclosed_count(t, p.vertices, high);
    int w = 0;
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
      w += t.weight_exponent(p.vertices[i], p.vertices[i + 1]);
    p.weight_exp = w;
  }
  return out;
}

LaurentPoly path_generating_poly(const FanTriangulation& t, int from, int to,
                                 PathStatistic stat) {
  LaurentPoly sum;
  for (const Path& p : enumerate_paths(t, from, to)) {
    int e = stat == PathStatistic::kArea
                ? p.area
                : (stat == PathStatistic::kCoarea ? p.coarea : p.weight_exp);
    sum += q_power(e);
  }
  return sum;
}

}  // namespace qrot
