#include "circlesys/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace circlesys {

namespace {

using Signature = std::tuple<int, std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>;

// Joint color refinement on the disjoint union of a and b.
std::vector<int> refine(const ColoredDigraph& a, const ColoredDigraph& b) {
  const int n = a.n + b.n;
  auto arcs = [&](int i, int j) -> int {
    if (i < a.n && j < a.n) return a.arcs[i][j];
    if (i >= a.n && j >= a.n) return b.arcs[i - a.n][j - a.n];
    return 0;
  };
  auto block = [&](int i) { return i < a.n ? std::pair{0, a.n} : std::pair{a.n, n}; };

  std::vector<int> color(n);
  for (int i = 0; i < a.n; ++i) color[i] = a.color[i];
  for (int i = 0; i < b.n; ++i) color[a.n + i] = b.color[i];
  int classes = -1;
  for (;;) {
    std::map<Signature, int> ids;
    std::vector<Signature> sig(n);
    for (int v = 0; v < n; ++v) {
      const auto [lo, hi] = block(v);
      std::vector<std::pair<int, int>> out, in;
      for (int w = lo; w < hi; ++w) {
        if (int c = arcs(v, w)) out.emplace_back(color[w], c);
        if (int c = arcs(w, v)) in.emplace_back(color[w], c);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      sig[v] = {color[v], std::move(out), std::move(in)};
      ids.emplace(sig[v], 0);
    }
    int next_id = 0;
    for (auto& [key, id] : ids) id = next_id++;
    for (int v = 0; v < n; ++v) color[v] = ids[sig[v]];
    if (next_id == classes) break;
    classes = next_id;
  }
  return color;
}

}  // namespace

ColoredDigraph undirected_of(const EmbeddedGraph& g) {
  ColoredDigraph out(g.vertex_count());
  for (DartId d = 0; d < g.dart_count(); ++d) out.arcs[g.dart(d).tail][g.dart(d).head] += 1;
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b) {
  if (a.n != b.n) return std::nullopt;
  const int n = a.n;
  if (n == 0) return std::vector<int>{};
  const std::vector<int> joint = refine(a, b);
  std::vector<int> ca(joint.begin(), joint.begin() + n), cb(joint.begin() + n, joint.end());
  {
    auto ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }

  // Search order: start from the rarest class, then breadth-first so that each
  // vertex (after the first of its component) has an already-mapped neighbor.
  std::map<int, int> class_size;
  for (int c : ca) ++class_size[c];
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  while (static_cast<int>(order.size()) < n) {
    int root = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && (root < 0 || class_size[ca[v]] < class_size[ca[root]])) root = v;
    std::queue<int> q;
    q.push(root);
    placed[root] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w = 0; w < n; ++w)
        if (!placed[w] && (a.arcs[v][w] || a.arcs[w][v])) {
          placed[w] = 1;
          q.push(w);
        }
    }
  }

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto consistent = [&](int depth, int v, int c) {
    if (a.arcs[v][v] != b.arcs[c][c]) return false;
    for (int i = 0; i < depth; ++i) {
      const int x = order[i];
      if (a.arcs[v][x] != b.arcs[c][image[x]] || a.arcs[x][v] != b.arcs[image[x]][c]) return false;
    }
    return true;
  };

  // Explicit-stack backtracking; cursor[depth] is the next candidate to try.
  std::vector<int> cursor(n + 1, 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == n) return image;
    const int v = order[depth];
    bool advanced = false;
    for (int c = cursor[depth]; c < n; ++c) {
      if (used[c] || cb[c] != ca[v] || !consistent(depth, v, c)) continue;
      image[v] = c;
      used[c] = 1;
      cursor[depth] = c + 1;
      ++depth;
      if (depth < n) cursor[depth] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    cursor[depth] = 0;
    --depth;
    if (depth >= 0) {
      const int u = order[depth];
      used[image[u]] = 0;
      image[u] = -1;
    }
  }
  return std::nullopt;
}

bool isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.dart_count() != b.dart_count()) return false;
  return find_isomorphism(undirected_of(a), undirected_of(b)).has_value();
}

}  // namespace circlesys
