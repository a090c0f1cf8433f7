#include <algorithm>
#include <vector>

#include "circlesys/graph.hpp"

namespace circlesys {

namespace {

bool connected_without(const std::vector<std::vector<VertexId>>& adj, const std::vector<char>& removed) {
  const int n = static_cast<int>(adj.size());
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == alive;
}

}  // namespace

std::vector<VertexId> articulation_points(const std::vector<std::vector<VertexId>>& adj,
                                          VertexId removed) {
  // Iterative Tarjan lowpoint search; parallel edges are harmless because a
  // back edge to the DFS parent only lowers low[] to disc[parent].
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<char> parent_edge_used(n, 0);
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (root == removed || disc[root] >= 0) continue;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const int v = stack.back();
      if (next[v] < adj[v].size()) {
        const int w = adj[v][next[v]++];
        if (w == removed) continue;
        if (disc[w] < 0) {
          parent[w] = v;
          ++child_count[v];
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w == parent[v] && !parent_edge_used[v]) {
          parent_edge_used[v] = 1;  // the tree edge itself, not a back edge
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        const int p = parent[v];
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (parent[p] >= 0 && low[v] >= disc[p]) is_cut[p] = 1;
        }
      }
    }
    if (child_count[root] > 1) is_cut[root] = 1;
  }
  std::vector<VertexId> out;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

int connectivity_level(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  if (!is_connected(g)) return 0;
  const auto adj = adjacency_lists(g);
  if (n <= 2) return n - 1 > 0 ? 1 : 0;
  if (!articulation_points(adj).empty()) return 1;
  if (n <= 3) return 2;

  // Later iterations are skipped once any thread finds a separating pair.
  int separable = 0;
#pragma omp parallel for schedule(dynamic, 8) shared(separable)
  for (int v = 0; v < n; ++v) {
    int found;
#pragma omp atomic read
    found = separable;
    if (found) continue;
    if (!articulation_points(adj, v).empty()) {
#pragma omp atomic write
      separable = 1;
    }
  }
  return separable ? 2 : 3;
}

int connectivity_level_reference(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  if (!is_connected(g)) return 0;
  const auto adj = adjacency_lists(g);
  std::vector<char> removed(n, 0);
  // k-connected needs n > k and no separating set of size < k.
  int level = 1;
  if (n > 2) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      removed[a] = 1;
      ok = connected_without(adj, removed);
      removed[a] = 0;
    }
    if (!ok) return 1;
    level = 2;
  } else {
    return n - 1 > 0 ? 1 : 0;
  }
  if (n > 3) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        removed[a] = removed[b] = 1;
        const bool ok = connected_without(adj, removed);
        removed[a] = removed[b] = 0;
        if (!ok) return 2;
      }
    level = 3;
  }
  return level;
}

}  // namespace circlesys
