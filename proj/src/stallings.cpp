#include "heegaard/stallings.hpp"

#include <map>
#include <numeric>
#include <queue>

namespace heegaard {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool FoldedGraph::contains(const Word& w) const {
  int v = 0;
  for (const Letter& l : w) {
    int next = adj[v][letter_key(l)];
    if (next < 0) return false;
    v = next;
  }
  return v == 0;
}

std::string FoldedGraph::canonical_string() const {
  std::vector<int> number(adj.size(), -1);
  std::vector<int> order;
  number[0] = 0;
  order.push_back(0);
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int k = 0; k < 2 * rank; ++k) {
      int w = adj[v][k];
      if (w >= 0 && number[w] < 0) {
        number[w] = (int)order.size();
        order.push_back(w);
        q.push(w);
      }
    }
  }
  std::string s;
  for (int v : order) {
    for (int k = 0; k < 2 * rank; ++k) {
      int w = adj[v][k];
      s += std::to_string(w < 0 ? -1 : number[w]);
      s += k + 1 < 2 * rank ? ',' : ';';
    }
  }
  return s;
}

FoldedGraph fold(const std::vector<Word>& generators, int rank) {
  // Collect directed edges (u, letter, v) of the wedge of loops at vertex 0.
  struct Edge {
    int u, v;
    int gen;  // positive generator index
  };
  std::vector<Edge> edges;
  int nverts = 1;
  for (const Word& w : generators) {
    int prev = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      int next = (i + 1 == w.size()) ? 0 : nverts++;
      const Letter& l = w[i];
      if (l.sign > 0) edges.push_back({prev, next, l.idx});
      else edges.push_back({next, prev, l.idx});
      prev = next;
    }
  }

  UnionFind uf(nverts);
  bool changed = true;
  while (changed) {
    changed = false;
    // For each (vertex, direction) pair, merge endpoints of parallel edges.
    std::map<std::pair<int, int>, int> target;  // (root, +-gen) -> target root
    target.clear();
    for (const Edge& e : edges) {
      int u = uf.find(e.u), v = uf.find(e.v);
      auto claim = [&](int from, int slot, int to) {
        auto it = target.find({from, slot});
        if (it == target.end()) {
          target[{from, slot}] = to;
        } else if (uf.find(it->second) != uf.find(to)) {
          uf.unite(it->second, to);
          changed = true;
        }
      };
      claim(u, e.gen, v);
      claim(v, -e.gen, u);
      if (changed) break;  // roots moved; rebuild the map
    }
  }

  // Compact to root-representative numbering with the base first.
  std::map<int, int> compact;
  compact[uf.find(0)] = 0;
  auto idx = [&](int v) {
    int r = uf.find(v);
    auto it = compact.find(r);
    if (it != compact.end()) return it->second;
    int id = (int)compact.size();
    compact[r] = id;
    return id;
  };
  FoldedGraph g;
  g.rank = rank;
  for (const Edge& e : edges) {
    int u = idx(e.u), v = idx(e.v);
    int need = std::max(u, v) + 1;
    if ((int)g.adj.size() < need) g.adj.resize(need, {-1, -1, -1, -1, -1, -1, -1, -1});
    g.adj[u][letter_key(Letter(e.gen, 1))] = v;
    g.adj[v][letter_key(Letter(e.gen, -1))] = u;
  }
  if (g.adj.empty()) g.adj.resize(1, {-1, -1, -1, -1, -1, -1, -1, -1});
  return g;
}

FoldedGraph trim(const FoldedGraph& g) {
  std::vector<bool> dead(g.adj.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t v = 1; v < g.adj.size(); ++v) {
      if (dead[v]) continue;
      int degree = 0;
      for (int k = 0; k < 2 * g.rank; ++k) {
        int w = g.adj[v][k];
        if (w >= 0 && !dead[w]) ++degree;
      }
      if (degree <= 1) {
        dead[v] = true;
        changed = true;
      }
    }
  }
  std::vector<int> renum(g.adj.size(), -1);
  int next = 0;
  for (size_t v = 0; v < g.adj.size(); ++v)
    if (!dead[v]) renum[v] = next++;
  FoldedGraph out;
  out.rank = g.rank;
  out.adj.resize(next, {-1, -1, -1, -1, -1, -1, -1, -1});
  for (size_t v = 0; v < g.adj.size(); ++v) {
    if (dead[v]) continue;
    for (int k = 0; k < 2 * g.rank; ++k) {
      int w = g.adj[v][k];
      if (w >= 0 && !dead[w]) out.adj[renum[v]][k] = renum[w];
    }
  }
  return out;
}

bool is_basis_tuple(const std::vector<Word>& tuple, int rank) {
  if ((int)tuple.size() != rank) return false;
  FoldedGraph core = trim(fold(tuple, rank));
  if (core.vertex_count() != 1) return false;
  for (int k = 0; k < 2 * rank; ++k)
    if (core.adj[0][k] != 0) return false;
  return true;
}

}  // namespace heegaard
