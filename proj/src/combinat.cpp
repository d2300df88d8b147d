#include "clusterrad/combinat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

namespace clusterrad {

int pairIndex(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw DomainError("range", "invalid vertex pair");
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Edge pairAt(int n, int index) {
  for (int i = 0; i < n; ++i) {
    const int rowLength = n - i - 1;
    if (index < rowLength) return {i, i + 1 + index};
    index -= rowLength;
  }
  throw DomainError("range", "pair index out of range");
}

std::vector<Edge> ConnectedGraph::edges() const {
  std::vector<Edge> out;
  for (int k = 0; k < pairCount(n); ++k)
    if (mask >> k & 1u) out.push_back(pairAt(n, k));
  return out;
}

int ConnectedGraph::edgeCount() const { return std::popcount(mask); }

namespace {

int findRoot(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool isConnectedMask(int n, std::uint32_t mask) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  int components = n;
  for (int k = 0; k < pairCount(n); ++k) {
    if (!(mask >> k & 1u)) continue;
    const Edge e = pairAt(n, k);
    const int a = findRoot(parent, e.i), b = findRoot(parent, e.j);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

const std::vector<std::uint32_t>& connectedGraphMasks(int n) {
  if (n < 2 || n > kMaxGraphVertices) throw DomainError("range", "graph enumeration supports 2 <= n <= 6");
  static std::mutex mutex;
  static std::map<int, std::vector<std::uint32_t>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::uint32_t> masks;
  const std::uint32_t total = 1u << pairCount(n);
  for (std::uint32_t m = 1; m < total; ++m)
    if (isConnectedMask(n, m)) masks.push_back(m);
  return cache.emplace(n, std::move(masks)).first->second;
}

std::vector<int> LabeledTree::degrees() const {
  std::vector<int> deg(n, 0);
  for (const auto& e : edges) ++deg[e.i], ++deg[e.j];
  return deg;
}

std::vector<std::vector<int>> LabeledTree::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

bool LabeledTree::valid() const {
  if (n < 1 || static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n || e.i == e.j) return false;
    const int a = findRoot(parent, e.i), b = findRoot(parent, e.j);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

LabeledTree prueferDecode(int n, const std::vector<int>& sequence) {
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2)
    throw DomainError("range", "Pruefer sequence must have length n-2");
  std::vector<int> degree(n, 1);
  for (int v : sequence) {
    if (v < 0 || v >= n) throw DomainError("range", "Pruefer label out of range");
    ++degree[v];
  }
  LabeledTree tree{n, {}};
  for (int v : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    tree.edges.push_back({std::min(leaf, v), std::max(leaf, v)});
    --degree[leaf];
    --degree[v];
  }
  int u = -1, w = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) (u < 0 ? u : w) = v;
  tree.edges.push_back({u, w});
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
  return tree;
}

std::vector<int> prueferEncode(const LabeledTree& tree) {
  if (!tree.valid()) throw DomainError("range", "not a labeled tree");
  const int n = tree.n;
  auto adj = tree.adjacency();
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<bool> removed(n, false);
  std::vector<int> seq;
  for (int step = 0; step < n - 2; ++step) {
    int leaf = 0;
    while (removed[leaf] || degree[leaf] != 1) ++leaf;
    int neighbour = -1;
    for (int u : adj[leaf])
      if (!removed[u]) neighbour = u;
    seq.push_back(neighbour);
    removed[leaf] = true;
    --degree[neighbour];
  }
  return seq;
}

std::vector<LabeledTree> allTrees(int n) {
  std::vector<LabeledTree> out;
  enumerateTrees(n, [&](const LabeledTree& t) { out.push_back(t); });
  return out;
}

std::vector<CompatibleSequence> compatibleSequences(const LabeledTree& tree) {
  std::vector<CompatibleSequence> out;
  enumerateCompatibleSequences(tree, [&](const CompatibleSequence& s) { out.push_back(s); });
  return out;
}

std::vector<int> recountCrossings(const LabeledTree& tree, const std::vector<int>& order) {
  std::vector<bool> inside(tree.n, false);
  std::vector<int> b;
  for (int s = 0; s + 1 < tree.n; ++s) {
    inside[order[s]] = true;
    int count = 0;
    for (const auto& e : tree.edges) count += inside[e.i] != inside[e.j];
    b.push_back(count);
  }
  return b;
}

std::vector<int> interpolationExponentFactor(const CompatibleSequence& seq, int i, int j) {
  if (i == j) throw DomainError("range", "pair needs two distinct vertices");
  std::vector<int> stages;
  const int n = static_cast<int>(seq.order.size());
  std::vector<bool> inside(n, false);
  for (int s = 1; s < n; ++s) {
    inside[seq.order[s - 1]] = true;
    if (inside[i] != inside[j]) stages.push_back(s);
  }
  return stages;
}

}  // namespace clusterrad
