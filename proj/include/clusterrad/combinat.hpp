#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "clusterrad/errors.hpp"

// Vertices are 0-based here: vertex 0 plays the role of the root "1".

namespace clusterrad {

constexpr int kMaxGraphVertices = 6;
constexpr int kMaxTreeVertices = 7;

struct Edge {
  int i = 0;
  int j = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Number of unordered pairs on n vertices.
constexpr int pairCount(int n) { return n * (n - 1) / 2; }
/// Index of pair {i, j} in the order (0,1), (0,2), ..., (n-2,n-1).
int pairIndex(int n, int i, int j);
Edge pairAt(int n, int index);

struct ConnectedGraph {
  int n = 0;
  std::uint32_t mask = 0;  // bit k set <=> pairAt(n, k) is an edge

  std::vector<Edge> edges() const;
  int edgeCount() const;
};

bool isConnectedMask(int n, std::uint32_t mask);

/// Edge masks of all connected graphs on n vertices, ascending. Cached.
const std::vector<std::uint32_t>& connectedGraphMasks(int n);

template <class Visitor>
void enumerateConnectedGraphs(int n, Visitor&& visit) {
  for (std::uint32_t m : connectedGraphMasks(n)) visit(ConnectedGraph{n, m});
}

struct LabeledTree {
  int n = 0;
  std::vector<Edge> edges;  // each with i < j, sorted

  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;
  /// Acyclic, connected, n-1 edges.
  bool valid() const;
  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

LabeledTree prueferDecode(int n, const std::vector<int>& sequence);
std::vector<int> prueferEncode(const LabeledTree& tree);

/// All n^{n-2} labeled trees, in lexicographic Prüfer order.
template <class Visitor>
void enumerateTrees(int n, Visitor&& visit) {
  if (n < 2 || n > kMaxTreeVertices) throw DomainError("range", "tree enumeration supports 2 <= n <= 7");
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    visit(prueferDecode(n, seq));
    int k = n - 3;
    while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
    if (k < 0) return;
    ++seq[k];
  }
}

std::vector<LabeledTree> allTrees(int n);

/// A vertex order starting at vertex 0 whose every prefix is τ-connected.
struct CompatibleSequence {
  std::vector<int> order;
  std::vector<int> position;     // position[v] = index of v in order
  std::vector<int> crossCounts;  // b_s for s = 1..n-1 stored at [s-1]
};

template <class Visitor>
void enumerateCompatibleSequences(const LabeledTree& tree, Visitor&& visit) {
  const int n = tree.n;
  const auto adj = tree.adjacency();
  CompatibleSequence seq;
  seq.order.reserve(n);
  seq.position.assign(n, -1);
  seq.crossCounts.reserve(n - 1);
  seq.order.push_back(0);
  seq.position[0] = 0;

  auto recurse = [&](auto&& self, int crossing) -> void {
    const int size = static_cast<int>(seq.order.size());
    if (size == n) {
      visit(static_cast<const CompatibleSequence&>(seq));
      return;
    }
    seq.crossCounts.push_back(crossing);
    // candidates in ascending label order for a deterministic stream
    for (int v = 0; v < n; ++v) {
      if (seq.position[v] >= 0) continue;
      bool attached = false;
      for (int u : adj[v])
        if (seq.position[u] >= 0) attached = true;
      if (!attached) continue;
      seq.position[v] = size;
      seq.order.push_back(v);
      // v brings deg(v) edges, one of which now lies inside the prefix
      self(self, crossing + static_cast<int>(adj[v].size()) - 2);
      seq.order.pop_back();
      seq.position[v] = -1;
    }
    seq.crossCounts.pop_back();
  };
  recurse(recurse, static_cast<int>(adj[0].size()));
}

std::vector<CompatibleSequence> compatibleSequences(const LabeledTree& tree);

/// b_s recomputed directly from the edge list.
std::vector<int> recountCrossings(const LabeledTree& tree, const std::vector<int>& order);

/// Stages s (1-based) at which exactly one of i, j lies in X_s.
std::vector<int> interpolationExponentFactor(const CompatibleSequence& seq, int i, int j);

/// Same set as a closed interval [first, last]; empty when first > last.
inline std::pair<int, int> stageInterval(const CompatibleSequence& seq, int i, int j) {
  const int pi = seq.position[i], pj = seq.position[j];
  return {std::min(pi, pj) + 1, std::max(pi, pj)};
}

}  // namespace clusterrad
