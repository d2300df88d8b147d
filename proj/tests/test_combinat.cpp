#include <doctest.h>

#include <set>

#include "clusterrad/combinat.hpp"

using namespace clusterrad;

TEST_CASE("connected labeled graph counts") {
  const std::size_t expected[] = {0, 0, 1, 4, 38, 728, 26704};
  for (int n = 2; n <= kMaxGraphVertices; ++n) CHECK(connectedGraphMasks(n).size() == expected[n]);
}

TEST_CASE("labeled tree counts follow Cayley") {
  for (int n = 2; n <= kMaxTreeVertices; ++n) {
    std::size_t count = 0;
    std::set<std::vector<std::pair<int, int>>> seen;
    enumerateTrees(n, [&](const LabeledTree& t) {
      CHECK(t.valid());
      std::vector<std::pair<int, int>> key;
      for (const auto& e : t.edges) key.emplace_back(e.i, e.j);
      seen.insert(key);
      ++count;
    });
    std::size_t cayley = 1;
    for (int k = 0; k < n - 2; ++k) cayley *= n;
    CHECK(count == cayley);
    CHECK(seen.size() == cayley);
  }
}

TEST_CASE("pruefer round trip") {
  for (const auto& t : allTrees(5)) CHECK(prueferDecode(5, prueferEncode(t)) == t);
  CHECK_THROWS_AS(prueferDecode(4, {0, 7}), DomainError);
}

TEST_CASE("pair indexing is a bijection") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k < pairCount(n); ++k) {
      const auto e = pairAt(n, k);
      CHECK(pairIndex(n, e.i, e.j) == k);
      CHECK(pairIndex(n, e.j, e.i) == k);
    }
}

TEST_CASE("compatible sequences of a path and a star") {
  // path 0-1-2-3 admits only the identity order from vertex 0
  const LabeledTree path{4, {{0, 1}, {1, 2}, {2, 3}}};
  const auto ps = compatibleSequences(path);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].crossCounts == std::vector<int>{1, 1, 1});
  // star centred at 0: every permutation of the leaves
  const LabeledTree star{4, {{0, 1}, {0, 2}, {0, 3}}};
  const auto ss = compatibleSequences(star);
  CHECK(ss.size() == 6);
  for (const auto& s : ss) {
    CHECK(s.crossCounts == std::vector<int>{3, 2, 1});
    CHECK(recountCrossings(star, s.order) == s.crossCounts);
  }
}

TEST_CASE("stage interval of a pair") {
  const LabeledTree path{3, {{0, 1}, {1, 2}}};
  const auto s = compatibleSequences(path).front();
  CHECK(stageInterval(s, 0, 2) == std::pair<int, int>{1, 2});
  CHECK(stageInterval(s, 1, 2) == std::pair<int, int>{2, 2});
}

TEST_CASE("connectivity check") {
  CHECK(isConnectedMask(3, 0b011));
  CHECK_FALSE(isConnectedMask(3, 0b001));
  CHECK_FALSE(isConnectedMask(4, 0b000001 | 0b100000));
}
