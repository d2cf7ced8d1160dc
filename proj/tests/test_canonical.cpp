#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ddgraph/canonical.hpp"
#include "ddgraph/construction.hpp"
#include "ddgraph/errors.hpp"
#include "ddgraph/graph.hpp"
#include "ddgraph/latin_square.hpp"

using namespace ddgraph;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) g.set_edge(u, (u + 1) % n);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.set_edge(i, (i + 1) % 5);
    g.set_edge(5 + i, 5 + (i + 2) % 5);
    g.set_edge(i, 5 + i);
  }
  return g;
}

Graph prism() {
  Graph g(6);
  for (int i = 0; i < 3; ++i) {
    g.set_edge(i, (i + 1) % 3);
    g.set_edge(3 + i, 3 + (i + 1) % 3);
    g.set_edge(i, 3 + i);
  }
  return g;
}

Graph k33() {
  Graph g(6);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) g.set_edge(u, v);
  return g;
}

Graph cube() {
  Graph g(8);
  for (int u = 0; u < 8; ++u)
    for (int b = 0; b < 3; ++b)
      if (int v = u ^ (1 << b); v > u) g.set_edge(u, v);
  return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.adjacent(u, v)) h.set_edge(perm[u], perm[v]);
  return h;
}

Graph random_graph(int n, std::mt19937& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) g.set_edge(u, v);
  return g;
}

// exhaustive automorphism count for small graphs
long long brute_aut(const Graph& g) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < g.n() && ok; ++u)
      for (int v = u + 1; v < g.n() && ok; ++v)
        if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// backtracking isomorphism test, independent of the library's machinery
bool brute_iso(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) return false;
  int n = a.n();
  std::vector<int> map(n, -1), used(n, 0);
  auto rec = [&](auto&& self, int u) -> bool {
    if (u == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = a.degree(u) == b.degree(w);
      for (int x = 0; x < u && ok; ++x)
        if (a.adjacent(u, x) != b.adjacent(w, map[x])) ok = false;
      if (!ok) continue;
      map[u] = w;
      used[w] = 1;
      if (self(self, u + 1)) return true;
      used[w] = 0;
      map[u] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("canonical labeling is a relabeling of the input") {
  for (const Graph& g : {cycle(6), petersen(), prism(), fixture_graph("octahedron_line")}) {
    CanonicalResult r = canonical_form(g);
    REQUIRE(static_cast<int>(r.labeling.size()) == g.n());
    // labeling is a permutation
    std::vector<int> seen(g.n(), 0);
    for (int x : r.labeling) {
      REQUIRE(x >= 0);
      REQUIRE(x < g.n());
      CHECK(!seen[x]++);
    }
    // and transports the edges exactly
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        CHECK(g.adjacent(u, v) == r.canonical_graph.adjacent(r.labeling[u], r.labeling[v]));
    CHECK_FALSE(r.certificate.empty());
  }
}

TEST_CASE("certificates are relabeling invariant") {
  std::mt19937 rng(7);
  for (const Graph& g :
       {cycle(7), petersen(), cube(), k33(), fixture_graph("k4_cartesian_k2")}) {
    std::string cert = canonical_form(g).certificate;
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 20; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(g, perm)).certificate == cert);
    }
  }
}

TEST_CASE("isomorphism decisions") {
  std::mt19937 rng(11);
  std::vector<int> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  CHECK(are_isomorphic(petersen(), relabel(petersen(), perm)));
  CHECK_FALSE(are_isomorphic(petersen(), cycle(10)));
  CHECK_FALSE(are_isomorphic(prism(), k33()));  // both cubic on six vertices
  CHECK_FALSE(are_isomorphic(cycle(5), cycle(6)));
}

TEST_CASE("agreement with brute force on small graphs") {
  std::mt19937 rng(20240815);
  int positive = 0, negative = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    Graph a = random_graph(n, rng);
    Graph b;
    if (trial % 2 == 0) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = relabel(a, perm);
    } else {
      b = random_graph(n, rng);
    }
    bool expect = brute_iso(a, b);
    (expect ? positive : negative)++;
    CHECK(are_isomorphic(a, b) == expect);
  }
  CHECK(positive >= 40);  // the battery exercises both outcomes
  CHECK(negative >= 40);
}

TEST_CASE("automorphism group orders match exhaustive counts") {
  CHECK(automorphism_group_order(complete(4)) == "24");
  CHECK(automorphism_group_order(cycle(5)) == "10");
  CHECK(automorphism_group_order(cycle(6)) == "12");
  CHECK(automorphism_group_order(k33()) == "72");
  CHECK(automorphism_group_order(prism()) == "12");
  CHECK(automorphism_group_order(cube()) == "48");
  CHECK(automorphism_group_order(petersen()) == "120");

  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);  // 4..7
    Graph g = random_graph(n, rng);
    CHECK(automorphism_group_order(g) == std::to_string(brute_aut(g)));
  }
}

TEST_CASE("automorphism generators act on the graph") {
  AutomorphismGroup a = automorphism_group(petersen());
  CHECK(a.order == "120");
  CHECK_FALSE(a.generators.empty());
  Graph g = petersen();
  for (const std::vector<int>& perm : a.generators) {
    REQUIRE(static_cast<int>(perm.size()) == g.n());
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        CHECK(g.adjacent(u, v) == g.adjacent(perm[u], perm[v]));
  }
}

TEST_CASE("coloured canonical forms") {
  Graph p3(3);
  p3.set_edge(0, 1);
  p3.set_edge(1, 2);
  // swapping the end colours is realizable, moving the middle colour is not
  CHECK(are_isomorphic(p3, {0, 1, 0}, p3, {0, 1, 0}));
  CHECK(are_isomorphic(p3, {0, 1, 2}, p3, {2, 1, 0}));
  CHECK_FALSE(are_isomorphic(p3, {0, 0, 1}, p3, {0, 1, 0}));

  // colours refine the certificate: same graph, different colour layouts
  CHECK(canonical_form(p3, {0, 0, 0}).certificate !=
        canonical_form(p3, {0, 1, 0}).certificate);
  CHECK_THROWS_AS(canonical_form(p3, {0, 1}), Error);
}

TEST_CASE("classification buckets") {
  std::mt19937 rng(3);
  std::vector<int> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Graph> in{petersen(), cycle(10), relabel(petersen(), perm), complete(10),
                        cycle(10)};
  std::vector<std::vector<int>> buckets = classify(in);
  REQUIRE(buckets.size() == 3);
  CHECK(buckets[0] == std::vector<int>{0, 2});
  CHECK(buckets[1] == std::vector<int>{1, 4});
  CHECK(buckets[2] == std::vector<int>{3});
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(canonical_form(Graph(513)), Error);
  try {
    canonical_form(Graph(600));
    FAIL("should throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("construction outputs keep their certificates under relabeling") {
  ConstructionResult r = construct(default_spec(1, 2, 2, cayley_table({3})));
  std::string cert = canonical_form(r.graph).certificate;
  std::mt19937 rng(99);
  std::vector<int> perm(r.graph.n());
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < 10; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(relabel(r.graph, perm)).certificate == cert);
  }
}
