#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ddgraph/affine_design.hpp"
#include "ddgraph/canonical.hpp"
#include "ddgraph/construction.hpp"
#include "ddgraph/exact_rank.hpp"
#include "ddgraph/finite_field.hpp"
#include "ddgraph/graph.hpp"
#include "ddgraph/graph6.hpp"
#include "ddgraph/hadamard.hpp"
#include "ddgraph/latin_square.hpp"

using namespace ddgraph;

namespace {

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

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.set_edge(i, (i + 1) % 5);
    g.set_edge(5 + i, 5 + (i + 2) % 5);
    g.set_edge(i, 5 + i);
  }
  return g;
}

// small outputs of all four builders plus the named reference graphs
std::vector<Graph> fixture_battery() {
  std::vector<Graph> out;
  out.push_back(construct(default_spec(1, 2, 2, cayley_table({3}))).graph);
  out.push_back(construct(default_spec(2, 2, 2, cayley_table({3}), 0, {1, 0})).graph);
  out.push_back(construct(default_spec(3, 2, 2, cayley_table({2, 2}))).graph);
  out.push_back(construct(default_spec(4, 2, 2, cayley_table({2, 2}))).graph);
  out.push_back(fixture_graph("octahedron_line"));
  out.push_back(fixture_graph("k4_cartesian_k2"));
  out.push_back(petersen());
  return out;
}

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
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("canonical certificates survive one hundred relabelings per graph") {
  std::mt19937 rng(424242);
  for (const Graph& g : fixture_battery()) {
    std::string cert = canonical_form(g).certificate;
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    int failures = 0;
    for (int t = 0; t < 100; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (canonical_form(relabel(g, perm)).certificate != cert) ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("p-ranks survive relabelings") {
  std::mt19937 rng(1212);
  for (const Graph& g : fixture_battery()) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    for (int p : {2, 3, 5}) {
      int want = p_rank(g, p);
      for (int t = 0; t < 10; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(p_rank(relabel(g, perm), p) == want);
      }
    }
  }
}

TEST_CASE("isomorphism agrees with brute force through eight vertices") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    Graph a = random_graph(n, rng);
    Graph b;
    if (trial % 3 == 0) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = relabel(a, perm);
    } else {
      b = random_graph(n, rng);
    }
    CHECK(are_isomorphic(a, b) == brute_iso(a, b));
  }
}

TEST_CASE("field axioms, exhaustive through order sixteen") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    FiniteField F(q);
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        if (a && b) CHECK(F.mul(a, b) != 0);
        for (int c = 0; c < q; ++c) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("affine axioms for every generated design") {
  for (auto [q, d] : {std::pair{2, 2}, {3, 2}, {4, 2}, {5, 2}, {7, 2}, {8, 2}, {9, 2},
                      {2, 3}, {3, 3}, {2, 4}}) {
    AffineDesign des = affine_geometry_design(FiniteField(q), d);
    DesignParams p = verify_affine(des);
    CHECK(p.q == q);
    CHECK(p.v == des.points());
    CHECK(p.m == des.class_count());
  }
  CHECK(verify_affine(hadamard_3_design(sylvester(8).rows())).m == 7);
  CHECK(verify_affine(hadamard_3_design(sylvester(16).rows())).m == 15);
}

TEST_CASE("renumbering parallel classes preserves the design") {
  std::mt19937 rng(31);
  for (auto [q, d] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    AffineDesign des = affine_geometry_design(FiniteField(q), d);
    DesignParams want = verify_affine(des);
    std::vector<int> order(des.class_count());
    std::iota(order.begin(), order.end(), 0);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<int> labels(static_cast<size_t>(des.class_count()) * des.points());
      for (int c = 0; c < des.class_count(); ++c)
        for (int x = 0; x < des.points(); ++x)
          labels[static_cast<size_t>(c) * des.points() + x] = des.label(order[c], x);
      AffineDesign shuffled(des.q(), des.r(), des.class_count(), labels);
      CHECK(verify_affine(shuffled) == want);
    }
  }
}

TEST_CASE("graph6 round trips on random graphs") {
  std::mt19937 rng(123);
  for (int n : {1, 2, 3, 13, 37, 62, 63, 64, 65, 100}) {
    for (int t = 0; t < 5; ++t) {
      Graph g = random_graph(n, rng);
      CHECK(graph6_decode(graph6_encode(g)) == g);
    }
  }
}

TEST_CASE("random class renumberings leave construction parameters alone") {
  std::mt19937 rng(5150);
  auto shuffled_numbering = [&](const ConstructionSpec& spec) {
    std::vector<std::vector<int>> numbering;
    for (const AffineDesign& d : spec.designs) {
      std::vector<int> perm(d.class_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      numbering.push_back(perm);
    }
    return numbering;
  };

  ConstructionSpec c1 = default_spec(1, 3, 2, cayley_table({2, 2}));
  DdgParams want1 = construct(c1).params;
  ConstructionSpec c2 = default_spec(2, 2, 3, cayley_table({7}), 2,
                                     std::vector<std::uint8_t>{1, 0, 1, 0, 0, 1});
  DdgParams want2 = construct(c2).params;
  ConstructionSpec c3 = default_spec(3, 3, 2, cayley_table({5}));
  DdgParams want3 = construct(c3).params;

  for (int trial = 0; trial < 4; ++trial) {
    for (ConstructionSpec* spec : {&c1, &c2, &c3}) {
      spec->numbering = shuffled_numbering(*spec);
      ConstructionResult r = construct(*spec);
      CHECK(verify_ddg(r.graph, r.canonical_classes).params == r.params);
    }
    CHECK(construct(c1).params == want1);
    CHECK(construct(c2).params == want2);
    CHECK(construct(c3).params == want3);
  }
}

TEST_CASE("random block bijections leave construction parameters alone") {
  std::mt19937 rng(6174);
  // pairs whose selector cell holds the join symbol may not carry a bijection
  auto random_family = [&](int classes, int q, const Square &sel, int join) {
    BijectionFamily fam(classes, q);
    std::vector<int> perm(q);
    for (int i = 0; i < classes; ++i)
      for (int j = i + 1; j < classes; ++j) {
        if (sel.at(i, j) == join) continue;
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        fam.set(i, j, perm);
      }
    return fam;
  };

  for (int trial = 0; trial < 4; ++trial) {
    ConstructionSpec c1 = default_spec(1, 3, 2, cayley_table({2, 2}));
    c1.bijections = random_family(4, 3, cayley_table({2, 2}), -1);
    ConstructionResult r1 = construct(c1);
    CHECK(r1.params == DdgParams{36, 24, 15, 16, 4, 9});
    CHECK(verify_ddg(r1.graph, r1.canonical_classes).params == r1.params);

    ConstructionSpec c2 = default_spec(2, 2, 2, cayley_table({3}), 1,
                                       std::vector<std::uint8_t>{0, 1});
    c2.bijections = random_family(2, 2, cayley_table({3}), -1);
    ConstructionResult r2 = construct(c2);
    CHECK(r2.params == DdgParams{8, 4, 0, 2, 4, 2});
    CHECK(verify_ddg(r2.graph, r2.canonical_classes).params == r2.params);

    ConstructionSpec c3 = default_spec(3, 3, 2, cayley_table({5}));
    c3.bijections = random_family(5, 3, cayley_table({5}), 4);
    ConstructionResult r3 = construct(c3);
    CHECK(r3.params == DdgParams{45, 24, 15, 12, 5, 9});
    CHECK(verify_ddg(r3.graph, r3.canonical_classes).params == r3.params);

    ConstructionSpec c4 = default_spec(4, 2, 2, cayley_table({2, 2}));
    c4.bijections = random_family(4, 2, cayley_table({2, 2}), 3);
    CHECK(verify_srg(construct(c4).graph) == SrgParams{16, 10, 6, 6});
  }
}

TEST_CASE("every diagonal mask yields the same parameters at dimension three") {
  std::mt19937 rng(909);
  std::set<std::vector<std::uint8_t>> seen;
  while (seen.size() < 8) {
    std::vector<std::uint8_t> mask(6);
    for (auto& b : mask) b = rng() & 1;
    seen.insert(mask);
  }
  for (const auto& mask : seen) {
    ConstructionResult r = construct(default_spec(2, 2, 3, cayley_table({7}), 4, mask));
    CHECK(r.params == DdgParams{48, 24, 8, 12, 12, 4});
    CHECK(verify_ddg(r.graph, r.canonical_classes).params == r.params);
  }
}
