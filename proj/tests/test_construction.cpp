#include <doctest.h>

#include <map>
#include <set>

#include "ddgraph/construction.hpp"
#include "ddgraph/errors.hpp"
#include "ddgraph/latin_square.hpp"

using namespace ddgraph;

namespace {

ConstructionResult run(int which, int q, int d, Square sel, int h = -1,
                       std::vector<std::uint8_t> mask = {}) {
  return construct(default_spec(which, q, d, std::move(sel), h, std::move(mask)));
}

}  // namespace

TEST_CASE("closed form parameter tuples") {
  CHECK(expected_params(1, 2, 2).ddg == DdgParams{12, 6, 2, 3, 3, 4});
  CHECK(expected_params(1, 3, 2).ddg == DdgParams{36, 24, 15, 16, 4, 9});
  CHECK(expected_params(1, 2, 3).ddg == DdgParams{56, 28, 12, 14, 7, 8});
  CHECK(expected_params(2, 2, 2).ddg == DdgParams{8, 4, 0, 2, 4, 2});
  CHECK(expected_params(2, 3, 2).ddg == DdgParams{27, 18, 9, 12, 9, 3});
  CHECK(expected_params(2, 2, 3).ddg == DdgParams{48, 24, 8, 12, 12, 4});
  CHECK(expected_params(3, 3, 2).ddg == DdgParams{45, 24, 15, 12, 5, 9});

  ExpectedParams c3q2 = expected_params(3, 2, 2);
  CHECK(c3q2.srg);
  CHECK(c3q2.srg_params == SrgParams{16, 6, 2, 2});
  CHECK(expected_params(3, 2, 3).srg_params == SrgParams{64, 28, 12, 12});

  ExpectedParams c4 = expected_params(4, 2, 2);
  CHECK(c4.srg);
  CHECK(c4.srg_params == SrgParams{16, 10, 6, 6});
  CHECK(expected_params(4, 2, 3).srg_params == SrgParams{64, 36, 20, 20});
  CHECK(expected_params(4, 3, 3).srg_params == SrgParams{378, 261, 180, 180});
  CHECK(expected_params(4, 3, 2).srg_params == SrgParams{45, 33, 24, 24});
}

TEST_CASE("distinct eigenvalue lists") {
  auto evs = [](const ExpectedParams& e) {
    std::vector<std::string> out;
    for (const Eigenvalue& v : e.distinct_eigenvalues) out.push_back(v.str());
    return out;
  };
  CHECK(evs(expected_params(1, 2, 2)) == std::vector<std::string>{"6", "2", "0", "-2"});
  CHECK(evs(expected_params(2, 3, 2)) == std::vector<std::string>{"18", "3", "0", "-3"});
  // variant three away from q=2 keeps five distinct eigenvalues
  CHECK(evs(expected_params(3, 3, 2)) == std::vector<std::string>{"24", "6", "3", "-3", "-6"});
  // the strongly regular degenerations have three
  CHECK(evs(expected_params(3, 2, 2)) == std::vector<std::string>{"6", "2", "-2"});
  CHECK(evs(expected_params(4, 3, 3)) == std::vector<std::string>{"261", "9", "-9"});
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(expected_params(0, 2, 2), Error);
  CHECK_THROWS_AS(expected_params(5, 2, 2), Error);
  CHECK_THROWS_AS(expected_params(1, 2, 1), Error);
  try {
    expected_params(1, 6, 2);
    FAIL("should throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrimePower);
  }
}

TEST_CASE("variant one builds and certifies") {
  ConstructionResult r = run(1, 2, 2, cayley_table({3}));
  CHECK(r.graph.n() == 12);
  CHECK(r.params == DdgParams{12, 6, 2, 3, 3, 4});
  DdgCertificate c = verify_ddg(r.graph, r.canonical_classes);
  CHECK(c.params == r.params);
  // the partition comes straight from the point classes
  for (int v = 0; v < 12; ++v) CHECK(r.canonical_classes[v] == v / 4);
}

TEST_CASE("variant two partition has shrunken classes") {
  ConstructionResult r = run(2, 2, 2, cayley_table({3}), 0);
  CHECK(r.params == DdgParams{8, 4, 0, 2, 4, 2});
  CHECK(verify_ddg(r.graph, r.canonical_classes).params == r.params);
  std::map<int, int> sizes;
  for (int c : r.canonical_classes) sizes[c]++;
  CHECK(sizes.size() == 4);
  for (auto& [cls, sz] : sizes) CHECK(sz == 2);  // q^(d-1), not q^d
  CHECK(r.effective_selector.side == 2);
}

TEST_CASE("variant two over every cut row and mask") {
  Square c3 = cayley_table({3});
  for (int h = 0; h < 3; ++h)
    for (int bits = 0; bits < 4; ++bits) {
      std::vector<std::uint8_t> mask{static_cast<std::uint8_t>(bits & 1),
                                     static_cast<std::uint8_t>(bits >> 1)};
      ConstructionResult r = run(2, 2, 2, c3, h, mask);
      CHECK(r.params == DdgParams{8, 4, 0, 2, 4, 2});
      CHECK(verify_ddg(r.graph, r.canonical_classes).params == r.params);
    }
}

TEST_CASE("variant three splits by field size") {
  ConstructionResult r2 = run(3, 2, 2, cayley_table({2, 2}));
  CHECK(r2.expected.srg);
  CHECK(verify_srg(r2.graph) == SrgParams{16, 6, 2, 2});

  ConstructionResult r3 = run(3, 3, 2, cayley_table({5}));
  CHECK_FALSE(r3.expected.srg);
  CHECK(r3.params == DdgParams{45, 24, 15, 12, 5, 9});
  CHECK(verify_ddg(r3.graph, r3.canonical_classes).params == r3.params);
}

TEST_CASE("variant four requires a clean diagonal") {
  ConstructionResult r = run(4, 2, 2, cayley_table({2, 2}));
  CHECK(verify_srg(r.graph) == SrgParams{16, 10, 6, 6});

  // symmetric side-4 Latin square with the join symbol on the diagonal
  Square bad = check_square({{3, 2, 1, 0}, {2, 3, 0, 1}, {1, 0, 3, 2}, {0, 1, 2, 3}});
  try {
    run(4, 2, 2, bad);
    FAIL("should throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DiagonalViolation);
  }
  // the same square is fine for variant three (no-edge marker may sit anywhere)
  ConstructionResult ok = run(3, 2, 2, bad);
  CHECK(verify_srg(ok.graph) == SrgParams{16, 6, 2, 2});
}

TEST_CASE("selector validation") {
  Square notlatin = check_square({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK_THROWS_AS(run(1, 2, 2, notlatin), Error);
  Square asym = check_square({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});
  CHECK_THROWS_AS(run(1, 2, 2, asym), Error);
  // wrong side for the field/dimension pair
  try {
    run(1, 2, 2, cayley_table({4}));
    FAIL("should throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("mismatched designs rejected") {
  ConstructionSpec spec = default_spec(1, 2, 2, cayley_table({3}));
  spec.designs[1] = affine_geometry_design(FiniteField(3), 2);
  try {
    construct(spec);
    FAIL("should throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParameterMismatch);
  }
}

TEST_CASE("bijection family") {
  BijectionFamily f(3, 4);
  CHECK(f.trivial());
  CHECK(f.apply(0, 1, 2) == 2);  // unset pairs act as identity
  f.set(0, 1, {1, 0, 3, 2});
  CHECK_FALSE(f.trivial());
  CHECK(f.is_set(0, 1));
  CHECK(f.is_set(1, 0));
  CHECK_FALSE(f.is_set(0, 2));
  CHECK(f.apply(0, 1, 0) == 1);
  CHECK(f.apply(1, 0, 1) == 0);  // the reverse direction inverts
  f.set(2, 0, {2, 0, 1, 3});     // stored transposed
  CHECK(f.apply(2, 0, 0) == 2);
  CHECK(f.apply(0, 2, 2) == 0);

  CHECK_THROWS_AS(f.set(0, 0, {0, 1, 2, 3}), Error);
  CHECK_THROWS_AS(f.set(0, 1, {0, 1, 2}), Error);
  CHECK_THROWS_AS(f.set(0, 1, {0, 0, 2, 3}), Error);
  CHECK_THROWS_AS(f.set(0, 3, {0, 1, 2, 3}), Error);
  CHECK_THROWS_AS(BijectionFamily(0, 2), Error);
}

TEST_CASE("bijections and renumberings keep the certified tuple") {
  // variant one at q=3, d=2: four classes, block labels 0..2
  Square klein = cayley_table({2, 2});
  ConstructionSpec spec = default_spec(1, 3, 2, klein);
  spec.numbering = {{2, 0, 1, 3}, {}, {1, 0, 3, 2}, {0, 1, 2, 3}};
  BijectionFamily fam(4, 3);
  fam.set(0, 1, {1, 2, 0});
  fam.set(2, 3, {0, 2, 1});
  fam.set(1, 3, {2, 1, 0});
  spec.bijections = fam;
  ConstructionResult r = construct(spec);
  CHECK(r.params == DdgParams{36, 24, 15, 16, 4, 9});
  CHECK(verify_ddg(r.graph, r.canonical_classes).params == r.params);

  // variant two with a renumbering on a kept row and one on the cut row
  ConstructionSpec s2 = default_spec(2, 2, 2, cayley_table({3}), 1);
  s2.numbering = {{1, 0, 2}, {2, 1, 0}, {}};
  BijectionFamily fam2(2, 2);
  fam2.set(0, 1, {1, 0});
  s2.bijections = fam2;
  ConstructionResult r2 = construct(s2);
  CHECK(r2.params == DdgParams{8, 4, 0, 2, 4, 2});
  CHECK(verify_ddg(r2.graph, r2.canonical_classes).params == r2.params);
}

TEST_CASE("bijection frame must match the effective selector") {
  ConstructionSpec spec = default_spec(1, 2, 2, cayley_table({3}));
  BijectionFamily wrong(4, 2);  // four classes, but the selector has three rows
  wrong.set(0, 1, {1, 0});
  spec.bijections = wrong;
  CHECK_THROWS_AS(construct(spec), Error);

  ConstructionSpec spec2 = default_spec(1, 2, 2, cayley_table({3}));
  BijectionFamily badlabels(3, 3);  // labels must match the block count q
  badlabels.set(0, 1, {1, 2, 0});
  spec2.bijections = badlabels;
  CHECK_THROWS_AS(construct(spec2), Error);
}

TEST_CASE("class numbering validation") {
  ConstructionSpec spec = default_spec(1, 2, 2, cayley_table({3}));
  spec.numbering = {{0, 1, 2}, {0, 0, 1}, {}};
  CHECK_THROWS_AS(construct(spec), Error);
  spec.numbering = {{0, 1}, {}, {}};
  CHECK_THROWS_AS(construct(spec), Error);
  spec.numbering = {{0, 1, 2}, {2, 1, 0}};  // one row per design required
  CHECK_THROWS_AS(construct(spec), Error);
}

TEST_CASE("default spec shape") {
  ConstructionSpec s1 = default_spec(1, 2, 2, cayley_table({3}));
  CHECK(s1.designs.size() == 3);
  ConstructionSpec s3 = default_spec(3, 2, 2, cayley_table({2, 2}));
  CHECK(s3.designs.size() == 4);
  ConstructionSpec s4 = default_spec(4, 3, 3, cayley_table({14}));
  CHECK(s4.designs.size() == 14);
}

TEST_CASE("dispatcher rejects unknown variants") {
  ConstructionSpec spec = default_spec(1, 2, 2, cayley_table({3}));
  spec.which = 7;
  CHECK_THROWS_AS(construct(spec), Error);
}
