#include <doctest.h>

#include <set>
#include <sstream>

#include "ddgraph/errors.hpp"
#include "ddgraph/latin_square.hpp"

using namespace ddgraph;

namespace {

Square sq(const std::vector<std::vector<int>>& rows) { return check_square(rows); }

}  // namespace

TEST_CASE("check_square flags") {
  Square c3 = sq({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(c3.latin);
  CHECK(c3.symmetric);
  CHECK(c3.reduced);
  CHECK(c3.symbol_range() == 3);

  Square asym = sq({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});
  CHECK(asym.latin);
  CHECK_FALSE(asym.symmetric);

  Square notlatin = sq({{0, 0}, {0, 0}});
  CHECK_FALSE(notlatin.latin);
  CHECK(notlatin.symmetric);

  // one extra symbol is allowed (selector squares may carry a marker)
  Square extra = sq({{2, 1}, {1, 2}});
  CHECK_FALSE(extra.latin);
  CHECK(extra.symbol_range() == 3);
}

TEST_CASE("check_square errors") {
  CHECK_THROWS_AS(check_square({{0, 1}, {1}}), Error);
  CHECK_THROWS_AS(check_square({}), Error);
  try {
    check_square({{0, 3}, {3, 0}});  // side 2 admits symbols 0..2 only
    FAIL("should throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EntryOutOfRange);
  }
}

TEST_CASE("cayley tables") {
  Square c3 = cayley_table({3});
  CHECK(c3.cells == std::vector<int>{0, 1, 2, 1, 2, 0, 2, 0, 1});
  CHECK(c3.latin);
  CHECK(c3.symmetric);
  CHECK(c3.reduced);

  Square klein = cayley_table({2, 2});
  CHECK(klein.cells == std::vector<int>{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0});

  Square c4 = cayley_table({4});
  CHECK(c4.at(1, 1) == 2);
  CHECK(c4.at(3, 3) == 2);
  CHECK(c4.latin);
  CHECK(c4.symmetric);

  // directly verify the group law entry by entry for C6
  Square c6 = cayley_table({6});
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(c6.at(i, j) == (i + j) % 6);
}

TEST_CASE("commutative loop enumeration counts") {
  CHECK(enumerate_reduced_symmetric(2).size() == 1);
  CHECK(enumerate_reduced_symmetric(3).size() == 1);
  CHECK(enumerate_reduced_symmetric(4).size() == 2);
  CHECK(enumerate_reduced_symmetric(5).size() == 1);
  CHECK(enumerate_reduced_symmetric(6).size() == 8);
  CHECK(enumerate_reduced_symmetric(7).size() == 17);
  CHECK_THROWS_AS(enumerate_reduced_symmetric(9), Error);
}

TEST_CASE("enumeration output is valid and duplicate free") {
  for (int m : {4, 5, 6, 7}) {
    std::set<std::vector<int>> seen;
    for (const Square& s : enumerate_reduced_symmetric(m)) {
      CHECK(s.side == m);
      CHECK(s.latin);
      CHECK(s.symmetric);
      CHECK(s.reduced);
      CHECK(seen.insert(s.cells).second);
    }
  }
}

TEST_CASE("derived square") {
  Square c3 = cayley_table({3});
  // cut row/column 0; remaining rows keep their own diagonal under mask 0
  Square d0 = derived_square(c3, 0, {0, 0});
  CHECK(d0.side == 2);
  CHECK(d0.cells == std::vector<int>{2, 0, 0, 1});
  CHECK(d0.symmetric);
  CHECK_FALSE(d0.latin);

  // mask bit set: the diagonal entry becomes the symbol lost to the cut
  Square d1 = derived_square(c3, 0, {1, 0});
  CHECK(d1.cells == std::vector<int>{1, 0, 0, 1});
  Square d2 = derived_square(c3, 0, {1, 1});
  CHECK(d2.cells == std::vector<int>{1, 0, 0, 2});

  // each row of any derived square misses exactly one original symbol
  Square c5 = cayley_table({5});
  for (int h = 0; h < 5; ++h) {
    Square d = derived_square(c5, h, {1, 0, 1, 0});
    CHECK(d.symmetric);
    for (int i = 0; i < 4; ++i) {
      std::set<int> row;
      for (int j = 0; j < 4; ++j) row.insert(d.at(i, j));
      CHECK(row.size() == 4);
    }
  }
}

TEST_CASE("derived square errors") {
  Square c3 = cayley_table({3});
  CHECK_THROWS_AS(derived_square(c3, 3, {0, 0}), Error);
  CHECK_THROWS_AS(derived_square(c3, -1, {0, 0}), Error);
  CHECK_THROWS_AS(derived_square(c3, 0, {0}), Error);
  Square asym = sq({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}});
  CHECK_THROWS_AS(derived_square(asym, 0, {0, 0}), Error);
}

TEST_CASE("diagonal avoidance") {
  Square klein = cayley_table({2, 2});
  CHECK(diagonal_avoids(klein, 3));   // diagonal is all identity
  CHECK_FALSE(diagonal_avoids(klein, 0));
  Square c4 = cayley_table({4});
  CHECK(diagonal_avoids(c4, 1));
  CHECK_FALSE(diagonal_avoids(c4, 2));
}

TEST_CASE("square text round trip") {
  Square klein = cayley_table({2, 2});
  std::ostringstream out;
  write_square(out, klein);
  std::istringstream in(out.str());
  Square back = read_square(in);
  CHECK(back.cells == klein.cells);
  CHECK(back.side == klein.side);

  // symbols are 1-based on disk
  std::istringstream manual("2\n1 2\n2 1\n");
  Square two = read_square(manual);
  CHECK(two.cells == std::vector<int>{0, 1, 1, 0});
}
