#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ddgraph/errors.hpp"

namespace ddgraph {

// Square array of symbols used to select parallel classes in the graph
// constructions.  Entries are stored 0-based; text I/O is 1-based.  A square
// of side s may use symbols up to s+1 (symbol_range reports the actual span):
// plain Latin squares use exactly [0, s), while selector squares produced by
// row/column deletion or carrying a join/cut marker may reference one extra
// symbol.  Flags are computed, never trusted from input.
struct Square {
  int side = 0;
  std::vector<int> cells;  // side * side, row major
  bool latin = false;      // every row and column a permutation of 0..side-1
  bool symmetric = false;
  bool reduced = false;    // first row and first column are 0,1,...,side-1

  int at(int r, int c) const { return cells[static_cast<size_t>(r) * side + c]; }
  int& at(int r, int c) { return cells[static_cast<size_t>(r) * side + c]; }

  // Largest symbol actually used, plus one (so entries lie in [0, symbol_range)).
  int symbol_range() const;
};

// Classifies a raw array: validates shape and entry range (entries must lie
// in [0, side+1)) and computes the latin/symmetric/reduced flags.
// Errors: NotSquare (ragged or empty), EntryOutOfRange.
Square check_square(const std::vector<std::vector<int>>& rows);

// Cayley table of the abelian group C_{f1} x C_{f2} x ... with elements in
// mixed-radix order; entry (i,j) = i + j componentwise.  The identity comes
// first, so the table is a reduced symmetric Latin square.
Square cayley_table(const std::vector<int>& factors);

// All reduced symmetric Latin squares of side m, one representative per
// equivalence class under simultaneous row/column/symbol relabeling fixing
// the first symbol (i.e. isomorphism of the commutative loops the tables
// describe).  Deterministic order: ascending by canonical cell sequence.
// Errors: TooLarge for m > 8.
std::vector<Square> enumerate_reduced_symmetric(int m);

// Removes row h and column h (0-based) from a symmetric Latin square of side
// s, reindexing the remaining rows in order.  For each kept row i whose mask
// bit is set, the diagonal entry is replaced by the deleted entry that row
// lost, at(i, h).  The result is symmetric, generally not Latin, and each of
// its rows contains side-1 distinct symbols out of the original side many.
// Errors: IndexOutOfRange (h), DimensionMismatch (mask size), BadInput
// (square not symmetric Latin).
Square derived_square(const Square& latin, int h, const std::vector<uint8_t>& mask);

// True when no diagonal entry equals symbol s (0-based).
bool diagonal_avoids(const Square& sq, int s);

// Text format: first line the side m, then m lines of m 1-based symbols.
Square read_square(std::istream& in);
Square read_square_file(const std::string& path);
void write_square(std::ostream& out, const Square& sq);

}  // namespace ddgraph
