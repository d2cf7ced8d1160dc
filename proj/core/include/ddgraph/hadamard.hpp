#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ddgraph/graph.hpp"

namespace ddgraph {

struct HadamardMatrix {
  int n = 0;
  std::vector<int> e;  // row-major, entries +1/-1

  int at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
  void set(int i, int j, int v) { e[static_cast<size_t>(i) * n + j] = v; }
  std::vector<std::vector<int>> rows() const;
};

// Which sign the constant row sum of the (diagonal +1) matrix carries; the
// two cases correspond to the two parameter tuples the conversion can hit.
enum class RowSumSign { Positive, Negative };

// Doubling construction; order must be a power of two.  Errors: BadInput.
HadamardMatrix sylvester(int order);

// Checks H H^T = nI exactly.  Errors: NotHadamard, BadInput (entries).
void check_hadamard(const HadamardMatrix& h);

struct SrgFromHadamard {
  Graph graph;
  SrgParams params;
  RowSumSign sign;
};

// Symmetric regular Hadamard matrix with constant diagonal -> strongly
// regular graph on n vertices.  A diagonal of -1 is handled by negating the
// whole matrix first.  The caller states which row-sum sign it expects; the
// sign is asserted against the matrix, never guessed.  The output graph is
// re-verified vertex by vertex.
// Errors: NotHadamard, NotGraphical, NotRegularRows, WrongParameters, BadInput.
SrgFromHadamard hadamard_to_srg(const HadamardMatrix& h, RowSumSign expected_sign);

struct HadamardFromSrg {
  HadamardMatrix h;
  RowSumSign sign;
};

// Inverse direction: the graph must be strongly regular with lambda == mu,
// square vertex count, and degree (v -+ sqrt(v))/2.  The resulting matrix is
// checked to be Hadamard with constant row sums before it is returned.
// Errors: WrongParameters, NotSrg, NotHadamard, NotRegularRows.
HadamardFromSrg srg_to_hadamard(const Graph& g);

HadamardMatrix read_hadamard(std::istream& in);
HadamardMatrix read_hadamard_file(const std::string& path);
void write_hadamard(std::ostream& out, const HadamardMatrix& h);

}  // namespace ddgraph
