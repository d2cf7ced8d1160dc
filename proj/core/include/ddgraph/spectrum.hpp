#pragma once

#include <array>
#include <string>
#include <vector>

#include "ddgraph/graph.hpp"

namespace ddgraph {

// Exact eigenvalue coef * sqrt(rad) with rad squarefree and positive;
// rad == 1 means an integer.  Zero is stored as (0, 1).
struct Eigenvalue {
  long long coef = 0;
  long long rad = 1;

  bool integral() const { return rad == 1; }
  double approx() const;
  std::string str() const;
  bool operator==(const Eigenvalue&) const = default;
  bool operator<(const Eigenvalue& o) const;  // by numeric value
};

// Normalizes by extracting square factors: (4, 28) -> (8, 7).
Eigenvalue make_eigenvalue(long long coef, long long radicand);

struct SpectrumEntry {
  Eigenvalue value;
  long long multiplicity = 0;
  bool operator==(const SpectrumEntry&) const = default;
};

// One feasible multiplicity assignment.  split = (f1, f2, g1, g2): the
// multiplicities of +-sqrt(k - lambda1) and +-sqrt(k^2 - lambda2 v) before
// merging coincident values.
struct SpectrumSolution {
  std::vector<SpectrumEntry> entries;  // distinct values, descending
  std::array<long long, 4> split{};
  bool operator==(const SpectrumSolution&) const = default;
};

struct Spectrum {
  // All integral, nonnegative solutions of
  //   f1 + f2 = m(n-1),  g1 + g2 = m - 1,
  //   k + (f1 - f2) sqrt(k - l1) + (g1 - g2) sqrt(k^2 - l2 v) = 0,
  // with conjugate-pair equality forced for irrational roots.  The usual
  // four-eigenvalue case pins a unique solution; five-eigenvalue parameter
  // tuples can admit several, listed in ascending split order.
  std::vector<SpectrumSolution> solutions;

  bool determined() const { return solutions.size() == 1; }
  const std::vector<SpectrumEntry>& entries() const { return solutions.front().entries; }

  // Distinct eigenvalues across all feasible solutions, descending.
  std::vector<Eigenvalue> distinct_values() const;

  std::string str() const;
};

// Solves the multiplicity constraints for a parameter tuple alone.
// Errors: Infeasible when no integral nonnegative solution exists (such a
// tuple belongs to no graph).
Spectrum ddg_spectrum(const DdgParams& p);

// Same, but resolves the split with the one extra integer the graph itself
// supplies (the trace of A^3), so the result is always a single solution.
// Errors: Infeasible when the graph contradicts the tuple.
SpectrumSolution graph_spectrum(const Graph& g, const DdgParams& p);

// Trace of the cube of the adjacency matrix (six times the triangle count).
long long trace_a3(const Graph& g);

}  // namespace ddgraph
