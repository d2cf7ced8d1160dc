#pragma once

#include <vector>

#include "ddgraph/graph.hpp"

namespace ddgraph {

// Rank of an integer matrix over the rationals.  Fraction-free elimination
// with full pivoting and arbitrary-precision entries; no rounding anywhere.
int rational_rank(std::vector<std::vector<long long>> mat);

// Multiplicity of the integer eigenvalue theta of the adjacency matrix:
// n - rank(A - theta I).
int exact_multiplicity(const Graph& g, long long theta);

// dim ker(A^2 - c I) = total multiplicity of +sqrt(c) and -sqrt(c) together,
// meaningful for irrational eigenvalue pairs as well.
int pair_multiplicity(const Graph& g, long long c);

// Rank of the adjacency matrix over GF(p).  Errors: NotPrime.
int p_rank(const Graph& g, int p);

// Rank of an arbitrary integer matrix over GF(p).  Errors: NotPrime.
int p_rank_matrix(const std::vector<std::vector<long long>>& mat, int p);

}  // namespace ddgraph
