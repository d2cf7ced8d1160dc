#pragma once

#include <string>
#include <vector>

#include "ddgraph/graph.hpp"

namespace ddgraph {

struct CanonicalResult {
  std::vector<int> labeling;  // labeling[v] = position of v in the canonical order
  Graph canonical_graph;
  std::string certificate;  // equal across a whole isomorphism class
};

// Canonical labeling by individualization and refinement.  Deterministic;
// vertex count capped at 512 (TooLarge beyond, and on search blowup).
CanonicalResult canonical_form(const Graph& g);

// Colour-respecting variant: only maps preserving the given vertex colours
// are considered, and the certificate records the colour layout.  Errors:
// DimensionMismatch on a colouring of the wrong length.
CanonicalResult canonical_form(const Graph& g, const std::vector<int>& coloring);

bool are_isomorphic(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const std::vector<int>& ca, const Graph& b,
                    const std::vector<int>& cb);

struct AutomorphismGroup {
  std::string order;  // decimal; these groups overflow machine words quickly
  std::vector<std::vector<int>> generators;
};

// Exact automorphism group order with a generating set.  Every returned
// generator is re-checked to preserve adjacency before it leaves.
AutomorphismGroup automorphism_group(const Graph& g);
std::string automorphism_group_order(const Graph& g);

// Buckets the input list into isomorphism classes.  Each bucket lists input
// indices in ascending order; buckets are ordered by their first index.
std::vector<std::vector<int>> classify(const std::vector<Graph>& graphs);

}  // namespace ddgraph
