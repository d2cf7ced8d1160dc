#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddgraph/affine_design.hpp"
#include "ddgraph/graph.hpp"
#include "ddgraph/latin_square.hpp"
#include "ddgraph/spectrum.hpp"

namespace ddgraph {

// Optional block-label bijections between the designs attached to a pair of
// point classes.  Unset pairs act as the identity; the diagonal is always the
// identity.  Errors: BadBijection for non-permutations, diagonal entries, or
// out-of-range indices.
class BijectionFamily {
 public:
  BijectionFamily() = default;
  BijectionFamily(int classes, int labels);

  void set(int i, int j, std::vector<int> perm);
  // Image under sigma_{i -> j} of a block label of class pair (i, j).
  int apply(int i, int j, int label) const;
  bool trivial() const { return perms_.empty(); }
  int classes() const { return classes_; }
  int labels() const { return labels_; }
  bool is_set(int i, int j) const;

 private:
  int classes_ = 0;
  int labels_ = 0;
  std::map<std::pair<int, int>, std::vector<int>> perms_;  // key i < j
  std::map<std::pair<int, int>, std::vector<int>> inv_;
};

// Everything one of the four builders consumes.  `designs` holds one
// resolvable design per selector row; `selector` is a symmetric Latin square
// over the class indices (variants three and four allow one extra symbol with
// special meaning, variant two supplies the square the derived selector is
// cut from, and its h-th design is dropped together with the h-th row).
// `numbering` optionally re-enumerates the parallel classes of each design
// (empty entries mean identity); `bijections` are indexed by the rows of the
// effective selector.
struct ConstructionSpec {
  int which = 1;
  std::vector<AffineDesign> designs;
  Square selector;
  int h = -1;                               // variant two: deleted row/column
  std::vector<std::uint8_t> mask;           // variant two: diagonal choices
  std::vector<std::vector<int>> numbering;  // per design, class relabelling
  BijectionFamily bijections;
};

struct ExpectedParams {
  bool srg = false;
  DdgParams ddg;         // srg case uses the one-class reading (l1 == l2)
  SrgParams srg_params;  // valid when srg
  std::vector<Eigenvalue> distinct_eigenvalues;  // descending
};

struct ConstructionResult {
  Graph graph;
  ExpectedParams expected;
  DdgParams params;                    // shorthand for expected.ddg
  std::vector<int> canonical_classes;  // the point partition the tuple refers to
  Square effective_selector;           // the square actually consulted
};

// Closed-form parameter tuples of the four graph families over GF(q), dim d.
// Errors: NotPrimePower, OutOfRange (d < 2, or variant out of 1..4).
ExpectedParams expected_params(int which, int q, int d);

// The four builders.  Each validates its inputs, assembles the adjacency,
// and returns the graph together with the certified parameter tuple and the
// class partition realizing it.
ConstructionResult construction1(const ConstructionSpec& spec);
ConstructionResult construction2(const ConstructionSpec& spec);
ConstructionResult construction3(const ConstructionSpec& spec);
ConstructionResult construction4(const ConstructionSpec& spec);
ConstructionResult construct(const ConstructionSpec& spec);

// Convenience assembly: geometric designs over GF(q) of dimension d for every
// class, plus the given selector square (variant two: the uncut square and its
// row/mask choice).
ConstructionSpec default_spec(int which, int q, int d, Square selector, int h = -1,
                              std::vector<std::uint8_t> mask = {});

}  // namespace ddgraph
