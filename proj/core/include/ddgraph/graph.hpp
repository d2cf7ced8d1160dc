#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddgraph/errors.hpp"

namespace ddgraph {

// Simple undirected graph over vertices 0..n-1 with bit-packed adjacency
// rows, sized for exhaustive pairwise common-neighbour counting.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

  int n() const { return n_; }
  int words() const { return words_; }
  const uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }

  bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }

  void set_edge(int u, int v, bool on = true) {
    if (u == v) fail(ErrorKind::BadInput, "no loops");
    uint64_t ub = 1ull << (v & 63), vb = 1ull << (u & 63);
    uint64_t* ru = bits_.data() + static_cast<size_t>(u) * words_;
    uint64_t* rv = bits_.data() + static_cast<size_t>(v) * words_;
    if (on) {
      ru[v >> 6] |= ub;
      rv[u >> 6] |= vb;
    } else {
      ru[v >> 6] &= ~ub;
      rv[u >> 6] &= ~vb;
    }
  }

  int degree(int u) const {
    int d = 0;
    const uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
    return d;
  }

  long long edge_count() const {
    long long s = 0;
    for (int u = 0; u < n_; ++u) s += degree(u);
    return s / 2;
  }

  // Number of common neighbours of two distinct vertices.
  int common_neighbours(int u, int v) const {
    const uint64_t* a = row(u);
    const uint64_t* b = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
  }

  std::vector<int> neighbours(int u) const {
    std::vector<int> out;
    const uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) {
      uint64_t x = r[w];
      while (x) {
        out.push_back(w * 64 + __builtin_ctzll(x));
        x &= x - 1;
      }
    }
    return out;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  // Optional vertex annotation: index of the originating design class when
  // the graph came out of one of the constructions (empty otherwise).
  std::vector<int> origin_class;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

// Parameter tuple of a divisible design graph: v vertices, valency k, m
// classes of size n, lambda1 common neighbours inside a class, lambda2
// across.  m == 1 is the degenerate strongly regular case (lambda1 ==
// lambda2 by convention).
struct DdgParams {
  long long v = 0, k = 0, lambda1 = 0, lambda2 = 0, m = 0, n = 0;

  long long theta_f_sq() const { return k - lambda1; }          // square of +-sqrt(k - l1)
  long long theta_g_sq() const { return k * k - lambda2 * v; }  // square of +-sqrt(k^2 - l2 v)
  bool srg() const { return lambda1 == lambda2; }

  bool operator==(const DdgParams&) const = default;
  std::string str() const;
};

struct SrgParams {
  long long v = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams&) const = default;
  std::string str() const;
};

// One consistent reading of a graph as a divisible design graph.
struct PartitionView {
  DdgParams params;
  std::vector<int> classes;  // class id per vertex, numbered by first appearance
  bool proper() const { return params.m > 1 && params.n > 1; }
};

struct DdgCertificate {
  DdgParams params;                  // of the canonical interpretation
  PartitionView partition;           // canonical: proper preferred, then
                                     // lexicographically smallest assignment
  std::vector<PartitionView> all;    // every valid interpretation
  bool is_srg = false;               // lambda1 == lambda2
};

// All consistent class partitions: for every distinct common-neighbour count
// c (and for the all-singletons reading) this tests whether "count == c or
// equal" is an equivalence with equal class sizes and a constant cross-class
// count.  Regular non-degenerate input only.  Returns every valid view,
// proper ones first, each ordered by its class-assignment word.
std::vector<PartitionView> discover_partition(const Graph& g);

// Certifies the divisible design property by exhaustive pairwise counting.
// With a caller partition the check runs against it; otherwise the partition
// is discovered.  Errors: NotRegular (witness vertices), Degenerate
// (complete/edgeless), NotDivisible (no valid partition, witness pair).
DdgCertificate verify_ddg(const Graph& g);
DdgCertificate verify_ddg(const Graph& g, const std::vector<int>& classes);

// Exhaustive strong regularity check.  Errors: NotRegular, Degenerate,
// NotSrg with a witness pair.
SrgParams verify_srg(const Graph& g);

Graph complement(const Graph& g);

struct IntersectionArray {
  std::vector<long long> b;  // b_0 .. b_{d-1}
  std::vector<long long> c;  // c_1 .. c_d
  bool operator==(const IntersectionArray&) const = default;
  std::string str() const;
};

// Distance-regularity certificate via breadth-first search from every
// vertex.  Errors: Disconnected, NotDistanceRegular with a witness.
IntersectionArray intersection_array(const Graph& g);

// Named reference graphs: "octahedron_line" (the 12-vertex line graph of the
// octahedron) and "k4_cartesian_k2".  Errors: UnknownName.
Graph fixture_graph(const std::string& name);

}  // namespace ddgraph
