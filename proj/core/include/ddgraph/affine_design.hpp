#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ddgraph/errors.hpp"
#include "ddgraph/finite_field.hpp"

namespace ddgraph {

// Parameters of an affine resolvable design: v = q^2 r points, b blocks of
// size k = qr arranged in m parallel classes of q blocks each, any two points
// on lambda common blocks, eps = (r-1)/(q-1).
struct DesignParams {
  int q = 0, r = 0, eps = 0;
  int v = 0, b = 0, m = 0, k = 0, lambda = 0;

  bool operator==(const DesignParams&) const = default;
};

// Resolvable block structure stored as a class-by-point label matrix: entry
// (c, x) is the block label (0..q-1) of point x inside parallel class c, so
// block membership lookup is O(1).  Blocks of one class partition the points.
class AffineDesign {
 public:
  AffineDesign(int q, int r, int class_count, std::vector<int> labels);

  int q() const { return q_; }
  int r() const { return r_; }
  int points() const { return v_; }
  int class_count() const { return m_; }

  // Block label of point x in parallel class cls.  Errors: IndexOutOfRange.
  int block_of(int cls, int x) const {
    if (cls < 0 || cls >= m_) fail(ErrorKind::IndexOutOfRange, "class " + std::to_string(cls));
    if (x < 0 || x >= v_) fail(ErrorKind::IndexOutOfRange, "point " + std::to_string(x));
    return labels_[static_cast<size_t>(cls) * v_ + x];
  }

  // Unchecked variant for inner loops.
  int label(int cls, int x) const { return labels_[static_cast<size_t>(cls) * v_ + x]; }

  const std::vector<int>& points_of(int cls, int label) const;

 private:
  int q_, r_, v_, m_;
  std::vector<int> labels_;                         // m_ x v_
  std::vector<std::vector<std::vector<int>>> blocks_;  // [cls][label] -> sorted points
};

// Point-hyperplane structure of the affine space of dimension d over F: the
// q^d points, one parallel class per hyperplane direction.  Directions are
// the nonzero functionals normalized so their first nonzero coefficient is 1,
// enumerated in lexicographic coefficient order; the block label of a point
// is the functional's value at it.  Errors: TooLarge when q^d > 100000,
// BadInput for d < 2.
AffineDesign affine_geometry_design(const FiniteField& F, int d);

// Affine design carried by a normalized Hadamard matrix of order n: points
// are the n columns, and every row after the first splits them into its +1
// and -1 positions (labels 0 and 1).  Gives q = 2, r = n/4, m = n - 1.
// Errors: BadInput (n < 4), NotHadamard (H H^T != nI), NotNormalized.
AffineDesign hadamard_3_design(const std::vector<std::vector<int>>& h);

// Exhaustive check of the affine axioms and the parameter identities:
// (i)  blocks from different classes meet in exactly r points;
// (ii) each class has exactly q blocks of size qr partitioning the points
//      (so the blocks disjoint from a block are precisely its classmates);
// plus: every point pair lies on exactly lambda = q*eps + 1 common blocks,
// eps = (r-1)/(q-1) integral, and the class count equals q^2*eps + q + 1.
// Errors: AxiomViolation with a witness block pair, ParameterMismatch.
DesignParams verify_affine(const AffineDesign& d);

// Text format: header line "q r m v", then m lines of v 0-based block labels.
AffineDesign read_design(std::istream& in);
AffineDesign read_design_file(const std::string& path);
void write_design(std::ostream& out, const AffineDesign& d);

// Reads an order-n matrix with entries +1/-1 written as "+1"/"-1" or "+"/"-".
std::vector<std::vector<int>> read_pm_matrix(std::istream& in);
std::vector<std::vector<int>> read_pm_matrix_file(const std::string& path);

}  // namespace ddgraph
