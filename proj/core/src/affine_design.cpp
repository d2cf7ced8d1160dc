#include "ddgraph/affine_design.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ddgraph {

AffineDesign::AffineDesign(int q, int r, int class_count, std::vector<int> labels)
    : q_(q), r_(r), v_(q * q * r), m_(class_count), labels_(std::move(labels)) {
  if (q_ < 2 || r_ < 1 || m_ < 1)
    fail(ErrorKind::BadInput, "degenerate design shape");
  if (static_cast<long long>(m_) * v_ != static_cast<long long>(labels_.size()))
    fail(ErrorKind::BadInput, "label matrix size mismatch");
  for (int v : labels_)
    if (v < 0 || v >= q_) fail(ErrorKind::BadInput, "block label outside 0..q-1");
  blocks_.assign(m_, std::vector<std::vector<int>>(q_));
  for (int c = 0; c < m_; ++c)
    for (int x = 0; x < v_; ++x)
      blocks_[c][label(c, x)].push_back(x);
}

const std::vector<int>& AffineDesign::points_of(int cls, int lab) const {
  if (cls < 0 || cls >= m_) fail(ErrorKind::IndexOutOfRange, "class " + std::to_string(cls));
  if (lab < 0 || lab >= q_) fail(ErrorKind::IndexOutOfRange, "label " + std::to_string(lab));
  return blocks_[cls][lab];
}

AffineDesign affine_geometry_design(const FiniteField& f, int d) {
  if (d < 2) fail(ErrorKind::BadInput, "dimension must be at least 2");
  const int q = f.order();
  long long v = 1;
  for (int i = 0; i < d; ++i) {
    v *= q;
    if (v > 100000) fail(ErrorKind::TooLarge, "point count exceeds 100000");
  }
  const int vi = static_cast<int>(v);

  // Points as coefficient tuples (x_0,...,x_{d-1}) packed with x_0 in the
  // lowest base-q digit.
  std::vector<std::vector<int>> coords(vi, std::vector<int>(d));
  for (int x = 0; x < vi; ++x) {
    int t = x;
    for (int i = 0; i < d; ++i) {
      coords[x][i] = t % q;
      t /= q;
    }
  }

  // Directions: nonzero functionals a with first nonzero coefficient 1, in
  // lexicographic order of (a_0,...,a_{d-1}).  Scanning the packed value with
  // a_0 as the most significant digit visits them in exactly that order.
  std::vector<std::vector<int>> dirs;
  std::vector<int> a(d);
  for (long long big = 1; big < v; ++big) {
    long long t = big;
    for (int i = d - 1; i >= 0; --i) {
      a[i] = static_cast<int>(t % q);
      t /= q;
    }
    int first = -1;
    for (int i = 0; i < d; ++i)
      if (a[i] != 0) {
        first = i;
        break;
      }
    if (a[first] == 1) dirs.push_back(a);
  }
  const int m = static_cast<int>(dirs.size());  // (q^d - 1)/(q - 1)

  int r = 1;
  for (int i = 0; i < d - 2; ++i) r *= q;

  std::vector<int> labels(static_cast<size_t>(m) * vi);
  for (int c = 0; c < m; ++c) {
    const std::vector<int>& dir = dirs[c];
    for (int x = 0; x < vi; ++x) {
      int s = 0;
      for (int i = 0; i < d; ++i) s = f.add(s, f.mul(dir[i], coords[x][i]));
      labels[static_cast<size_t>(c) * vi + x] = s;
    }
  }
  return AffineDesign(q, r, m, std::move(labels));
}

AffineDesign hadamard_3_design(const std::vector<std::vector<int>>& h) {
  const int n = static_cast<int>(h.size());
  if (n < 4) fail(ErrorKind::BadInput, "order must be at least 4");
  for (const auto& row : h) {
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::BadInput, "matrix is not square");
    for (int x : row)
      if (x != 1 && x != -1) fail(ErrorKind::BadInput, "entries must be +1 or -1");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      long long dot = 0;
      for (int t = 0; t < n; ++t) dot += static_cast<long long>(h[i][t]) * h[j][t];
      long long want = (i == j) ? n : 0;
      if (dot != want)
        fail(ErrorKind::NotHadamard, "rows " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " have inner product " +
                                         std::to_string(dot));
    }
  for (int t = 0; t < n; ++t)
    if (h[0][t] != 1 || h[t][0] != 1)
      fail(ErrorKind::NotNormalized, "first row and column must be all +1");

  const int m = n - 1;
  std::vector<int> labels(static_cast<size_t>(m) * n);
  for (int i = 1; i < n; ++i)
    for (int t = 0; t < n; ++t)
      labels[static_cast<size_t>(i - 1) * n + t] = h[i][t] == 1 ? 0 : 1;
  return AffineDesign(2, n / 4, m, std::move(labels));
}

DesignParams verify_affine(const AffineDesign& d) {
  const int q = d.q(), r = d.r(), v = d.points(), m = d.class_count();

  // (ii) structural half: each class is exactly q blocks of size qr.
  for (int c = 0; c < m; ++c)
    for (int lab = 0; lab < q; ++lab) {
      size_t sz = d.points_of(c, lab).size();
      if (sz != static_cast<size_t>(q) * r)
        fail(ErrorKind::AxiomViolation,
             "(ii) class " + std::to_string(c) + " block " + std::to_string(lab) + " has " +
                 std::to_string(sz) + " points, expected " + std::to_string(q * r));
    }

  // (i) blocks from different classes always meet in exactly r points.  With
  // (ii) this also pins down (ii)'s other half: a block's disjoint blocks are
  // precisely its classmates.
  const int words = (v + 63) / 64;
  std::vector<uint64_t> bits(static_cast<size_t>(m) * q * words, 0);
  auto row = [&](int c, int lab) { return bits.data() + (static_cast<size_t>(c) * q + lab) * words; };
  for (int c = 0; c < m; ++c)
    for (int lab = 0; lab < q; ++lab)
      for (int x : d.points_of(c, lab)) row(c, lab)[x >> 6] |= 1ull << (x & 63);
  for (int c1 = 0; c1 < m; ++c1)
    for (int c2 = c1 + 1; c2 < m; ++c2)
      for (int l1 = 0; l1 < q; ++l1)
        for (int l2 = 0; l2 < q; ++l2) {
          int inter = 0;
          const uint64_t* a = row(c1, l1);
          const uint64_t* b = row(c2, l2);
          for (int w = 0; w < words; ++w) inter += __builtin_popcountll(a[w] & b[w]);
          if (inter != r)
            fail(ErrorKind::AxiomViolation,
                 "(i) blocks (" + std::to_string(c1) + "," + std::to_string(l1) + ") and (" +
                     std::to_string(c2) + "," + std::to_string(l2) + ") share " +
                     std::to_string(inter) + " points, expected " + std::to_string(r));
        }

  // Parameter identities.
  if (r > 1 && (r - 1) % (q - 1) != 0)
    fail(ErrorKind::ParameterMismatch, "(r-1)/(q-1) is not an integer");
  const int eps = (r - 1) / (q - 1);
  const int want_m = q * q * eps + q + 1;
  if (m != want_m)
    fail(ErrorKind::ParameterMismatch,
         "class count " + std::to_string(m) + ", expected " + std::to_string(want_m));
  const int lambda = q * eps + 1;

  // Two-design regularity: every point pair lies on exactly lambda blocks,
  // i.e. shares a label in exactly lambda classes.
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      int t = 0;
      for (int c = 0; c < m; ++c)
        if (d.label(c, x) == d.label(c, y)) ++t;
      if (t != lambda)
        fail(ErrorKind::ParameterMismatch,
             "points " + std::to_string(x) + "," + std::to_string(y) + " lie on " +
                 std::to_string(t) + " common blocks, expected " + std::to_string(lambda));
    }

  DesignParams p;
  p.q = q;
  p.r = r;
  p.eps = eps;
  p.v = v;
  p.b = m * q;
  p.m = m;
  p.k = q * r;
  p.lambda = lambda;
  return p;
}

AffineDesign read_design(std::istream& in) {
  int q, r, m, v;
  if (!(in >> q >> r >> m >> v)) fail(ErrorKind::BadInput, "missing design header");
  if (q < 2 || r < 1 || m < 1 || v != q * q * r)
    fail(ErrorKind::BadInput, "inconsistent design header");
  std::vector<int> labels(static_cast<size_t>(m) * v);
  for (auto& lab : labels)
    if (!(in >> lab)) fail(ErrorKind::BadInput, "truncated design data");
  return AffineDesign(q, r, m, std::move(labels));
}

AffineDesign read_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  return read_design(in);
}

void write_design(std::ostream& out, const AffineDesign& d) {
  out << d.q() << ' ' << d.r() << ' ' << d.class_count() << ' ' << d.points() << "\n";
  for (int c = 0; c < d.class_count(); ++c) {
    for (int x = 0; x < d.points(); ++x) {
      if (x) out << ' ';
      out << d.label(c, x);
    }
    out << "\n";
  }
}

std::vector<std::vector<int>> read_pm_matrix(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      if (tok == "+" || tok == "+1" || tok == "1")
        row.push_back(1);
      else if (tok == "-" || tok == "-1")
        row.push_back(-1);
      else
        fail(ErrorKind::BadInput, "bad matrix token '" + tok + "'");
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(ErrorKind::BadInput, "empty matrix");
  return rows;
}

std::vector<std::vector<int>> read_pm_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  return read_pm_matrix(in);
}

}  // namespace ddgraph
