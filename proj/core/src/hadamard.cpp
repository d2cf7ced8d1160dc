#include "ddgraph/hadamard.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "ddgraph/affine_design.hpp"
#include "ddgraph/errors.hpp"

namespace ddgraph {

std::vector<std::vector<int>> HadamardMatrix::rows() const {
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = at(i, j);
  return out;
}

HadamardMatrix sylvester(int order) {
  if (order < 1 || (order & (order - 1)) != 0)
    fail(ErrorKind::BadInput, "doubling order must be a power of two");
  HadamardMatrix h;
  h.n = order;
  h.e.assign(static_cast<size_t>(order) * order, 1);
  for (int block = 1; block < order; block *= 2)
    for (int i = 0; i < block; ++i)
      for (int j = 0; j < block; ++j) {
        int v = h.at(i, j);
        h.set(i + block, j, v);
        h.set(i, j + block, v);
        h.set(i + block, j + block, -v);
      }
  return h;
}

void check_hadamard(const HadamardMatrix& h) {
  if (h.n < 1 || h.e.size() != static_cast<size_t>(h.n) * h.n)
    fail(ErrorKind::BadInput, "malformed matrix");
  for (int v : h.e)
    if (v != 1 && v != -1) fail(ErrorKind::BadInput, "entries must be +1 or -1");
  for (int i = 0; i < h.n; ++i)
    for (int j = i; j < h.n; ++j) {
      long long dot = 0;
      for (int t = 0; t < h.n; ++t) dot += h.at(i, t) * h.at(j, t);
      if (dot != (i == j ? h.n : 0))
        fail(ErrorKind::NotHadamard, "rows " + std::to_string(i) + " and " + std::to_string(j) +
                                         " are not orthogonal");
    }
}

SrgFromHadamard hadamard_to_srg(const HadamardMatrix& input, RowSumSign expected_sign) {
  check_hadamard(input);
  int n = input.n;
  if (n < 4 || n % 4 != 0) fail(ErrorKind::BadInput, "order must be a multiple of four");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (input.at(i, j) != input.at(j, i)) fail(ErrorKind::NotGraphical, "matrix not symmetric");
  for (int i = 1; i < n; ++i)
    if (input.at(i, i) != input.at(0, 0)) fail(ErrorKind::NotGraphical, "diagonal not constant");

  HadamardMatrix h = input;
  if (h.at(0, 0) == -1)
    for (int& v : h.e) v = -v;

  long long s0 = 0;
  for (int j = 0; j < n; ++j) s0 += h.at(0, j);
  for (int i = 1; i < n; ++i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += h.at(i, j);
    if (s != s0) fail(ErrorKind::NotRegularRows, "row sums are not constant");
  }
  if (s0 * s0 != n) fail(ErrorKind::NotRegularRows, "row sum squared must equal the order");
  RowSumSign actual = s0 > 0 ? RowSumSign::Positive : RowSumSign::Negative;
  if (actual != expected_sign)
    fail(ErrorKind::WrongParameters, "row sums carry the opposite sign from the requested one");

  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (h.at(i, j) == -1) g.set_edge(i, j, true);

  SrgFromHadamard out{std::move(g), SrgParams{}, actual};
  out.params = verify_srg(out.graph);
  long long want_k = (n - s0) / 2, want_l = n / 4 - s0 / 2;
  if (out.params.k != want_k || out.params.lambda != want_l || out.params.mu != want_l)
    fail(ErrorKind::WrongParameters, "conversion produced unexpected graph parameters");
  return out;
}

HadamardFromSrg srg_to_hadamard(const Graph& g) {
  SrgParams p = verify_srg(g);
  if (p.lambda != p.mu)
    fail(ErrorKind::WrongParameters, "need equal common-neighbour counts on edges and non-edges");
  long long n = p.v;
  long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
  if (s * s != n) fail(ErrorKind::WrongParameters, "vertex count must be a perfect square");
  RowSumSign sign;
  if (2 * p.k == n - s)
    sign = RowSumSign::Positive;
  else if (2 * p.k == n + s)
    sign = RowSumSign::Negative;
  else
    fail(ErrorKind::WrongParameters, "degree must be (v -+ sqrt(v)) / 2");

  HadamardMatrix h;
  h.n = static_cast<int>(n);
  h.e.assign(static_cast<size_t>(n) * n, 1);
  for (int i = 0; i < h.n; ++i)
    for (int j = 0; j < h.n; ++j)
      if (i != j && g.adjacent(i, j)) h.set(i, j, -1);

  check_hadamard(h);
  long long want = sign == RowSumSign::Positive ? s : -s;
  for (int i = 0; i < h.n; ++i) {
    long long sum = 0;
    for (int j = 0; j < h.n; ++j) sum += h.at(i, j);
    if (sum != want) fail(ErrorKind::NotRegularRows, "row sums are not constant");
  }
  return {std::move(h), sign};
}

HadamardMatrix read_hadamard(std::istream& in) {
  std::vector<std::vector<int>> rows = read_pm_matrix(in);
  if (rows.empty()) fail(ErrorKind::BadInput, "empty matrix");
  HadamardMatrix h;
  h.n = static_cast<int>(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != h.n) fail(ErrorKind::NotSquare, "matrix is not square");
    for (int v : r) h.e.push_back(v);
  }
  return h;
}

HadamardMatrix read_hadamard_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  return read_hadamard(in);
}

void write_hadamard(std::ostream& out, const HadamardMatrix& h) {
  for (int i = 0; i < h.n; ++i) {
    for (int j = 0; j < h.n; ++j) {
      if (j) out << ' ';
      out << (h.at(i, j) > 0 ? "+" : "-");
    }
    out << '\n';
  }
}

}  // namespace ddgraph
