#include "ddgraph/exact_rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>

#include "ddgraph/errors.hpp"

namespace ddgraph {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

std::vector<std::vector<long long>> shifted_adjacency(const Graph& g, long long theta) {
  int n = g.n();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int u = 0; u < n; ++u) {
    m[u][u] = -theta;
    for (int v : g.neighbours(u)) m[u][v] = 1;
  }
  return m;
}

std::vector<std::vector<long long>> squared_adjacency(const Graph& g, long long c) {
  int n = g.n();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int u = 0; u < n; ++u) {
    m[u][u] = g.degree(u) - c;
    for (int v = 0; v < n; ++v)
      if (v != u) m[u][v] = g.common_neighbours(u, v);
  }
  return m;
}

}  // namespace

int rational_rank(std::vector<std::vector<long long>> in) {
  int rows = static_cast<int>(in.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(in[0].size());
  for (const auto& r : in)
    if (static_cast<int>(r.size()) != cols)
      fail(ErrorKind::DimensionMismatch, "ragged matrix");

  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = static_cast<long>(in[i][j]);

  // Fraction-free elimination: after step k every entry is a (k+1)x(k+1)
  // minor of the original matrix, so the division below is exact.  Full
  // pivoting (smallest nonzero magnitude) keeps growth down and lets the
  // loop stop exactly at the rank.
  std::vector<int> rperm(rows), cperm(cols);
  for (int i = 0; i < rows; ++i) rperm[i] = i;
  for (int j = 0; j < cols; ++j) cperm[j] = j;

  mpz_class prev = 1;
  int rank = 0;
  for (int k = 0; k < rows && k < cols; ++k) {
    int pi = -1, pj = -1;
    for (int i = k; i < rows; ++i) {
      for (int j = k; j < cols; ++j) {
        const mpz_class& e = a[rperm[i]][cperm[j]];
        if (e == 0) continue;
        if (pi < 0 || mpz_cmpabs(e.get_mpz_t(), a[rperm[pi]][cperm[pj]].get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    std::swap(rperm[k], rperm[pi]);
    std::swap(cperm[k], cperm[pj]);
    ++rank;
    const mpz_class& piv = a[rperm[k]][cperm[k]];
    for (int i = k + 1; i < rows; ++i) {
      mpz_class& lead = a[rperm[i]][cperm[k]];
      for (int j = k + 1; j < cols; ++j) {
        mpz_class& e = a[rperm[i]][cperm[j]];
        e = e * piv - lead * a[rperm[k]][cperm[j]];
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = piv;
  }
  return rank;
}

int exact_multiplicity(const Graph& g, long long theta) {
  return g.n() - rational_rank(shifted_adjacency(g, theta));
}

int pair_multiplicity(const Graph& g, long long c) {
  return g.n() - rational_rank(squared_adjacency(g, c));
}

int p_rank_matrix(const std::vector<std::vector<long long>>& mat, int p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  int rows = static_cast<int>(mat.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(mat[0].size());
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(mat[i].size()) != cols)
      fail(ErrorKind::DimensionMismatch, "ragged matrix");
    for (int j = 0; j < cols; ++j) a[i][j] = ((mat[i][j] % p) + p) % p;
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    // Normalize pivot row, then clear the column below.
    std::int64_t inv = 1, base = a[rank][col] % p, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
    for (int i = rank + 1; i < rows; ++i) {
      std::int64_t f = a[i][col];
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) {
        std::int64_t t = (a[i][j] - f * a[rank][j]) % p;
        a[i][j] = t < 0 ? t + p : t;
      }
    }
    ++rank;
  }
  return rank;
}

int p_rank(const Graph& g, int p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  int n = g.n();
  if (p == 2) {
    // The packed adjacency rows are already the GF(2) matrix.
    int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(n);
    for (int u = 0; u < n; ++u) rows[u].assign(g.row(u), g.row(u) + words);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
      int w = col / 64;
      std::uint64_t bit = 1ULL << (col % 64);
      int piv = -1;
      for (int i = rank; i < n; ++i)
        if (rows[i][w] & bit) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      for (int i = rank + 1; i < n; ++i)
        if (rows[i][w] & bit)
          for (int j = w; j < words; ++j) rows[i][j] ^= rows[rank][j];
      ++rank;
    }
    return rank;
  }
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbours(u)) m[u][v] = 1;
  return p_rank_matrix(m, p);
}

}  // namespace ddgraph
