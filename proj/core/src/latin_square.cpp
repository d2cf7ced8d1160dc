#include "ddgraph/latin_square.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace ddgraph {

int Square::symbol_range() const {
  int mx = -1;
  for (int v : cells) mx = std::max(mx, v);
  return mx + 1;
}

namespace {

void compute_flags(Square& sq) {
  const int m = sq.side;
  sq.latin = true;
  sq.symmetric = true;
  sq.reduced = true;
  std::vector<char> seen(m);
  for (int i = 0; i < m && sq.latin; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < m; ++j) {
      int v = sq.at(i, j);
      if (v >= m || seen[v]) {
        sq.latin = false;
        break;
      }
      seen[v] = 1;
    }
  }
  for (int j = 0; j < m && sq.latin; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < m; ++i) {
      int v = sq.at(i, j);
      if (v >= m || seen[v]) {
        sq.latin = false;
        break;
      }
      seen[v] = 1;
    }
  }
  for (int i = 0; i < m && sq.symmetric; ++i)
    for (int j = i + 1; j < m; ++j)
      if (sq.at(i, j) != sq.at(j, i)) {
        sq.symmetric = false;
        break;
      }
  for (int j = 0; j < m; ++j)
    if (sq.at(0, j) != j || sq.at(j, 0) != j) {
      sq.reduced = false;
      break;
    }
}

}  // namespace

Square check_square(const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) fail(ErrorKind::NotSquare, "empty array");
  Square sq;
  sq.side = m;
  sq.cells.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != m)
      fail(ErrorKind::NotSquare,
           "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
               " entries, expected " + std::to_string(m));
    for (int j = 0; j < m; ++j) {
      int v = rows[i][j];
      if (v < 0 || v > m)  // selector squares may use one symbol beyond the side
        fail(ErrorKind::EntryOutOfRange,
             "entry " + std::to_string(v + 1) + " at (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ") outside 1.." + std::to_string(m + 1));
      sq.at(i, j) = v;
    }
  }
  compute_flags(sq);
  return sq;
}

Square cayley_table(const std::vector<int>& factors) {
  if (factors.empty()) fail(ErrorKind::BadInput, "no cyclic factors given");
  long long m = 1;
  for (int f : factors) {
    if (f < 1) fail(ErrorKind::BadInput, "cyclic factor must be positive");
    m *= f;
  }
  if (m > 4096) fail(ErrorKind::TooLarge, "group order " + std::to_string(m) + " exceeds 4096");
  const int side = static_cast<int>(m);
  Square sq;
  sq.side = side;
  sq.cells.resize(static_cast<size_t>(side) * side);
  const int k = static_cast<int>(factors.size());
  std::vector<int> a(k), b(k);
  for (int i = 0; i < side; ++i) {
    int t = i;
    for (int c = 0; c < k; ++c) {
      a[c] = t % factors[c];
      t /= factors[c];
    }
    for (int j = 0; j < side; ++j) {
      t = j;
      for (int c = 0; c < k; ++c) {
        b[c] = t % factors[c];
        t /= factors[c];
      }
      int s = 0;
      for (int c = k - 1; c >= 0; --c) s = s * factors[c] + (a[c] + b[c]) % factors[c];
      sq.at(i, j) = s;
    }
  }
  compute_flags(sq);
  return sq;
}

namespace {

// Lexicographically smallest image of a reduced symmetric table under
// simultaneous row/column/symbol relabeling that fixes symbol 0 (the
// identity of the commutative loop the table describes).  Permutations of
// 1..m-1 are scanned with early abort against the best image so far, so the
// usual cost is far below (m-1)! full rebuilds.
std::vector<int> loop_canonical(const Square& sq) {
  const int m = sq.side;
  std::vector<int> perm(m), inv(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<int> image(static_cast<size_t>(m) * m);
  do {
    for (int i = 0; i < m; ++i) inv[perm[i]] = i;
    bool better = best.empty();
    bool dead = false;
    for (int r = 0; r < m && !dead; ++r) {
      for (int c = 0; c < m; ++c) {
        int v = perm[sq.at(inv[r], inv[c])];
        size_t idx = static_cast<size_t>(r) * m + c;
        image[idx] = v;
        if (!better) {
          if (v < best[idx]) better = true;
          else if (v > best[idx]) {
            dead = true;
            break;
          }
        }
      }
    }
    if (!dead && better) best = image;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

// Backtracking fill of the upper triangle (diagonal included) of a symmetric
// square with first row and column pinned to the identity ordering.  Row and
// column constraints coincide by symmetry, so one bitmask per row suffices.
void enumerate_rec(int m, int i, int j, std::vector<int>& cells,
                   std::vector<unsigned>& row_used,
                   const std::function<void(const std::vector<int>&)>& emit) {
  if (i == m) {
    emit(cells);
    return;
  }
  int ni = i, nj = j + 1;
  if (nj == m) {
    ni = i + 1;
    nj = ni;  // next row starts on its diagonal cell
  }
  for (int v = 0; v < m; ++v) {
    unsigned bit = 1u << v;
    if (row_used[i] & bit) continue;
    if (j != i && (row_used[j] & bit)) continue;
    cells[static_cast<size_t>(i) * m + j] = v;
    cells[static_cast<size_t>(j) * m + i] = v;
    row_used[i] |= bit;
    if (j != i) row_used[j] |= bit;
    enumerate_rec(m, ni, nj, cells, row_used, emit);
    row_used[i] &= ~bit;
    if (j != i) row_used[j] &= ~bit;
  }
}

}  // namespace

std::vector<Square> enumerate_reduced_symmetric(int m) {
  if (m < 1) fail(ErrorKind::BadInput, "side must be positive");
  if (m > 8) fail(ErrorKind::TooLarge, "enumeration capped at side 8");
  std::vector<int> cells(static_cast<size_t>(m) * m, 0);
  std::vector<unsigned> row_used(m, 0);
  for (int j = 0; j < m; ++j) {
    cells[j] = j;                              // first row 0..m-1
    cells[static_cast<size_t>(j) * m] = j;     // first column 0..m-1
    row_used[j] |= 1u << j;                    // value j sits in row j at column 0
  }
  row_used[0] = (m == 32) ? ~0u : (1u << m) - 1;  // row 0 complete

  std::set<std::vector<int>> classes;
  auto emit = [&](const std::vector<int>& filled) {
    Square sq;
    sq.side = m;
    sq.cells = filled;
    classes.insert(loop_canonical(sq));
  };
  if (m == 1) {
    emit(cells);
  } else {
    enumerate_rec(m, 1, 1, cells, row_used, emit);
  }

  std::vector<Square> reps;
  for (const std::vector<int>& canon : classes) {
    Square rep;
    rep.side = m;
    rep.cells = canon;
    compute_flags(rep);
    reps.push_back(std::move(rep));
  }
  return reps;
}

Square derived_square(const Square& latin, int h, const std::vector<uint8_t>& mask) {
  const int s = latin.side;
  if (!latin.latin || !latin.symmetric)
    fail(ErrorKind::BadInput, "derivation requires a symmetric Latin square");
  if (h < 0 || h >= s) fail(ErrorKind::IndexOutOfRange, "deleted index " + std::to_string(h + 1));
  if (static_cast<int>(mask.size()) != s - 1)
    fail(ErrorKind::DimensionMismatch,
         "mask has " + std::to_string(mask.size()) + " bits, expected " + std::to_string(s - 1));
  Square out;
  out.side = s - 1;
  out.cells.resize(static_cast<size_t>(s - 1) * (s - 1));
  for (int i = 0; i < s - 1; ++i) {
    int oi = i < h ? i : i + 1;
    for (int j = 0; j < s - 1; ++j) {
      int oj = j < h ? j : j + 1;
      out.at(i, j) = latin.at(oi, oj);
    }
    if (mask[i]) out.at(i, i) = latin.at(oi, h);
  }
  compute_flags(out);
  return out;
}

bool diagonal_avoids(const Square& sq, int s) {
  for (int i = 0; i < sq.side; ++i)
    if (sq.at(i, i) == s) return false;
  return true;
}

Square read_square(std::istream& in) {
  int m = 0;
  if (!(in >> m) || m < 1) fail(ErrorKind::BadInput, "missing or invalid side");
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int v;
      if (!(in >> v)) fail(ErrorKind::BadInput, "truncated square data");
      rows[i][j] = v - 1;  // 1-based on disk
    }
  return check_square(rows);
}

Square read_square_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  return read_square(in);
}

void write_square(std::ostream& out, const Square& sq) {
  out << sq.side << "\n";
  for (int i = 0; i < sq.side; ++i) {
    for (int j = 0; j < sq.side; ++j) {
      if (j) out << ' ';
      out << sq.at(i, j) + 1;
    }
    out << "\n";
  }
}

}  // namespace ddgraph
