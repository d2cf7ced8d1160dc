#include "ddgraph/canonical.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>

#include "ddgraph/errors.hpp"
#include "ddgraph/graph6.hpp"

namespace ddgraph {

namespace {

constexpr int kMaxOrder = 512;
constexpr long long kNodeBudget = 2000000;

// Ordered partition: `order` lists the vertices cell by cell, `starts` holds
// the begin index of every cell plus a closing sentinel.
struct Cells {
  std::vector<int> order;
  std::vector<int> starts;
};

class Searcher {
 public:
  Searcher(const Graph& g, const std::vector<int>& coloring) : g_(g), n_(g.n()) {
    if (n_ > kMaxOrder) fail(ErrorKind::TooLarge, "vertex count beyond labeling limit");
    cn_.assign(static_cast<size_t>(n_) * n_, 0);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) {
        auto c = static_cast<std::uint16_t>(g.common_neighbours(u, v));
        cn_[static_cast<size_t>(u) * n_ + v] = c;
        cn_[static_cast<size_t>(v) * n_ + u] = c;
      }

    root_.order.resize(n_);
    std::iota(root_.order.begin(), root_.order.end(), 0);
    std::stable_sort(root_.order.begin(), root_.order.end(),
                     [&coloring](int a, int b) { return coloring[a] < coloring[b]; });
    root_.starts.push_back(0);
    for (int i = 1; i < n_; ++i)
      if (coloring[root_.order[i]] != coloring[root_.order[i - 1]]) root_.starts.push_back(i);
    if (n_ > 0) root_.starts.push_back(n_);

    // The colour layout becomes part of the certificate so differently
    // coloured but structurally equal graphs stay distinct.
    color_tag_ = "|";
    for (size_t c = 0; c + 1 < root_.starts.size(); ++c) {
      color_tag_ += std::to_string(coloring[root_.order[root_.starts[c]]]);
      color_tag_ += ":";
      color_tag_ += std::to_string(root_.starts[c + 1] - root_.starts[c]);
      color_tag_ += ",";
    }
  }

  void run() {
    if (n_ == 0) {
      best_cert_ = graph6_encode(Graph(0)) + color_tag_;
      best_perm_.clear();
      best_valid_ = true;
      return;
    }
    Cells start = root_;
    refine(start);
    descend(start);
  }

  const std::string& certificate() const { return best_cert_; }
  const std::vector<int>& perm() const { return best_perm_; }
  const std::vector<std::vector<int>>& generators() const { return gens_; }

 private:
  // Equitable refinement: vertices are repeatedly re-sorted by (cell, then
  // per cell: edge count and summed common-neighbour count into that cell)
  // until the cell structure stops changing.
  void refine(Cells& c) const {
    while (true) {
      size_t ncells = c.starts.size() - 1;
      if (ncells == static_cast<size_t>(n_)) return;
      std::vector<int> cidx(n_);
      for (size_t ci = 0; ci + 1 < c.starts.size(); ++ci)
        for (int i = c.starts[ci]; i < c.starts[ci + 1]; ++i)
          cidx[c.order[i]] = static_cast<int>(ci);
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<int>& s = sig[v];
        s.assign(1 + 2 * ncells, 0);
        s[0] = cidx[v];
        const std::uint16_t* row = &cn_[static_cast<size_t>(v) * n_];
        for (int u = 0; u < n_; ++u) {
          if (u == v) continue;
          int cu = cidx[u];
          if (g_.adjacent(v, u)) s[1 + 2 * cu] += 1;
          s[2 + 2 * cu] += row[u];
        }
      }
      std::stable_sort(c.order.begin(), c.order.end(),
                       [&sig](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> ns;
      ns.push_back(0);
      for (int i = 1; i < n_; ++i)
        if (sig[c.order[i]] != sig[c.order[i - 1]]) ns.push_back(i);
      ns.push_back(n_);
      bool stable = ns.size() == c.starts.size();
      c.starts = std::move(ns);
      if (stable) return;
    }
  }

  long long node_invariant(const Cells& c) const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    };
    size_t ncells = c.starts.size() - 1;
    mix(ncells);
    for (size_t ci = 0; ci < ncells; ++ci) {
      mix(static_cast<std::uint64_t>(c.starts[ci + 1] - c.starts[ci]));
      int rep = c.order[c.starts[ci]];
      for (size_t cj = 0; cj < ncells; ++cj) {
        int cnt = 0;
        for (int i = c.starts[cj]; i < c.starts[cj + 1]; ++i)
          if (c.order[i] != rep && g_.adjacent(rep, c.order[i])) ++cnt;
        mix(static_cast<std::uint64_t>(cnt));
      }
    }
    return static_cast<long long>(h >> 1);
  }

  // -1: current path is ordered below the best leaf's path, 0 equal so far,
  // 1 above (or no best yet).  A longer path that matches the whole best
  // sequence counts as above.
  int compare_prefix() const {
    if (!best_valid_) return 1;
    for (size_t i = 0; i < inv_path_.size(); ++i) {
      if (i >= best_seq_.size()) return 1;
      if (inv_path_[i] < best_seq_[i]) return -1;
      if (inv_path_[i] > best_seq_[i]) return 1;
    }
    return 0;
  }

  // Paths tracking the first leaf must stay alive even when they compare
  // below the best leaf: their leaves reveal automorphisms, and dropping
  // them would leave the generator set incomplete.
  bool matches_first_prefix() const {
    if (!first_valid_) return true;
    if (inv_path_.size() > first_seq_.size()) return false;
    for (size_t i = 0; i < inv_path_.size(); ++i)
      if (inv_path_[i] != first_seq_[i]) return false;
    return true;
  }

  std::string leaf_certificate(const Cells& c) const {
    Graph h(n_);
    for (int p = 0; p < n_; ++p)
      for (int s = p + 1; s < n_; ++s)
        if (g_.adjacent(c.order[p], c.order[s])) h.set_edge(p, s, true);
    return graph6_encode(h) + color_tag_;
  }

  void record_generator(const std::vector<int>& from_perm, const std::vector<int>& to_perm) {
    std::vector<int> phi(n_);
    bool ident = true;
    for (int p = 0; p < n_; ++p) {
      phi[from_perm[p]] = to_perm[p];
      if (to_perm[p] != from_perm[p]) ident = false;
    }
    if (ident) return;
    if (std::find(gens_.begin(), gens_.end(), phi) == gens_.end()) gens_.push_back(std::move(phi));
  }

  void handle_leaf(const Cells& c) {
    std::string cert = leaf_certificate(c);
    // Any leaf whose relabeled graph coincides with a kept leaf's reveals an
    // automorphism, regardless of where the two sit in the tree.
    if (first_valid_ && cert == first_cert_) record_generator(first_perm_, c.order);
    if (best_valid_ && cert == best_cert_ && !(first_valid_ && first_cert_ == best_cert_))
      record_generator(best_perm_, c.order);
    if (!first_valid_) {
      first_valid_ = true;
      first_seq_ = inv_path_;
      first_cert_ = cert;
      first_perm_ = c.order;
    }
    int cmp = compare_prefix();
    bool better = !best_valid_ || cmp > 0;
    if (!better && cmp == 0 && inv_path_.size() == best_seq_.size() && cert > best_cert_)
      better = true;
    if (better) {
      best_valid_ = true;
      best_seq_ = inv_path_;
      best_cert_ = cert;
      best_perm_ = c.order;
    }
  }

  // Orbit partition of the subgroup generated by the recorded automorphisms
  // that fix every individualized vertex so far.
  std::vector<int> prefix_orbits() const {
    std::vector<int> root(n_);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&root](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const auto& gen : gens_) {
      bool fixes = true;
      for (int v : prefix_)
        if (gen[v] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gen[v]);
        if (a != b) root[a] = b;
      }
    }
    for (int v = 0; v < n_; ++v) root[v] = find(v);
    return root;
  }

  void descend(const Cells& c) {
    if (++nodes_ > kNodeBudget) fail(ErrorKind::TooLarge, "labeling search exceeded node budget");
    inv_path_.push_back(node_invariant(c));
    if (compare_prefix() >= 0 || matches_first_prefix()) {
      size_t ncells = c.starts.size() - 1;
      if (ncells == static_cast<size_t>(n_)) {
        handle_leaf(c);
      } else {
        // Branch on the first smallest non-singleton cell.
        int tci = -1, tlen = n_ + 1;
        for (size_t ci = 0; ci < ncells; ++ci) {
          int len = c.starts[ci + 1] - c.starts[ci];
          if (len > 1 && len < tlen) {
            tlen = len;
            tci = static_cast<int>(ci);
          }
        }
        int b = c.starts[tci], e = c.starts[tci + 1];
        std::vector<int> branch(c.order.begin() + b, c.order.begin() + e);
        std::vector<int> tried;
        for (int v : branch) {
          std::vector<int> orb = prefix_orbits();
          bool skip = false;
          for (int u : tried)
            if (orb[u] == orb[v]) {
              skip = true;
              break;
            }
          if (skip) continue;
          tried.push_back(v);
          Cells child;
          child.order = c.order;
          child.starts = c.starts;
          auto it = std::find(child.order.begin() + b, child.order.begin() + e, v);
          std::rotate(child.order.begin() + b, it, it + 1);
          child.starts.insert(std::upper_bound(child.starts.begin(), child.starts.end(), b),
                              b + 1);
          prefix_.push_back(v);
          refine(child);
          descend(child);
          prefix_.pop_back();
        }
      }
    }
    inv_path_.pop_back();
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint16_t> cn_;
  Cells root_;
  std::string color_tag_;

  std::vector<long long> inv_path_;
  bool best_valid_ = false, first_valid_ = false;
  std::vector<long long> best_seq_, first_seq_;
  std::string best_cert_, first_cert_;
  std::vector<int> best_perm_, first_perm_;
  std::vector<std::vector<int>> gens_;
  std::vector<int> prefix_;
  long long nodes_ = 0;
};

CanonicalResult finish_result(const Graph& g, const Searcher& s) {
  CanonicalResult res{std::vector<int>(g.n()), Graph(g.n()), s.certificate()};
  const std::vector<int>& perm = s.perm();
  for (int p = 0; p < g.n(); ++p) res.labeling[perm[p]] = p;
  for (int p = 0; p < g.n(); ++p)
    for (int q = p + 1; q < g.n(); ++q)
      if (g.adjacent(perm[p], perm[q])) res.canonical_graph.set_edge(p, q, true);
  return res;
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

bool is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Deterministic stabilizer chain; small groups only, so the plain textbook
// algorithm (sift, insert, re-close with Schreier generators) is enough.
class StabChain {
 public:
  explicit StabChain(int n) : n_(n) {}

  void add(const Perm& gen) { add_from(gen, 0); }

  mpz_class order() const {
    mpz_class o = 1;
    for (const auto& l : levels_) o *= static_cast<unsigned long>(l.orbit.size());
    return o;
  }

 private:
  struct Level {
    int base = -1;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<Perm> coset;  // coset[i] maps base -> orbit[i]
    std::vector<int> where;   // point -> orbit index or -1
  };

  void rebuild(size_t li) {
    Level& l = levels_[li];
    l.orbit.clear();
    l.coset.clear();
    l.where.assign(n_, -1);
    Perm ident(n_);
    std::iota(ident.begin(), ident.end(), 0);
    l.orbit.push_back(l.base);
    l.coset.push_back(ident);
    l.where[l.base] = 0;
    for (size_t qi = 0; qi < l.orbit.size(); ++qi)
      for (const Perm& gen : l.gens) {
        int img = gen[l.orbit[qi]];
        if (l.where[img] < 0) {
          l.where[img] = static_cast<int>(l.orbit.size());
          l.orbit.push_back(img);
          l.coset.push_back(compose(l.coset[qi], gen));
        }
      }
  }

  void add_from(Perm p, size_t start) {
    // Sift through existing levels; the residue fixes every base above the
    // level it lands on.
    size_t j = start;
    while (j < levels_.size()) {
      if (is_identity(p)) return;
      const Level& l = levels_[j];
      int img = p[l.base];
      if (l.where[img] < 0) break;
      p = compose(p, inverse(l.coset[l.where[img]]));
      ++j;
    }
    if (is_identity(p)) return;
    if (j == levels_.size()) {
      Level nl;
      for (int i = 0; i < n_; ++i)
        if (p[i] != i) {
          nl.base = i;
          break;
        }
      levels_.push_back(std::move(nl));
    }
    levels_[j].gens.push_back(p);
    rebuild(j);
    // Close the level: all its Schreier generators must sift to identity in
    // the tail of the chain.
    for (size_t qi = 0; qi < levels_[j].orbit.size(); ++qi) {
      for (size_t gi = 0; gi < levels_[j].gens.size(); ++gi) {
        const Level& l = levels_[j];
        Perm s = compose(compose(l.coset[qi], l.gens[gi]), inverse(l.coset[l.where[l.gens[gi][l.orbit[qi]]]]));
        if (!is_identity(s)) add_from(std::move(s), j + 1);
      }
    }
  }

  int n_;
  std::vector<Level> levels_;
};

}  // namespace

CanonicalResult canonical_form(const Graph& g, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != g.n())
    fail(ErrorKind::DimensionMismatch, "coloring length must match vertex count");
  Searcher s(g, coloring);
  s.run();
  return finish_result(g, s);
}

CanonicalResult canonical_form(const Graph& g) {
  return canonical_form(g, std::vector<int>(g.n(), 0));
}

namespace {

// Sorted multiset of all pairwise common-neighbour counts: a cheap screen
// that separates most non-isomorphic pairs before the full search runs.
std::vector<int> cn_multiset(const Graph& g) {
  std::vector<int> m;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) m.push_back(g.common_neighbours(u, v));
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

bool are_isomorphic(const Graph& a, const std::vector<int>& ca, const Graph& b,
                    const std::vector<int>& cb) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::pair<int, int>> da, db;
  for (int v = 0; v < a.n(); ++v) da.emplace_back(ca[v], a.degree(v));
  for (int v = 0; v < b.n(); ++v) db.emplace_back(cb[v], b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  if (cn_multiset(a) != cn_multiset(b)) return false;
  return canonical_form(a, ca).certificate == canonical_form(b, cb).certificate;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return are_isomorphic(a, std::vector<int>(a.n(), 0), b, std::vector<int>(b.n(), 0));
}

AutomorphismGroup automorphism_group(const Graph& g) {
  if (g.n() == 0) return {"1", {}};
  Searcher s(g, std::vector<int>(g.n(), 0));
  s.run();
  for (const auto& gen : s.generators())
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        if (g.adjacent(u, v) != g.adjacent(gen[u], gen[v]))
          fail(ErrorKind::BadInput, "internal check failed: generator breaks adjacency");
  StabChain chain(g.n());
  for (const auto& gen : s.generators()) chain.add(gen);
  return {chain.order().get_str(), s.generators()};
}

std::string automorphism_group_order(const Graph& g) { return automorphism_group(g).order; }

std::vector<std::vector<int>> classify(const std::vector<Graph>& graphs) {
  std::map<std::string, std::vector<int>> buckets;
  std::vector<std::string> first_order;
  for (size_t i = 0; i < graphs.size(); ++i) {
    std::string cert = canonical_form(graphs[i]).certificate;
    if (!buckets.count(cert)) first_order.push_back(cert);
    buckets[cert].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> out;
  for (const std::string& c : first_order) out.push_back(buckets[c]);
  return out;
}

}  // namespace ddgraph
