#include "ddgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace ddgraph {

std::string DdgParams::str() const {
  std::ostringstream os;
  os << "(" << v << "," << k << "," << lambda1 << "," << lambda2 << "," << m << "," << n << ")";
  return os.str();
}

std::string SrgParams::str() const {
  std::ostringstream os;
  os << "(" << v << "," << k << "," << lambda << "," << mu << ")";
  return os.str();
}

std::string IntersectionArray::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ";";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "}";
  return os.str();
}

namespace {

int require_regular(const Graph& g) {
  const int n = g.n();
  if (n < 2) fail(ErrorKind::Degenerate, "graph too small");
  int k = g.degree(0);
  for (int u = 1; u < n; ++u)
    if (g.degree(u) != k)
      fail(ErrorKind::NotRegular, "vertices 0 and " + std::to_string(u) + " have degrees " +
                                      std::to_string(k) + " and " + std::to_string(g.degree(u)));
  if (k == 0) fail(ErrorKind::Degenerate, "edgeless graph");
  if (k == n - 1) fail(ErrorKind::Degenerate, "complete graph");
  return k;
}

// Counts for all unordered pairs, as a flat upper-triangle array.
std::vector<int> pair_counts(const Graph& g) {
  const int n = g.n();
  std::vector<int> cn(static_cast<size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int c = g.common_neighbours(u, v);
      cn[static_cast<size_t>(u) * n + v] = c;
      cn[static_cast<size_t>(v) * n + u] = c;
    }
  return cn;
}

// Renumber class ids in order of first appearance so equal partitions
// compare equal as vectors.
std::vector<int> normalize_assignment(const std::vector<int>& raw) {
  std::vector<int> out(raw.size());
  std::map<int, int> next;
  int fresh = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    auto it = next.find(raw[i]);
    if (it == next.end()) it = next.emplace(raw[i], fresh++).first;
    out[i] = it->second;
  }
  return out;
}

// Validates one candidate reading and fills the view; returns false quietly
// when the candidate is not consistent.
bool try_view(const Graph& g, const std::vector<int>& cn, long long k, bool singletons,
              int lambda1, PartitionView& out) {
  const int n = g.n();
  std::vector<int> cls(n, -1);
  int nclasses = 0;
  if (singletons) {
    for (int u = 0; u < n; ++u) cls[u] = u;
    nclasses = n;
  } else {
    // Relation "count == lambda1, or equal" must be an equivalence.  Classes
    // are pulled off greedily and membership is cross-checked for every pair.
    for (int u = 0; u < n; ++u) {
      if (cls[u] >= 0) continue;
      cls[u] = nclasses;
      for (int v = u + 1; v < n; ++v)
        if (cls[v] < 0 && cn[static_cast<size_t>(u) * n + v] == lambda1) cls[v] = nclasses;
      ++nclasses;
    }
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((cls[u] == cls[v]) != (cn[static_cast<size_t>(u) * n + v] == lambda1)) return false;
  }

  std::vector<int> sizes(nclasses, 0);
  for (int u = 0; u < n; ++u) ++sizes[cls[u]];
  for (int c = 1; c < nclasses; ++c)
    if (sizes[c] != sizes[0]) return false;

  long long lambda2 = -1;
  for (int u = 0; u < n && lambda2 < 0; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cls[u] != cls[v]) {
        lambda2 = cn[static_cast<size_t>(u) * n + v];
        break;
      }
  if (lambda2 >= 0) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (cls[u] != cls[v] && cn[static_cast<size_t>(u) * n + v] != lambda2) return false;
  }

  out.params.v = n;
  out.params.k = k;
  out.params.m = nclasses;
  out.params.n = sizes[0];
  if (singletons) {
    out.params.lambda1 = lambda2;  // no same-class pairs; SRG convention
    out.params.lambda2 = lambda2;
  } else {
    out.params.lambda1 = lambda1;
    out.params.lambda2 = lambda2 >= 0 ? lambda2 : lambda1;  // m == 1: convention l2 = l1
  }
  out.classes = normalize_assignment(cls);
  return true;
}

}  // namespace

std::vector<PartitionView> discover_partition(const Graph& g) {
  const int n = g.n();
  const int k = require_regular(g);
  std::vector<int> cn = pair_counts(g);

  std::set<int> values;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) values.insert(cn[static_cast<size_t>(u) * n + v]);

  std::vector<PartitionView> views;
  for (int lambda1 : values) {
    PartitionView pv;
    if (try_view(g, cn, k, false, lambda1, pv)) views.push_back(std::move(pv));
  }
  {
    PartitionView pv;
    if (try_view(g, cn, k, true, -1, pv)) views.push_back(std::move(pv));
  }

  std::stable_sort(views.begin(), views.end(), [](const PartitionView& a, const PartitionView& b) {
    if (a.proper() != b.proper()) return a.proper();
    return a.classes < b.classes;
  });
  return views;
}

DdgCertificate verify_ddg(const Graph& g) {
  std::vector<PartitionView> views = discover_partition(g);
  if (views.empty())
    fail(ErrorKind::NotDivisible, "no class partition gives constant common-neighbour counts");
  DdgCertificate cert;
  cert.partition = views.front();
  cert.params = cert.partition.params;
  cert.all = std::move(views);
  cert.is_srg = cert.params.srg();
  return cert;
}

DdgCertificate verify_ddg(const Graph& g, const std::vector<int>& classes) {
  const int n = g.n();
  const int k = require_regular(g);
  if (static_cast<int>(classes.size()) != n)
    fail(ErrorKind::BadInput, "partition size mismatch");

  std::vector<int> cls = normalize_assignment(classes);
  int m = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> sizes(m, 0);
  for (int c : cls) ++sizes[c];
  for (int c = 1; c < m; ++c)
    if (sizes[c] != sizes[0])
      fail(ErrorKind::NotDivisible, "class sizes differ: " + std::to_string(sizes[0]) + " vs " +
                                        std::to_string(sizes[c]));

  long long lambda1 = -1, lambda2 = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int c = g.common_neighbours(u, v);
      long long& slot = cls[u] == cls[v] ? lambda1 : lambda2;
      if (slot < 0) slot = c;
      if (slot != c)
        fail(ErrorKind::NotDivisible,
             "pair (" + std::to_string(u) + "," + std::to_string(v) + ") has " + std::to_string(c) +
                 " common neighbours, expected " + std::to_string(slot));
    }
  if (lambda1 < 0) lambda1 = lambda2;  // all classes singletons
  if (lambda2 < 0) lambda2 = lambda1;  // single class

  DdgCertificate cert;
  cert.partition.params = {static_cast<long long>(n), static_cast<long long>(k),
                           lambda1, lambda2, static_cast<long long>(m),
                           static_cast<long long>(sizes[0])};
  cert.partition.classes = cls;
  cert.params = cert.partition.params;
  cert.all = {cert.partition};
  cert.is_srg = lambda1 == lambda2;
  return cert;
}

SrgParams verify_srg(const Graph& g) {
  const int n = g.n();
  const int k = require_regular(g);
  long long lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int c = g.common_neighbours(u, v);
      long long& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot < 0) slot = c;
      if (slot != c)
        fail(ErrorKind::NotSrg,
             "pair (" + std::to_string(u) + "," + std::to_string(v) + ") has " + std::to_string(c) +
                 " common neighbours, expected " + std::to_string(slot));
    }
  if (lambda < 0 || mu < 0)
    fail(ErrorKind::Degenerate, "no adjacent or no non-adjacent pairs");
  return {n, k, lambda, mu};
}

Graph complement(const Graph& g) {
  const int n = g.n();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.set_edge(u, v);
  return c;
}

IntersectionArray intersection_array(const Graph& g) {
  const int n = g.n();
  if (n == 0) fail(ErrorKind::BadInput, "empty graph");
  std::vector<int> dist(n);
  IntersectionArray ia;
  int diameter = -1;

  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    int ecc = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      ecc = std::max(ecc, dist[u]);
      for (int w : g.neighbours(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
    for (int u = 0; u < n; ++u)
      if (dist[u] < 0)
        fail(ErrorKind::Disconnected,
             "vertex " + std::to_string(u) + " unreachable from " + std::to_string(s));

    if (s == 0) {
      diameter = ecc;
      ia.b.assign(diameter, -1);
      ia.c.assign(diameter, -1);
    } else if (ecc != diameter) {
      fail(ErrorKind::NotDistanceRegular, "eccentricity differs at vertex " + std::to_string(s));
    }

    for (int u = 0; u < n; ++u) {
      int below = 0, above = 0;
      for (int w : g.neighbours(u)) {
        if (dist[w] == dist[u] - 1) ++below;
        else if (dist[w] == dist[u] + 1) ++above;
      }
      int du = dist[u];
      if (du < diameter) {
        long long& b = ia.b[du];
        if (b < 0) b = above;
        if (b != above)
          fail(ErrorKind::NotDistanceRegular,
               "b_" + std::to_string(du) + " is not constant (vertex pair " + std::to_string(s) +
                   "," + std::to_string(u) + ")");
      } else if (above != 0) {
        fail(ErrorKind::NotDistanceRegular, "vertex beyond the diameter");
      }
      if (du > 0) {
        long long& c = ia.c[du - 1];
        if (c < 0) c = below;
        if (c != below)
          fail(ErrorKind::NotDistanceRegular,
               "c_" + std::to_string(du) + " is not constant (vertex pair " + std::to_string(s) +
                   "," + std::to_string(u) + ")");
      }
    }
  }
  return ia;
}

Graph fixture_graph(const std::string& name) {
  if (name == "octahedron_line") {
    // Octahedron: vertices 0..5, u,v adjacent unless v == u + 3 (mod 6).
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        if (v - u != 3) edges.emplace_back(u, v);
    Graph g(static_cast<int>(edges.size()));
    for (size_t a = 0; a < edges.size(); ++a)
      for (size_t b = a + 1; b < edges.size(); ++b) {
        auto [u1, v1] = edges[a];
        auto [u2, v2] = edges[b];
        if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
          g.set_edge(static_cast<int>(a), static_cast<int>(b));
      }
    return g;
  }
  if (name == "k4_cartesian_k2") {
    Graph g(8);
    for (int layer = 0; layer < 2; ++layer)
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) g.set_edge(layer * 4 + a, layer * 4 + b);
    for (int a = 0; a < 4; ++a) g.set_edge(a, 4 + a);
    return g;
  }
  fail(ErrorKind::UnknownName, "no fixture graph named '" + name + "'");
}

}  // namespace ddgraph
