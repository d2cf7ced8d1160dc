#include "ddgraph/graph6.hpp"

#include <fstream>

namespace ddgraph {

std::string graph6_encode(const Graph& g) {
  const int n = g.n();
  if (n > 258047) fail(ErrorKind::TooLarge, "graph6 order cap is 258047 here");
  std::string s;
  if (n <= 62) {
    s.push_back(static_cast<char>(n + 63));
  } else {
    s.push_back(126);
    s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    s.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        s.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) s.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return s;
}

Graph graph6_decode(const std::string& s) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) fail(ErrorKind::BadInput, "truncated graph6 string");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) fail(ErrorKind::BadInput, "byte outside graph6 range");
    return c;
  };
  int c0 = next();
  long long n;
  if (c0 == 126) {
    int a = next() - 63, b = next() - 63, c = next() - 63;
    if (a < 0 || b < 0 || c < 0) fail(ErrorKind::BadInput, "bad graph6 size bytes");
    n = (static_cast<long long>(a) << 12) | (b << 6) | c;
  } else {
    n = c0 - 63;
  }
  if (n > 258047) fail(ErrorKind::BadInput, "graph6 order too large");
  Graph g(static_cast<int>(n));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (nbits == 0) {
        acc = next() - 63;
        if (acc < 0) fail(ErrorKind::BadInput, "bad graph6 data byte");
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) g.set_edge(u, v);
      --nbits;
    }
  if (pos != s.size()) fail(ErrorKind::BadInput, "trailing bytes after graph6 data");
  return g;
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    out.push_back(graph6_decode(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  return read_graph6(in);
}

void write_graph6(std::ostream& out, const Graph& g) { out << graph6_encode(g) << "\n"; }

void write_graph6_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::BadInput, "cannot open " + path + " for writing");
  write_graph6(out, g);
}

}  // namespace ddgraph
