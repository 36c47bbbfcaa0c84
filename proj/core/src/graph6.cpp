#include "grundy/graph6.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace grundy {

namespace {

constexpr int kLo = 63;   // '?'
constexpr int kHi = 126;  // '~'

int decode_char(char c) {
  if (c < kLo || c > kHi) throw Graph6Error("graph6: byte out of range");
  return c - kLo;
}

}  // namespace

Graph from_graph6(const std::string& text) {
  if (text.empty()) throw Graph6Error("graph6: empty string");
  size_t pos = 0;
  long long n;
  if (text[0] != '~') {
    n = decode_char(text[0]);
    pos = 1;
  } else {
    // '~' + 3 chars covers 63 <= n <= 258047; larger graphs are rejected
    // by the 512-vertex cap anyway.
    if (text.size() < 4 || text[1] == '~')
      throw Graph6Error("graph6: unsupported or truncated header");
    n = 0;
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_char(text[i]);
    pos = 4;
  }
  if (n > kMaxVertices) throw Graph6Error("graph6: more than 512 vertices");

  long long bits = n * (n - 1) / 2;
  size_t need = size_t((bits + 5) / 6);
  if (text.size() - pos != need)
    throw Graph6Error("graph6: body length mismatch");

  Graph::Builder b{int(n)};
  // Column-major upper triangle: columns v = 1..n-1, rows u = 0..v-1.
  long long bit = 0;
  int u = 0, v = 1;
  for (size_t i = pos; i < text.size(); ++i) {
    int word = decode_char(text[i]);
    for (int k = 5; k >= 0; --k, ++bit) {
      bool on = (word >> k) & 1;
      if (bit >= bits) {
        if (on) throw Graph6Error("graph6: nonzero padding bits");
        continue;
      }
      if (on) b.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return std::move(b).build();
}

std::string to_graph6(const Graph& g) {
  std::string out;
  int n = g.n();
  if (n < kLo) {
    out.push_back(char(n + kLo));
  } else {
    out.push_back('~');
    out.push_back(char(((n >> 12) & 63) + kLo));
    out.push_back(char(((n >> 6) & 63) + kLo));
    out.push_back(char((n & 63) + kLo));
  }
  int word = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(char(word + kLo));
        word = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(char((word << (6 - nbits)) + kLo));
  return out;
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int n = -1, max_v = -1;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) continue;
    if (ls >> b) {
      if (a < 0 || b < 0 || a >= kMaxVertices || b >= kMaxVertices)
        throw std::invalid_argument("edge list: endpoint out of range");
      edges.emplace_back(int(a), int(b));
      max_v = std::max<long long>(max_v, std::max(a, b));
    } else {
      if (a < 0 || a > kMaxVertices)
        throw std::invalid_argument("edge list: bad vertex count");
      n = int(a);
    }
  }
  if (n < 0) n = max_v + 1;
  if (max_v >= n) throw std::invalid_argument("edge list: endpoint >= n");
  Graph::Builder b(n);
  for (auto [u, v] : edges)
    if (!b.has_edge(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::vector<std::string> read_g6_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty() || line[0] == '>') continue;
    lines.push_back(line);
  }
  return lines;
}

std::string adjacency_dump(const Graph& g) {
  std::ostringstream out;
  for (int u = 0; u < g.n(); ++u) {
    out << u << ":";
    for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v))
      out << " " << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace grundy
