#include "minorcolor/graph6.hpp"

#include <sstream>

namespace minorcolor {

SimpleGraph parse_graph6(const std::string& line) {
  if (line.empty()) throw DomainError("graph6: empty line");
  std::size_t pos = 0;
  // Optional ">>graph6<<" header.
  if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
  if (pos >= line.size()) throw DomainError("graph6: missing size byte");
  int c = static_cast<unsigned char>(line[pos]);
  if (c == 126)
    throw DomainError("graph6: multi-byte order (n > 62) not supported");
  if (c < 63 || c > 125) {
    std::ostringstream os;
    os << "graph6: bad size byte at offset " << pos;
    throw DomainError(os.str());
  }
  int n = c - 63;
  ++pos;
  std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (line.size() - pos != need) {
    std::ostringstream os;
    os << "graph6: expected " << need << " data bytes for n=" << n << ", got "
       << line.size() - pos;
    throw DomainError(os.str());
  }
  SimpleGraph g(n, {});
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = static_cast<unsigned char>(line[pos + bit / 6]);
      if (byte < 63 || byte > 126) {
        std::ostringstream os;
        os << "graph6: bad data byte at offset " << pos + bit / 6;
        throw DomainError(os.str());
      }
      int val = byte - 63;
      if (val >> (5 - bit % 6) & 1) g.add_edge(u + 1, v + 1);
    }
  }
  // Padding bits must be zero for byte-exact round trips.
  for (std::size_t b = bit; b < need * 6; ++b) {
    int byte = static_cast<unsigned char>(line[pos + b / 6]);
    if ((byte - 63) >> (5 - b % 6) & 1)
      throw DomainError("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const SimpleGraph& g) {
  std::vector<VertexId> vs = g.vertices();
  int n = static_cast<int>(vs.size());
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = acc << 1 | (g.has_edge(vs[u], vs[v]) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

}  // namespace minorcolor
