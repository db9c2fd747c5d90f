#ifndef WALKDET_GRAPH6_HPP
#define WALKDET_GRAPH6_HPP

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <walkdet/graph.hpp>

namespace walkdet {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {
inline unsigned g6_byte(std::string_view line, std::size_t pos) {
  const auto c = static_cast<unsigned char>(line[pos]);
  if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside printable range 63..126", pos);
  return c - 63;
}
}  // namespace detail

// Standard graph6 decoding: the order, then the upper triangle of the
// adjacency matrix column by column (x01, x02, x12, x03, ...) packed into
// 6-bit chunks, most significant bit first, offset by 63. The encoding is
// checked bit-exactly: wrong length, bytes outside 63..126 and nonzero
// padding bits are all rejected with the offending byte offset.
inline Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw Graph6Error("graph6: empty input", 0);

  std::size_t pos = 0;
  std::size_t n = 0;
  unsigned b0 = detail::g6_byte(line, pos);
  if (b0 == 63) {  // '~': extended order
    if (line.size() < 2) throw Graph6Error("graph6: truncated order field", 1);
    if (static_cast<unsigned char>(line[1]) == '~')
      throw Graph6Error("graph6: orders >= 258048 are not supported", 1);
    if (line.size() < 4) throw Graph6Error("graph6: truncated order field", line.size());
    n = (static_cast<std::size_t>(detail::g6_byte(line, 1)) << 12) |
        (static_cast<std::size_t>(detail::g6_byte(line, 2)) << 6) |
        detail::g6_byte(line, 3);
    pos = 4;
  } else {
    n = b0;
    pos = 1;
  }
  if (n == 0) throw Graph6Error("graph6: order must be at least 1", 0);

  const std::size_t nbits = n * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() < pos + nbytes)
    throw Graph6Error("graph6: truncated adjacency data", line.size());
  if (line.size() > pos + nbytes)
    throw Graph6Error("graph6: trailing garbage after adjacency data", pos + nbytes);

  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const unsigned byte = detail::g6_byte(line, pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1u) g.add_edge(i, j);
    }
  }
  if (nbytes > 0) {
    const unsigned last = detail::g6_byte(line, pos + nbytes - 1);
    const unsigned pad = nbytes * 6 - nbits;
    if (pad > 0 && (last & ((1u << pad) - 1u)) != 0)
      throw Graph6Error("graph6: nonzero padding bits", pos + nbytes - 1);
  }
  return g;
}

inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("emit_graph6: order too large");
  }
  unsigned chunk = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

// One graph per line, LF-terminated. Blank lines and the usual '>>graph6<<'
// header / '#' comment lines are skipped. Parse failures are rethrown with
// the line number attached.
template <typename Fn>
void for_each_graph6_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty() || line[0] == '>' || line[0] == '#') continue;
    try {
      fn(parse_graph6(line), line_no);
    } catch (const Graph6Error& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace walkdet

#endif  // WALKDET_GRAPH6_HPP
