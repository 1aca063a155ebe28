#ifndef UVT_GRAPH6_HPP
#define UVT_GRAPH6_HPP

// graph6 reader/writer and sparse6 reader (McKay's formats: big-endian
// 6-bit groups offset by 63). sparse6 is accepted on input only.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uvt/graph.hpp"

namespace uvt {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

class SixBitReader {
 public:
  SixBitReader(std::string_view text, std::size_t pos) : text_(text), pos_(pos) {}

  std::size_t pos() const noexcept { return pos_; }
  bool at_end() const noexcept { return pos_ >= text_.size(); }

  int next_group() {
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    auto c = static_cast<unsigned char>(text_[pos_]);
    if (c < 63 || c > 126) throw ParseError("byte outside the printable 63..126 range", pos_);
    ++pos_;
    return c - 63;
  }

  /// Reads N(n): 1, 4 or 8 bytes.
  std::size_t read_size() {
    std::size_t start = pos_;
    if (at_end()) throw ParseError("missing vertex count", pos_);
    if (static_cast<unsigned char>(text_[pos_]) != 126) return static_cast<std::size_t>(next_group());
    ++pos_;
    int groups = 3;
    if (!at_end() && static_cast<unsigned char>(text_[pos_]) == 126) {
      ++pos_;
      groups = 6;
    }
    std::uint64_t n = 0;
    for (int i = 0; i < groups; ++i) n = (n << 6) | static_cast<std::uint64_t>(next_group());
    if ((groups == 3 && n < 63) || (groups == 6 && n < 258048))
      throw ParseError("non-canonical vertex count encoding", start);
    return static_cast<std::size_t>(n);
  }

 private:
  std::string_view text_;
  std::size_t pos_;
};

inline std::string_view strip_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  return line;
}

inline void check_cap(std::size_t n, std::size_t cap, std::size_t offset) {
  if (cap > kMaxVertices) cap = kMaxVertices;
  if (n > cap)
    throw CapacityError("graph has " + std::to_string(n) + " vertices, cap is " + std::to_string(cap) +
                        " (byte " + std::to_string(offset) + ")");
}

inline void write_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
}

}  // namespace detail

inline Graph parse_graph6(std::string_view line, std::size_t cap = kDefaultVertexCap) {
  line = detail::strip_line(line);
  std::size_t pos = 0;
  if (line.substr(0, 10) == ">>graph6<<") pos = 10;
  detail::SixBitReader in(line, pos);
  std::size_t header = in.pos();
  std::size_t n = in.read_size();
  detail::check_cap(n, cap, header);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (line.size() - in.pos() != groups)
    throw ParseError("expected " + std::to_string(groups) + " adjacency bytes, found " +
                         std::to_string(line.size() - in.pos()),
                     in.pos());
  Graph g(n);
  std::size_t bit = 0;
  int group = 0;
  std::size_t group_pos = in.pos();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) {
        group_pos = in.pos();
        group = in.next_group();
      }
      if (group & (1 << (5 - bit % 6))) g.add_edge(i, j);
    }
  if (bit % 6 != 0 && (group & ((1 << (6 - bit % 6)) - 1)) != 0)
    throw ParseError("non-zero padding bits", group_pos);
  return g;
}

inline Graph parse_sparse6(std::string_view line, std::size_t cap = kDefaultVertexCap) {
  line = detail::strip_line(line);
  std::size_t pos = 0;
  if (line.substr(0, 11) == ">>sparse6<<") pos = 11;
  if (pos >= line.size() || line[pos] != ':') throw ParseError("sparse6 line must start with ':'", pos);
  detail::SixBitReader in(line, pos + 1);
  std::size_t header = in.pos();
  std::size_t n = in.read_size();
  detail::check_cap(n, cap, header);

  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;

  // Unpack the remaining groups into a bit stream.
  std::vector<std::uint8_t> bits;
  std::vector<std::size_t> offsets;
  while (!in.at_end()) {
    std::size_t at = in.pos();
    int grp = in.next_group();
    for (int s = 5; s >= 0; --s) {
      bits.push_back(static_cast<std::uint8_t>((grp >> s) & 1));
      offsets.push_back(at);
    }
  }
  Graph g(n);
  std::size_t cursor = 0;
  std::size_t v = 0;
  while (cursor + 1 + static_cast<std::size_t>(k) <= bits.size()) {
    std::size_t at = offsets[cursor];
    int b = bits[cursor++];
    std::size_t x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | bits[cursor++];
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw ParseError("sparse6 loop on a simple graph", at);
      g.add_edge(x, v);
    }
  }
  return g;
}

/// Dispatches on the leading ':' (sparse6) or not (graph6).
inline Graph parse_graph_line(std::string_view line, std::size_t cap = kDefaultVertexCap) {
  auto s = detail::strip_line(line);
  if (s.substr(0, 11) == ">>sparse6<<" || (!s.empty() && s.front() == ':')) return parse_sparse6(s, cap);
  if (!s.empty() && s.front() == ';') throw ParseError("incremental sparse6 is not supported", 0);
  return parse_graph6(s, cap);
}

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 258047) throw CapacityError("graph too large for this writer");
  std::string out;
  detail::write_size(out, n);
  int group = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

struct GraphRecord {
  std::size_t line_number;  // 1-based position in the input file
  std::string text;          // the graph6/sparse6 line as read
};

/// Non-empty lines of a graph6/sparse6 stream; lines that are only a ">>..."
/// header are skipped.
inline std::vector<GraphRecord> read_graph_lines(std::istream& in) {
  std::vector<GraphRecord> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto s = detail::strip_line(line);
    if (s.empty()) continue;
    if (s == ">>graph6<<" || s == ">>sparse6<<") continue;
    out.push_back({no, std::string(s)});
  }
  return out;
}

inline std::vector<GraphRecord> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph_lines(in);
}

}  // namespace uvt

#endif  // UVT_GRAPH6_HPP
