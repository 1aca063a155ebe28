#ifndef UVT_NAMED_GRAPH_HPP
#define UVT_NAMED_GRAPH_HPP

// Graph descriptions accepted on the command line:
//   petersen | kneser:n:k | johnson:n:k | circulant:n:a,b,.. | cycle:n |
//   complete:n | bipartite:a:b | line:<desc> | complement:<desc> | <graph6/sparse6>

#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uvt/graph.hpp"
#include "uvt/graph6.hpp"

namespace uvt {

namespace detail {

inline int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v < 0) throw std::invalid_argument("bad non-negative integer for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto i = s.find(sep);
    out.push_back(s.substr(0, i));
    if (i == std::string_view::npos) break;
    s.remove_prefix(i + 1);
  }
  return out;
}

}  // namespace detail

inline Graph named_graph(std::string_view desc, std::size_t cap = kDefaultVertexCap) {
  using detail::parse_int;
  auto starts = [&](std::string_view p) { return desc.substr(0, p.size()) == p; };
  if (starts("line:")) return line_graph(named_graph(desc.substr(5), cap));
  if (starts("complement:")) return complement(named_graph(desc.substr(11), cap));
  if (desc == "petersen") return petersen();

  auto parts = detail::split(desc, ':');
  const auto& head = parts.front();
  auto arity = [&](std::size_t k) {
    if (parts.size() != k + 1) throw std::invalid_argument(std::string(head) + " takes " + std::to_string(k) + " argument(s)");
  };
  if (head == "kneser" || head == "johnson") {
    arity(2);
    int n = parse_int(parts[1], "n"), k = parse_int(parts[2], "k");
    return head == "kneser" ? kneser(n, k) : johnson(n, k);
  }
  if (head == "circulant") {
    arity(2);
    int n = parse_int(parts[1], "n");
    std::vector<int> conn;
    for (auto c : detail::split(parts[2], ',')) conn.push_back(parse_int(c, "connection"));
    return circulant(n, conn);
  }
  if (head == "cycle") {
    arity(1);
    return cycle_graph(parse_int(parts[1], "n"));
  }
  if (head == "complete") {
    arity(1);
    return complete_graph(parse_int(parts[1], "n"));
  }
  if (head == "bipartite") {
    arity(2);
    return complete_bipartite(parse_int(parts[1], "a"), parse_int(parts[2], "b"));
  }
  return parse_graph_line(desc, cap);
}

}  // namespace uvt

#endif  // UVT_NAMED_GRAPH_HPP
