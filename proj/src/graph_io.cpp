#include "asc/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <sstream>

#include "asc/errors.hpp"

namespace asc {

namespace {

constexpr int kBias = 63;

bool is_space(char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) base = header.size();
  std::size_t end = text.size();
  while (end > base && is_space(text[end - 1])) --end;
  std::string_view body = text.substr(base, end - base);

  if (body.empty()) throw ParseError("graph6: empty input", base);
  const auto first = static_cast<unsigned char>(body[0]);
  if (first == 126) throw ParseError("graph6: orders above 62 are not supported", base);
  if (first < kBias || first > 126) throw ParseError("graph6: order byte out of range", base);

  const std::size_t n = first - kBias;
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (body.size() - 1 != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for order " +
                         std::to_string(n) + ", found " + std::to_string(body.size() - 1),
                     base + std::min(body.size(), expected + 1));

  Graph g(n);
  std::size_t k = 0;
  Vertex row = 0, col = 1;  // upper triangle, column by column: (0,1), (0,2), (1,2), ...
  for (std::size_t i = 1; i < body.size(); ++i) {
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < kBias || c > 126) throw ParseError("graph6: byte out of printable range", base + i);
    const int value = c - kBias;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (value >> b) & 1;
      if (k >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bits", base + i);
        continue;
      }
      if (set) g.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order)
    throw DomainError("graph6 output is limited to order 62; use the edge-list format");
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<long long> numbers;
  std::vector<std::size_t> lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const char* p = line.data();
    const char* e = line.data() + line.size();
    while (p < e) {
      while (p < e && is_space(*p)) ++p;
      if (p == e) break;
      long long value = 0;
      auto [q, ec] = std::from_chars(p, e, value);
      if (ec != std::errc{} || (q < e && !is_space(*q)))
        throw ParseError("edge list: expected an integer on line " + std::to_string(lineno),
                         lineno);
      numbers.push_back(value);
      lines.push_back(lineno);
      p = q;
    }
  }
  if (numbers.size() < 2) throw ParseError("edge list: missing \"n m\" header", lineno);
  const long long n = numbers[0], m = numbers[1];
  if (n < 0 || m < 0) throw ParseError("edge list: negative header value", lines[0]);
  if (numbers.size() != 2 + 2 * static_cast<std::size_t>(m))
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(numbers.size() - 2) + " endpoint values",
                     lines.back());
  Graph g(static_cast<std::size_t>(n));
  for (std::size_t i = 2; i < numbers.size(); i += 2) {
    const long long u = numbers[i], v = numbers[i + 1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: endpoint out of range", lines[i]);
    if (u == v) throw ParseError("edge list: self-loop", lines[i]);
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError("edge list: duplicate edge", lines[i]);
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string content_hash(const Graph& g) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      h ^= (value >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(g.order());
  for (auto [u, v] : g.edges()) mix((std::uint64_t{u} << 32) | v);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace asc
