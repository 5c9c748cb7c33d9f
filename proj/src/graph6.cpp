#include "walkcanon/graph6.hpp"

#include <cctype>
#include <string>

namespace walkcanon {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeaderPrefix = ">>graph6<<";

// Strips trailing CR/LF/whitespace; graph6 files conventionally end in '\n'.
std::string_view trim_right(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int char_value(std::string_view s, std::size_t i) {
  if (i >= s.size()) throw parse_error("truncated graph6 data", s.size());
  const char c = s[i];
  if (c < 63 || c > 126)
    throw parse_error("byte outside the graph6 alphabet", i);
  return c - kBias;
}

}  // namespace

Graph from_graph6(std::string_view s) {
  std::size_t pos = 0;
  if (s.substr(0, kHeaderPrefix.size()) == kHeaderPrefix)
    pos = kHeaderPrefix.size();
  s = trim_right(s);
  if (pos >= s.size()) throw parse_error("empty graph6 input", pos);

  long long n = 0;
  if (s[pos] != '~') {
    n = char_value(s, pos);
    pos += 1;
  } else if (pos + 1 < s.size() && s[pos + 1] == '~') {
    // 8-byte header form declares n > 258047; always beyond our cap.
    throw parse_error("graph6 order exceeds the supported 65535 cap", pos);
  } else {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | char_value(s, pos + i);
    if (n > kGraph6MaxOrder)
      throw parse_error("graph6 order exceeds the supported 65535 cap", pos);
    pos += 4;
  }

  Graph g(static_cast<int>(n));
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nchars = (nbits + 5) / 6;
  if (s.size() - pos < nchars)
    throw parse_error("graph6 body shorter than the declared order needs",
                      s.size());
  if (s.size() - pos > nchars)
    throw parse_error("trailing data after graph6 body", pos + nchars);

  std::size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      const int v = char_value(s, pos + bit / 6);
      if ((v >> (5 - bit % 6)) & 1) g.add_edge(row, col);
    }
  }
  for (; bit < nchars * 6; ++bit) {
    const int v = char_value(s, pos + bit / 6);
    if ((v >> (5 - bit % 6)) & 1)
      throw parse_error("nonzero padding bit in graph6 body", pos + bit / 6);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw std::length_error("graph6 codec caps the order at 65535");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }

  int acc = 0;
  int have = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++have == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        have = 0;
      }
    }
  }
  if (have > 0) out.push_back(static_cast<char>((acc << (6 - have)) + kBias));
  return out;
}

namespace {

void skip_space(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
    ++pos;
}

long long read_int(std::string_view s, std::size_t& pos, const char* what) {
  skip_space(s, pos);
  const std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == start) throw parse_error(std::string("expected ") + what, start);
  long long value = 0;
  for (std::size_t i = start; i < pos; ++i) {
    value = value * 10 + (s[i] - '0');
    if (value > kGraph6MaxOrder)  // ids share the codec's order cap
      throw parse_error(std::string(what) + " too large", start);
  }
  return value;
}

}  // namespace

Graph from_adjacency_list(std::string_view s) {
  std::size_t pos = 0;
  const long long n = read_int(s, pos, "vertex count");
  Graph g(static_cast<int>(n));
  for (;;) {
    skip_space(s, pos);
    if (pos >= s.size()) break;
    const std::size_t at = pos;
    const long long u = read_int(s, pos, "edge endpoint");
    const long long v = read_int(s, pos, "edge endpoint");
    try {
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    } catch (const std::domain_error& e) {
      throw parse_error(e.what(), at);
    }
  }
  return g;
}

std::string to_adjacency_list(const Graph& g) {
  std::string out = std::to_string(g.order());
  out.push_back('\n');
  for (int x = 0; x < g.order(); ++x)
    for (int y : g.neighbors(x))
      if (x < y) {
        out += std::to_string(x);
        out.push_back(' ');
        out += std::to_string(y);
        out.push_back('\n');
      }
  return out;
}

Graph parse_graph_auto(std::string_view s) {
  std::size_t pos = 0;
  skip_space(s, pos);
  if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    return from_adjacency_list(s);
  return from_graph6(s.substr(pos));
}

}  // namespace walkcanon
