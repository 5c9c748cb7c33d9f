#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "walkcanon/graph.hpp"

namespace walkcanon {

// Text codec failure; offset is the byte position in the input buffer.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Orders this codec accepts/produces.  Keeps headers at most 4 bytes; inputs
// declaring more vertices are rejected rather than truncated.
inline constexpr int kGraph6MaxOrder = 65535;

// graph6: printable chars 63..126, 6 payload bits each (value = char - 63).
// Header N(n) is one char for n <= 62, else '~' + three chars holding n in 18
// big-endian bits.  Body R(x) is the upper triangle read column by column
// (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed MSB-first and zero-padded
// to a multiple of 6 bits.  An optional ">>graph6<<" prefix is accepted.
Graph from_graph6(std::string_view s);
std::string to_graph6(const Graph& g);

// Plain text: first line the vertex count, then one "u v" pair per line.
// Repeated pairs are set-idempotent; self-loops and out-of-range ids are
// rejected.
Graph from_adjacency_list(std::string_view s);
std::string to_adjacency_list(const Graph& g);

// Sniffs the two formats: a leading digit means adjacency list (graph6 bytes
// all sit above ASCII '9'), anything else is parsed as graph6.
Graph parse_graph_auto(std::string_view s);

}  // namespace walkcanon
