#pragma once

// Text formats: the line-oriented .sgf semi-graph format and graph6.
//
// .sgf grammar (LF line endings, ASCII decimal):
//   # comment
//   n <count>
//   e <u> <v>        (u < v on emit)
//   s <u>
//   p <name> <u>     (port label; u must carry a semi-edge)
// emit_sgf writes n, then edges ascending, then semi-edges ascending, then
// ports in stored order.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "snarklab/core.hpp"

namespace snarklab {

class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what)
      : GraphError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline std::string emit_sgf(const SemiGraph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.elements()) {
    if (e.is_semi())
      out += "s " + std::to_string(e.u) + "\n";
    else
      out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  for (const auto& p : g.ports()) out += "p " + p.name + " " + std::to_string(p.vertex) + "\n";
  return out;
}

namespace detail {

inline int parse_index(const std::string& tok, int line) {
  if (tok.empty() || tok.size() > 9) throw ParseError(line, "bad integer '" + tok + "'");
  for (char c : tok)
    if (c < '0' || c > '9') throw ParseError(line, "bad integer '" + tok + "'");
  return std::stoi(tok);
}

inline std::vector<std::string> split_spaces(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

inline SemiGraph parse_sgf(std::string_view text) {
  std::optional<SemiGraphBuilder> b;
  std::vector<std::pair<PortLabel, int>> pending_ports;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') throw ParseError(line_no, "CR line ending");
    if (line.empty() || line.front() == '#') continue;
    auto tok = detail::split_spaces(line);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    try {
      if (kind == "n") {
        if (tok.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
        if (b) throw ParseError(line_no, "repeated 'n' line");
        b.emplace(detail::parse_index(tok[1], line_no));
        continue;
      }
      if (!b) throw ParseError(line_no, "'" + kind + "' before 'n' line");
      if (kind == "e") {
        if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
        b->add_edge(detail::parse_index(tok[1], line_no), detail::parse_index(tok[2], line_no));
      } else if (kind == "s") {
        if (tok.size() != 2) throw ParseError(line_no, "expected 's <u>'");
        b->add_semi_edge(detail::parse_index(tok[1], line_no));
      } else if (kind == "p") {
        if (tok.size() != 3) throw ParseError(line_no, "expected 'p <name> <u>'");
        pending_ports.push_back({PortLabel{tok[1], detail::parse_index(tok[2], line_no)}, line_no});
      } else {
        throw ParseError(line_no, "unknown record '" + kind + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const GraphError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!b) throw ParseError(0, "missing 'n' line");
  for (auto& [port, line] : pending_ports) {
    try {
      b->set_port(port.name, port.vertex);
    } catch (const GraphError& e) {
      throw ParseError(line, e.what());
    }
  }
  return b->build();
}

/// graph6 encoding (McKay). Semi-edges are not representable.
inline std::string emit_graph6(const SemiGraph& g) {
  if (!g.is_graph()) throw GraphError("graph6 cannot encode semi-edges");
  const long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline SemiGraph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.find('\n') != std::string_view::npos) throw ParseError(0, "graph6: more than one graph in input");
  std::size_t pos = 0;
  auto next6 = [&]() -> int {
    if (pos >= text.size()) throw ParseError(0, "graph6: truncated input");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw ParseError(0, "graph6: byte out of range at offset " + std::to_string(pos - 1));
    return c - 63;
  };
  long n = 0;
  if (text.empty()) throw ParseError(0, "graph6: empty input");
  if (text[0] != 126) {
    n = next6();
  } else if (text.size() > 1 && text[1] != 126) {
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | next6();
  } else {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | next6();
  }
  SemiGraphBuilder b(static_cast<int>(n));
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next6();
        bits = 6;
      }
      --bits;
      if ((acc >> bits) & 1) b.add_edge(i, j);
    }
  }
  if (pos != text.size()) throw ParseError(0, "graph6: trailing bytes");
  return b.build();
}

}  // namespace snarklab
