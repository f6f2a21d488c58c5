#include <istream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cec/errors.hpp"
#include "cec/graph.hpp"

namespace cec {
namespace {

using Reason = ParseError::Reason;

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n\v\f") == std::string::npos;
}

bool is_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t");
  return pos != std::string::npos && line[pos] == '#';
}

// Reads exactly two integers from the line; anything else is a syntax error.
std::pair<long long, long long> read_pair(const std::string& line, std::size_t lineno) {
  std::istringstream ss(line);
  long long a = 0, b = 0;
  if (!(ss >> a >> b)) throw ParseError(Reason::syntax, lineno, "expected two integers");
  std::string rest;
  if (ss >> rest) throw ParseError(Reason::syntax, lineno, "unexpected trailing token '" + rest + "'");
  return {a, b};
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line) || is_comment(line)) continue;
    auto [a, b] = read_pair(line, lineno);
    if (n < 0) {
      if (a < 1 || a > std::numeric_limits<int>::max()) {
        throw ParseError(Reason::syntax, lineno, "vertex count must be a positive integer");
      }
      if (b < 0) throw ParseError(Reason::syntax, lineno, "edge count must be non-negative");
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(Reason::edge_count, lineno, "more than the declared " + std::to_string(m) + " edges");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw ParseError(Reason::vertex_out_of_range, lineno,
                       "vertex out of range [0," + std::to_string(n) + ")");
    }
    if (a == b) throw ParseError(Reason::loop_edge, lineno, "loop edge at vertex " + std::to_string(a));
    Edge e{static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b))};
    if (!seen.insert(e).second) {
      throw ParseError(Reason::duplicate_edge, lineno,
                       "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(Reason::syntax, lineno + 1, "missing header line 'n m'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(Reason::edge_count, lineno + 1,
                     "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace cec
