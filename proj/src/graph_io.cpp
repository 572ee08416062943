#include <cliquepf/errors.hpp>
#include <cliquepf/graph_io.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cliquepf {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Reads one positive integer token; rejects signs, fractions and trailing junk.
long read_index(std::istringstream& iss, std::size_t line, const char* what) {
  std::string tok;
  if (!(iss >> tok)) fail(line, std::string("missing ") + what);
  if (tok.find_first_not_of("0123456789") != std::string::npos) fail(line, std::string("bad ") + what + " '" + tok + "'");
  try {
    return std::stol(tok);
  } catch (const std::exception&) {
    fail(line, std::string("bad ") + what + " '" + tok + "'");
  }
}

void expect_end(std::istringstream& iss, std::size_t line) {
  std::string extra;
  if (iss >> extra) fail(line, "unexpected token '" + extra + "'");
}

Edge make_edge(long u, long v, long n, std::size_t line) {
  if (u < 1 || v < 1 || u > n || v > n)
    fail(line, "endpoint out of range [1," + std::to_string(n) + "]: " + std::to_string(u) + " " + std::to_string(v));
  return {static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)};
}

Graph build(long n, const std::vector<Edge>& edges) { return Graph(static_cast<std::size_t>(n), edges); }

bool is_comment(const std::string& line, char marker) { return line.empty() || line[0] == marker; }

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    std::istringstream iss(s);
    if (n < 0) {
      std::string key;
      iss >> key;
      if (key != "n") fail(line, "expected header 'n <count>'");
      n = read_index(iss, line, "vertex count");
      if (n < 1) fail(line, "vertex count must be positive");
      expect_end(iss, line);
      continue;
    }
    const long u = read_index(iss, line, "endpoint");
    const long v = read_index(iss, line, "endpoint");
    expect_end(iss, line);
    edges.push_back(make_edge(u, v, n, line));
  }
  if (n < 0) throw ParseError("missing header 'n <count>'");
  return build(n, edges);
}

Graph parse_dimacs(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  long n = -1;
  long declared = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (is_comment(s, 'c')) continue;
    std::istringstream iss(s);
    std::string kind;
    iss >> kind;
    if (kind == "p") {
      if (n >= 0) fail(line, "second 'p' header");
      std::string fmt;
      iss >> fmt;
      if (fmt != "edge" && fmt != "edges" && fmt != "col") fail(line, "expected 'p edge <n> <e>'");
      n = read_index(iss, line, "vertex count");
      declared = read_index(iss, line, "edge count");
      if (n < 1) fail(line, "vertex count must be positive");
      expect_end(iss, line);
    } else if (kind == "e") {
      if (n < 0) fail(line, "edge before 'p' header");
      const long u = read_index(iss, line, "endpoint");
      const long v = read_index(iss, line, "endpoint");
      expect_end(iss, line);
      edges.push_back(make_edge(u, v, n, line));
    } else {
      fail(line, "unknown line type '" + kind + "'");
    }
  }
  if (n < 0) throw ParseError("missing 'p edge' header");
  if (static_cast<long>(edges.size()) != declared)
    throw ParseError("header declares " + std::to_string(declared) + " edges, found " + std::to_string(edges.size()));
  return build(n, edges);
}

Graph parse_graph(std::istream& in, GraphFormat* detected) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream scan(text);
  std::string raw;
  GraphFormat format = GraphFormat::edge_list;
  while (std::getline(scan, raw)) {
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == 'c') continue;
    if (s[0] == 'p') format = GraphFormat::dimacs;
    break;
  }
  if (detected) *detected = format;
  std::istringstream body(text);
  return format == GraphFormat::dimacs ? parse_dimacs(body) : parse_edge_list(body);
}

Graph read_graph_file(const std::string& path, GraphFormat* detected) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_graph(in, detected);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace cliquepf
