#pragma once

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trimlat/bitlattice.hpp"
#include "trimlat/bounds.hpp"
#include "trimlat/counting.hpp"
#include "trimlat/graphs.hpp"
#include "trimlat/oracle.hpp"
#include "trimlat/solvers.hpp"
#include "trimlat/transforms.hpp"

namespace trimlat::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads either DIMACS-like input ("p edge n m" header plus "e u v" lines)
/// or a bare edge list of "u v" lines; vertices are 1-indexed in both.
/// Duplicate edges collapse; self-loops and out-of-range endpoints are
/// rejected with the offending line number.
inline Graph parse_graph(std::istream& in) {
  int n = -1;
  bool header = false;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int line_no = 0;
  int max_seen = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;  // blank
    if (first == "c") continue;    // comment

    if (first == "p") {
      if (header) throw ParseError(line_no, "duplicate problem header");
      std::string kind;
      long m = 0;
      if (!(ss >> kind >> n >> m) || kind != "edge")
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      if (n < 1 || n > kMaxUniverse)
        throw ParseError(line_no, "vertex count out of range [1, 32]");
      header = true;
      continue;
    }

    int u = 0, v = 0;
    if (first == "e") {
      if (!header) throw ParseError(line_no, "'e' line before 'p edge' header");
      if (!(ss >> u >> v)) throw ParseError(line_no, "expected 'e <u> <v>'");
    } else {
      if (header) throw ParseError(line_no, "expected 'e <u> <v>'");
      std::istringstream pair_ss(line);
      if (!(pair_ss >> u >> v))
        throw ParseError(line_no, "expected an edge as '<u> <v>'");
      std::string extra;
      if (pair_ss >> extra) throw ParseError(line_no, "trailing tokens");
    }
    if (u < 1 || v < 1) throw ParseError(line_no, "vertices are 1-indexed");
    if (header && (u > n || v > n))
      throw ParseError(line_no, "vertex index exceeds declared count");
    if (u > kMaxUniverse || v > kMaxUniverse)
      throw ParseError(line_no, "vertex index out of range [1, 32]");
    if (u == v) throw ParseError(line_no, "self-loops are not allowed");
    edges.emplace_back(u - 1, v - 1);
    max_seen = std::max({max_seen, u, v});
  }
  if (!header) {
    if (max_seen == 0) throw ParseError(line_no, "no header and no edges");
    n = max_seen;
  }
  return Graph(n, edges);
}

inline Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in);
}

// ---------------------------------------------------------------------------
// record formatting: one record per line, space-separated key=value pairs.
// Masks render as sorted 1-indexed vertex lists in braces, e.g. {1,3}.

inline std::string format_mask(Mask x) {
  std::string out = "{";
  bool first = true;
  for (int e : mask_elements(x)) {
    if (!first) out += ',';
    out += std::to_string(e + 1);
    first = false;
  }
  out += '}';
  return out;
}

inline Mask parse_mask_text(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw std::invalid_argument("mask must look like {1,3}: " + text);
  Mask x = 0;
  std::string body = text.substr(1, text.size() - 2);
  if (body.empty()) return x;
  std::istringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size() || v < 1 || v > kMaxUniverse)
      throw std::invalid_argument("bad mask element: " + item);
    x |= element_bit(v - 1);
  }
  return x;
}

using Record = std::vector<std::pair<std::string, std::string>>;

inline std::string format_record(const Record& record) {
  std::string out;
  for (const auto& [key, value] : record) {
    if (!out.empty()) out += ' ';
    out += key + "=" + value;
  }
  return out;
}

inline Record parse_record(const std::string& line) {
  Record record;
  std::istringstream ss(line);
  std::string token;
  while (ss >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("record token without key=value: " + token);
    record.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return record;
}

inline std::string format_real(double x) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4) << x;
  return ss.str();
}

/// Bound bases print rounded upward so the four printed decimals are still
/// a valid per-vertex upper bound.
inline std::string format_base(double x) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4) << std::ceil(x * 10000.0) / 10000.0;
  return ss.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace trimlat::cli
