#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hx/field.hpp"
#include "hx/hypergraph.hpp"

namespace hx {

struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace detail

// .hg format: optional "vertices: a b c" header, then one hyperedge per
// line as whitespace-separated vertex names.  '#' starts a comment.
inline Hypergraph parse_hypergraph(std::istream& in) {
  VertexTable table;
  bool has_header = false, first = true;
  std::vector<std::pair<int, std::vector<std::string>>> edge_lines;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    if (first && toks[0] == "vertices:") {
      has_header = true;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (table.find(toks[i]) >= 0) throw parse_error(lineno, "duplicate vertex in header: " + toks[i]);
        table.add(toks[i]);
      }
      first = false;
      continue;
    }
    first = false;
    edge_lines.emplace_back(lineno, std::move(toks));
  }
  EdgeSet edges;
  for (auto& [ln, toks] : edge_lines) {
    Hyperedge e;
    for (auto& name : toks) {
      int idx = table.find(name);
      if (idx < 0) {
        if (has_header) throw parse_error(ln, "undeclared vertex: " + name);
        idx = table.add(name);
      }
      e.push_back(idx);
    }
    std::sort(e.begin(), e.end());
    for (size_t i = 1; i < e.size(); ++i)
      if (e[i] == e[i - 1])
        throw parse_error(ln, "duplicate vertex in hyperedge: " + table.name(e[i]));
    edges.insert(std::move(e));
  }
  return Hypergraph(std::move(table), std::move(edges));
}

inline Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

inline void serialize_hypergraph(const Hypergraph& h, std::ostream& out) {
  out << "vertices:";
  for (const auto& n : h.ambient().names()) out << ' ' << n;
  out << '\n';
  for (const auto& e : h.edges()) {
    for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << h.ambient().name(e[i]);
    out << '\n';
  }
}

inline std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  serialize_hypergraph(h, out);
  return out.str();
}

// "num" or "num/den" with arbitrary sign on the numerator.
inline std::pair<long long, long long> parse_fraction(const std::string& tok, int lineno) {
  auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return {std::stoll(tok), 1};
    long long den = std::stoll(tok.substr(slash + 1));
    if (den == 0) throw parse_error(lineno, "zero denominator: " + tok);
    return {std::stoll(tok.substr(0, slash)), den};
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error(lineno, "bad number: " + tok);
  }
}

// Weight file: lines "vertex value", value an integer or a/b rational.
template <class F>
std::map<int, F> parse_weights(std::istream& in, const VertexTable& table) {
  std::map<int, F> w;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw parse_error(lineno, "expected 'vertex value'");
    int v = table.find(toks[0]);
    if (v < 0) throw parse_error(lineno, "unknown vertex: " + toks[0]);
    auto [num, den] = parse_fraction(toks[1], lineno);
    w[v] = F::from_fraction(num, den);
  }
  return w;
}

template <class F>
std::map<int, F> parse_weights(const std::string& text, const VertexTable& table) {
  std::istringstream in(text);
  return parse_weights<F>(in, table);
}

// Partition file: one block per line, whitespace-separated vertex names.
inline std::vector<std::vector<int>> parse_partition(std::istream& in, const VertexTable& table) {
  std::vector<std::vector<int>> blocks;
  std::string line;
  int lineno = 0;
  std::vector<bool> seen(table.size(), false);
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    std::vector<int> block;
    for (auto& name : toks) {
      int v = table.find(name);
      if (v < 0) throw parse_error(lineno, "unknown vertex: " + name);
      if (seen[v]) throw parse_error(lineno, "vertex in two blocks: " + name);
      seen[v] = true;
      block.push_back(v);
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace hx
