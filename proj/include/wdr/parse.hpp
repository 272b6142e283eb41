#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "wdr/cayley.hpp"

namespace wdr {

namespace detail {

inline std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw input_error("");
    return v;
  } catch (...) {
    throw input_error("expected an integer for " + what + ", got '" + s + "'");
  }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace detail

/// Parses `cay:zn:<n>:<c1>,<c2>,...` or `cay:prod:<q>x<m>:<a.b>,<a.b>,...`.
inline CayleySpec parse_cayley_spec(const std::string& text) {
  const std::string s = detail::strip(text);
  if (s.rfind("cay:", 0) != 0)
    throw input_error("Cayley spec must start with 'cay:'");
  const auto parts = detail::split(s, ':');
  if (parts.size() != 4)
    throw input_error("Cayley spec needs the form cay:zn:<n>:<set> or cay:prod:<q>x<m>:<set>");
  if (parts[1] == "zn") {
    const int n = detail::parse_int(parts[2], "group order");
    std::vector<int> set;
    for (const auto& item : detail::split(parts[3], ','))
      set.push_back(detail::parse_int(detail::strip(item), "connection element"));
    return cyclic_spec(n, std::move(set));
  }
  if (parts[1] == "prod") {
    const auto dims = detail::split(parts[2], 'x');
    if (dims.size() != 2) throw input_error("product group needs '<q>x<m>'");
    const int q = detail::parse_int(dims[0], "q");
    const int m = detail::parse_int(dims[1], "m");
    std::vector<std::pair<int, int>> set;
    for (const auto& item : detail::split(parts[3], ',')) {
      const auto ab = detail::split(detail::strip(item), '.');
      if (ab.size() != 2)
        throw input_error("product connection element needs '<a>.<b>', got '" + item + "'");
      set.emplace_back(detail::parse_int(ab[0], "a"), detail::parse_int(ab[1], "b"));
    }
    return product_spec(q, m, std::move(set));
  }
  throw input_error("unknown Cayley group kind '" + parts[1] + "'");
}

/// Parses either a Cayley spec string or an edge list (`n <order>` header,
/// then one `<u> <v>` arc per line; `#` starts a comment).
inline Digraph parse_input(const std::string& text, bool require_not_undirected = true) {
  const std::string whole = detail::strip(text);
  if (whole.rfind("cay:", 0) == 0) {
    const Digraph d = parse_cayley_spec(whole).build();
    if (require_not_undirected && d.is_undirected())
      throw input_error("digraph is undirected: no arc lacks its reverse");
    return d;
  }

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int order = -1;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::strip(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (order < 0) {
      std::string tag, extra;
      int n = 0;
      ls >> tag;
      if (tag != "n" || !(ls >> n) || (ls >> extra))
        throw input_error("line " + std::to_string(lineno) +
                          ": expected header 'n <order>', got '" + line + "'");
      order = n;
      continue;
    }
    int u = 0, v = 0;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest))
      throw input_error("line " + std::to_string(lineno) +
                        ": expected an arc '<u> <v>', got '" + line + "'");
    arcs.emplace_back(u, v);
  }
  if (order < 0) throw input_error("missing header line 'n <order>'");
  return build_digraph(order, std::span<const Arc>(arcs), require_not_undirected);
}

}  // namespace wdr
