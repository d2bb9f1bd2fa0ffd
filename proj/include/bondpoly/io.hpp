#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "bondpoly/graph.hpp"

namespace bondpoly {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Graph file grammar (UTF-8, line oriented):
//   # comment
//   v <count>            vertices are 0..count-1
//   e <u> <v> <weight>   weight is an integer or p/q
//   n <u> <v>            augmented non-edge
// Line order after `v` is free.
inline Graph parse_graph(std::istream& in) {
  Graph g;
  bool have_v = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    try {
      if (tok == "v") {
        int count;
        if (!(ls >> count) || count < 0) throw ParseError(lineno, "bad vertex count");
        if (have_v) throw ParseError(lineno, "duplicate v line");
        have_v = true;
        for (int i = 0; i < count; ++i) g.add_vertex(i);
      } else if (tok == "e") {
        if (!have_v) throw ParseError(lineno, "e before v");
        int u, v;
        std::string w;
        if (!(ls >> u >> v >> w)) throw ParseError(lineno, "bad edge line");
        g.add_edge(u, v, parse_rational(w));
      } else if (tok == "n") {
        if (!have_v) throw ParseError(lineno, "n before v");
        int u, v;
        if (!(ls >> u >> v)) throw ParseError(lineno, "bad non-edge line");
        g.add_non_edge(u, v);
      } else {
        throw ParseError(lineno, "unknown directive '" + tok + "'");
      }
    } catch (const GraphError& e) {
      throw ParseError(lineno, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!have_v) throw ParseError(lineno, "missing v line");
  return g;
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

// Canonical renderer; parse(render(g)) == g when vertices are 0..count-1.
inline std::string render_graph(const Graph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << "\n";
  for (const auto& [p, w] : g.edges())
    out << "e " << p.first << " " << p.second << " " << rat_str(w) << "\n";
  for (const auto& p : g.non_edges()) out << "n " << p.first << " " << p.second << "\n";
  return out.str();
}

}  // namespace bondpoly
