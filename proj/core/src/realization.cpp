#include "degset/realization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "degset/graphicality.hpp"

namespace degset {

Graph realize(const DegreeSequence& s) {
  if (!is_graphic_full(s))
    throw NotGraphic("sequence " + s.to_text() + " is not graphic");
  const auto target = s.expand();
  const int p = s.length();
  std::vector<int> remaining(target.begin(), target.end());
  Graph g(p);

  std::vector<int> order(static_cast<std::size_t>(p));
  std::iota(order.begin(), order.end(), 0);
  while (true) {
    // largest remaining degree, smallest index on ties
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int ra = remaining[static_cast<std::size_t>(a)];
      int rb = remaining[static_cast<std::size_t>(b)];
      return ra != rb ? ra > rb : a < b;
    });
    int v = order.front();
    int need = remaining[static_cast<std::size_t>(v)];
    if (need == 0) break;
    remaining[static_cast<std::size_t>(v)] = 0;
    for (int i = 1; i <= need; ++i) {
      int u = order[static_cast<std::size_t>(i)];
      if (remaining[static_cast<std::size_t>(u)] == 0)
        throw std::logic_error("realization ran out of targets");
      g.add_edge(v, u);
      --remaining[static_cast<std::size_t>(u)];
    }
  }
  return g;
}

Graph split_vertex(const Graph& g, int v, const std::vector<int>& parts) {
  if (v < 0 || v >= g.vertex_count())
    throw IndexOutOfRange("vertex out of range");
  if (parts.empty()) throw BadPartition("partition must be nonempty");
  std::int64_t total = 0;
  for (int part : parts) {
    if (part < 1) throw BadPartition("partition parts must be positive");
    total += part;
  }
  const auto nbrs = g.neighbors(v);
  if (total != static_cast<std::int64_t>(nbrs.size()))
    throw BadPartition("parts sum to " + std::to_string(total) +
                       ", degree is " + std::to_string(nbrs.size()));

  const int r = static_cast<int>(parts.size());
  Graph out(g.vertex_count() - 1 + r);
  auto relabel = [v](int u) { return u < v ? u : u - 1; };
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) out.add_edge(relabel(a), relabel(b));

  // the i-th new vertex takes the next parts[i] neighbors in sorted order
  std::size_t pos = 0;
  for (int i = 0; i < r; ++i) {
    int fresh = g.vertex_count() - 1 + i;
    for (int j = 0; j < parts[static_cast<std::size_t>(i)]; ++j)
      out.add_edge(fresh, relabel(nbrs[pos++]));
  }
  return out;
}

Graph reduce_odd_pair(const Graph& g, int x, int y) {
  if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count() ||
      x == y)
    throw IndexOutOfRange("bad vertex pair");
  const int d = g.degree(x);
  if (g.degree(y) != d)
    throw PreconditionViolated("x and y must have equal degree");
  if (d % 2 == 0 || d < 3)
    throw PreconditionViolated("shared degree must be odd and at least 3");
  if (g.has_edge(x, y))
    throw PreconditionViolated("x and y must be nonadjacent");

  auto vs = g.neighbors(x);
  auto ws = g.neighbors(y);
  // representatives v_1 != w_1; rotate one list if the heads collide
  if (vs.front() == ws.front()) std::rotate(ws.begin(), ws.begin() + 1, ws.end());
  if (vs.front() == ws.front())
    throw PreconditionViolated("no distinct neighbor representatives");

  const int alpha = (d - 1) / 2;
  const int survivors = g.vertex_count() - 2;
  Graph out(survivors + 1 + 2 * alpha);
  auto relabel = [&](int u) {
    return u - (u > x ? 1 : 0) - (u > y ? 1 : 0);
  };
  for (const auto& [a, b] : g.edges())
    if (a != x && a != y && b != x && b != y)
      out.add_edge(relabel(a), relabel(b));

  const int z = survivors;
  auto a_vertex = [&](int i) { return survivors + i; };           // a_1..a_alpha
  auto b_vertex = [&](int i) { return survivors + alpha + i; };   // b_1..b_alpha

  out.add_edge(z, relabel(vs[0]));
  out.add_edge(z, relabel(ws[0]));
  for (int i = 1; i <= alpha; ++i) {
    out.add_edge(a_vertex(i), relabel(vs[static_cast<std::size_t>(2 * i - 1)]));
    out.add_edge(a_vertex(i), relabel(vs[static_cast<std::size_t>(2 * i)]));
    out.add_edge(b_vertex(i), relabel(ws[static_cast<std::size_t>(2 * i - 1)]));
    out.add_edge(b_vertex(i), relabel(ws[static_cast<std::size_t>(2 * i)]));
  }
  return out;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges())
    out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace degset
