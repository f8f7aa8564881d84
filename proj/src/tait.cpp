#include "linkdet/tait.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace linkdet {

namespace {

// coefficient of x^i y^j
using TuttePoly = std::map<std::pair<int, int>, long long>;

int component_count(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps;
}

TuttePoly tutte_rec(int n, std::vector<std::pair<int, int>> edges) {
  if (edges.empty()) return {{{0, 0}, 1}};
  auto [a, b] = edges.back();
  edges.pop_back();
  if (a == b) {
    TuttePoly t = tutte_rec(n, std::move(edges));
    TuttePoly out;
    for (auto& [e, c] : t) out[{e.first, e.second + 1}] += c;
    return out;
  }
  auto with = edges;
  with.emplace_back(a, b);
  bool bridge = component_count(n, edges) != component_count(n, with);
  // contraction: merge b into a
  std::vector<std::pair<int, int>> contracted = edges;
  for (auto& [x, y] : contracted) {
    if (x == b) x = a;
    if (y == b) y = a;
  }
  TuttePoly tc = tutte_rec(n, std::move(contracted));
  if (bridge) {
    TuttePoly out;
    for (auto& [e, c] : tc) out[{e.first + 1, e.second}] += c;
    return out;
  }
  TuttePoly td = tutte_rec(n, std::move(edges));
  for (auto& [e, c] : tc) td[e] += c;
  return td;
}

std::string serialize(const TuttePoly& t) {
  std::ostringstream o;
  for (auto& [e, c] : t)
    if (c) o << e.first << ',' << e.second << ':' << c << ';';
  return o.str();
}

std::string swap_vars(const TuttePoly& t) {
  TuttePoly s;
  for (auto& [e, c] : t) s[{e.second, e.first}] = c;
  return serialize(s);
}

}  // namespace

std::pair<TaitGraph, TaitGraph> tait_graphs(const LinkDiagram& d) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return {TaitGraph{1, {}}, TaitGraph{1, {}}};
  CombMap m = CombMap::of(d);
  std::vector<int> face = m.face_ids();
  int n_faces = static_cast<int>(m.face_count());

  // checkerboard coloring: faces meeting at consecutive slots of a crossing
  // lie on opposite sides of an arc
  std::vector<int> color(n_faces, -1);
  std::vector<std::vector<int>> adj(n_faces);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      int f = face[4 * c + s], g = face[4 * c + (s + 1) % 4];
      adj[f].push_back(g);
      adj[g].push_back(f);
    }
  std::vector<int> queue{0};
  color[0] = 0;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int f = queue[q];
    for (int g : adj[f]) {
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        queue.push_back(g);
      } else if (color[g] == color[f]) {
        throw std::logic_error("diagram is not checkerboard colorable");
      }
    }
  }

  TaitGraph graphs[2];
  int index[2] = {0, 0};
  std::vector<int> vid(n_faces, -1);
  for (int f = 0; f < n_faces; ++f) vid[f] = index[color[f]]++;
  graphs[0].n_vertices = index[0];
  graphs[1].n_vertices = index[1];
  // opposite quadrants share a color; each crossing contributes one edge to
  // each color's graph
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 2; ++s) {
      int f = face[4 * c + s], g = face[4 * c + s + 2];
      graphs[color[f]].edges.emplace_back(vid[f], vid[g]);
    }
  return {graphs[0], graphs[1]};
}

std::string tutte_polynomial(const TaitGraph& g) {
  if (component_count(g.n_vertices, g.edges) != 1)
    throw std::logic_error("tait graph is disconnected");
  return serialize(tutte_rec(g.n_vertices, g.edges));
}

std::string folded_tutte(const LinkDiagram& d) {
  auto [g0, g1] = tait_graphs(d);
  std::string a = tutte_polynomial(g0);
  std::string b = tutte_polynomial(g1);
  return std::min(a, b);
}

}  // namespace linkdet
