#include "linkdet/moves.hpp"

#include <array>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "linkdet/tangle.hpp"

namespace linkdet {

namespace {

// Removes a set of crossings, splicing each removed crossing's under strand
// (slots 0-2) and over strand (slots 1-3) straight through.
LinkDiagram splice_out(const LinkDiagram& d, const std::set<int>& dead) {
  std::map<int, int> parent;
  auto find = [&](int x) {
    if (!parent.count(x)) parent[x] = x;
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int c : dead) {
    unite(d.crossings[c].arcs[0], d.crossings[c].arcs[2]);
    unite(d.crossings[c].arcs[1], d.crossings[c].arcs[3]);
  }
  LinkDiagram out;
  out.n_components = d.n_components;
  for (int c = 0; c < static_cast<int>(d.size()); ++c) {
    if (dead.count(c)) continue;
    PDCrossing x = d.crossings[c];
    for (int& a : x.arcs) a = find(a);
    out.crossings.push_back(x);
    out.writhe += x.sign;
  }
  return out;
}

struct Face {
  std::vector<std::pair<int, int>> darts;  // (crossing, slot) in trace order
};

std::vector<Face> faces_of(const LinkDiagram& d) {
  CombMap m = CombMap::of(d);
  std::vector<int> ids = m.face_ids();
  std::vector<Face> faces(m.face_count());
  std::vector<bool> done(m.n_darts, false);
  for (std::size_t start = 0; start < m.n_darts; ++start) {
    if (done[start]) continue;
    std::size_t dart = start;
    do {
      done[dart] = true;
      faces[ids[start]].darts.emplace_back(static_cast<int>(dart / 4),
                                           static_cast<int>(dart % 4));
      std::size_t e = m.edge_pair[dart];
      dart = (e & ~std::size_t{3}) | ((e + 1) & 3);
    } while (dart != start);
  }
  return faces;
}

}  // namespace

std::vector<LinkDiagram> r1_reductions(const LinkDiagram& d) {
  std::vector<LinkDiagram> out;
  for (int c = 0; c < static_cast<int>(d.size()); ++c) {
    const auto& a = d.crossings[c].arcs;
    bool kink = false;
    for (int s = 0; s < 4; ++s) kink = kink || a[s] == a[(s + 1) % 4];
    if (kink) out.push_back(splice_out(d, {c}));
  }
  return out;
}

std::vector<LinkDiagram> r2_reductions(const LinkDiagram& d) {
  std::vector<LinkDiagram> out;
  for (const Face& f : faces_of(d)) {
    if (f.darts.size() != 2) continue;
    auto [c1, t1] = f.darts[0];
    auto [c2, t2] = f.darts[1];
    // parity of the slot tells over (odd) from under (even); a removable
    // bigon has one strand over at both ends, forcing opposite parities
    if (c1 == c2 || t1 % 2 == t2 % 2) continue;
    out.push_back(splice_out(d, {c1, c2}));
  }
  return out;
}

std::vector<LinkDiagram> r3_moves(const LinkDiagram& d) {
  std::vector<LinkDiagram> out;
  for (const Face& f : faces_of(d)) {
    if (f.darts.size() != 3) continue;
    std::array<int, 3> c, s;
    for (int j = 0; j < 3; ++j) {
      c[j] = f.darts[j].first;
      s[j] = f.darts[j].second;
    }
    if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) continue;
    // all slot parities equal means each strand is over exactly once around
    // the triangle, which no slide resolves
    if (s[0] % 2 == s[1] % 2 && s[1] % 2 == s[2] % 2) continue;
    std::set<int> labels;
    for (int j = 0; j < 3; ++j)
      for (int a : d.crossings[c[j]].arcs) labels.insert(a);
    if (labels.size() != 9) continue;  // degenerate corner, leave to r1/r2

    // slide the uniform strand across the opposite crossing: on each side
    // strand, the interior arc and the far exterior arc trade places
    LinkDiagram m = d;
    for (int j = 0; j < 3; ++j) {
      int k = (j + 1) % 3;
      int side = d.crossings[c[j]].arcs[s[j]];
      int ext_here = d.crossings[c[j]].arcs[(s[j] + 2) % 4];
      int ext_there = d.crossings[c[k]].arcs[(s[k] + 1) % 4];
      m.crossings[c[j]].arcs[s[j]] = ext_there;
      m.crossings[c[k]].arcs[(s[k] + 3) % 4] = ext_here;
      m.crossings[c[j]].arcs[(s[j] + 2) % 4] = side;
      m.crossings[c[k]].arcs[(s[k] + 1) % 4] = side;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<LinkDiagram> flype_moves(const LinkDiagram& d) {
  std::vector<LinkDiagram> out;
  if (d.size() < 3) return out;
  for (const auto& r : find_tangle_regions(d, d.size() - 1, false)) {
    for (int c : r.crossings) {
      std::vector<int> pos, slot;
      for (int j = 0; j < 4; ++j)
        for (int s = 0; s < 4; ++s)
          if (d.crossings[c].arcs[s] == r.boundary_arcs[j]) {
            pos.push_back(j);
            slot.push_back(s);
          }
      if (pos.size() != 2) continue;
      // the crossing must sit at one end of the composition: its two free
      // arcs adjacent both around the crossing and along the region boundary
      if ((slot[0] + 2) % 4 == slot[1]) continue;
      int i = -1;
      if ((pos[0] + 1) % 4 == pos[1]) i = pos[0];
      if ((pos[1] + 1) % 4 == pos[0]) i = pos[1];
      if (i < 0) continue;
      auto s = (i % 2 == 0) ? SquareSymmetry::rotate_x : SquareSymmetry::rotate_y;
      out.push_back(mutate(d, r, s));
    }
  }
  return out;
}

std::vector<LinkDiagram> r2_insertions(const LinkDiagram& d) {
  std::vector<LinkDiagram> out;
  if (d.size() == 0) return out;
  const int n = static_cast<int>(d.size());
  // arc -> (crossing, slot) at its outgoing and incoming endpoint
  std::map<int, std::pair<int, int>> tail, head;
  int max_arc = 0;
  for (int c = 0; c < n; ++c) {
    const PDCrossing& x = d.crossings[c];
    head[x.arcs[0]] = {c, 0};
    head[x.arcs[x.over_in_slot()]] = {c, x.over_in_slot()};
    tail[x.arcs[2]] = {c, 2};
    tail[x.arcs[x.over_out_slot()]] = {c, x.over_out_slot()};
    for (int a : x.arcs) max_arc = std::max(max_arc, a);
  }
  const int l1 = max_arc + 1, l2 = max_arc + 2, lb1 = max_arc + 3, lb2 = max_arc + 4;

  for (const Face& f : faces_of(d)) {
    for (std::size_t i = 0; i < f.darts.size(); ++i)
      for (std::size_t j = 0; j < f.darts.size(); ++j) {
        if (i == j) continue;
        int a1 = d.crossings[f.darts[i].first].arcs[f.darts[i].second];
        int a2 = d.crossings[f.darts[j].first].arcs[f.darts[j].second];
        if (a1 == a2) continue;
        // push a1 over a2; the strand along a1 now runs a1, l1, l2 and the
        // strand along a2 runs a2, lb1, lb2; the sign split and which new
        // crossing the lower strand meets first are settled by the planarity
        // and bigon-face filter below
        for (int b_meets_c1_first : {1, 0})
          for (int eps : {1, -1}) {
            LinkDiagram m = d;
            auto [hc1, hs1] = head.at(a1);
            auto [hc2, hs2] = head.at(a2);
            m.crossings[hc1].arcs[hs1] = l2;
            m.crossings[hc2].arcs[hs2] = lb2;
            PDCrossing c1, c2;
            c1.sign = eps;
            c2.sign = -eps;
            auto set_over = [](PDCrossing& x, int in, int out) {
              x.arcs[x.over_in_slot()] = in;
              x.arcs[x.over_out_slot()] = out;
            };
            set_over(c1, a1, l1);
            set_over(c2, l1, l2);
            if (b_meets_c1_first) {
              c1.arcs[0] = a2;
              c1.arcs[2] = lb1;
              c2.arcs[0] = lb1;
              c2.arcs[2] = lb2;
            } else {
              c2.arcs[0] = a2;
              c2.arcs[2] = lb1;
              c1.arcs[0] = lb1;
              c1.arcs[2] = lb2;
            }
            m.crossings.push_back(c1);
            m.crossings.push_back(c2);
            if (CombMap::of(m).face_count() != m.size() + 2) continue;
            bool bigon = false;
            for (const Face& g : faces_of(m)) {
              if (g.darts.size() != 2) continue;
              std::set<int> arcs;
              for (auto [c, s] : g.darts) arcs.insert(m.crossings[c].arcs[s]);
              if (arcs == std::set<int>{l1, lb1}) bigon = true;
            }
            if (!bigon) continue;
            out.push_back(std::move(m));
          }
      }
  }
  return out;
}

bool has_reduction(const LinkDiagram& d) {
  if (!r1_reductions(d).empty()) return true;
  return !r2_reductions(d).empty();
}

bool simplifies_below(const LinkDiagram& d, std::size_t target, std::size_t state_budget) {
  if (d.size() < target) return true;
  {
    // fast path: chase plain reductions before any search
    LinkDiagram cur = d;
    while (true) {
      auto r1 = r1_reductions(cur);
      if (!r1.empty()) {
        cur = std::move(r1.front());
      } else {
        auto r2 = r2_reductions(cur);
        if (r2.empty()) break;
        cur = std::move(r2.front());
      }
      if (cur.size() < target) return true;
    }
  }
  const std::size_t cap = d.size() + 2;
  std::set<std::string> seen;
  std::map<std::size_t, std::deque<LinkDiagram>> queue;
  queue[d.size()].push_back(d);
  std::size_t pops = 0;
  while (!queue.empty() && pops < state_budget) {
    auto it = queue.begin();
    LinkDiagram state = std::move(it->second.front());
    it->second.pop_front();
    if (it->second.empty()) queue.erase(it);
    if (state.size() < target) return true;
    if (!seen.insert(canonical_code(state)).second) continue;
    ++pops;
    auto push = [&](std::vector<LinkDiagram>&& moves) {
      for (auto& m : moves) queue[m.size()].push_back(std::move(m));
    };
    auto r1 = r1_reductions(state);
    auto r2 = r2_reductions(state);
    if ((!r1.empty() && state.size() - 1 < target) ||
        (!r2.empty() && state.size() - 2 < target))
      return true;
    push(std::move(r1));
    push(std::move(r2));
    push(r3_moves(state));
    push(flype_moves(state));
    if (state.size() + 2 <= cap) push(r2_insertions(state));
  }
  return false;
}

}  // namespace linkdet
