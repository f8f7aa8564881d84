#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "linkdet/invariants.hpp"

namespace linkdet {

namespace {

// z = q - q^-1
LaurentPoly2 z_poly() {
  return LaurentPoly2::monomial(1, 0, 1) + LaurentPoly2::monomial(-1, 0, -1);
}

// a - a^-1, the numerator of the extra-component factor
LaurentPoly2 delta_num() {
  return LaurentPoly2::monomial(1, 1, 0) + LaurentPoly2::monomial(-1, -1, 0);
}

// value = p / z^k
struct HVal {
  LaurentPoly2 p{"a", "q"};
  int k = 0;
};

HVal hval_add(const HVal& x, const HVal& y) {
  LaurentPoly2 z = z_poly();
  int m = std::max(x.k, y.k);
  LaurentPoly2 px = x.p, py = y.p;
  for (int i = x.k; i < m; ++i) px = px * z;
  for (int i = y.k; i < m; ++i) py = py * z;
  return {px + py, m};
}

LaurentPoly2 divide_by_z(const LaurentPoly2& p, int m) {
  if (m == 0) return p;
  // split by a-exponent and divide the q-parts exactly
  std::map<long, LaurentPoly1> rows;
  for (const auto& [e, c] : p.terms()) {
    auto it = rows.find(e.first);
    if (it == rows.end()) it = rows.emplace(e.first, LaurentPoly1("q")).first;
    it->second.set_coeff(e.second, c);
  }
  LaurentPoly1 zq = LaurentPoly1::monomial(1, 1, "q") + LaurentPoly1::monomial(-1, -1, "q");
  LaurentPoly2 out("a", "q");
  for (auto& [ae, row] : rows) {
    for (int i = 0; i < m; ++i) row = row.divide_exact(zq);
    for (const auto& [qe, c] : row.terms()) out.set_coeff(ae, qe, c);
  }
  return out;
}

struct SkeinCrossing {
  std::array<int, 4> arcs;
  int sign;
};

struct SkeinDiagram {
  std::vector<SkeinCrossing> crossings;
  int circles = 0;  // crossing-free split unknot components accumulated so far

  int over_in(std::size_t c) const { return crossings[c].sign > 0 ? 3 : 1; }
  int over_out(std::size_t c) const { return crossings[c].sign > 0 ? 1 : 3; }
};

void relabel_arc(SkeinDiagram& d, int from, int to) {
  for (auto& cr : d.crossings)
    for (auto& a : cr.arcs)
      if (a == from) a = to;
}

// Remove kinks until none remain; each removal merges the two through-arcs.
void reduce_r1(SkeinDiagram& d) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
      const auto& a = d.crossings[c].arcs;
      int loop_slot = -1;
      for (int k = 0; k < 4; ++k)
        if (a[k] == a[(k + 1) % 4]) {
          loop_slot = k;
          break;
        }
      if (loop_slot < 0) continue;
      int x = a[(loop_slot + 2) % 4], y = a[(loop_slot + 3) % 4];
      d.crossings.erase(d.crossings.begin() + static_cast<long>(c));
      if (x == y)
        d.circles += 1;
      else
        relabel_arc(d, std::max(x, y), std::min(x, y));
      changed = true;
      break;
    }
  }
}

// Oriented smoothing of crossing c: under-in joins over-out, over-in joins under-out.
SkeinDiagram smooth(const SkeinDiagram& d, std::size_t c) {
  SkeinDiagram out = d;
  SkeinCrossing cr = out.crossings[c];
  int oi = d.over_in(c), oo = d.over_out(c);
  out.crossings.erase(out.crossings.begin() + static_cast<long>(c));
  auto merge = [&out](int x, int y) {
    if (x == y) {
      out.circles += 1;
      return;
    }
    relabel_arc(out, std::max(x, y), std::min(x, y));
  };
  int p1 = cr.arcs[0], p2 = cr.arcs[oo];
  int q1 = cr.arcs[oi], q2 = cr.arcs[2];
  merge(p1, p2);
  // the first merge may have renamed the arcs of the second pair
  auto canon = [&](int v) {
    if (p1 != p2 && v == std::max(p1, p2)) return std::min(p1, p2);
    return v;
  };
  merge(canon(q1), canon(q2));
  return out;
}

// Swap over and under strands of crossing c, keeping the quadruple CCW from
// the new incoming under-strand.
SkeinDiagram switched(const SkeinDiagram& d, std::size_t c) {
  SkeinDiagram out = d;
  auto& cr = out.crossings[c];
  if (cr.sign > 0) {
    cr.arcs = {cr.arcs[3], cr.arcs[0], cr.arcs[1], cr.arcs[2]};
    cr.sign = -1;
  } else {
    cr.arcs = {cr.arcs[1], cr.arcs[2], cr.arcs[3], cr.arcs[0]};
    cr.sign = 1;
  }
  return out;
}

struct Passage {
  int crossing;
  bool under;
};

// Walk all strand components; each starts at its smallest incoming arc label.
// Returns passages in walk order plus the component count.
struct WalkResult {
  std::vector<Passage> passages;
  int components = 0;
};

WalkResult walk_all(const SkeinDiagram& d) {
  std::map<int, std::pair<int, int>> in_at;  // arc -> (crossing, slot)
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    in_at[d.crossings[c].arcs[0]] = {static_cast<int>(c), 0};
    in_at[d.crossings[c].arcs[d.over_in(c)]] = {static_cast<int>(c), d.over_in(c)};
  }
  WalkResult res;
  std::map<int, bool> used;
  for (const auto& [arc, where] : in_at) {
    if (used[arc]) continue;
    ++res.components;
    int a = arc;
    while (!used[a]) {
      used[a] = true;
      auto [c, slot] = in_at.at(a);
      res.passages.push_back({c, slot == 0});
      a = d.crossings[c].arcs[slot == 0 ? 2 : d.over_out(c)];
    }
  }
  return res;
}

// First crossing reached on its under-strand before being seen from above;
// -1 when the diagram is descending.
int first_bad_crossing(const WalkResult& w, std::size_t n_crossings) {
  std::vector<bool> seen(n_crossings, false);
  for (const auto& p : w.passages) {
    if (!seen[p.crossing]) {
      if (p.under) return p.crossing;
      seen[p.crossing] = true;
    }
  }
  return -1;
}

// Relabel-stable serialization: minimum over walk starting points of the PD
// text with arcs renumbered in walk order.
std::string memo_key(const SkeinDiagram& d) {
  if (d.crossings.empty()) return "o" + std::to_string(d.circles);
  std::map<int, std::pair<int, int>> in_at;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    in_at[d.crossings[c].arcs[0]] = {static_cast<int>(c), 0};
    in_at[d.crossings[c].arcs[d.over_in(c)]] = {static_cast<int>(c), d.over_in(c)};
  }
  std::string best;
  for (const auto& [start, w0] : in_at) {
    std::map<int, int> newlab;
    int next = 1;
    // walk the component of `start`, then the rest ordered by old labels
    std::vector<int> seeds{start};
    for (const auto& [a, w] : in_at) seeds.push_back(a);
    for (int seed : seeds) {
      if (newlab.count(seed)) continue;
      int a = seed;
      while (!newlab.count(a)) {
        newlab[a] = next++;
        auto [c, slot] = in_at.at(a);
        a = d.crossings[c].arcs[slot == 0 ? 2 : d.over_out(c)];
      }
    }
    std::vector<std::string> rows;
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
      const auto& cr = d.crossings[c];
      std::ostringstream os;
      os << (cr.sign > 0 ? 'P' : 'N');
      for (int k = 0; k < 4; ++k) os << ',' << newlab.at(cr.arcs[k]);
      rows.push_back(os.str());
    }
    std::sort(rows.begin(), rows.end());
    std::string key = std::to_string(d.circles);
    for (const auto& r : rows) key += ';' + r;
    if (best.empty() || key < best) best = key;
  }
  return best;
}

struct SkeinContext {
  std::map<std::string, HVal> memo;
  long budget = 20'000'000;
};

HVal skein_value(SkeinContext& ctx, SkeinDiagram d) {
  if (--ctx.budget <= 0) throw RecursionBudgetExceeded();
  reduce_r1(d);
  WalkResult w = walk_all(d);
  int total_components = w.components + d.circles;
  if (d.crossings.empty() || first_bad_crossing(w, d.crossings.size()) == -1) {
    // descending (or crossing-free) diagram: an unlink
    HVal v{LaurentPoly2::constant(1), 0};
    LaurentPoly2 dn = delta_num();
    for (int i = 1; i < total_components; ++i) {
      v.p = v.p * dn;
      v.k += 1;
    }
    return v;
  }
  std::string key = memo_key(d);
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;

  std::size_t bad = static_cast<std::size_t>(first_bad_crossing(w, d.crossings.size()));
  int sign = d.crossings[bad].sign;
  HVal vs = skein_value(ctx, switched(d, bad));
  HVal v0 = skein_value(ctx, smooth(d, bad));
  LaurentPoly2 z = z_poly();
  HVal res;
  if (sign > 0) {
    // P+ = a^-2 P- + a^-1 z P0
    HVal t1{vs.p.shifted(-2, 0), vs.k};
    HVal t2{(v0.p * z).shifted(-1, 0), v0.k};
    res = hval_add(t1, t2);
  } else {
    // P- = a^2 P+ - a z P0
    HVal t1{vs.p.shifted(2, 0), vs.k};
    HVal t2{-(v0.p * z).shifted(1, 0), v0.k};
    res = hval_add(t1, t2);
  }
  ctx.memo.emplace(std::move(key), res);
  return res;
}

}  // namespace

LaurentPoly2 homflypt(const LinkDiagram& d, const InvariantCaps& caps) {
  if (d.size() > caps.homflypt) throw CrossingCapExceeded(d.size(), caps.homflypt);
  SkeinDiagram sd;
  for (const auto& cr : d.crossings) sd.crossings.push_back({cr.arcs, cr.sign});
  SkeinContext ctx;
  HVal v = skein_value(ctx, std::move(sd));
  // report the value times z^(components - 1); exact for knots
  int clear = d.n_components - 1;
  if (v.k <= clear) {
    LaurentPoly2 out = v.p;
    LaurentPoly2 z = z_poly();
    for (int i = v.k; i < clear; ++i) out = out * z;
    return out;
  }
  return divide_by_z(v.p, v.k - clear);
}

}  // namespace linkdet
