#include "linkdet/tangle.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace linkdet {

// ---------------------------------------------------------------------------
// tangle expressions

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
};

TangleExpr parse_expr(Lexer& lx);

TangleExpr parse_term(Lexer& lx) {
  if (lx.done()) throw MalformedTangle("unexpected end of input");
  char c = lx.peek();
  if (c == '(') {
    ++lx.pos;
    TangleExpr e = parse_expr(lx);
    if (lx.done() || lx.peek() != ')') throw MalformedTangle("missing ')'");
    ++lx.pos;
    return e;
  }
  if (c == 'i') {
    if (lx.s.compare(lx.pos, 3, "inf") != 0) throw MalformedTangle("unknown atom");
    lx.pos += 3;
    return TangleExpr::infinity();
  }
  bool neg = false;
  if (c == '-' || c == '+') {
    neg = (c == '-');
    ++lx.pos;
  }
  if (lx.pos >= lx.s.size() || !std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
    throw MalformedTangle("expected integer at position " + std::to_string(lx.pos));
  long v = 0;
  while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
    v = 10 * v + (lx.s[lx.pos++] - '0');
  if (neg) v = -v;
  if (lx.pos < lx.s.size() && lx.s[lx.pos] == 'b') {
    ++lx.pos;
    return TangleExpr::overbar(v);
  }
  return TangleExpr::atom(v);
}

TangleExpr parse_expr(Lexer& lx) {
  TangleExpr left = parse_term(lx);
  while (!lx.done() && lx.peek() == '+') {
    if (lx.pos + 1 >= lx.s.size()) throw MalformedTangle("dangling '+'");
    char kind = lx.s[lx.pos + 1];
    if (kind != 'h' && kind != 'v') break;  // sign of the next atom, not an operator
    lx.pos += 2;
    TangleExpr right = parse_term(lx);
    left = kind == 'h' ? TangleExpr::sum_h(std::move(left), std::move(right))
                       : TangleExpr::sum_v(std::move(left), std::move(right));
  }
  return left;
}

bool is_integer(const TangleFraction& f) {
  return !f.infinite && f.value.get_den() == 1;
}

TangleFraction reciprocal(const TangleFraction& f) {
  if (f.infinite) return {false, 0};
  if (f.value == 0) return {true, 0};
  return {false, 1 / f.value};
}

TangleFraction frac_add(const TangleFraction& a, const TangleFraction& b) {
  if (a.infinite || b.infinite) return {true, 0};
  return {false, a.value + b.value};
}

}  // namespace

TangleExpr parse_tangle(const std::string& text) {
  Lexer lx{text};
  TangleExpr e = parse_expr(lx);
  if (!lx.done()) throw MalformedTangle("trailing input at position " + std::to_string(lx.pos));
  return e;
}

TangleFraction tangle_fraction(const TangleExpr& t) {
  switch (t.kind) {
    case TangleExpr::Kind::Integer:
      return {false, t.value};
    case TangleExpr::Kind::Overbar:
      return reciprocal({false, t.value});
    case TangleExpr::Kind::Infinity:
      return {true, 0};
    case TangleExpr::Kind::SumH: {
      TangleFraction a = tangle_fraction(t.children[0]);
      TangleFraction b = tangle_fraction(t.children[1]);
      if (!is_integer(a) && !is_integer(b) && !a.infinite && !b.infinite) throw NotRational();
      return frac_add(a, b);
    }
    case TangleExpr::Kind::SumV: {
      TangleFraction a = reciprocal(tangle_fraction(t.children[0]));
      TangleFraction b = reciprocal(tangle_fraction(t.children[1]));
      if (!is_integer(a) && !is_integer(b) && !a.infinite && !b.infinite) throw NotRational();
      return reciprocal(frac_add(a, b));
    }
  }
  throw MalformedTangle("unreachable");
}

bool summand_permutation_invariance_check(const TangleExpr& t,
                                          const std::vector<std::size_t>& perm) {
  std::vector<const TangleExpr*> summands;
  const TangleExpr* cur = &t;
  while (cur->kind == TangleExpr::Kind::SumH) {
    summands.push_back(&cur->children[1]);
    cur = &cur->children[0];
  }
  summands.push_back(cur);
  std::reverse(summands.begin(), summands.end());
  for (const TangleExpr* s : summands)
    if (s->kind == TangleExpr::Kind::SumH || s->kind == TangleExpr::Kind::SumV)
      throw NotNormalForm();
  if (perm.size() != summands.size()) throw NotNormalForm();
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) throw NotNormalForm();
    seen[p] = true;
  }
  TangleExpr permuted = *summands[perm[0]];
  for (std::size_t i = 1; i < perm.size(); ++i)
    permuted = TangleExpr::sum_h(std::move(permuted), *summands[perm[i]]);
  return tangle_fraction(permuted) == tangle_fraction(t);
}

// ---------------------------------------------------------------------------
// regions and mutation

namespace {

// dart id = 4*crossing + slot
int dart_id(int c, int k) { return 4 * c + k; }

// arc label -> its (at most two) dart ids
std::map<int, std::vector<int>> dart_pairs(const std::vector<PDCrossing>& crossings) {
  std::map<int, std::vector<int>> m;
  for (std::size_t c = 0; c < crossings.size(); ++c)
    for (int k = 0; k < 4; ++k) m[crossings[c].arcs[k]].push_back(dart_id(static_cast<int>(c), k));
  return m;
}

bool dart_is_incoming(const PDCrossing& cr, int slot) {
  return slot == 0 || slot == cr.over_in_slot();
}

// Boundary data for a crossing subset; returns false when the subset does not
// bound a 4-ended disk region.
bool region_boundary(const LinkDiagram& d, const std::vector<int>& crossing_set,
                     TangleRegion& out) {
  std::vector<bool> in_region(d.size(), false);
  for (int c : crossing_set) in_region[static_cast<std::size_t>(c)] = true;
  auto pairs = dart_pairs(d.crossings);

  // boundary darts: region side of arcs leaving the subset
  std::vector<int> boundary;
  for (int c : crossing_set)
    for (int k = 0; k < 4; ++k) {
      int arc = d.crossings[c].arcs[k];
      const auto& pp = pairs.at(arc);
      if (pp.size() != 2) return false;
      int other = pp[0] == dart_id(c, k) ? pp[1] : pp[0];
      if (!in_region[static_cast<std::size_t>(other / 4)]) boundary.push_back(dart_id(c, k));
    }
  if (boundary.size() != 4) return false;

  // contour walk: rotate at the crossing, hopping across internal arcs
  auto next_boundary = [&](int dart) {
    int e = (dart & ~3) | ((dart + 1) & 3);
    for (std::size_t guard = 0; guard < 4 * d.size() + 4; ++guard) {
      if (std::find(boundary.begin(), boundary.end(), e) != boundary.end()) return e;
      int arc = d.crossings[e / 4].arcs[e % 4];
      const auto& pp = pairs.at(arc);
      int other = pp[0] == e ? pp[1] : pp[0];
      e = (other & ~3) | ((other + 1) & 3);
    }
    return -1;
  };
  int start = *std::min_element(boundary.begin(), boundary.end(),
                                [&](int a, int b) {
                                  return d.crossings[a / 4].arcs[a % 4] <
                                         d.crossings[b / 4].arcs[b % 4];
                                });
  std::array<int, 4> order{};
  int cur = start;
  for (int i = 0; i < 4; ++i) {
    order[i] = cur;
    cur = next_boundary(cur);
    if (cur < 0) return false;
  }
  if (cur != start) return false;
  if (std::set<int>(order.begin(), order.end()).size() != 4) return false;

  out.crossings = crossing_set;
  for (int i = 0; i < 4; ++i) {
    int c = order[i] / 4, k = order[i] % 4;
    out.boundary_arcs[i] = d.crossings[c].arcs[k];
    out.inner_darts[i] = {c, k};
    // the arc flows into the region when the region-side dart is incoming
    out.inward[i] = dart_is_incoming(d.crossings[c], k);
  }
  return true;
}

// position permutations for the pi-rotations; end at position j moves to sigma[j]
const std::array<int, 4>& symmetry_perm(SquareSymmetry s) {
  static const std::array<int, 4> id{0, 1, 2, 3}, rx{1, 0, 3, 2}, ry{3, 2, 1, 0},
      rz{2, 3, 0, 1};
  switch (s) {
    case SquareSymmetry::rotate_x: return rx;
    case SquareSymmetry::rotate_y: return ry;
    case SquareSymmetry::rotate_z: return rz;
    default: return id;
  }
}

// Rebuild a diagram from unoriented crossing quads (counterclockwise arcs,
// under-strand on slots 0 and 2) by walking a fresh orientation. Arcs are
// renumbered 1..2n in walk order, crossings listed in first-visit order.
LinkDiagram rebuild_oriented(const std::vector<std::array<int, 4>>& quads, int start_arc,
                             bool flip_dir, const std::string& name) {
  LinkDiagram out;
  out.name = name;
  const std::size_t n = quads.size();
  if (n == 0) {
    out.n_components = 1;
    return out;
  }
  std::map<int, std::vector<int>> pairs;
  for (std::size_t c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) pairs[quads[c][k]].push_back(dart_id(static_cast<int>(c), k));
  for (const auto& [arc, pp] : pairs)
    if (pp.size() != 2) throw RegionInvalid("arc " + std::to_string(arc) + " has arity " +
                                            std::to_string(pp.size()));

  std::map<int, int> head;      // arc -> head dart
  std::map<int, int> newlabel;  // arc -> 1..2n in walk order
  std::vector<int> crossing_order;
  std::vector<int> crossing_rank(n, -1);
  int components = 0;

  auto walk_from = [&](int a0, bool flip) {
    ++components;
    const auto& pp = pairs.at(a0);
    int h = flip ? std::min(pp[0], pp[1]) : std::max(pp[0], pp[1]);
    int a = a0;
    while (!newlabel.count(a)) {
      newlabel[a] = static_cast<int>(newlabel.size()) + 1;
      head[a] = h;
      int c = h / 4;
      if (crossing_rank[c] < 0) {
        crossing_rank[c] = static_cast<int>(crossing_order.size());
        crossing_order.push_back(c);
      }
      int e = (h & ~3) | ((h + 2) & 3);
      a = quads[c][e % 4];
      const auto& qq = pairs.at(a);
      h = qq[0] == e ? qq[1] : qq[0];
    }
  };

  if (!pairs.count(start_arc)) throw RegionInvalid("start arc not present");
  walk_from(start_arc, flip_dir);
  for (const auto& [arc, pp] : pairs)
    if (!newlabel.count(arc)) walk_from(arc, false);

  out.crossings.resize(n);
  for (int c : crossing_order) {
    const auto& q = quads[c];
    int rot;
    if (head.at(q[0]) == dart_id(c, 0))
      rot = 0;
    else if (head.at(q[2]) == dart_id(c, 2))
      rot = 2;
    else
      throw RegionInvalid("no incoming under-strand at crossing " + std::to_string(c));
    PDCrossing cr;
    for (int i = 0; i < 4; ++i) cr.arcs[i] = newlabel.at(q[(rot + i) % 4]);
    bool over_in_3 = head.at(q[(rot + 3) % 4]) == dart_id(c, (rot + 3) % 4);
    bool over_in_1 = head.at(q[(rot + 1) % 4]) == dart_id(c, (rot + 1) % 4);
    if (over_in_3 == over_in_1)
      throw RegionInvalid("ambiguous over-strand at crossing " + std::to_string(c));
    cr.sign = over_in_3 ? 1 : -1;
    out.crossings[crossing_rank[c]] = cr;
    out.writhe += cr.sign;
  }
  out.n_components = components;
  return out;
}

}  // namespace

std::vector<TangleRegion> find_tangle_regions(const LinkDiagram& d, std::size_t max_size,
                                              bool include_single) {
  std::vector<TangleRegion> out;
  const std::size_t n = d.size();
  if (n == 0 || n > 24) return out;

  // crossing adjacency through shared arcs
  std::map<int, std::vector<int>> arc_to_cr;
  for (std::size_t c = 0; c < n; ++c)
    for (int a : d.crossings[c].arcs) arc_to_cr[a].push_back(static_cast<int>(c));

  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size > max_size) continue;
    if (size == 1 && !include_single) continue;
    // connectivity by BFS from the lowest set bit
    std::size_t seen = mask & (~mask + 1);
    std::size_t frontier = seen;
    while (frontier) {
      std::size_t next = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!((frontier >> c) & 1)) continue;
        for (int a : d.crossings[c].arcs)
          for (int c2 : arc_to_cr.at(a))
            if (((mask >> c2) & 1) && !((seen >> c2) & 1)) next |= std::size_t{1} << c2;
      }
      seen |= next;
      frontier = next;
    }
    if (seen != mask) continue;

    std::vector<int> subset;
    for (std::size_t c = 0; c < n; ++c)
      if ((mask >> c) & 1) subset.push_back(static_cast<int>(c));
    TangleRegion r;
    if (region_boundary(d, subset, r)) out.push_back(std::move(r));
  }
  return out;
}

bool is_oriented_mutation(const TangleRegion& r, SquareSymmetry s) {
  const auto& sigma = symmetry_perm(s);
  for (int j = 0; j < 4; ++j)
    if (r.inward[sigma[j]] != r.inward[j]) return false;
  return true;
}

LinkDiagram mutate(const LinkDiagram& d, const TangleRegion& r, SquareSymmetry s) {
  TangleRegion check;
  if (!region_boundary(d, r.crossings, check) || check.boundary_arcs != r.boundary_arcs ||
      check.inner_darts != r.inner_darts || check.inward != r.inward)
    throw RegionInvalid("region does not match the diagram");

  std::vector<std::array<int, 4>> quads(d.size());
  for (std::size_t c = 0; c < d.size(); ++c) quads[c] = d.crossings[c].arcs;

  std::vector<bool> in_region(d.size(), false);
  for (int c : r.crossings) in_region[static_cast<std::size_t>(c)] = true;

  // flips through the plane reverse each region crossing: the cyclic order
  // mirrors and the over-strand becomes the under-strand
  if (s == SquareSymmetry::rotate_x || s == SquareSymmetry::rotate_y)
    for (int c : r.crossings) {
      auto& q = quads[static_cast<std::size_t>(c)];
      q = {q[1], q[0], q[3], q[2]};
    }

  // re-glue: the tangle end at position j moves to position sigma[j], so its
  // region-side arc takes the external label found there
  const auto& sigma = symmetry_perm(s);
  std::map<int, int> relabel;
  for (int j = 0; j < 4; ++j) relabel[r.boundary_arcs[j]] = r.boundary_arcs[sigma[j]];
  for (int c : r.crossings)
    for (auto& a : quads[static_cast<std::size_t>(c)]) {
      auto it = relabel.find(a);
      if (it != relabel.end()) a = it->second;
    }

  int start = *std::min_element(r.boundary_arcs.begin(), r.boundary_arcs.end());
  return rebuild_oriented(quads, start, false, d.name);
}

std::string canonical_code(const LinkDiagram& d) {
  if (d.size() == 0) return "unknot";
  std::vector<std::array<int, 4>> quads(d.size());
  for (std::size_t c = 0; c < d.size(); ++c) quads[c] = d.crossings[c].arcs;
  std::string best;
  for (std::size_t c = 0; c < d.size(); ++c)
    for (int k = 0; k < 4; ++k)
      for (bool flip : {false, true}) {
        std::string code = serialize_pd(rebuild_oriented(quads, d.crossings[c].arcs[k], flip, ""));
        if (best.empty() || code < best) best = code;
      }
  return best;
}

}  // namespace linkdet
