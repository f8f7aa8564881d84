#include "linkdet/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace linkdet {

namespace {

enum Role { kUnset = 0, kIn, kOut };

struct Occurrence {
  int crossing;
  int slot;
};

struct OrientState {
  // per arc label: its (exactly two) occurrences and their roles
  std::map<int, std::vector<Occurrence>> occ;
  std::map<int, std::array<Role, 2>> roles;

  void set_role(int arc, int crossing, int slot, Role r) {
    auto& v = occ.at(arc);
    int idx = (v[0].crossing == crossing && v[0].slot == slot) ? 0 : 1;
    auto& rr = roles[arc];
    if (rr[idx] != kUnset) {
      if (rr[idx] != r) throw NonRealizable("conflicting strand orientation at arc " +
                                            std::to_string(arc));
      return;
    }
    rr[idx] = r;
    Role other = (r == kIn) ? kOut : kIn;
    if (rr[1 - idx] != kUnset && rr[1 - idx] != other)
      throw NonRealizable("conflicting strand orientation at arc " + std::to_string(arc));
    rr[1 - idx] = other;
  }

  Role role_at(int arc, int crossing, int slot) const {
    auto& v = occ.at(arc);
    int idx = (v[0].crossing == crossing && v[0].slot == slot) ? 0 : 1;
    return roles.at(arc)[idx];
  }
};

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;

  LinkDiagram d;
  if (s.empty()) {
    d.n_components = 1;
    d.writhe = 0;
    return d;
  }

  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'X' || pos + 1 >= s.size() || s[pos + 1] != '(')
      throw MalformedPD("expected X( at offset " + std::to_string(pos));
    pos += 2;
    PDCrossing cr;
    for (int k = 0; k < 4; ++k) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw MalformedPD("expected arc label");
      cr.arcs[k] = std::stoi(s.substr(start, pos - start));
      if (cr.arcs[k] <= 0) throw MalformedPD("arc labels must be positive");
      char want = (k < 3) ? ',' : ')';
      if (pos >= s.size() || s[pos] != want) throw MalformedPD("expected separator");
      ++pos;
    }
    d.crossings.push_back(cr);
    if (pos < s.size()) {
      if (s[pos] != ';') throw MalformedPD("expected ; between crossings");
      ++pos;
      if (pos == s.size()) throw MalformedPD("trailing ;");
    }
  }

  OrientState st;
  for (std::size_t c = 0; c < d.crossings.size(); ++c)
    for (int k = 0; k < 4; ++k)
      st.occ[d.crossings[c].arcs[k]].push_back({static_cast<int>(c), k});
  for (auto& [arc, v] : st.occ) {
    if (v.size() != 2)
      throw InconsistentArcs("arc " + std::to_string(arc) + " appears " +
                             std::to_string(v.size()) + " times");
    st.roles[arc] = {kUnset, kUnset};
  }

  // Under-strand direction is fixed by the slot convention.
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    st.set_role(d.crossings[c].arcs[0], static_cast<int>(c), 0, kIn);
    st.set_role(d.crossings[c].arcs[2], static_cast<int>(c), 2, kOut);
  }

  // Propagate over-strand directions to a fixpoint, breaking ties for
  // over-only components deterministically.
  std::vector<int> over_in(d.crossings.size(), -1);
  auto resolve = [&](std::size_t c, int in_slot) {
    over_in[c] = in_slot;
    int out_slot = (in_slot == 3) ? 1 : 3;
    st.set_role(d.crossings[c].arcs[in_slot], static_cast<int>(c), in_slot, kIn);
    st.set_role(d.crossings[c].arcs[out_slot], static_cast<int>(c), out_slot, kOut);
  };
  for (;;) {
    bool changed = false;
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
      if (over_in[c] != -1) continue;
      for (int slot : {1, 3}) {
        Role r = st.role_at(d.crossings[c].arcs[slot], static_cast<int>(c), slot);
        if (r == kUnset) continue;
        resolve(c, r == kIn ? slot : (slot == 3 ? 1 : 3));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    auto free_it = std::find(over_in.begin(), over_in.end(), -1);
    if (free_it == over_in.end()) break;
    resolve(static_cast<std::size_t>(free_it - over_in.begin()), 3);
  }

  d.writhe = 0;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    d.crossings[c].sign = (over_in[c] == 3) ? 1 : -1;
    d.writhe += d.crossings[c].sign;
  }

  // Strand-following cycles give the component count.
  std::map<int, int> next_arc;
  for (const auto& cr : d.crossings) {
    next_arc[cr.arcs[0]] = cr.arcs[2];
    next_arc[cr.arcs[cr.over_in_slot()]] = cr.arcs[cr.over_out_slot()];
  }
  std::map<int, bool> seen;
  int comps = 0;
  for (const auto& [arc, nxt] : next_arc) {
    if (seen[arc]) continue;
    ++comps;
    int a = arc;
    while (!seen[a]) {
      seen[a] = true;
      auto it = next_arc.find(a);
      if (it == next_arc.end()) throw NonRealizable("strand following does not close up");
      a = it->second;
    }
  }
  d.n_components = comps;
  return d;
}

std::string serialize_pd(const LinkDiagram& d) {
  std::ostringstream out;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    if (c) out << ';';
    const auto& a = d.crossings[c].arcs;
    out << "X(" << a[0] << ',' << a[1] << ',' << a[2] << ',' << a[3] << ')';
  }
  return out.str();
}

DTCode parse_dt(const std::string& text) {
  std::istringstream in(text);
  DTCode code;
  std::string tok;
  while (in >> tok) {
    std::size_t idx = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &idx);
    } catch (const std::exception&) {
      throw MalformedDT("not an integer: " + tok);
    }
    if (idx != tok.size()) throw MalformedDT("not an integer: " + tok);
    if (v == 0 || v % 2 != 0) throw MalformedDT("entries must be nonzero even integers");
    code.evens.push_back(v);
  }
  std::vector<bool> present(code.evens.size() + 1, false);
  for (int v : code.evens) {
    int a = std::abs(v) / 2;
    if (a < 1 || a > static_cast<int>(code.evens.size()) || present[a])
      throw NotPermutation();
    present[a] = true;
  }
  return code;
}

CombMap CombMap::of(const LinkDiagram& d) {
  CombMap m;
  m.n_darts = 4 * d.size();
  m.edge_pair.assign(m.n_darts, 0);
  std::map<int, std::vector<std::size_t>> occ;
  for (std::size_t c = 0; c < d.size(); ++c)
    for (std::size_t k = 0; k < 4; ++k) occ[d.crossings[c].arcs[k]].push_back(4 * c + k);
  for (const auto& [arc, v] : occ) {
    if (v.size() != 2)
      throw InconsistentArcs("arc " + std::to_string(arc) + " appears " +
                             std::to_string(v.size()) + " times");
    m.edge_pair[v[0]] = v[1];
    m.edge_pair[v[1]] = v[0];
  }
  return m;
}

std::vector<int> CombMap::face_ids() const {
  std::vector<int> face(n_darts, -1);
  int next_id = 0;
  for (std::size_t start = 0; start < n_darts; ++start) {
    if (face[start] != -1) continue;
    std::size_t dart = start;
    while (face[dart] == -1) {
      face[dart] = next_id;
      std::size_t e = edge_pair[dart];
      dart = (e & ~std::size_t{3}) | ((e + 1) & 3);
    }
    ++next_id;
  }
  return face;
}

std::size_t CombMap::face_count() const {
  auto f = face_ids();
  return f.empty() ? 0 : static_cast<std::size_t>(*std::max_element(f.begin(), f.end())) + 1;
}

namespace {

// Chirality of the planar realization: which over-strand slot assignment the
// first crossing uses. Fixed so that DT code 4 6 2 realizes the trefoil whose
// writhe is +3.
constexpr bool kRealizationFlip = false;

LinkDiagram build_candidate(const std::vector<int>& evens, const std::vector<bool>& bits) {
  const int n = static_cast<int>(evens.size());
  LinkDiagram d;
  d.crossings.resize(n);
  for (int c = 0; c < n; ++c) {
    int pu, po;  // positions of the under and over passages, 1-based
    int podd = 2 * c + 1, peven = std::abs(evens[c]);
    if (evens[c] > 0) {
      pu = peven;
      po = podd;
    } else {
      pu = podd;
      po = peven;
    }
    auto prev = [n](int p) { return p == 1 ? 2 * n : p - 1; };
    if (!bits[c])
      d.crossings[c].arcs = {prev(pu), po, pu, prev(po)};  // over in at slot 3: positive
    else
      d.crossings[c].arcs = {prev(pu), prev(po), pu, po};
    d.crossings[c].sign = bits[c] ? -1 : 1;
  }
  d.n_components = 1;
  d.writhe = 0;
  for (const auto& cr : d.crossings) d.writhe += cr.sign;
  return d;
}

}  // namespace

LinkDiagram dt_to_pd(const DTCode& code) {
  const int n = static_cast<int>(code.evens.size());
  if (n == 0) return LinkDiagram{};
  // check that odd positions pair with even positions
  std::vector<bool> bits(n, kRealizationFlip);
  // enumerate over-slot assignments for crossings 1..n-1; the complement of a
  // planar assignment is planar, so pinning bit 0 loses nothing
  const std::size_t limit = std::size_t{1} << (n - 1);
  for (std::size_t mask = 0; mask < limit; ++mask) {
    for (int c = 1; c < n; ++c) bits[c] = ((mask >> (c - 1)) & 1) != 0;
    LinkDiagram d = build_candidate(code.evens, bits);
    CombMap m = CombMap::of(d);
    if (m.face_count() == static_cast<std::size_t>(n) + 2) return d;
  }
  throw NonRealizableDT();
}

DTCode pd_to_dt(const LinkDiagram& d) {
  if (d.n_components != 1) throw MalformedDT("DT codes cover knots only");
  const int n = static_cast<int>(d.size());
  DTCode code;
  if (n == 0) return code;
  // occurrence lookup: arc -> (crossing, slot) where the arc comes in
  std::map<int, std::pair<int, int>> in_at;
  for (int c = 0; c < n; ++c) {
    in_at[d.crossings[c].arcs[0]] = {c, 0};
    in_at[d.crossings[c].arcs[d.crossings[c].over_in_slot()]] = {c,
                                                                 d.crossings[c].over_in_slot()};
  }
  // position 1 emits the smallest arc label; position k+1 is where the arc
  // emitted by position k arrives
  int start = in_at.begin()->first;
  std::vector<int> visit_crossing(2 * n), visit_under(2 * n);
  int arc = start;
  for (int step = 1; step <= 2 * n; ++step) {
    auto [c, slot] = in_at.at(arc);
    int pos = (step % (2 * n)) + 1;
    visit_crossing[pos - 1] = c;
    visit_under[pos - 1] = (slot == 0);
    arc = d.crossings[c].arcs[slot == 0 ? 2 : d.crossings[c].over_out_slot()];
  }
  if (arc != start) throw NonRealizable("strand walk does not close up");
  std::vector<int> odd_pos(n, -1), even_pos(n, -1), under_at_even(n, 0);
  for (int p = 0; p < 2 * n; ++p) {
    int c = visit_crossing[p];
    if (p % 2 == 0) {
      if (odd_pos[c] != -1) throw NonRealizable("crossing visited twice at odd positions");
      odd_pos[c] = p + 1;
    } else {
      if (even_pos[c] != -1) throw NonRealizable("crossing visited twice at even positions");
      even_pos[c] = p + 1;
      under_at_even[c] = visit_under[p];
    }
  }
  code.evens.resize(n);
  for (int c = 0; c < n; ++c) {
    int i = (odd_pos[c] - 1) / 2;
    code.evens[i] = under_at_even[c] ? even_pos[c] : -even_pos[c];
  }
  return code;
}

LinkDiagram mirror(const LinkDiagram& d) {
  // plane reflection: reverse the rotation at every crossing, keeping the
  // incoming under-strand in slot 0
  LinkDiagram m = d;
  for (auto& cr : m.crossings) {
    std::swap(cr.arcs[1], cr.arcs[3]);
    cr.sign = -cr.sign;
  }
  m.writhe = -d.writhe;
  return m;
}

bool is_alternating(const LinkDiagram& d) {
  if (d.size() == 0) return true;
  std::map<int, std::vector<bool>> under_end;
  for (const auto& cr : d.crossings)
    for (int k = 0; k < 4; ++k) under_end[cr.arcs[k]].push_back(k == 0 || k == 2);
  for (const auto& [arc, ends] : under_end)
    if (ends.size() != 2 || ends[0] == ends[1]) return false;
  return true;
}

}  // namespace linkdet
