#include "coxiso/chordal.hpp"

#include <algorithm>
#include <set>

#include "coxiso/errors.hpp"

namespace coxiso {

VertexMask component_of(const PDiagram& d, int v, VertexMask within) {
  if (!has_bit(within, v)) return 0;
  VertexMask comp = bit(v);
  VertexMask frontier = comp;
  while (frontier) {
    VertexMask next = 0;
    for_each_bit(frontier, [&](int x) { next |= d.neighbors(x) & within & ~comp; });
    comp |= next;
    frontier = next;
  }
  return comp;
}

namespace {

// Shortest path from s into 'targets' staying inside 'allowed' (s included
// implicitly). Returns the vertex sequence or empty when unreachable.
std::vector<int> shortest_path(const PDiagram& d, int s, VertexMask targets, VertexMask allowed) {
  std::vector<int> parent(d.rank(), -1);
  std::vector<int> queue{s};
  VertexMask seen = bit(s);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    if (has_bit(targets, v)) {
      std::vector<int> path;
      for (int x = v; x != -1; x = parent[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    VertexMask nbrs = d.neighbors(v) & allowed & ~seen;
    for_each_bit(nbrs, [&](int w) {
      parent[w] = v;
      seen |= bit(w);
      queue.push_back(w);
    });
  }
  return {};
}

bool cycle_is_chordless(const PDiagram& d, const std::vector<int>& cyc) {
  size_t n = cyc.size();
  if (n < 4) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
      if (d.finitely_joined(cyc[i], cyc[j]) != consecutive) return false;
    }
  return true;
}

// Some chordless cycle of a non-chordal graph: for a non-adjacent pair x,y
// with a common neighbor v, the cycle v,x,...,y closes through a shortest
// x-y path avoiding N[v] (minus x,y themselves).
std::vector<int> find_chordless_cycle(const PDiagram& d) {
  for (int v = 0; v < d.rank(); ++v) {
    auto nbrs = mask_to_indices(d.neighbors(v));
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        int x = nbrs[i], y = nbrs[j];
        if (d.finitely_joined(x, y)) continue;
        VertexMask allowed = d.full_mask() & ~d.neighbors(v) & ~bit(v);
        allowed |= bit(x) | bit(y);
        auto path = shortest_path(d, x, bit(y), allowed);
        if (path.empty()) continue;
        std::vector<int> cyc{v};
        cyc.insert(cyc.end(), path.begin(), path.end());
        if (cycle_is_chordless(d, cyc)) return cyc;
      }
  }
  return {};
}

}  // namespace

ChordalityWitness chordality(const PDiagram& d) {
  int n = d.rank();
  // Maximum cardinality search; visiting order reversed is the PEO candidate.
  std::vector<int> weight(n, 0), visit_order;
  VertexMask visited = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!has_bit(visited, v) && (best == -1 || weight[v] > weight[best])) best = v;
    visited |= bit(best);
    visit_order.push_back(best);
    for_each_bit(d.neighbors(best) & ~visited, [&](int w) { ++weight[w]; });
  }
  std::vector<int> peo(visit_order.rbegin(), visit_order.rend());

  // Verify: each vertex's neighbors among later-eliminated vertices form a simplex.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  bool ok = true;
  for (int i = 0; i < n && ok; ++i) {
    VertexMask later = 0;
    for_each_bit(d.neighbors(peo[i]), [&](int w) {
      if (pos[w] > i) later |= bit(w);
    });
    auto idx = mask_to_indices(later);
    for (size_t a = 0; a < idx.size() && ok; ++a)
      for (size_t b = a + 1; b < idx.size() && ok; ++b)
        if (!d.finitely_joined(idx[a], idx[b])) ok = false;
  }

  ChordalityWitness w;
  if (ok) {
    w.chordal = true;
    for (int v : peo) w.peo.push_back(d.name_of(v));
    return w;
  }
  auto cyc = find_chordless_cycle(d);
  if (cyc.empty()) fail(Errc::invariant_violation, "MCS rejected ordering but no chordless cycle found");
  w.chordal = false;
  for (int v : cyc) w.chordless_cycle.push_back(d.name_of(v));
  return w;
}

bool is_chordal(const PDiagram& d) { return chordality(d).chordal; }

// ---------------------------------------------------------------------------
// Minimal separators

namespace {

VertexMask neighborhood_of_set(const PDiagram& d, VertexMask s) {
  VertexMask out = 0;
  for_each_bit(s, [&](int v) { out |= d.neighbors(v); });
  return out & ~s;
}

}  // namespace

std::vector<VertexMask> all_minimal_separators(const PDiagram& d) {
  VertexMask full = d.full_mask();
  std::set<VertexMask> seen;
  std::vector<VertexMask> queue;
  auto offer = [&](VertexMask s) {
    if (s == 0) return;
    if (seen.insert(s).second) queue.push_back(s);
  };

  // Seeds: neighborhoods of the components of G - N[v].
  for (int v = 0; v < d.rank(); ++v) {
    VertexMask rest = full & ~d.neighbors(v) & ~bit(v);
    for (VertexMask comp : components_mask(d, rest, ComponentMode::P))
      offer(neighborhood_of_set(d, comp));
  }
  // Saturation: push a separator past each of its vertices.
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    VertexMask s = queue[qi];
    for_each_bit(s, [&](int x) {
      VertexMask rest = full & ~s & ~d.neighbors(x) & ~bit(x);
      for (VertexMask comp : components_mask(d, rest, ComponentMode::P))
        offer(neighborhood_of_set(d, comp));
    });
  }

  std::vector<VertexMask> out(seen.begin(), seen.end());
  return out;
}

bool is_minimal_separator_mask(const PDiagram& d, VertexMask b, int c, int f) {
  if (has_bit(b, c) || has_bit(b, f)) return false;
  VertexMask rest = d.full_mask() & ~b;
  VertexMask kc = component_of(d, c, rest);
  if (has_bit(kc, f)) return false;
  VertexMask kf = component_of(d, f, rest);
  bool full_both = true;
  for_each_bit(b, [&](int x) {
    if (!(d.neighbors(x) & kc) || !(d.neighbors(x) & kf)) full_both = false;
  });
  return full_both;
}

bool is_minimal_separator(const PDiagram& d, const std::vector<std::string>& b,
                          const std::string& c, const std::string& f) {
  return is_minimal_separator_mask(d, d.mask_of(b), d.index_of(c), d.index_of(f));
}

std::vector<VertexMask> minimal_separators_between_mask(const PDiagram& d, int c, int f) {
  if (c == f) fail(Errc::same_pair, "separator query needs two distinct generators");
  if (d.finitely_joined(c, f))
    fail(Errc::adjacent_pair,
         "(" + d.name_of(c) + "," + d.name_of(f) + ") are finitely joined");
  std::vector<VertexMask> out;
  for (VertexMask s : all_minimal_separators(d))
    if (is_minimal_separator_mask(d, s, c, f)) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::string>> minimal_separators_between(const PDiagram& d,
                                                                 const std::string& c,
                                                                 const std::string& f) {
  std::vector<std::vector<std::string>> out;
  for (VertexMask s : minimal_separators_between_mask(d, d.index_of(c), d.index_of(f)))
    out.push_back(d.names_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

VertexMask close_separator_mask(const PDiagram& d, int c, int f) {
  if (c == f) fail(Errc::same_pair, "separator query needs two distinct generators");
  if (d.finitely_joined(c, f))
    fail(Errc::adjacent_pair,
         "(" + d.name_of(c) + "," + d.name_of(f) + ") are finitely joined");
  VertexMask residual = d.full_mask() & ~d.neighbors(c) & ~bit(c);
  VertexMask kf = component_of(d, f, residual);
  VertexMask out = 0;
  for_each_bit(d.neighbors(c), [&](int v) {
    if (d.neighbors(v) & kf) out |= bit(v);
  });
  return out;
}

std::vector<std::string> close_separator(const PDiagram& d, const std::string& c,
                                         const std::string& f) {
  return d.names_of(close_separator_mask(d, d.index_of(c), d.index_of(f)));
}

}  // namespace coxiso
