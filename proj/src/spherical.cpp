#include "coxiso/spherical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "coxiso/errors.hpp"

namespace coxiso {

FiniteType FiniteType::make(Family f, int param) {
  FiniteType t{f, param};
  switch (f) {
    case Family::A:
      if (param < 1) fail(Errc::invariant_violation, "A rank >= 1");
      break;
    case Family::B:
      if (param == 3) return {Family::A, 3};
      if (param < 4) fail(Errc::invariant_violation, "B rank >= 4");
      break;
    case Family::C:
      if (param < 2) fail(Errc::invariant_violation, "C rank >= 2");
      break;
    case Family::D2:
      if (param == 3) return {Family::A, 2};
      if (param == 4) return {Family::C, 2};
      if (param < 5) fail(Errc::invariant_violation, "D2 parameter >= 3");
      break;
    default:
      t.param = 0;
      break;
  }
  return t;
}

int FiniteType::rank() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
      return param;
    case Family::D2:
      return 2;
    case Family::E6:
      return 6;
    case Family::E7:
      return 7;
    case Family::E8:
      return 8;
    case Family::F4:
      return 4;
    case Family::G3:
      return 3;
    case Family::G4:
      return 4;
  }
  return 0;
}

namespace {

std::uint64_t factorial(int n) {
  if (n > 20) fail(Errc::invariant_violation, "factorial overflow");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

std::uint64_t FiniteType::group_order() const {
  switch (family) {
    case Family::A:
      return factorial(param + 1);
    case Family::B:
      return (std::uint64_t{1} << (param - 1)) * factorial(param);
    case Family::C:
      return (std::uint64_t{1} << param) * factorial(param);
    case Family::D2:
      return 2ull * static_cast<std::uint64_t>(param);
    case Family::E6:
      return 51840ull;
    case Family::E7:
      return 2903040ull;
    case Family::E8:
      return 696729600ull;
    case Family::F4:
      return 1152ull;
    case Family::G3:
      return 120ull;
    case Family::G4:
      return 14400ull;
  }
  return 0;
}

std::string FiniteType::str() const {
  switch (family) {
    case Family::A:
      return "A" + std::to_string(param);
    case Family::B:
      return "B" + std::to_string(param);
    case Family::C:
      return "C" + std::to_string(param);
    case Family::D2:
      return "D2(" + std::to_string(param) + ")";
    case Family::E6:
      return "E6";
    case Family::E7:
      return "E7";
    case Family::E8:
      return "E8";
    case Family::F4:
      return "F4";
    case Family::G3:
      return "G3";
    case Family::G4:
      return "G4";
  }
  return "?";
}

namespace {

// Layout of a recognized type inside the host diagram, for the longest
// element's conjugation action.
struct Shape {
  FiniteType type;
  std::vector<int> path;               // linear types, in chain order
  int center = -1;                     // star types
  std::vector<std::vector<int>> arms;  // star types, center outward, sorted by length
};

// C-edges within the subset (finite labels > 2).
bool c_adjacent(const PDiagram& d, int i, int j) { return d.code_at(i, j) > 2; }

std::optional<Shape> match_shape(const PDiagram& d, VertexMask a) {
  auto idx = mask_to_indices(a);
  int n = static_cast<int>(idx.size());
  Shape s;

  if (n == 1) {
    s.type = FiniteType::make(Family::A, 1);
    s.path = idx;
    return s;
  }
  if (!is_simplex_mask(d, a)) return std::nullopt;

  // Member C-degrees and edge count inside a.
  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c_adjacent(d, idx[i], idx[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
  if (edges != n - 1) return std::nullopt;  // catalog C-diagrams are trees

  std::vector<int> branch, leaves;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() >= 3) branch.push_back(i);
    if (adj[i].size() == 1) leaves.push_back(i);
  }

  if (branch.empty()) {
    // Path. Walk from the smaller-index endpoint.
    int start = leaves[0];
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
      int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    std::vector<int> labels;
    for (int i = 0; i + 1 < n; ++i) labels.push_back(d.code_at(idx[order[i]], idx[order[i + 1]]));
    // Read the chain with its larger labels toward the back.
    std::vector<int> rev(labels.rbegin(), labels.rend());
    if (rev < labels) {
      std::reverse(order.begin(), order.end());
      labels = rev;
    }
    for (int i : order) s.path.push_back(idx[i]);

    if (n == 2) {
      s.type = FiniteType::make(Family::D2, labels[0]);
      return s;
    }
    bool all3 = std::all_of(labels.begin(), labels.end(), [](int m) { return m == 3; });
    if (all3) {
      s.type = FiniteType::make(Family::A, n);
      return s;
    }
    std::vector<int> cn(n - 1, 3);
    cn.back() = 4;
    if (labels == cn) {
      s.type = FiniteType::make(Family::C, n);
      return s;
    }
    if (n == 4 && labels == std::vector<int>{3, 4, 3}) {
      s.type = FiniteType::make(Family::F4);
      return s;
    }
    if (n == 3 && labels == std::vector<int>{3, 5}) {
      s.type = FiniteType::make(Family::G3);
      return s;
    }
    if (n == 4 && labels == std::vector<int>{3, 3, 5}) {
      s.type = FiniteType::make(Family::G4);
      return s;
    }
    return std::nullopt;
  }

  if (branch.size() != 1 || adj[branch[0]].size() != 3) return std::nullopt;
  // Star types have all labels 3.
  for (int i = 0; i < n; ++i)
    for (int j : adj[i])
      if (d.code_at(idx[i], idx[j]) != 3) return std::nullopt;

  int center = branch[0];
  std::vector<std::vector<int>> arms;
  for (int first : adj[center]) {
    std::vector<int> arm{first};
    int prev = center, cur = first;
    while (adj[cur].size() == 2) {
      int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(std::move(arm));
  }
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  int l1 = static_cast<int>(arms[0].size());
  int l2 = static_cast<int>(arms[1].size());
  int l3 = static_cast<int>(arms[2].size());

  s.center = idx[center];
  for (auto& arm : arms) {
    std::vector<int> named;
    for (int i : arm) named.push_back(idx[i]);
    s.arms.push_back(std::move(named));
  }
  if (l1 == 1 && l2 == 1) {
    s.type = FiniteType::make(Family::B, n);  // arms (1,1,n-3)
    return s;
  }
  if (l1 == 1 && l2 == 2 && l3 == 2) {
    s.type = FiniteType::make(Family::E6);
    return s;
  }
  if (l1 == 1 && l2 == 2 && l3 == 3) {
    s.type = FiniteType::make(Family::E7);
    return s;
  }
  if (l1 == 1 && l2 == 2 && l3 == 4) {
    s.type = FiniteType::make(Family::E8);
    return s;
  }
  return std::nullopt;
}

std::optional<Shape> classify_shape(const PDiagram& d, VertexMask a) {
  if (a == 0) fail(Errc::not_irreducible, "empty subset");
  auto comps = components_mask(d, a, ComponentMode::C);
  if (comps.size() != 1) fail(Errc::not_irreducible, "subset has several C-components");
  return match_shape(d, a);
}

}  // namespace

std::optional<FiniteType> classify_irreducible_mask(const PDiagram& d, VertexMask a) {
  auto s = classify_shape(d, a);
  if (!s) return std::nullopt;
  return s->type;
}

std::optional<FiniteType> classify_irreducible(const PDiagram& d,
                                               const std::vector<std::string>& a) {
  return classify_irreducible_mask(d, d.mask_of(a));
}

bool is_spherical_mask(const PDiagram& d, VertexMask a) {
  for (VertexMask comp : components_mask(d, a, ComponentMode::C))
    if (!classify_irreducible_mask(d, comp)) return false;
  return true;
}

bool is_spherical(const PDiagram& d, const std::vector<std::string>& a) {
  return is_spherical_mask(d, d.mask_of(a));
}

std::vector<int> longest_conjugation_perm(const PDiagram& d, VertexMask a) {
  std::vector<int> perm(d.rank());
  std::iota(perm.begin(), perm.end(), 0);
  for (VertexMask comp : components_mask(d, a, ComponentMode::C)) {
    auto s = classify_shape(d, comp);
    if (!s) fail(Errc::not_spherical, "component {" + [&] {
               std::string names;
               for (const auto& g : d.names_of(comp)) names += (names.empty() ? "" : ",") + g;
               return names;
             }() + "} generates an infinite group");
    switch (s->type.family) {
      case Family::A:
        // Order reversal along the chain (identity for rank 1).
        for (size_t i = 0; i < s->path.size(); ++i)
          perm[s->path[i]] = s->path[s->path.size() - 1 - i];
        break;
      case Family::D2:
        if (s->type.param % 2 == 1) {
          perm[s->path[0]] = s->path[1];
          perm[s->path[1]] = s->path[0];
        }
        break;
      case Family::B:
        if (s->type.param % 2 == 1) {
          // Swap the two single-edge arm tips.
          int u = s->arms[0][0], v = s->arms[1][0];
          perm[u] = v;
          perm[v] = u;
        }
        break;
      case Family::E6: {
        // Diagram flip: the two length-2 arms swap positionwise.
        const auto& y = s->arms[1];
        const auto& z = s->arms[2];
        for (size_t i = 0; i < 2; ++i) {
          perm[y[i]] = z[i];
          perm[z[i]] = y[i];
        }
        break;
      }
      default:
        break;  // longest element central: identity
    }
  }
  return perm;
}

std::vector<std::pair<std::string, std::string>> longest_conjugation(
    const PDiagram& d, const std::vector<std::string>& a) {
  VertexMask m = d.mask_of(a);
  auto perm = longest_conjugation_perm(d, m);
  std::vector<std::pair<std::string, std::string>> out;
  for_each_bit(m, [&](int i) { out.emplace_back(d.name_of(i), d.name_of(perm[i])); });
  return out;
}

std::vector<Base> bases(const PDiagram& d) {
  // All simplices of size >= 2, by clique extension.
  std::vector<VertexMask> cliques;
  std::vector<std::pair<VertexMask, VertexMask>> stack;
  for (int v = 0; v < d.rank(); ++v)
    stack.push_back({bit(v), d.neighbors(v) & mask_ge(v + 1)});
  while (!stack.empty()) {
    auto [clique, cand] = stack.back();
    stack.pop_back();
    if (mask_size(clique) >= 2) cliques.push_back(clique);
    for_each_bit(cand, [&](int v) {
      stack.push_back({clique | bit(v), cand & d.neighbors(v) & mask_ge(v + 1)});
    });
  }

  // Keep the irreducible spherical ones.
  std::vector<std::pair<VertexMask, FiniteType>> candidates;
  for (VertexMask c : cliques) {
    if (components_mask(d, c, ComponentMode::C).size() != 1) continue;
    auto t = classify_irreducible_mask(d, c);
    if (t) candidates.push_back({c, *t});
  }

  // Maximality: not properly contained in another irreducible spherical set.
  std::vector<Base> out;
  for (const auto& [c, t] : candidates) {
    bool maximal = true;
    for (const auto& [c2, t2] : candidates)
      if (c != c2 && (c & c2) == c) maximal = false;
    if (maximal) out.push_back({d.names_of(c), t});
  }
  std::sort(out.begin(), out.end(),
            [](const Base& x, const Base& y) { return x.members < y.members; });
  return out;
}

PDiagram catalog_diagram(const FiniteType& t) {
  int n = t.rank();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<std::pair<std::pair<int, int>, int>> cedges;
  auto chain = [&](const std::vector<int>& labels) {
    for (size_t i = 0; i < labels.size(); ++i) cedges.push_back({{static_cast<int>(i), static_cast<int>(i) + 1}, labels[i]});
  };
  switch (t.family) {
    case Family::A:
      chain(std::vector<int>(n - 1, 3));
      break;
    case Family::C: {
      std::vector<int> l(n - 1, 3);
      l.back() = 4;
      chain(l);
      break;
    }
    case Family::B: {
      // Spine 0..n-3 with a fork at n-3.
      for (int i = 0; i + 1 <= n - 3; ++i) cedges.push_back({{i, i + 1}, 3});
      cedges.push_back({{n - 3, n - 2}, 3});
      cedges.push_back({{n - 3, n - 1}, 3});
      break;
    }
    case Family::D2:
      cedges.push_back({{0, 1}, t.param});
      break;
    case Family::F4:
      chain({3, 4, 3});
      break;
    case Family::G3:
      chain({3, 5});
      break;
    case Family::G4:
      chain({3, 3, 5});
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      int third = t.family == Family::E6 ? 2 : (t.family == Family::E7 ? 3 : 4);
      cedges.push_back({{0, 1}, 3});                                 // length-1 arm
      cedges.push_back({{0, 2}, 3});                                 // length-2 arm
      cedges.push_back({{2, 3}, 3});
      cedges.push_back({{0, 4}, 3});                                 // length-'third' arm
      for (int i = 4; i + 1 < 4 + third; ++i) cedges.push_back({{i, i + 1}, 3});
      break;
    }
  }
  std::vector<std::vector<int>> code(n, std::vector<int>(n, 2));
  for (auto& [e, m] : cedges) code[e.first][e.second] = code[e.second][e.first] = m;
  std::vector<PDiagram::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({names[i], names[j], code[i][j]});
  return PDiagram::make(names, edges);
}

}  // namespace coxiso
