#include "coxiso/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coxiso/errors.hpp"

namespace coxiso {

std::vector<int> mask_to_indices(VertexMask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

namespace {

bool valid_name(const std::string& s, bool allow_reserved) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || !std::isprint(static_cast<unsigned char>(c)))
      return false;
    if (c == '$' && !allow_reserved) return false;
  }
  return true;
}

}  // namespace

PDiagram PDiagram::make(std::vector<std::string> generators,
                        const std::vector<Edge>& edges, bool allow_reserved) {
  if (generators.size() > kMaxRank)
    fail(Errc::malformed_input, "too many generators (max " + std::to_string(kMaxRank) + ")");
  for (const auto& g : generators) {
    if (!valid_name(g, allow_reserved))
      fail(Errc::malformed_input, "bad generator name '" + g + "'");
  }
  std::sort(generators.begin(), generators.end());
  if (std::adjacent_find(generators.begin(), generators.end()) != generators.end())
    fail(Errc::malformed_input, "duplicate generator");

  PDiagram d;
  d.names_ = std::move(generators);
  size_t n = d.names_.size();
  d.codes_.assign(n * n, CoxeterLabel::kInfiniteCode);
  for (size_t i = 0; i < n; ++i) d.codes_[i * n + i] = 1;

  for (const auto& e : edges) {
    int i = d.index_of(e.s);
    int j = d.index_of(e.t);
    if (i == j) fail(Errc::malformed_input, "self edge on '" + e.s + "'");
    if (e.m < 2) fail(Errc::malformed_input, "edge label < 2 on (" + e.s + "," + e.t + ")");
    if (d.codes_[static_cast<size_t>(i) * n + j] != CoxeterLabel::kInfiniteCode)
      fail(Errc::malformed_input, "duplicate edge (" + e.s + "," + e.t + ")");
    d.codes_[static_cast<size_t>(i) * n + j] = e.m;
    d.codes_[static_cast<size_t>(j) * n + i] = e.m;
  }

  d.nbr_.assign(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && d.codes_[i * n + j] != CoxeterLabel::kInfiniteCode)
        d.nbr_[i] |= bit(static_cast<int>(j));
  return d;
}

int PDiagram::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name)
    fail(Errc::unknown_generator, "'" + name + "'");
  return static_cast<int>(it - names_.begin());
}

bool PDiagram::contains(const std::string& name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

CoxeterLabel PDiagram::label(const std::string& s, const std::string& t) const {
  int i = index_of(s);
  int j = index_of(t);
  if (i == j) fail(Errc::same_pair, "label('" + s + "','" + t + "')");
  return label_at(i, j);
}

VertexMask PDiagram::mask_of(const std::vector<std::string>& names) const {
  VertexMask m = 0;
  for (const auto& s : names) m |= bit(index_of(s));
  return m;
}

std::vector<std::string> PDiagram::names_of(VertexMask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](int i) { out.push_back(names_[i]); });
  return out;
}

std::vector<int> PDiagram::label_multiset() const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (finitely_joined(i, j)) out.push_back(code_at(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PDiagram::Edge> PDiagram::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (finitely_joined(i, j)) out.push_back({names_[i], names_[j], code_at(i, j)});
  return out;  // (i,j) ascending over sorted names: already sorted by (s,t)
}

PDiagram PDiagram::renamed(const std::vector<std::pair<std::string, std::string>>& map) const {
  std::map<std::string, std::string> m;
  for (const auto& [from, to] : map) {
    if (!m.emplace(from, to).second) fail(Errc::malformed_input, "rename maps '" + from + "' twice");
  }
  auto translate = [&](const std::string& s) -> const std::string& {
    auto it = m.find(s);
    if (it == m.end()) fail(Errc::malformed_input, "rename misses '" + s + "'");
    return it->second;
  };
  std::vector<std::string> gens;
  gens.reserve(names_.size());
  for (const auto& g : names_) gens.push_back(translate(g));
  std::vector<Edge> es;
  for (const auto& e : edges()) es.push_back({translate(e.s), translate(e.t), e.m});
  return make(std::move(gens), es, /*allow_reserved=*/true);
}

// ---------------------------------------------------------------------------
// Formats

namespace {

PDiagram parse_cox(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> gens;
  std::vector<PDiagram::Edge> edges;
  bool saw_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (!saw_header) {
      if (tok.size() != 2 || tok[0] != "cox" || tok[1] != "1")
        fail(Errc::malformed_input, "expected 'cox 1' header" + where());
      saw_header = true;
    } else if (tok[0] == "gen") {
      if (tok.size() < 2) fail(Errc::malformed_input, "empty gen line" + where());
      gens.insert(gens.end(), tok.begin() + 1, tok.end());
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) fail(Errc::malformed_input, "edge needs 's t m'" + where());
      int m = 0;
      try {
        size_t pos = 0;
        m = std::stoi(tok[3], &pos);
        if (pos != tok[3].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        fail(Errc::malformed_input, "bad label '" + tok[3] + "'" + where());
      }
      edges.push_back({tok[1], tok[2], m});
    } else {
      fail(Errc::malformed_input, "unknown directive '" + tok[0] + "'" + where());
    }
  }
  if (!saw_header) fail(Errc::malformed_input, "missing 'cox 1' header");
  if (gens.empty()) fail(Errc::malformed_input, "no generators declared");
  return PDiagram::make(std::move(gens), edges);
}

PDiagram parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::malformed_input, std::string("bad JSON: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != 1) fail(Errc::malformed_input, "unsupported version");
    std::vector<std::string> gens = j.at("generators").get<std::vector<std::string>>();
    std::vector<PDiagram::Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) fail(Errc::malformed_input, "edge must be [s,t,m]");
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<int>()});
    }
    if (gens.empty()) fail(Errc::malformed_input, "no generators declared");
    return PDiagram::make(std::move(gens), edges);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::malformed_input, std::string("bad JSON shape: ") + e.what());
  }
}

}  // namespace

PDiagram parse_diagram(const std::string& text, DiagramFormat format) {
  switch (format) {
    case DiagramFormat::cox:
      return parse_cox(text);
    case DiagramFormat::json:
      return parse_json(text);
    case DiagramFormat::dot:
      fail(Errc::malformed_input, "dot is export-only");
  }
  fail(Errc::malformed_input, "unknown format");
}

std::string export_diagram(const PDiagram& d, DiagramFormat format) {
  std::ostringstream out;
  switch (format) {
    case DiagramFormat::cox: {
      out << "cox 1\n";
      out << "gen";
      for (const auto& g : d.generators()) out << ' ' << g;
      out << '\n';
      for (const auto& e : d.edges()) out << "edge " << e.s << ' ' << e.t << ' ' << e.m << '\n';
      return out.str();
    }
    case DiagramFormat::json: {
      nlohmann::json j;
      j["version"] = 1;
      j["generators"] = d.generators();
      j["edges"] = nlohmann::json::array();
      for (const auto& e : d.edges()) j["edges"].push_back({e.s, e.t, e.m});
      return j.dump() + "\n";
    }
    case DiagramFormat::dot: {
      out << "graph coxeter {\n";
      for (const auto& g : d.generators()) out << "  \"" << g << "\";\n";
      for (const auto& e : d.edges())
        out << "  \"" << e.s << "\" -- \"" << e.t << "\" [label=" << e.m << "];\n";
      out << "}\n";
      return out.str();
    }
  }
  fail(Errc::malformed_input, "unknown format");
}

// ---------------------------------------------------------------------------
// Structural queries

std::vector<VertexMask> components_mask(const PDiagram& d, VertexMask subset, ComponentMode mode) {
  std::vector<VertexMask> out;
  VertexMask todo = subset;
  while (todo) {
    int seed = __builtin_ctzll(todo);
    VertexMask comp = bit(seed);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for_each_bit(frontier, [&](int v) {
        for_each_bit(subset & ~comp, [&](int w) {
          int code = d.code_at(v, w);
          bool edge = (mode == ComponentMode::P) ? code != CoxeterLabel::kInfiniteCode
                                                 : code > 2;
          if (edge) next |= bit(w);
        });
      });
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;  // ordered by smallest member: ctz scan guarantees it
}

std::vector<std::vector<std::string>> components(const PDiagram& d,
                                                 const std::vector<std::string>& subset,
                                                 ComponentMode mode) {
  std::vector<std::vector<std::string>> out;
  for (VertexMask m : components_mask(d, d.mask_of(subset), mode)) out.push_back(d.names_of(m));
  return out;
}

bool is_simplex_mask(const PDiagram& d, VertexMask subset) {
  auto idx = mask_to_indices(subset);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j)
      if (!d.finitely_joined(idx[i], idx[j])) return false;
  return true;
}

SimplexStatus simplex_status_mask(const PDiagram& d, VertexMask subset) {
  if (!is_simplex_mask(d, subset)) return SimplexStatus::NotSimplex;
  VertexMask outside = d.full_mask() & ~subset;
  bool extendable = false;
  for_each_bit(outside, [&](int g) {
    if ((d.neighbors(g) & subset) == subset) extendable = true;
  });
  return extendable ? SimplexStatus::Simplex : SimplexStatus::MaximalSimplex;
}

SimplexStatus simplex_status(const PDiagram& d, const std::vector<std::string>& subset) {
  return simplex_status_mask(d, d.mask_of(subset));
}

VertexMask perp_mask(const PDiagram& d, VertexMask a) {
  VertexMask out = 0;
  for_each_bit(d.full_mask() & ~a, [&](int s) {
    bool all2 = true;
    for_each_bit(a, [&](int x) {
      if (d.code_at(s, x) != 2) all2 = false;
    });
    if (all2) out |= bit(s);
  });
  return out;
}

std::vector<std::string> perp(const PDiagram& d, const std::vector<std::string>& a) {
  return d.names_of(perp_mask(d, d.mask_of(a)));
}

const char* errc_name(Errc kind) {
  switch (kind) {
    case Errc::malformed_input: return "MalformedInput";
    case Errc::unknown_generator: return "UnknownGenerator";
    case Errc::same_pair: return "SamePair";
    case Errc::adjacent_pair: return "AdjacentPair";
    case Errc::not_irreducible: return "NotIrreducible";
    case Errc::not_spherical: return "NotSpherical";
    case Errc::not_chordal: return "NotChordal";
    case Errc::not_a_bad_edge: return "NotABadEdge";
    case Errc::no_bad_separators: return "NoBadSeparators";
    case Errc::invalid_move: return "InvalidMove";
    case Errc::invalid_plan: return "InvalidPlan";
    case Errc::not_a_base: return "NotABase";
    case Errc::orbit_truncated: return "OrbitTruncated";
    case Errc::invariant_violation: return "InvariantViolation";
  }
  return "Error";
}

}  // namespace coxiso
