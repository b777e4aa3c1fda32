#ifndef COXISO_DIAGRAM_HPP
#define COXISO_DIAGRAM_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "coxiso/label.hpp"

namespace coxiso {

// Vertex subsets are bitmasks over the diagram's generator indices.
using VertexMask = std::uint64_t;

constexpr int kMaxRank = 64;

inline int mask_size(VertexMask m) { return __builtin_popcountll(m); }
inline VertexMask bit(int i) { return VertexMask{1} << i; }
inline bool has_bit(VertexMask m, int i) { return (m >> i) & 1; }
// All bits with index >= i.
inline VertexMask mask_ge(int i) { return i >= kMaxRank ? 0 : ~VertexMask{0} << i; }

// Iterate set bits in increasing index order.
template <typename F>
void for_each_bit(VertexMask m, F&& f) {
  while (m) {
    int i = __builtin_ctzll(m);
    m &= m - 1;
    f(i);
  }
}

std::vector<int> mask_to_indices(VertexMask m);

// An immutable presentation diagram: named generators plus the symmetric
// partial map of finite labels. Pairs without a stored label are infinite.
// Generators are kept sorted lexicographically; all set-valued outputs of
// the library are emitted in this order.
class PDiagram {
 public:
  struct Edge {
    std::string s, t;
    int m;
  };

  // Validates names and edges (duplicates, label range, unknown endpoints).
  // Names may contain '$' only when allow_reserved is set (blow-ups use it).
  static PDiagram make(std::vector<std::string> generators,
                       const std::vector<Edge>& edges,
                       bool allow_reserved = false);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::string& name_of(int i) const { return names_[i]; }

  // Throws unknown_generator.
  int index_of(const std::string& name) const;
  bool contains(const std::string& name) const;

  // Label by name; throws same_pair / unknown_generator.
  CoxeterLabel label(const std::string& s, const std::string& t) const;
  // Label by index, i != j assumed.
  CoxeterLabel label_at(int i, int j) const {
    return CoxeterLabel::from_code(code_at(i, j));
  }
  int code_at(int i, int j) const { return codes_[static_cast<size_t>(i) * names_.size() + j]; }

  bool finitely_joined(int i, int j) const { return code_at(i, j) != CoxeterLabel::kInfiniteCode; }

  VertexMask full_mask() const {
    return rank() == kMaxRank ? ~VertexMask{0} : (VertexMask{1} << rank()) - 1;
  }
  // Finite-label neighbours of i.
  VertexMask neighbors(int i) const { return nbr_[i]; }

  VertexMask mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(VertexMask m) const;

  // Multiset of finite labels, sorted ascending. A twist-move invariant.
  std::vector<int> label_multiset() const;

  std::vector<Edge> edges() const;  // sorted by (s, t)

  // New diagram with generators renamed through the given bijection
  // (old name -> new name). Throws on missing/duplicate targets.
  PDiagram renamed(const std::vector<std::pair<std::string, std::string>>& map) const;

  friend bool operator==(const PDiagram& a, const PDiagram& b) {
    return a.names_ == b.names_ && a.codes_ == b.codes_;
  }

 private:
  PDiagram() = default;

  std::vector<std::string> names_;  // sorted
  std::vector<int> codes_;          // n*n symmetric, 0 = infinite, diagonal 1
  std::vector<VertexMask> nbr_;
};

enum class DiagramFormat { cox, json, dot };
enum class ComponentMode { P, C };

// External Interfaces: .cox text and the JSON value format.
PDiagram parse_diagram(const std::string& text, DiagramFormat format);
std::string export_diagram(const PDiagram& d, DiagramFormat format);

// Connected components of the induced subdiagram (P: all finite labels,
// C: finite labels > 2), each sorted, ordered by smallest member.
std::vector<std::vector<std::string>> components(const PDiagram& d,
                                                 const std::vector<std::string>& subset,
                                                 ComponentMode mode);
std::vector<VertexMask> components_mask(const PDiagram& d, VertexMask subset, ComponentMode mode);

enum class SimplexStatus { NotSimplex, Simplex, MaximalSimplex };

SimplexStatus simplex_status(const PDiagram& d, const std::vector<std::string>& subset);
bool is_simplex_mask(const PDiagram& d, VertexMask subset);
SimplexStatus simplex_status_mask(const PDiagram& d, VertexMask subset);

// A^perp: generators outside A with label 2 to every element of A.
std::vector<std::string> perp(const PDiagram& d, const std::vector<std::string>& a);
VertexMask perp_mask(const PDiagram& d, VertexMask a);

}  // namespace coxiso

#endif
