#ifndef COXISO_SPHERICAL_HPP
#define COXISO_SPHERICAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxiso/diagram.hpp"

namespace coxiso {

// Coxeter's notation for the irreducible spherical types (not Bourbaki's):
//   A_n  linear, labels 3                      (Bourbaki A_n)
//   B_n  Y-shaped, labels 3, two single-edge arms  (Bourbaki D_n)
//   C_n  linear, labels 3 except one end 4     (Bourbaki B_n)
//   D2(k) single edge labeled k                (Bourbaki I_2(k))
//   G3, G4 linear with labels 3,5 / 3,3,5      (Bourbaki H_3, H_4)
// with the normalizations B_3 = A_3, D2(3) = A_2, D2(4) = C_2.
enum class Family { A, B, C, D2, E6, E7, E8, F4, G3, G4 };

struct FiniteType {
  Family family;
  int param = 0;  // rank for A/B/C, k for D2, unused otherwise

  // Applies the catalog normalizations.
  static FiniteType make(Family f, int param = 0);

  int rank() const;
  std::uint64_t group_order() const;
  std::string str() const;

  friend bool operator==(const FiniteType&, const FiniteType&) = default;
};

// Structural classification of a C-connected subset against the catalog.
// Returns nullopt for NotSpherical. Throws not_irreducible when the subset
// has more than one C-component, unknown_generator on bad names.
std::optional<FiniteType> classify_irreducible(const PDiagram& d,
                                               const std::vector<std::string>& a);
std::optional<FiniteType> classify_irreducible_mask(const PDiagram& d, VertexMask a);

bool is_spherical(const PDiagram& d, const std::vector<std::string>& a);
bool is_spherical_mask(const PDiagram& d, VertexMask a);

// The involution s -> l s l^-1 on a spherical subset, l its longest element.
// Returned as (from, to) pairs covering every member of a (fixed points
// included), sorted by 'from'. Throws not_spherical.
std::vector<std::pair<std::string, std::string>> longest_conjugation(
    const PDiagram& d, const std::vector<std::string>& a);
// Index form: perm[i] gives the image of vertex i for i in a; identity elsewhere.
std::vector<int> longest_conjugation_perm(const PDiagram& d, VertexMask a);

struct Base {
  std::vector<std::string> members;  // sorted
  FiniteType finite_type;

  friend bool operator==(const Base&, const Base&) = default;
};

// All bases: irreducible spherical subsets of size >= 2 maximal among
// irreducible spherical subsets. Sorted by member-name vectors.
std::vector<Base> bases(const PDiagram& d);

// Catalog C-diagram of a type as a standalone diagram over fresh names
// g0..g{n-1} (a simplex: non-C-adjacent pairs get label 2).
PDiagram catalog_diagram(const FiniteType& t);

}  // namespace coxiso

#endif
