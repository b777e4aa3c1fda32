#ifndef COXISO_CHORDAL_HPP
#define COXISO_CHORDAL_HPP

#include <string>
#include <vector>

#include "coxiso/diagram.hpp"

namespace coxiso {

struct ChordalityWitness {
  bool chordal = false;
  // Perfect elimination ordering when chordal (eliminated first to last).
  std::vector<std::string> peo;
  // A chordless cycle of length >= 4 otherwise, in cyclic order.
  std::vector<std::string> chordless_cycle;
};

// Maximum-cardinality search plus PEO verification; on failure extracts a
// verified chordless cycle. The underlying graph is all finite-label edges.
ChordalityWitness chordality(const PDiagram& d);
bool is_chordal(const PDiagram& d);

// All inclusion-minimal B separating c from f. Pre: c, f distinct and not
// finitely joined (throws adjacent_pair / same_pair otherwise).
std::vector<std::vector<std::string>> minimal_separators_between(const PDiagram& d,
                                                                 const std::string& c,
                                                                 const std::string& f);
std::vector<VertexMask> minimal_separators_between_mask(const PDiagram& d, int c, int f);

// Separates c from f and every member has neighbors in both their components.
bool is_minimal_separator(const PDiagram& d, const std::vector<std::string>& b,
                          const std::string& c, const std::string& f);
bool is_minimal_separator_mask(const PDiagram& d, VertexMask b, int c, int f);

// The unique minimal (c,f)-separator all of whose members are adjacent to c:
// the members of N(c) adjacent to f's component in the graph minus N[c].
std::vector<std::string> close_separator(const PDiagram& d, const std::string& c,
                                         const std::string& f);
VertexMask close_separator_mask(const PDiagram& d, int c, int f);

// All minimal separators of the diagram (Berry-Bordat-Cogis generation).
std::vector<VertexMask> all_minimal_separators(const PDiagram& d);

// Component of v in the diagram restricted to 'within' (P-edges).
VertexMask component_of(const PDiagram& d, int v, VertexMask within);

}  // namespace coxiso

#endif
