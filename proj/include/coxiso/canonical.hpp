#ifndef COXISO_CANONICAL_HPP
#define COXISO_CANONICAL_HPP

#include <string>
#include <vector>

#include "coxiso/diagram.hpp"

namespace coxiso {

// Deterministic encoding of a diagram up to renaming: equal for two diagrams
// iff they are isomorphic as labeled diagrams (Prop. 2.1 style).
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes < b.bytes;
  }
};

CanonicalForm canonical_form(const PDiagram& d);

// The vertex ordering realizing the canonical encoding (indices into
// d.generators()). Two diagrams with equal canonical forms are isomorphic
// via ord1[k] -> ord2[k].
std::vector<int> canonical_ordering(const PDiagram& d);

// Label-preserving bijection a -> b (name pairs), or empty if the diagrams
// are not isomorphic.
std::vector<std::pair<std::string, std::string>> diagram_isomorphism(const PDiagram& a,
                                                                     const PDiagram& b);

}  // namespace coxiso

#endif
