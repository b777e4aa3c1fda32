#ifndef COXISO_ERRORS_HPP
#define COXISO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxiso {

// Every failure mode named by an operation contract maps to one of these.
enum class Errc {
  malformed_input,
  unknown_generator,
  same_pair,
  adjacent_pair,
  not_irreducible,
  not_spherical,
  not_chordal,
  not_a_bad_edge,
  no_bad_separators,
  invalid_move,
  invalid_plan,
  not_a_base,
  orbit_truncated,
  invariant_violation,
};

const char* errc_name(Errc kind);

class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what),
        kind_(kind) {}

  Errc kind() const { return kind_; }

 private:
  Errc kind_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace coxiso

#endif
