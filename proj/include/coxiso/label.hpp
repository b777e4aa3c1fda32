#ifndef COXISO_LABEL_HPP
#define COXISO_LABEL_HPP

#include <compare>
#include <string>

#include "coxiso/errors.hpp"

namespace coxiso {

// A Coxeter matrix entry for a pair of distinct generators: a finite value
// m >= 2, or infinity. Infinity is stored as 0 so that the raw code doubles
// as the matrix entry in the internal label tables.
class CoxeterLabel {
 public:
  static constexpr int kInfiniteCode = 0;

  constexpr CoxeterLabel() : code_(kInfiniteCode) {}

  static CoxeterLabel finite(int m) {
    if (m < 2) fail(Errc::malformed_input, "finite label must be >= 2, got " + std::to_string(m));
    CoxeterLabel l;
    l.code_ = m;
    return l;
  }
  static constexpr CoxeterLabel infinite() { return CoxeterLabel(); }
  static CoxeterLabel from_code(int code) {
    return code == kInfiniteCode ? infinite() : finite(code);
  }

  bool is_finite() const { return code_ != kInfiniteCode; }
  // Finite value; caller must check is_finite() first.
  int value() const;
  int code() const { return code_; }

  friend bool operator==(CoxeterLabel a, CoxeterLabel b) = default;

  std::string str() const { return is_finite() ? std::to_string(code_) : "inf"; }

 private:
  int code_;
};

inline int CoxeterLabel::value() const {
  if (!is_finite()) fail(Errc::invariant_violation, "value() on infinite label");
  return code_;
}

}  // namespace coxiso

#endif
