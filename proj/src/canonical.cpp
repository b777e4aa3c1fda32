#include "coxiso/canonical.hpp"

#include <algorithm>
#include <sstream>

#include "coxiso/errors.hpp"

namespace coxiso {

namespace {

// Backtracking search for the lexicographically minimal column-block
// encoding: placing vertex v_k appends the block (m(v_k,v_0),...,m(v_k,v_{k-1}))
// with infinity coded 0, so the encoding grows monotonically with the placed
// prefix and greedy-minimal blocks plus exhaustive ties give the true minimum.
//
// Two prunes keep this fast on symmetric diagrams:
//   - only candidates achieving the minimal block at a level are explored;
//   - "twins" (vertices with identical labels to every third vertex) are
//     interchangeable by a transposition automorphism, so one per class
//     suffices among the unplaced.
class Canonicalizer {
 public:
  explicit Canonicalizer(const PDiagram& d) : d_(d), n_(d.rank()) {
    twin_rep_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      twin_rep_[v] = v;
      for (int u = 0; u < v; ++u) {
        if (twin_rep_[u] != u) continue;
        bool twin = true;
        for (int x = 0; x < n_ && twin; ++x)
          if (x != u && x != v && d_.code_at(u, x) != d_.code_at(v, x)) twin = false;
        if (twin) {
          twin_rep_[v] = u;
          break;
        }
      }
    }
  }

  std::vector<int> run() {
    dfs();
    return best_order_;
  }

 private:
  // -1: current prefix beats the incumbent, 0: equal so far, +1: prune.
  int compare_prefix() const {
    if (best_order_.empty()) return -1;
    for (size_t i = 0; i < enc_.size(); ++i) {
      if (enc_[i] < best_enc_[i]) return -1;
      if (enc_[i] > best_enc_[i]) return 1;
    }
    return 0;
  }

  void dfs() {
    int cmp = compare_prefix();
    if (cmp > 0) return;

    int k = static_cast<int>(placed_.size());
    if (k == n_) {
      if (cmp < 0) {
        best_enc_ = enc_;
        best_order_ = placed_;
      }
      return;
    }

    std::vector<int> min_block;
    std::vector<int> keep;
    std::vector<int> block(k);
    for (int v = 0; v < n_; ++v) {
      if (used_ & bit(v)) continue;
      for (int i = 0; i < k; ++i) block[i] = d_.code_at(v, placed_[i]);
      if (keep.empty() || block < min_block) {
        min_block = block;
        keep.assign(1, v);
      } else if (block == min_block) {
        keep.push_back(v);
      }
    }

    for (int v : keep) {
      if (smaller_unplaced_twin(v)) continue;
      placed_.push_back(v);
      used_ |= bit(v);
      enc_.insert(enc_.end(), min_block.begin(), min_block.end());
      dfs();
      enc_.resize(enc_.size() - k);
      used_ &= ~bit(v);
      placed_.pop_back();
    }
  }

  bool smaller_unplaced_twin(int v) const {
    for (int u = 0; u < v; ++u)
      if (!(used_ & bit(u)) && twin_rep_[u] == twin_rep_[v]) return true;
    return false;
  }

  const PDiagram& d_;
  int n_;
  std::vector<int> twin_rep_;
  std::vector<int> placed_;
  VertexMask used_ = 0;
  std::vector<int> enc_;
  std::vector<int> best_enc_;
  std::vector<int> best_order_;
};

std::string encode(const PDiagram& d, const std::vector<int>& order) {
  std::ostringstream out;
  out << "n=" << d.rank() << ';';
  for (size_t k = 1; k < order.size(); ++k) {
    for (size_t i = 0; i < k; ++i) {
      int code = d.code_at(order[k], order[i]);
      if (code == CoxeterLabel::kInfiniteCode)
        out << '-';
      else
        out << code;
      out << ',';
    }
  }
  return out.str();
}

}  // namespace

std::vector<int> canonical_ordering(const PDiagram& d) {
  if (d.rank() == 0) return {};
  Canonicalizer c(d);
  auto order = c.run();
  if (static_cast<int>(order.size()) != d.rank())
    fail(Errc::invariant_violation, "canonical search returned no ordering");
  return order;
}

CanonicalForm canonical_form(const PDiagram& d) {
  return CanonicalForm{encode(d, canonical_ordering(d))};
}

std::vector<std::pair<std::string, std::string>> diagram_isomorphism(const PDiagram& a,
                                                                     const PDiagram& b) {
  if (a.rank() != b.rank()) return {};
  auto oa = canonical_ordering(a);
  auto ob = canonical_ordering(b);
  if (encode(a, oa) != encode(b, ob)) return {};
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t k = 0; k < oa.size(); ++k) out.emplace_back(a.name_of(oa[k]), b.name_of(ob[k]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxiso
