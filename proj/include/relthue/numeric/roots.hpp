#pragma once

#include <memory>
#include <vector>

#include "relthue/numeric/polynomial.hpp"

namespace relthue::numeric {

/// One certified root: the disk |z - center| <= radius contains exactly one
/// root of `poly`, and no other returned disk meets it.
struct Root {
  std::shared_ptr<const PolySpec> poly;
  CBall center;  // exact midpoint, zero radius
  Real radius;   // certified upper bound
  bool real = false;
  int digits = 0;

  /// Enclosure of the root as a rectangular ball.
  CBall value() const;
};

class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::vector<Root> roots);

  const std::vector<Root>& roots() const { return roots_; }
  const Root& operator[](size_t i) const { return roots_[i]; }
  size_t size() const { return roots_.size(); }
  bool all_real() const { return all_real_; }
  int digits() const;

  /// All roots refined to `target_digits`.
  RootSet refined(int target_digits) const;

 private:
  std::vector<Root> roots_;
  bool all_real_ = false;
};

/// All roots of `p`, certified distinct, each with radius <= 10^(5-digits).
/// Roots are ordered by real part, then imaginary part.
RootSet find_roots(const PolyZ& p, int digits);
RootSet find_roots(std::shared_ptr<const PolySpec> p, int digits);

/// Newton refinement of one isolated root. The returned disk is contained in
/// the input disk; a target at or below the current precision is a no-op.
Root refine(const Root& root, int target_digits);

}  // namespace relthue::numeric
