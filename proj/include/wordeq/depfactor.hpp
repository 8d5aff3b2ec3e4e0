#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wordeq {

enum class Side : std::uint8_t { Lhs = 0, Rhs = 1 };

inline const char* side_name(Side s) { return s == Side::Lhs ? "lhs" : "rhs"; }

// Closed range of basic positions.
struct Interval {
  std::uint32_t lo;
  std::uint32_t hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A set of basic positions of the original (endmarker-augmented) equation,
// all on one side, kept as sorted, disjoint, non-touching intervals.
// A default-constructed depfactor is "untracked" (no positions); blind search
// runs without depfactor bookkeeping.
class Depfactor {
 public:
  Depfactor() = default;
  static Depfactor basic(Side side, std::uint32_t pos);
  static Depfactor from_positions(Side side, std::vector<std::uint32_t> positions);

  bool tracked() const { return !parts_.empty(); }
  Side side() const { return side_; }
  std::uint32_t min() const { return parts_.front().lo; }
  std::uint32_t max() const { return parts_.back().hi; }
  bool contains(std::uint32_t pos) const;
  std::size_t count() const;
  const std::vector<Interval>& parts() const { return parts_; }
  std::vector<std::uint32_t> positions() const;

  // Set union with a depfactor of the same side; no order check.
  void absorb(const Depfactor& other);

  std::string to_string() const;

  friend bool operator==(const Depfactor&, const Depfactor&) = default;

 private:
  Side side_ = Side::Lhs;
  std::vector<Interval> parts_;
};

// Partial order on depfactors: every LHS depfactor precedes every RHS one;
// on one side D <= D' iff min D <= min D' and max D <= max D'.
bool depfactor_le(const Depfactor& a, const Depfactor& b);
bool comparable(const Depfactor& a, const Depfactor& b);

// Sum of two comparable same-side depfactors; duplicates collapse.
// Throws IncomparableDepfactors otherwise.
Depfactor sum_depfactors(const Depfactor& a, const Depfactor& b);

}  // namespace wordeq
