#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wordeq/symbols.hpp"

namespace wordeq {

// Dense membership set over symbol ids.
class LetterSet {
 public:
  LetterSet() = default;
  explicit LetterSet(const std::vector<SymbolId>& ids);

  bool contains(SymbolId id) const { return id < bits_.size() && bits_[id]; }
  void insert(SymbolId id);
  const std::vector<SymbolId>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

 private:
  std::vector<bool> bits_;
  std::vector<SymbolId> items_;
};

// Disjoint pair of letter sets (left, right) used by pair compression.
class Partition {
 public:
  Partition() = default;
  // Throws PartitionNotDisjoint if the sets intersect.
  Partition(const std::vector<SymbolId>& left, const std::vector<SymbolId>& right);

  bool in_left(SymbolId id) const { return left_.contains(id); }
  bool in_right(SymbolId id) const { return right_.contains(id); }
  const std::vector<SymbolId>& left() const { return left_.items(); }
  const std::vector<SymbolId>& right() const { return right_.items(); }

  std::string to_string(const SymbolTable& symbols) const;

 private:
  LetterSet left_;
  LetterSet right_;
};

// Builds the partition that sends alphabet[i] right iff bit i of mask is set.
Partition partition_from_mask(const std::vector<SymbolId>& alphabet, std::uint64_t mask);

// Ordered pairs (a, b), a != b, of the phase-start alphabet already covered
// by some applied partition.
class CoverageState {
 public:
  CoverageState() = default;
  explicit CoverageState(const std::vector<SymbolId>& alphabet);

  const std::vector<SymbolId>& alphabet() const { return alphabet_; }
  std::size_t uncovered() const { return uncovered_; }
  bool covered(SymbolId a, SymbolId b) const;
  // Number of still-uncovered pairs the partition would cover.
  std::size_t newly_covered(const Partition& p) const;
  void cover(const Partition& p);

 private:
  std::ptrdiff_t index_of(SymbolId id) const;

  std::vector<SymbolId> alphabet_;
  std::vector<std::ptrdiff_t> index_;
  std::vector<bool> matrix_;
  std::size_t uncovered_ = 0;
};

// Bit-split schedule: for bit i < ceil(log2 m), letters with bit i clear go
// left and the rest right, followed by the complement. Covers every ordered
// distinct pair in at most 2 ceil(log2 m) partitions.
std::vector<Partition> canonical_schedule(const std::vector<SymbolId>& alphabet);

}  // namespace wordeq
