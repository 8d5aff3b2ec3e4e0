#include "wordeq/alphabet.hpp"

#include "wordeq/errors.hpp"

namespace wordeq {

LetterSet::LetterSet(const std::vector<SymbolId>& ids) {
  for (auto id : ids) insert(id);
}

void LetterSet::insert(SymbolId id) {
  if (id >= bits_.size()) bits_.resize(id + 1, false);
  if (bits_[id]) return;
  bits_[id] = true;
  items_.push_back(id);
}

Partition::Partition(const std::vector<SymbolId>& left, const std::vector<SymbolId>& right)
    : left_(left), right_(right) {
  for (auto id : right) {
    if (left_.contains(id)) throw PartitionNotDisjoint("letter " + std::to_string(id) + " on both sides");
  }
}

std::string Partition::to_string(const SymbolTable& symbols) const {
  std::string s = "({";
  for (std::size_t i = 0; i < left().size(); ++i) s += (i ? "," : "") + symbols.display(left()[i]);
  s += "},{";
  for (std::size_t i = 0; i < right().size(); ++i) s += (i ? "," : "") + symbols.display(right()[i]);
  return s + "})";
}

Partition partition_from_mask(const std::vector<SymbolId>& alphabet, std::uint64_t mask) {
  std::vector<SymbolId> left;
  std::vector<SymbolId> right;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    ((mask >> i) & 1U ? right : left).push_back(alphabet[i]);
  }
  return Partition(left, right);
}

CoverageState::CoverageState(const std::vector<SymbolId>& alphabet) : alphabet_(alphabet) {
  const auto m = alphabet_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto id = alphabet_[i];
    if (id >= index_.size()) index_.resize(id + 1, -1);
    index_[id] = static_cast<std::ptrdiff_t>(i);
  }
  matrix_.assign(m * m, false);
  uncovered_ = m * (m > 0 ? m - 1 : 0);
}

std::ptrdiff_t CoverageState::index_of(SymbolId id) const {
  return id < index_.size() ? index_[id] : -1;
}

bool CoverageState::covered(SymbolId a, SymbolId b) const {
  const auto i = index_of(a);
  const auto j = index_of(b);
  if (i < 0 || j < 0 || i == j) return false;
  return matrix_[static_cast<std::size_t>(i) * alphabet_.size() + static_cast<std::size_t>(j)];
}

std::size_t CoverageState::newly_covered(const Partition& p) const {
  std::size_t n = 0;
  for (auto a : p.left()) {
    for (auto b : p.right()) {
      const auto i = index_of(a);
      const auto j = index_of(b);
      if (i >= 0 && j >= 0 && !matrix_[static_cast<std::size_t>(i) * alphabet_.size() + static_cast<std::size_t>(j)]) ++n;
    }
  }
  return n;
}

void CoverageState::cover(const Partition& p) {
  for (auto a : p.left()) {
    for (auto b : p.right()) {
      const auto i = index_of(a);
      const auto j = index_of(b);
      if (i < 0 || j < 0) continue;
      auto cell = matrix_[static_cast<std::size_t>(i) * alphabet_.size() + static_cast<std::size_t>(j)];
      if (!cell) {
        cell = true;
        --uncovered_;
      }
    }
  }
}

std::vector<Partition> canonical_schedule(const std::vector<SymbolId>& alphabet) {
  std::vector<Partition> out;
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < alphabet.size()) ++bits;
  for (std::size_t b = 0; b < bits; ++b) {
    std::vector<SymbolId> zero;
    std::vector<SymbolId> one;
    for (std::size_t i = 0; i < alphabet.size(); ++i) ((i >> b) & 1U ? one : zero).push_back(alphabet[i]);
    out.emplace_back(zero, one);
    out.emplace_back(one, zero);
  }
  return out;
}

}  // namespace wordeq
