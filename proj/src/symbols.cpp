#include "wordeq/symbols.hpp"

#include <cctype>

#include "wordeq/errors.hpp"

namespace wordeq {

SymbolTable::SymbolTable() {
  by_char_.fill(-1);
  infos_.push_back({SymbolKind::EndMarker, {}, "@"});
}

SymbolId SymbolTable::intern(char c) {
  const auto uc = static_cast<unsigned char>(c);
  if (uc >= 128 || !std::isalpha(uc)) {
    throw ParseError(std::string("illegal symbol character '") + c + "'");
  }
  if (by_char_[uc] >= 0) return static_cast<SymbolId>(by_char_[uc]);
  const auto kind = std::islower(uc) ? SymbolKind::Letter : SymbolKind::Variable;
  const auto id = static_cast<SymbolId>(infos_.size());
  infos_.push_back({kind, {}, std::string(1, c)});
  by_char_[uc] = id;
  return id;
}

std::int64_t SymbolTable::find(char c) const {
  const auto uc = static_cast<unsigned char>(c);
  if (uc >= 128) return -1;
  return by_char_[uc];
}

SymbolId SymbolTable::fresh_letter(OriginKind kind, int phase) {
  const auto id = static_cast<SymbolId>(infos_.size());
  infos_.push_back({SymbolKind::Letter, {kind, phase}, "[" + std::to_string(id) + "]"});
  return id;
}

void SymbolTable::truncate(std::size_t n) {
  if (n >= infos_.size()) return;
  for (auto& slot : by_char_) {
    if (slot >= static_cast<std::int64_t>(n)) slot = -1;
  }
  infos_.resize(n);
}

}  // namespace wordeq
