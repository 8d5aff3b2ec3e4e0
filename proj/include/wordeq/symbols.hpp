#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace wordeq {

using SymbolId = std::uint32_t;

enum class SymbolKind : std::uint8_t { Letter, Variable, EndMarker };

enum class OriginKind : std::uint8_t { Input, PairFresh, BlockFresh };

struct Origin {
  OriginKind kind = OriginKind::Input;
  int phase = 0;  // phase that created the letter; 0 for input symbols
};

struct SymbolInfo {
  SymbolKind kind;
  Origin origin;
  std::string display;
};

// Interns symbols. Input letters and variables are looked up by their
// character; fresh letters are appended with unbounded ids. The end marker
// always has id 0.
class SymbolTable {
 public:
  SymbolTable();

  SymbolId end_marker() const { return 0; }

  // Returns the id for an input character, creating it on first use.
  // Lowercase characters are letters, uppercase are variables.
  SymbolId intern(char c);

  // Returns the id for an input character if it was interned, else -1.
  std::int64_t find(char c) const;

  SymbolId fresh_letter(OriginKind kind, int phase);

  const SymbolInfo& operator[](SymbolId id) const { return infos_.at(id); }
  std::size_t size() const { return infos_.size(); }

  bool is_letter(SymbolId id) const { return infos_[id].kind == SymbolKind::Letter; }
  bool is_variable(SymbolId id) const { return infos_[id].kind == SymbolKind::Variable; }
  bool is_input(SymbolId id) const { return infos_[id].origin.kind == OriginKind::Input; }
  const std::string& display(SymbolId id) const { return infos_.at(id).display; }

  // Drops every symbol with id >= n. Used by backtracking search; the
  // caller guarantees no live equation refers to the dropped ids.
  void truncate(std::size_t n);

 private:
  std::vector<SymbolInfo> infos_;
  std::array<std::int64_t, 128> by_char_;
};

}  // namespace wordeq
