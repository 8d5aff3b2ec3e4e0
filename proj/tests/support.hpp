#pragma once

#include <string>
#include <string_view>

#include "wordeq/equation.hpp"

namespace testsupport {

// Letters/variables of a plain string, interned into eq's table.
inline wordeq::Word word(wordeq::SymbolTable& table, std::string_view s) {
  wordeq::Word w;
  for (char c : s) w.push_back(table.intern(c));
  return w;
}

inline wordeq::Word word(const wordeq::Equation& eq, std::string_view s) { return word(*eq.table(), s); }

inline wordeq::SymbolId id(const wordeq::Equation& eq, char c) { return eq.table()->intern(c); }

// Symbols of one side without markers, as display text.
inline std::string side_text(const wordeq::Equation& eq, wordeq::Side s) {
  std::string out;
  const auto& occ = eq.side(s);
  for (std::size_t i = 1; i + 1 < occ.size(); ++i) out += eq.symbols().display(occ[i].symbol);
  return out;
}

inline wordeq::Substitution sub(const wordeq::Equation& eq,
                                std::initializer_list<std::pair<char, std::string_view>> images) {
  wordeq::Substitution s;
  for (const auto& [var, image] : images) s[id(eq, var)] = word(eq, image);
  return s;
}

}  // namespace testsupport
