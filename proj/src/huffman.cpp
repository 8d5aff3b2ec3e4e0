#include "wordeq/huffman.hpp"

#include <cmath>
#include <queue>
#include <tuple>
#include <vector>

#include "wordeq/errors.hpp"

namespace wordeq {

std::size_t CodeTable::length(SymbolId id) const { return code(id).size(); }

const std::string& CodeTable::code(SymbolId id) const {
  auto it = codes_.find(id);
  if (it == codes_.end()) throw MissingCode("no code for symbol " + std::to_string(id));
  return it->second;
}

std::size_t CodeTable::cost(const std::map<SymbolId, std::size_t>& freqs) const {
  std::size_t total = 0;
  for (const auto& [id, n] : freqs) total += n * length(id);
  return total;
}

bool CodeTable::prefix_free() const {
  for (auto a = codes_.begin(); a != codes_.end(); ++a) {
    for (auto b = codes_.begin(); b != codes_.end(); ++b) {
      if (a == b) continue;
      if (a->second.empty()) return false;
      if (b->second.compare(0, a->second.size(), a->second) == 0) return false;
    }
  }
  return true;
}

double CodeTable::kraft_sum() const {
  double s = 0;
  for (const auto& [id, c] : codes_) s += std::ldexp(1.0, -static_cast<int>(c.size()));
  return s;
}

CodeTable build_huffman(const std::map<SymbolId, std::size_t>& frequencies) {
  struct Node {
    std::size_t count;
    std::size_t seq;
    int left;
    int right;
    SymbolId symbol;
  };
  std::vector<Node> nodes;
  for (const auto& [id, n] : frequencies) {
    if (n > 0) nodes.push_back({n, nodes.size(), -1, -1, id});
  }
  if (nodes.empty()) throw EmptyInput("no symbol with positive frequency");
  if (nodes.size() == 1) return CodeTable({{nodes.front().symbol, "0"}});

  using Key = std::tuple<std::size_t, std::size_t, int>;  // count, seq, node index
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  for (std::size_t i = 0; i < nodes.size(); ++i) heap.emplace(nodes[i].count, nodes[i].seq, static_cast<int>(i));
  std::size_t next_seq = nodes.size();
  while (heap.size() > 1) {
    const auto [c0, s0, i0] = heap.top();
    heap.pop();
    const auto [c1, s1, i1] = heap.top();
    heap.pop();
    nodes.push_back({c0 + c1, next_seq++, i0, i1, 0});
    heap.emplace(c0 + c1, nodes.back().seq, static_cast<int>(nodes.size() - 1));
  }

  std::map<SymbolId, std::string> codes;
  std::vector<std::pair<int, std::string>> stack{{std::get<2>(heap.top()), ""}};
  while (!stack.empty()) {
    auto [idx, prefix] = std::move(stack.back());
    stack.pop_back();
    const auto& node = nodes[static_cast<std::size_t>(idx)];
    if (node.left < 0) {
      codes[node.symbol] = prefix;
    } else {
      stack.emplace_back(node.left, prefix + "0");
      stack.emplace_back(node.right, prefix + "1");
    }
  }
  return CodeTable(std::move(codes));
}

std::size_t encoded_size(const Equation& eq, const CodeTable& table) {
  std::size_t bits = 0;
  for (const auto* side : {&eq.lhs(), &eq.rhs()}) {
    for (const auto& o : *side) {
      if (o.symbol == eq.symbols().end_marker()) continue;
      bits += table.length(o.symbol);
    }
  }
  return bits;
}

std::map<SymbolId, std::size_t> symbol_frequencies(const Equation& eq, bool letters, bool variables) {
  std::map<SymbolId, std::size_t> freq;
  for (const auto* side : {&eq.lhs(), &eq.rhs()}) {
    for (const auto& o : *side) {
      if (o.symbol == eq.symbols().end_marker()) continue;
      const bool is_var = eq.symbols().is_variable(o.symbol);
      if ((is_var && variables) || (!is_var && letters)) ++freq[o.symbol];
    }
  }
  return freq;
}

EquationCoding rebuild_after_step(const Equation& eq) {
  EquationCoding out;
  const auto letter_freq = symbol_frequencies(eq, true, false);
  const auto var_freq = symbol_frequencies(eq, false, true);
  if (!letter_freq.empty()) {
    out.letters = build_huffman(letter_freq);
    out.letter_bits = out.letters.cost(letter_freq);
  }
  if (!var_freq.empty()) {
    out.variables = build_huffman(var_freq);
    out.variable_bits = out.variables.cost(var_freq);
  }
  auto joint = letter_freq;
  for (const auto& [id, n] : var_freq) joint[id] = n;
  for (const auto& [id, n] : joint) out.occurrences += n;
  if (out.occurrences > 0) {
    joint[kTerminatorSymbol] = out.occurrences;
    out.padded_bits = build_huffman(joint).cost(joint);
  }
  return out;
}

}  // namespace wordeq
