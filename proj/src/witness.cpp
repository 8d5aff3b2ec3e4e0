#include "wordeq/witness.hpp"

#include "wordeq/errors.hpp"

namespace wordeq {

RuleExpander::RuleExpander(const DerivationLog& log, const SymbolTable& symbols) : symbols_(&symbols) {
  for (const auto& e : log.entries()) {
    SymbolId fresh = 0;
    if (const auto* p = std::get_if<PairRule>(&e)) {
      if (p->left >= p->fresh || p->right >= p->fresh) throw DanglingRule("pair rule refers forward");
      fresh = p->fresh;
    } else if (const auto* b = std::get_if<BlockRule>(&e)) {
      if (b->letter >= b->fresh) throw DanglingRule("block rule refers forward");
      fresh = b->fresh;
    } else {
      continue;
    }
    if (!rules_.emplace(fresh, &e).second) throw DanglingRule("two rules for symbol " + std::to_string(fresh));
  }
}

const Word& RuleExpander::expand(SymbolId letter) {
  if (auto it = memo_.find(letter); it != memo_.end()) return it->second;
  Word out;
  auto rule = rules_.find(letter);
  if (rule == rules_.end()) {
    if (letter >= symbols_->size() || !symbols_->is_letter(letter) || !symbols_->is_input(letter)) {
      throw DanglingRule("no rule for symbol " + std::to_string(letter));
    }
    out.push_back(letter);
  } else if (const auto* p = std::get_if<PairRule>(rule->second)) {
    out = expand(p->left);
    const auto& right = expand(p->right);
    out.insert(out.end(), right.begin(), right.end());
  } else {
    const auto& b = std::get<BlockRule>(*rule->second);
    const Word part = expand(b.letter);
    for (std::size_t i = 0; i < b.length; ++i) out.insert(out.end(), part.begin(), part.end());
  }
  return memo_.emplace(letter, std::move(out)).first->second;
}

Word RuleExpander::expand(const Word& w) {
  Word out;
  for (auto c : w) {
    const auto& e = expand(c);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

Substitution reconstruct_witness(const DerivationLog& log, const Equation& original,
                                 const Substitution& final_images) {
  RuleExpander expander(log, original.symbols());
  std::map<SymbolId, std::vector<const Word*>> left;
  std::map<SymbolId, std::vector<const Word*>> right;
  for (const auto& e : log.entries()) {
    if (const auto* pop = std::get_if<PopRecord>(&e)) {
      (pop->end == End::Left ? left : right)[pop->var].push_back(&pop->popped);
    }
  }
  Substitution sigma;
  for (auto x : original.variables()) {
    Word w;
    for (const auto* part : left[x]) {
      auto e = expander.expand(*part);
      w.insert(w.end(), e.begin(), e.end());
    }
    if (auto it = final_images.find(x); it != final_images.end()) {
      auto e = expander.expand(it->second);
      w.insert(w.end(), e.begin(), e.end());
    }
    const auto& rs = right[x];
    for (auto it = rs.rbegin(); it != rs.rend(); ++it) {
      auto e = expander.expand(**it);
      w.insert(w.end(), e.begin(), e.end());
    }
    sigma[x] = std::move(w);
  }
  return sigma;
}

}  // namespace wordeq
