#include "wordeq/recompression.hpp"

#include <stdexcept>

#include "wordeq/depstate.hpp"
#include "wordeq/errors.hpp"

namespace wordeq {

namespace {

constexpr std::array<Side, 2> kSides{Side::Lhs, Side::Rhs};

Occurrence merged(const std::vector<Occurrence>& occ, std::size_t from, std::size_t to, SymbolId symbol) {
  Occurrence out{symbol, occ[from].dep};
  for (std::size_t k = from + 1; k < to; ++k) out.dep.absorb(occ[k].dep);
  return out;
}

template <typename Guess>
const Guess& guess_for(const std::map<SymbolId, Guess>& guesses, SymbolId var, const SymbolTable& symbols) {
  auto it = guesses.find(var);
  if (it == guesses.end()) throw InconsistentGuess("no guess for variable " + symbols.display(var));
  return it->second;
}

}  // namespace

std::string DerivationLog::render(const SymbolTable& symbols) const {
  std::string out;
  for (const auto& e : entries_) {
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          out += "phase " + std::to_string(r.phase) + ": ";
          if constexpr (std::is_same_v<T, PairRule>) {
            out += symbols.display(r.fresh) + " <- " + symbols.display(r.left) + symbols.display(r.right);
          } else if constexpr (std::is_same_v<T, BlockRule>) {
            out += symbols.display(r.fresh) + " <- " + symbols.display(r.letter) + "^" + std::to_string(r.length);
          } else if constexpr (std::is_same_v<T, PopRecord>) {
            out += "pop " + symbols.display(r.var) + (r.end == End::Left ? " left " : " right ") +
                   render_word(symbols, r.popped);
          } else {
            out += "remove " + symbols.display(r.var);
          }
          out += "\n";
        },
        e);
  }
  return out;
}

SymbolId FreshLetters::pair(SymbolId a, SymbolId b) {
  auto [it, inserted] = pairs_.try_emplace({a, b}, 0);
  if (inserted) {
    it->second = symbols_->fresh_letter(OriginKind::PairFresh, phase_);
    log_->append(PairRule{it->second, a, b, phase_});
  }
  return it->second;
}

SymbolId FreshLetters::block(SymbolId a, std::size_t length) {
  auto [it, inserted] = blocks_.try_emplace({a, length}, 0);
  if (inserted) {
    it->second = symbols_->fresh_letter(OriginKind::BlockFresh, phase_);
    log_->append(BlockRule{it->second, a, length, phase_});
  }
  return it->second;
}

Word block_compress_string(const Word& w, const LetterSet& gamma, FreshLetters& fresh) {
  Word out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i + 1;
    if (gamma.contains(w[i])) {
      while (j < w.size() && w[j] == w[i]) ++j;
    }
    out.push_back(j - i >= 2 ? fresh.block(w[i], j - i) : w[i]);
    i = j;
  }
  return out;
}

Word pair_compress_string(const Word& w, const Partition& p, FreshLetters& fresh) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i + 1 < w.size() && p.in_left(w[i]) && p.in_right(w[i + 1])) {
      out.push_back(fresh.pair(w[i], w[i + 1]));
      ++i;
    } else {
      out.push_back(w[i]);
    }
  }
  return out;
}

Equation pop_blocks(const Equation& eq, const BlockPops& guesses, DerivationLog& log, int phase,
                    DepCounters* counters) {
  const auto& symbols = eq.symbols();
  for (auto x : eq.variables()) {
    const auto& g = guess_for(guesses, x, symbols);
    if (g.vanish) {
      log.append(RemovedRecord{x, phase});
      continue;
    }
    if (g.left_exp == 0) throw InconsistentGuess("block pop of " + symbols.display(x) + " with l = 0");
    if (!symbols.is_letter(g.first) || (g.right_exp > 0 && !symbols.is_letter(g.last))) {
      throw InconsistentGuess("block pop of a non-letter for " + symbols.display(x));
    }
    if (g.empty && g.right_exp > 0 && g.first == g.last) {
      throw InconsistentGuess("prefix of " + symbols.display(x) + " is not maximal");
    }
    log.append(PopRecord{x, End::Left, Word(g.left_exp, g.first), phase});
    if (g.right_exp > 0) log.append(PopRecord{x, End::Right, Word(g.right_exp, g.last), phase});
    if (g.empty) log.append(RemovedRecord{x, phase});
  }

  std::array<std::vector<Occurrence>, 2> sides;
  for (auto s : kSides) {
    auto& out = sides[static_cast<std::size_t>(s)];
    for (const auto& o : eq.side(s)) {
      if (!symbols.is_variable(o.symbol)) {
        out.push_back(o);
        continue;
      }
      const auto& g = guesses.at(o.symbol);
      if (g.vanish) continue;
      for (std::size_t k = 0; k < g.left_exp; ++k) out.push_back({g.first, o.dep});
      if (!g.empty) out.push_back(o);
      for (std::size_t k = 0; k < g.right_exp; ++k) out.push_back({g.last, o.dep});
      if (counters != nullptr) {
        counters->add_pop(o.dep);
        if (g.right_exp > 0) counters->add_pop(o.dep);
      }
    }
  }
  Equation next = eq;
  next.set_sides(std::move(sides[0]), std::move(sides[1]));
  return next;
}

Equation block_compress_equation(const Equation& eq, const LetterSet& gamma, FreshLetters& fresh) {
  std::array<std::vector<Occurrence>, 2> sides;
  for (auto s : kSides) {
    const auto& occ = eq.side(s);
    auto& out = sides[static_cast<std::size_t>(s)];
    std::size_t i = 0;
    while (i < occ.size()) {
      std::size_t j = i + 1;
      if (gamma.contains(occ[i].symbol)) {
        while (j < occ.size() && occ[j].symbol == occ[i].symbol) ++j;
      }
      if (j - i >= 2) {
        out.push_back(merged(occ, i, j, fresh.block(occ[i].symbol, j - i)));
      } else {
        out.push_back(occ[i]);
      }
      i = j;
    }
  }
  Equation next = eq;
  next.set_sides(std::move(sides[0]), std::move(sides[1]));
  return next;
}

Equation pop_letters(const Equation& eq, const Partition& p, const PairPops& guesses, DerivationLog& log,
                     int phase, DepCounters* counters) {
  const auto& symbols = eq.symbols();
  for (auto x : eq.variables()) {
    const auto& g = guess_for(guesses, x, symbols);
    if (g.left && !p.in_right(*g.left)) {
      throw IllegalPop(symbols.display(*g.left) + " popped left of " + symbols.display(x) + " is not in the right set");
    }
    if (g.right && !p.in_left(*g.right)) {
      throw IllegalPop(symbols.display(*g.right) + " popped right of " + symbols.display(x) + " is not in the left set");
    }
    if (g.empty && !g.left && !g.right) {
      throw InconsistentGuess(symbols.display(x) + " cannot become empty without popping");
    }
    if (g.left) log.append(PopRecord{x, End::Left, Word{*g.left}, phase});
    if (g.right) log.append(PopRecord{x, End::Right, Word{*g.right}, phase});
    if (g.empty) log.append(RemovedRecord{x, phase});
  }

  std::array<std::vector<Occurrence>, 2> sides;
  for (auto s : kSides) {
    auto& out = sides[static_cast<std::size_t>(s)];
    for (const auto& o : eq.side(s)) {
      if (!symbols.is_variable(o.symbol)) {
        out.push_back(o);
        continue;
      }
      const auto& g = guesses.at(o.symbol);
      if (g.left) out.push_back({*g.left, o.dep});
      if (!g.empty) out.push_back(o);
      if (g.right) out.push_back({*g.right, o.dep});
      if (counters != nullptr) {
        if (g.left) counters->add_pop(o.dep);
        if (g.right) counters->add_pop(o.dep);
      }
    }
  }
  Equation next = eq;
  next.set_sides(std::move(sides[0]), std::move(sides[1]));
  return next;
}

Equation pair_compress_equation(const Equation& eq, const Partition& p, FreshLetters& fresh,
                                CoverageState& coverage) {
  std::array<std::vector<Occurrence>, 2> sides;
  for (auto s : kSides) {
    const auto& occ = eq.side(s);
    auto& out = sides[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (i + 1 < occ.size() && p.in_left(occ[i].symbol) && p.in_right(occ[i + 1].symbol)) {
        out.push_back(merged(occ, i, i + 2, fresh.pair(occ[i].symbol, occ[i + 1].symbol)));
        ++i;
      } else {
        out.push_back(occ[i]);
      }
    }
  }
  coverage.cover(p);
  Equation next = eq;
  next.set_sides(std::move(sides[0]), std::move(sides[1]));
  return next;
}

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::BlockPop: return "block_pop";
    case StepKind::BlockExtend: return "block_extend";
    case StepKind::BlockCompress: return "block_compress";
    case StepKind::PairPop: return "pair_pop";
    case StepKind::PairExtend: return "pair_extend";
    case StepKind::PairCompress: return "pair_compress";
  }
  return "?";
}

Equation run_phase(Equation eq, int phase, PhaseDriver& driver, DerivationLog& log, const PhaseOptions& options,
                   DepCounters* counters) {
  PhaseState st;
  st.phase = phase;
  st.alphabet = eq.letters();
  st.gamma = LetterSet(st.alphabet);
  st.coverage = CoverageState(st.alphabet);
  const bool tracked = eq.tracks_depfactors();
  if (!tracked) counters = nullptr;
  driver.on_phase_start(eq, st);

  EquationCoding coding;
  auto emit = [&](StepEvent ev) {
    coding = rebuild_after_step(eq);
    if (options.space_cap_bits > 0 && coding.total_bits() > options.space_cap_bits) {
      throw SpaceCapExceeded(std::to_string(coding.total_bits()) + " bits > cap " +
                             std::to_string(options.space_cap_bits));
    }
    ev.coding = &coding;
    driver.on_step(eq, st, ev);
  };

  const auto block_guess = driver.block_pops(eq, st);
  eq = pop_blocks(eq, block_guess, log, phase, counters);
  emit({StepKind::BlockPop, &block_guess});
  if (tracked) {
    extend_for_block(eq, st.gamma, counters);
    emit({StepKind::BlockExtend});
  }
  {
    FreshLetters fresh(eq.symbols(), log, phase);
    eq = block_compress_equation(eq, st.gamma, fresh);
    emit({StepKind::BlockCompress, nullptr, nullptr, nullptr, &fresh});
  }

  std::size_t idle = 0;
  while (st.coverage.uncovered() > 0) {
    const Partition p = driver.next_partition(eq, st);
    const auto gained = st.coverage.newly_covered(p);
    const auto pair_guess = driver.pair_pops(eq, p, st);
    eq = pop_letters(eq, p, pair_guess, log, phase, counters);
    emit({StepKind::PairPop, nullptr, &pair_guess, &p});
    if (tracked) {
      extend_for_pair(eq, p, counters);
      emit({StepKind::PairExtend, nullptr, nullptr, &p});
    }
    FreshLetters fresh(eq.symbols(), log, phase);
    eq = pair_compress_equation(eq, p, fresh, st.coverage);
    ++st.partitions;
    emit({StepKind::PairCompress, nullptr, nullptr, &p, &fresh});
    idle = gained > 0 ? 0 : idle + 1;
    if (idle > options.max_idle_partitions) {
      throw std::logic_error("partition source stopped covering new pairs");
    }
  }
  return eq;
}

BlockPops block_pops_from_solution(const Equation& eq, const Substitution& sigma) {
  BlockPops out;
  for (auto x : eq.variables()) {
    auto it = sigma.find(x);
    if (it == sigma.end()) throw MissingVariable(eq.symbols().display(x));
    const auto& w = it->second;
    if (w.empty()) {
      out[x] = BlockPop::vanished();
      continue;
    }
    BlockPop g;
    g.first = w.front();
    while (g.left_exp < w.size() && w[g.left_exp] == g.first) ++g.left_exp;
    const auto rest = w.size() - g.left_exp;
    if (rest == 0) {
      g.last = g.first;
      g.empty = true;
    } else {
      g.last = w.back();
      while (g.right_exp < rest && w[w.size() - 1 - g.right_exp] == g.last) ++g.right_exp;
      g.empty = g.right_exp == rest;
    }
    out[x] = g;
  }
  return out;
}

PairPops pair_pops_from_solution(const Equation& eq, const Partition& p, const Substitution& sigma) {
  PairPops out;
  for (auto x : eq.variables()) {
    auto it = sigma.find(x);
    if (it == sigma.end()) throw MissingVariable(eq.symbols().display(x));
    const auto& w = it->second;
    PairPop g;
    std::size_t lo = 0;
    std::size_t hi = w.size();
    if (lo < hi && p.in_right(w[lo])) g.left = w[lo++];
    if (lo < hi && p.in_left(w[hi - 1])) g.right = w[--hi];
    g.empty = (g.left || g.right) && lo == hi;
    out[x] = g;
  }
  return out;
}

void GroundDriver::on_phase_start(const Equation& /*eq*/, const PhaseState& st) {
  schedule_ = canonical_schedule(st.alphabet);
}

Partition GroundDriver::next_partition(const Equation& /*eq*/, const PhaseState& st) {
  if (st.partitions >= schedule_.size()) throw std::logic_error("canonical schedule exhausted");
  return schedule_[st.partitions];
}

Word compress_phase(const Word& w, const std::shared_ptr<SymbolTable>& symbols, DerivationLog& log, int phase) {
  if (w.empty()) return {};
  Equation eq = make_equation(symbols, w, w);
  eq.untrack_depfactors();
  GroundDriver driver;
  eq = run_phase(std::move(eq), phase, driver, log);
  Word out;
  const auto& lhs = eq.lhs();
  for (std::size_t i = 1; i + 1 < lhs.size(); ++i) out.push_back(lhs[i].symbol);
  return out;
}

}  // namespace wordeq
