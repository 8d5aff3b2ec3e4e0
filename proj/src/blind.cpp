#include "wordeq/blind.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <numeric>
#include <unordered_map>

#include "wordeq/alphabet.hpp"
#include "wordeq/errors.hpp"
#include "wordeq/huffman.hpp"
#include "wordeq/recompression.hpp"
#include "wordeq/witness.hpp"

namespace wordeq {

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Sat: return "SAT";
    case VerdictKind::UnsatWithinBounds: return "UNSAT_WITHIN_BOUNDS";
    case VerdictKind::Unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMemoLimit = 2'000'000;

// Rewrites every occurrence of x as left x right (x dropped when keep is false).
Equation replace_variable(const Equation& eq, SymbolId x, const Word& left, bool keep, const Word& right) {
  std::array<std::vector<Occurrence>, 2> sides;
  for (auto s : {Side::Lhs, Side::Rhs}) {
    auto& out = sides[static_cast<std::size_t>(s)];
    for (const auto& o : eq.side(s)) {
      if (o.symbol != x) {
        out.push_back(o);
        continue;
      }
      for (auto c : left) out.push_back({c, {}});
      if (keep) out.push_back(o);
      for (auto c : right) out.push_back({c, {}});
    }
  }
  Equation next = eq;
  next.set_sides(std::move(sides[0]), std::move(sides[1]));
  return next;
}

// Ground prefixes and suffixes must agree, and letter counts must be
// reachable given the signs of the variable count differences. With
// `nonempty` every variable is known to have a non-empty image, which also
// bounds the total length.
bool consistent(const Equation& eq, bool nonempty) {
  const auto& symbols = eq.symbols();
  const auto& u = eq.lhs();
  const auto& v = eq.rhs();
  auto ground_mismatch = [&](auto ui, auto vi, auto ue, auto ve) {
    for (; ui != ue && vi != ve; ++ui, ++vi) {
      const bool ul = symbols.is_letter(ui->symbol);
      const bool vl = symbols.is_letter(vi->symbol);
      if (ul && vl) {
        if (ui->symbol != vi->symbol) return true;
        continue;
      }
      if (symbols.is_variable(ui->symbol) || symbols.is_variable(vi->symbol)) return false;
      // One side ended: the other must end too.
      return ul || vl;
    }
    return false;
  };
  if (ground_mismatch(u.begin() + 1, v.begin() + 1, u.end(), v.end())) return false;
  if (ground_mismatch(u.rbegin() + 1, v.rbegin() + 1, u.rend(), v.rend())) return false;

  std::map<SymbolId, long long> var_diff;
  std::map<SymbolId, long long> letter_diff;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    (symbols.is_variable(u[i].symbol) ? var_diff : letter_diff)[u[i].symbol] += 1;
  }
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    (symbols.is_variable(v[i].symbol) ? var_diff : letter_diff)[v[i].symbol] -= 1;
  }
  bool pos = false;
  bool neg = false;
  long long g = 0;
  for (const auto& [x, d] : var_diff) {
    pos = pos || d > 0;
    neg = neg || d < 0;
    g = std::gcd(g, d);
  }
  // sum_X d_X |sigma(X)|_a = -letter_diff[a] for every letter a.
  long long letters = 0;
  for (const auto& [a, d] : letter_diff) {
    letters += d;
    if (d == 0) continue;
    if (d > 0 && !neg) return false;
    if (d < 0 && !pos) return false;
    if (g != 0 && d % g != 0) return false;
  }
  if (nonempty) {
    // sum_X d_X L_X = -letters with every L_X >= 1.
    long long least = 0;
    for (const auto& [x, d] : var_diff) least += d;
    if (!neg && -letters < least) return false;
    if (!pos && -letters > least) return false;
  }
  return true;
}

// Drops equal leading and trailing symbols of both sides.
Equation cancel_common(const Equation& eq) {
  const auto& u = eq.lhs();
  const auto& v = eq.rhs();
  std::size_t head = 1;
  while (head + 1 < u.size() && head + 1 < v.size() && u[head].symbol == v[head].symbol) ++head;
  std::size_t tail = 0;
  while (tail + head + 1 < u.size() && tail + head + 1 < v.size() &&
         u[u.size() - 2 - tail].symbol == v[v.size() - 2 - tail].symbol) {
    ++tail;
  }
  if (head == 1 && tail == 0) return eq;
  auto cut = [&](const std::vector<Occurrence>& side) {
    std::vector<Occurrence> out;
    out.push_back(side.front());
    out.insert(out.end(), side.begin() + static_cast<std::ptrdiff_t>(head),
               side.end() - 1 - static_cast<std::ptrdiff_t>(tail));
    out.push_back(side.back());
    return out;
  };
  Equation next = eq;
  next.set_sides(cut(u), cut(v));
  return next;
}

// Letters an image can start (or end) with. `fresh` stands for any letter
// created during the current phase.
struct EndSet {
  std::vector<SymbolId> letters;
  bool fresh = false;

  bool has(SymbolId c, const LetterSet& gamma) const {
    if (!gamma.contains(c)) return fresh;
    return std::find(letters.begin(), letters.end(), c) != letters.end();
  }
  bool meets(const EndSet& o) const {
    if (fresh && o.fresh) return true;
    for (auto c : letters) {
      if (std::find(o.letters.begin(), o.letters.end(), c) != o.letters.end()) return true;
    }
    return false;
  }
};

struct Ends {
  EndSet first;
  EndSet last;
};

// Known ends of variables whose image is non-empty.
using EndMap = std::map<SymbolId, Ends>;

EndSet all_letters(const std::vector<SymbolId>& alphabet) { return {alphabet, false}; }

// The letter after a popped block or popped letter c differs from c, and
// may already be a compressed one.
EndSet after_pop(const std::vector<SymbolId>& alphabet, SymbolId c) {
  EndSet out{{}, true};
  for (auto a : alphabet) {
    if (a != c) out.letters.push_back(a);
  }
  return out;
}

// End letter left in place by a pair step: at the front it is not in R
// (else it would have been popped) and gets compressed when it is in L;
// the back mirrors this.
EndSet kept_end(const EndSet& s, const Partition& p, bool front) {
  EndSet out{{}, s.fresh};
  for (auto c : s.letters) {
    if (front ? p.in_right(c) : p.in_left(c)) continue;
    out.letters.push_back(c);
    if (front ? p.in_left(c) : p.in_right(c)) out.fresh = true;
  }
  return out;
}

bool can_keep(const EndSet& s, const Partition& p, bool front) {
  if (s.fresh) return true;
  for (auto c : s.letters) {
    if (!(front ? p.in_right(c) : p.in_left(c))) return true;
  }
  return false;
}

// The first symbols where the sides stop agreeing letter for letter must be
// compatible with the known end letters.
bool ends_clash(const Equation& eq, const EndMap& ends, const LetterSet& gamma) {
  const auto& symbols = eq.symbols();
  auto clash = [&](SymbolId u, SymbolId v, bool front) {
    const bool uv = symbols.is_variable(u);
    const bool vv = symbols.is_variable(v);
    if (uv && vv) {
      if (u == v) return false;
      const auto iu = ends.find(u);
      const auto iv = ends.find(v);
      if (iu == ends.end() || iv == ends.end()) return false;
      return front ? !iu->second.first.meets(iv->second.first) : !iu->second.last.meets(iv->second.last);
    }
    if (vv) std::swap(u, v);
    const auto it = ends.find(u);
    if (it == ends.end()) return false;
    return !(front ? it->second.first : it->second.last).has(v, gamma);
  };
  auto scan = [&](auto ui, auto vi, auto ue, auto ve, bool front) {
    for (; ui != ue && vi != ve; ++ui, ++vi) {
      if (symbols.is_variable(ui->symbol) || symbols.is_variable(vi->symbol)) {
        return clash(ui->symbol, vi->symbol, front);
      }
      if (!symbols.is_letter(ui->symbol) || !symbols.is_letter(vi->symbol)) return false;
    }
    return false;
  };
  const auto& u = eq.lhs();
  const auto& v = eq.rhs();
  return scan(u.begin() + 1, v.begin() + 1, u.end(), v.end(), true) ||
         scan(u.rbegin() + 1, v.rbegin() + 1, u.rend(), v.rend(), false);
}

std::string canonical_key(const Equation& eq, std::size_t remaining) {
  const auto& symbols = eq.symbols();
  std::unordered_map<SymbolId, std::size_t> rename;
  std::size_t letters = 0;
  std::size_t variables = 0;
  std::string key;
  for (auto s : {Side::Lhs, Side::Rhs}) {
    const auto& occ = eq.side(s);
    for (std::size_t i = 1; i + 1 < occ.size(); ++i) {
      const auto id = occ[i].symbol;
      auto it = rename.find(id);
      if (it == rename.end()) {
        const auto code = symbols.is_variable(id) ? 2 * variables++ + 1 : 2 * letters++;
        it = rename.emplace(id, code).first;
      }
      key += std::to_string(it->second);
      key += ',';
    }
    key += '|';
  }
  key += std::to_string(remaining);
  return key;
}

struct PhaseCtx;
std::string step_key(const Equation& eq, const PhaseCtx& ctx, const CoverageState& coverage, std::size_t k,
                     const EndMap& ends, std::size_t remaining);

struct PhaseCtx {
  int phase = 0;
  std::vector<SymbolId> alphabet;
  LetterSet gamma;
  std::vector<Partition> schedule;
};

// Mid-phase state up to renaming of variables and of letters created in
// this phase. Letters of the phase alphabet keep their schedule index since
// the remaining partitions refer to them.
std::string step_key(const Equation& eq, const PhaseCtx& ctx, const CoverageState& coverage, std::size_t k,
                     const EndMap& ends, std::size_t remaining) {
  const auto& symbols = eq.symbols();
  std::unordered_map<SymbolId, std::string> rename;
  for (std::size_t i = 0; i < ctx.alphabet.size(); ++i) rename[ctx.alphabet[i]] = "g" + std::to_string(i);
  std::size_t fresh = 0;
  std::vector<SymbolId> var_order;
  std::string key = "s" + std::to_string(k) + ':' + std::to_string(remaining) + ':';
  for (auto s : {Side::Lhs, Side::Rhs}) {
    const auto& occ = eq.side(s);
    for (std::size_t i = 1; i + 1 < occ.size(); ++i) {
      const auto id = occ[i].symbol;
      auto it = rename.find(id);
      if (it == rename.end()) {
        std::string name;
        if (symbols.is_variable(id)) {
          name = "v" + std::to_string(var_order.size());
          var_order.push_back(id);
        } else {
          name = "f" + std::to_string(fresh++);
        }
        it = rename.emplace(id, std::move(name)).first;
      }
      key += it->second;
      key += ',';
    }
    key += '|';
  }
  for (auto a : ctx.alphabet) {
    for (auto b : ctx.alphabet) key += coverage.covered(a, b) ? '1' : '0';
  }
  auto put = [&](const EndSet& e) {
    key += e.fresh ? '*' : '.';
    for (auto c : e.letters) key += rename.at(c);
    key += ';';
  };
  for (auto x : var_order) {
    const auto it = ends.find(x);
    if (it == ends.end()) continue;
    put(it->second.first);
    put(it->second.last);
  }
  return key;
}

class Search {
 public:
  Search(const Equation& input, const SolverConfig& config) : input_(input), config_(config) {
    if (config.time_budget_seconds > 0) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(config.time_budget_seconds));
    }
  }

  Verdict run() {
    const auto start = Clock::now();
    Verdict verdict;
    verdict.caps = config_;
    Equation eq = input_;
    eq.untrack_depfactors();
    // Iterative deepening on the phase count: short derivations are found
    // before the search commits to deep ones.
    auto r = R::Fail;
    for (phase_cap_ = 1; phase_cap_ <= config_.max_phases && r == R::Fail; ++phase_cap_) {
      r = phase_start(eq, 0);
    }
    if (r == R::Sat) {
      verdict.kind = VerdictKind::Sat;
      verdict.witness = reconstruct_witness(log_, input_, final_images_);
      if (!check_solution(input_, verdict.witness)) {
        throw Desync("blind search produced a witness that does not solve the input");
      }
    } else if (r == R::Fail) {
      verdict.kind = VerdictKind::UnsatWithinBounds;
    } else {
      verdict.kind = VerdictKind::Unknown;
      verdict.reason = abort_reason_;
    }
    stats_.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    verdict.stats = stats_;
    return verdict;
  }

 private:
  enum class R { Sat, Fail, Abort };

  SymbolTable& symbols() { return *input_.table(); }

  bool tick() {
    ++stats_.nodes;
    if (config_.node_budget > 0 && stats_.nodes > config_.node_budget) {
      abort_reason_ = "node budget of " + std::to_string(config_.node_budget) + " exhausted";
      return false;
    }
    if (deadline_ && (stats_.nodes & 1023u) == 0 && Clock::now() > *deadline_) {
      abort_reason_ = "time budget exhausted";
      return false;
    }
    return true;
  }

  bool within_space(const Equation& eq) {
    const auto bits = rebuild_after_step(eq).total_bits();
    stats_.max_bits = std::max(stats_.max_bits, bits);
    return config_.space_cap_bits == 0 || bits <= config_.space_cap_bits;
  }

  // Runs child(); undoes fresh letters and log entries unless it succeeded.
  template <typename F>
  R attempt(F&& child) {
    const auto symbol_mark = symbols().size();
    const auto log_mark = log_.size();
    const auto r = child();
    if (r != R::Sat) {
      symbols().truncate(symbol_mark);
      log_.truncate(log_mark);
    }
    return r;
  }

  R phase_start(const Equation& input, std::size_t done) {
    if (!tick()) return R::Abort;
    const Equation eq = cancel_common(input);
    if (!consistent(eq, done > 0)) return R::Fail;
    Substitution empty;
    for (auto x : eq.variables()) empty[x] = {};
    if (check_solution(eq, empty)) {
      final_images_ = std::move(empty);
      return R::Sat;
    }
    if (eq.is_trivial()) return trivial(eq);
    if (const auto r = lone_variable(eq); r == R::Sat) return r;
    if (done >= phase_cap_) return R::Fail;

    const auto remaining = phase_cap_ - done;
    const auto key = canonical_key(eq, remaining);
    if (auto it = memo_.find(key); it != memo_.end() && it->second >= remaining) {
      ++stats_.memo_hits;
      return R::Fail;
    }

    PhaseCtx ctx;
    ctx.phase = static_cast<int>(done + 1);
    ctx.alphabet = eq.letters();
    ctx.gamma = LetterSet(ctx.alphabet);
    ctx.schedule = canonical_schedule(ctx.alphabet);
    stats_.max_phase = std::max(stats_.max_phase, done + 1);
    const auto vars = eq.variables();
    EndMap ends;
    if (done > 0) {
      for (auto x : vars) ends[x] = Ends{all_letters(ctx.alphabet), all_letters(ctx.alphabet)};
    }
    const auto r = block_var(eq, ctx, vars, 0, done, ends);
    if (r == R::Fail && memo_.size() < kMemoLimit) {
      auto& slot = memo_[key];
      slot = std::max(slot, remaining);
    }
    return r;
  }

  // |U|, |V| <= 1 and the all-empty assignment fails.
  R trivial(const Equation& eq) {
    const auto& s = eq.symbols();
    const auto one = [](const Equation& e, Side side) -> std::optional<SymbolId> {
      if (e.length(side) == 0) return std::nullopt;
      return e.side(side)[1].symbol;
    };
    const auto u = one(eq, Side::Lhs);
    const auto v = one(eq, Side::Rhs);
    Substitution images;
    for (auto x : eq.variables()) images[x] = {};
    if (u && v && s.is_variable(*u) && s.is_letter(*v)) images[*u] = {*v};
    if (u && v && s.is_letter(*u) && s.is_variable(*v)) images[*v] = {*u};
    if (!check_solution(eq, images)) return R::Fail;
    final_images_ = std::move(images);
    return R::Sat;
  }

  // X = w with X not in w: X takes the letters of w, every other variable
  // the empty word.
  R lone_variable(const Equation& eq) {
    const auto& s = eq.symbols();
    for (auto side : {Side::Lhs, Side::Rhs}) {
      const auto other = side == Side::Lhs ? Side::Rhs : Side::Lhs;
      if (eq.length(side) != 1) continue;
      const auto x = eq.side(side)[1].symbol;
      if (!s.is_variable(x)) continue;
      Substitution images;
      for (auto y : eq.variables()) images[y] = {};
      Word w;
      bool free = true;
      for (const auto& o : eq.side(other)) {
        if (o.symbol == x) free = false;
        if (s.is_letter(o.symbol)) w.push_back(o.symbol);
      }
      if (!free) continue;
      images[x] = std::move(w);
      if (!check_solution(eq, images)) continue;
      final_images_ = std::move(images);
      return R::Sat;
    }
    return R::Fail;
  }

  R block_var(const Equation& eq, const PhaseCtx& ctx, const std::vector<SymbolId>& vars, std::size_t i,
              std::size_t done, const EndMap& ends) {
    if (i == vars.size()) return after_blocks(eq, ctx, done, ends);
    const auto x = vars[i];
    const auto& alphabet = ctx.alphabet;
    const auto e = config_.max_block_exponent;
    const auto known = ends.find(x);
    const Ends current = known != ends.end() ? known->second : Ends{all_letters(alphabet), all_letters(alphabet)};

    // Blocks are maximal: a kept variable has a right block too, and its
    // remainder neither starts with a nor ends with b.
    auto try_guess = [&](SymbolId a, std::size_t l, SymbolId b, std::size_t r, bool empty) {
      if (!current.first.has(a, ctx.gamma) || !current.last.has(b, ctx.gamma)) return R::Fail;
      return attempt([&] {
        if (!tick()) return R::Abort;
        log_.append(PopRecord{x, End::Left, Word(l, a), ctx.phase});
        if (r > 0) log_.append(PopRecord{x, End::Right, Word(r, b), ctx.phase});
        if (empty) log_.append(RemovedRecord{x, ctx.phase});
        Equation next = replace_variable(eq, x, Word(l, a), !empty, Word(r, b));
        EndMap next_ends = ends;
        if (empty) {
          next_ends.erase(x);
        } else {
          next_ends[x] = Ends{after_pop(alphabet, a), after_pop(alphabet, b)};
        }
        if (!consistent(next, done > 0) || ends_clash(next, next_ends, ctx.gamma)) return R::Fail;
        return block_var(next, ctx, vars, i + 1, done, next_ends);
      });
    };

    for (const bool empty : {false, true}) {
      for (std::size_t total = 1; total <= 2 * e; ++total) {
        for (std::size_t l = 1; l <= std::min(total, e); ++l) {
          const auto r = total - l;
          if (r > e || (r == 0 && !empty)) continue;
          for (auto a : alphabet) {
            if (r == 0) {
              if (const auto res = try_guess(a, l, a, 0, empty); res != R::Fail) return res;
              continue;
            }
            for (auto b : alphabet) {
              if (empty && a == b) continue;
              if (const auto res = try_guess(a, l, b, r, empty); res != R::Fail) return res;
            }
          }
        }
      }
    }
    // Past the first phase every remaining variable has a non-empty image.
    if (done > 0) return R::Fail;
    return attempt([&] {
      if (!tick()) return R::Abort;
      log_.append(RemovedRecord{x, ctx.phase});
      Equation next = replace_variable(eq, x, {}, false, {});
      if (!consistent(next, false) || ends_clash(next, ends, ctx.gamma)) return R::Fail;
      return block_var(next, ctx, vars, i + 1, done, ends);
    });
  }

  R after_blocks(const Equation& eq, const PhaseCtx& ctx, std::size_t done, const EndMap& ends) {
    FreshLetters fresh(symbols(), log_, ctx.phase);
    Equation next = block_compress_equation(eq, ctx.gamma, fresh);
    if (!within_space(next)) return R::Fail;
    if (ends_clash(next, ends, ctx.gamma)) return R::Fail;
    return partition_step(next, ctx, CoverageState(ctx.alphabet), 0, done, ends);
  }

  R partition_step(const Equation& eq, const PhaseCtx& ctx, const CoverageState& coverage, std::size_t k,
                   std::size_t done, const EndMap& ends) {
    if (coverage.uncovered() == 0 || k >= ctx.schedule.size()) return phase_start(eq, done + 1);
    const auto key = step_key(eq, ctx, coverage, k, ends, phase_cap_ - done);
    if (memo_.count(key) != 0) {
      ++stats_.memo_hits;
      return R::Fail;
    }
    const auto vars = eq.variables();
    const auto r = pair_var(eq, ctx, coverage, k, vars, 0, done, ends);
    if (r == R::Fail && memo_.size() < kMemoLimit) memo_[key] = 0;
    return r;
  }

  R pair_var(const Equation& eq, const PhaseCtx& ctx, const CoverageState& coverage, std::size_t k,
             const std::vector<SymbolId>& vars, std::size_t j, std::size_t done, const EndMap& ends) {
    const auto& p = ctx.schedule[k];
    if (j == vars.size()) {
      if (!tick()) return R::Abort;
      FreshLetters fresh(symbols(), log_, ctx.phase);
      CoverageState next_cov = coverage;
      Equation next = pair_compress_equation(eq, p, fresh, next_cov);
      if (!within_space(next)) return R::Fail;
      if (ends_clash(next, ends, ctx.gamma)) return R::Fail;
      return partition_step(next, ctx, next_cov, k + 1, done, ends);
    }
    const auto x = vars[j];
    const Ends& current = ends.at(x);
    const auto& gamma = ctx.gamma;

    // The first letter is popped exactly when it is in R, the last exactly
    // when it is in L.
    auto try_guess = [&](std::optional<SymbolId> left, std::optional<SymbolId> right, bool empty) {
      if (left ? !current.first.has(*left, gamma) : !can_keep(current.first, p, true)) return R::Fail;
      if (empty) {
        // The image is the popped letters.
        if (left && !right && !current.last.has(*left, gamma)) return R::Fail;
        if (right && !left && !current.first.has(*right, gamma)) return R::Fail;
        if (right && !current.last.has(*right, gamma)) return R::Fail;
      } else if (right ? !current.last.has(*right, gamma) : !can_keep(current.last, p, false)) {
        return R::Fail;
      }
      return attempt([&] {
        if (!tick()) return R::Abort;
        if (left) log_.append(PopRecord{x, End::Left, Word{*left}, ctx.phase});
        if (right) log_.append(PopRecord{x, End::Right, Word{*right}, ctx.phase});
        if (empty) log_.append(RemovedRecord{x, ctx.phase});
        Word lw = left ? Word{*left} : Word{};
        Word rw = right ? Word{*right} : Word{};
        Equation next = replace_variable(eq, x, lw, !empty, rw);
        EndMap next_ends = ends;
        if (empty) {
          next_ends.erase(x);
        } else {
          next_ends[x] = Ends{left ? after_pop(ctx.alphabet, *left) : kept_end(current.first, p, true),
                              right ? after_pop(ctx.alphabet, *right) : kept_end(current.last, p, false)};
        }
        if (!consistent(next, true) || ends_clash(next, next_ends, gamma)) return R::Fail;
        return pair_var(next, ctx, coverage, k, vars, j + 1, done, next_ends);
      });
    };
    const std::optional<SymbolId> none;
    if (const auto r = try_guess(none, none, false); r != R::Fail) return r;
    for (auto a : p.left()) {
      if (const auto r = try_guess(none, a, false); r != R::Fail) return r;
    }
    for (auto b : p.right()) {
      if (const auto r = try_guess(b, none, false); r != R::Fail) return r;
    }
    for (auto b : p.right()) {
      for (auto a : p.left()) {
        if (const auto r = try_guess(b, a, false); r != R::Fail) return r;
      }
    }
    for (auto b : p.right()) {
      if (const auto r = try_guess(b, none, true); r != R::Fail) return r;
    }
    for (auto a : p.left()) {
      if (const auto r = try_guess(none, a, true); r != R::Fail) return r;
    }
    for (auto b : p.right()) {
      for (auto a : p.left()) {
        if (const auto r = try_guess(b, a, true); r != R::Fail) return r;
      }
    }
    return R::Fail;
  }

  const Equation& input_;
  const SolverConfig& config_;
  std::optional<Clock::time_point> deadline_;
  DerivationLog log_;
  Substitution final_images_;
  SearchStats stats_;
  std::string abort_reason_;
  std::unordered_map<std::string, std::size_t> memo_;
  std::size_t phase_cap_ = 0;
};

}  // namespace

Verdict solve_blind(const Equation& eq, const SolverConfig& config) {
  config.validate();
  Search search(eq, config);
  return search.run();
}

}  // namespace wordeq
