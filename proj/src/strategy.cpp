#include "wordeq/strategy.hpp"

#include <algorithm>
#include <limits>

#include "wordeq/errors.hpp"

namespace wordeq {

bool NewLetterTest::operator()(SymbolId letter) const {
  if (rule_ == NewLetterRule::OutsidePhaseAlphabet) return !gamma_->contains(letter);
  const auto& origin = (*symbols_)[letter].origin;
  return origin.kind == OriginKind::PairFresh && origin.phase == phase_;
}

Materialized materialize(const Equation& eq, const Substitution& sigma) {
  Materialized m;
  const auto& symbols = eq.symbols();
  for (auto s : {Side::Lhs, Side::Rhs}) {
    const auto i = static_cast<std::size_t>(s);
    auto& text = m.text[i];
    for (const auto& o : eq.side(s)) {
      const auto begin = text.size();
      if (symbols.is_letter(o.symbol)) {
        text.push_back(o.symbol);
      } else if (symbols.is_variable(o.symbol)) {
        auto it = sigma.find(o.symbol);
        if (it == sigma.end()) throw MissingVariable(symbols.display(o.symbol));
        text.insert(text.end(), it->second.begin(), it->second.end());
      }
      m.ranges[i].emplace_back(begin, text.size());
    }
  }
  return m;
}

BlockState classify(const Equation& eq, const Substitution& sigma, const InputLayout& layout,
                    const NewLetterTest& is_new) {
  return classify(eq, sigma, materialize(eq, sigma), layout, is_new);
}

BlockState classify(const Equation& eq, const Substitution& sigma, const Materialized& mat,
                    const InputLayout& layout, const NewLetterTest& is_new) {
  BlockState st;
  for (const auto& [x, n] : eq.occurrence_counts()) {
    if (n == 0) {
      st.variables[x] = {true, true};
      continue;
    }
    auto it = sigma.find(x);
    if (it == sigma.end()) throw MissingVariable(eq.symbols().display(x));
    const auto& w = it->second;
    const auto len = w.size();
    st.variables[x] = {len <= 1 || is_new(w[0]) || is_new(w[1]),
                       len <= 1 || is_new(w[len - 1]) || is_new(w[len - 2])};
  }

  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  for (auto s : {Side::Lhs, Side::Rhs}) {
    const auto si = static_cast<std::size_t>(s);
    const auto positions = layout.positions(s);
    std::vector<std::size_t> begin(positions, kNone);
    std::vector<std::size_t> end(positions, 0);
    const auto& occ = eq.side(s);
    for (std::size_t i = 0; i < occ.size(); ++i) {
      const auto [b, e] = mat.ranges[si][i];
      if (b == e) continue;
      for (const auto& part : occ[i].dep.parts()) {
        for (auto p = part.lo; p <= part.hi; ++p) {
          begin[p] = std::min(begin[p], b);
          end[p] = std::max(end[p], e);
        }
      }
    }
    const auto& text = mat.text[si];
    const auto n = text.size();
    auto& flags = st.depfactors[si];
    flags.assign(positions, {true, true});
    for (std::size_t p = 0; p < positions; ++p) {
      if (begin[p] == kNone) continue;
      const auto b = begin[p];
      const auto e = end[p];
      flags[p][kLeftEnd] = b <= 1 || is_new(text[b - 1]) || is_new(text[b - 2]);
      flags[p][kRightEnd] = n - e <= 1 || is_new(text[e]) || is_new(text[e + 1]);
    }
  }
  return st;
}

std::vector<std::string> merge_blocking(BlockState& state, const BlockState& fresh, const SymbolTable& symbols) {
  static const char* const kEndName[2] = {"left", "right"};
  std::vector<std::string> out;
  for (const auto& [x, flags] : fresh.variables) {
    auto [it, inserted] = state.variables.emplace(x, flags);
    if (inserted) continue;
    for (std::size_t end = 0; end < 2; ++end) {
      if (it->second[end] && !flags[end]) {
        out.push_back("variable " + symbols.display(x) + " " + kEndName[end] + " end unblocked again");
      }
      it->second[end] = it->second[end] || flags[end];
    }
  }
  for (std::size_t s = 0; s < 2; ++s) {
    auto& dst = state.depfactors[s];
    const auto& src = fresh.depfactors[s];
    if (dst.empty()) {
      dst = src;
      continue;
    }
    for (std::size_t p = 0; p < src.size() && p < dst.size(); ++p) {
      for (std::size_t end = 0; end < 2; ++end) {
        if (dst[p][end] && !src[p][end]) {
          out.push_back(std::string("depfactor ") + side_name(static_cast<Side>(s)) + ":" + std::to_string(p) +
                        " " + kEndName[end] + " end unblocked again");
        }
        dst[p][end] = dst[p][end] || src[p][end];
      }
    }
  }
  return out;
}

std::size_t StrategySums::get(int target) const {
  switch (target) {
    case 0: return a;
    case 1: return b;
    case 2: return c;
    case 3: return d;
  }
  throw std::invalid_argument("strategy target out of range");
}

const char* target_name(int target) {
  static const char* const kNames[4] = {"a", "b", "c", "d"};
  if (target < 0 || target > 3) throw std::invalid_argument("strategy target out of range");
  return kNames[target];
}

StrategySums compute_sums(const BlockState& state, const Equation& eq, const InputLayout& layout) {
  StrategySums sums;
  for (const auto& [x, flags] : state.variables) {
    const auto n = eq.occurrences(x);
    for (auto blocked : flags) {
      if (blocked) continue;
      sums.a += n * layout.symbol_abs(x);
      sums.c += n;
    }
  }
  for (auto s : {Side::Lhs, Side::Rhs}) {
    const auto& flags = state.depfactors[static_cast<std::size_t>(s)];
    for (std::uint32_t p = 0; p < flags.size(); ++p) {
      for (auto blocked : flags[p]) {
        if (blocked) continue;
        sums.b += layout.abs_at(s, p);
        sums.d += 1;
      }
    }
  }
  return sums;
}

namespace {

// An unblocked end whose blocking after the next partition is predicted
// from a few letters around it. Pairs never straddle the letters that decide
// blocking, so the prediction is exact.
struct LocalEnd {
  const Word* text;
  std::size_t at;  // variable: unused; depfactor: extent begin (left) or end (right)
  bool is_var;
  std::size_t end;
  std::size_t weight;
};

class Predictor {
 public:
  Predictor(const std::vector<SymbolId>& alphabet, std::size_t symbols, const NewLetterTest& is_new)
      : gidx_(symbols, -1), is_new_(&is_new) {
    for (std::size_t i = 0; i < alphabet.size(); ++i) gidx_[alphabet[i]] = static_cast<int>(i);
  }

  // assign[g] == 1 sends alphabet letter g to the right set.
  bool blocked_after(const LocalEnd& r, const std::vector<std::uint8_t>& assign) const {
    assign_ = &assign;
    if (r.is_var) return r.end == kLeftEnd ? var_left(*r.text) : var_right(*r.text);
    return r.end == kLeftEnd ? dep_left(*r.text, r.at) : dep_right(*r.text, r.at);
  }

 private:
  bool in_l(SymbolId x) const {
    const int g = x < gidx_.size() ? gidx_[x] : -1;
    return g >= 0 && (*assign_)[g] == 0;
  }
  bool in_r(SymbolId x) const {
    const int g = x < gidx_.size() ? gidx_[x] : -1;
    return g >= 0 && (*assign_)[g] == 1;
  }

  // First two outputs of compressing w[lo, hi) scanning forward.
  // Returns the number of outputs seen (at most 2) and whether any was new.
  std::pair<int, bool> scan_forward(const Word& w, std::size_t lo, std::size_t hi) const {
    int outputs = 0;
    bool fresh = false;
    for (std::size_t i = lo; i < hi && outputs < 2; ++outputs) {
      if (i + 1 < hi && in_l(w[i]) && in_r(w[i + 1])) {
        fresh = true;
        i += 2;
      } else {
        fresh = fresh || (*is_new_)(w[i]);
        i += 1;
      }
    }
    return {outputs, fresh};
  }
  std::pair<int, bool> scan_backward(const Word& w, std::size_t lo, std::size_t hi) const {
    int outputs = 0;
    bool fresh = false;
    for (std::size_t j = hi; j > lo && outputs < 2; ++outputs) {
      if (j - 1 > lo && in_l(w[j - 2]) && in_r(w[j - 1])) {
        fresh = true;
        j -= 2;
      } else {
        fresh = fresh || (*is_new_)(w[j - 1]);
        j -= 1;
      }
    }
    return {outputs, fresh};
  }

  // Pops first: a right-set first letter and a left-set last letter leave X.
  std::pair<std::size_t, std::size_t> stripped(const Word& w) const {
    std::size_t lo = 0;
    std::size_t hi = w.size();
    if (lo < hi && in_r(w[lo])) ++lo;
    if (lo < hi && in_l(w[hi - 1])) --hi;
    return {lo, hi};
  }

  bool var_left(const Word& w) const {
    const auto [lo, hi] = stripped(w);
    const auto [outputs, fresh] = scan_forward(w, lo, hi);
    return outputs <= 1 || fresh;
  }
  bool var_right(const Word& w) const {
    const auto [lo, hi] = stripped(w);
    const auto [outputs, fresh] = scan_backward(w, lo, hi);
    return outputs <= 1 || fresh;
  }
  bool dep_left(const Word& text, std::size_t begin) const {
    const auto stop = begin >= 1 && in_l(text[begin - 1]) ? begin - 1 : begin;
    const auto [outputs, fresh] = scan_backward(text, 0, stop);
    return outputs <= 1 || fresh;
  }
  bool dep_right(const Word& text, std::size_t end) const {
    const auto start = end < text.size() && in_r(text[end]) ? end + 1 : end;
    const auto [outputs, fresh] = scan_forward(text, start, text.size());
    return outputs <= 1 || fresh;
  }

  std::vector<int> gidx_;
  const NewLetterTest* is_new_;
  mutable const std::vector<std::uint8_t>* assign_ = nullptr;
};

Partition from_assignment(const std::vector<SymbolId>& alphabet, const std::vector<std::uint8_t>& assign) {
  std::vector<SymbolId> left;
  std::vector<SymbolId> right;
  for (std::size_t i = 0; i < alphabet.size(); ++i) (assign[i] ? right : left).push_back(alphabet[i]);
  return Partition(left, right);
}

struct Candidate {
  std::vector<std::uint8_t> assign;
  std::size_t predicted;
  std::size_t gain = 0;
};

}  // namespace

PartitionChoice PartitionChooser::choose(const Equation& eq, const Materialized& mat, const Substitution& sigma,
                                         const BlockState& state, const InputLayout& layout,
                                         const NewLetterTest& is_new, const std::vector<SymbolId>& alphabet,
                                         const CoverageState& coverage, int target,
                                         const std::function<std::size_t(const Partition&)>& simulate) {
  PartitionChoice choice;
  choice.target = target;
  choice.pre = compute_sums(state, eq, layout).get(target);
  if (choice.pre == 0) {
    choice.by_coverage = true;
    choice.partition = best_coverage(alphabet, coverage);
    return choice;
  }

  const bool on_vars = target == 0 || target == 2;
  std::vector<LocalEnd> ends;
  std::size_t max_symbol = eq.symbols().size();
  if (on_vars) {
    for (const auto& [x, flags] : state.variables) {
      const auto n = eq.occurrences(x);
      if (n == 0) continue;
      const auto weight = target == 0 ? n * layout.symbol_abs(x) : n;
      for (std::size_t end = 0; end < 2; ++end) {
        if (!flags[end]) ends.push_back({&sigma.at(x), 0, true, end, weight});
      }
    }
  } else {
    // Extents are recomputed from the materialized text for the unblocked ends.
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    for (auto s : {Side::Lhs, Side::Rhs}) {
      const auto si = static_cast<std::size_t>(s);
      const auto& flags = state.depfactors[si];
      std::vector<std::size_t> begin(flags.size(), kNone);
      std::vector<std::size_t> end(flags.size(), 0);
      const auto& occ = eq.side(s);
      for (std::size_t i = 0; i < occ.size(); ++i) {
        const auto [b, e] = mat.ranges[si][i];
        if (b == e) continue;
        for (const auto& part : occ[i].dep.parts()) {
          for (auto p = part.lo; p <= part.hi; ++p) {
            if (flags[p][0] && flags[p][1]) continue;
            begin[p] = std::min(begin[p], b);
            end[p] = std::max(end[p], e);
          }
        }
      }
      for (std::uint32_t p = 0; p < flags.size(); ++p) {
        if (begin[p] == kNone) continue;
        const auto weight = target == 1 ? layout.abs_at(s, p) : 1;
        if (!flags[p][kLeftEnd]) ends.push_back({&mat.text[si], begin[p], false, kLeftEnd, weight});
        if (!flags[p][kRightEnd]) ends.push_back({&mat.text[si], end[p], false, kRightEnd, weight});
      }
    }
  }

  Predictor predictor(alphabet, max_symbol, is_new);
  auto predict = [&](const std::vector<std::uint8_t>& assign) {
    std::size_t post = 0;
    for (const auto& r : ends) {
      if (!predictor.blocked_after(r, assign)) post += r.weight;
    }
    return post;
  };

  const auto m = alphabet.size();
  constexpr std::size_t kKeepHalving = 64;
  constexpr std::size_t kKeepFallback = 8;
  std::vector<Candidate> halving;
  std::vector<Candidate> fallback;  // lowest predictions, in case the predictor is off
  auto consider = [&](std::vector<std::uint8_t> assign) {
    const auto post = predict(assign);
    ++choice.evaluated;
    if (2 * post <= choice.pre) {
      if (halving.size() < kKeepHalving) halving.push_back({std::move(assign), post});
      return;
    }
    if (fallback.size() < kKeepFallback) {
      fallback.push_back({std::move(assign), post});
    } else {
      auto worst = std::max_element(fallback.begin(), fallback.end(),
                                    [](const Candidate& a, const Candidate& b) { return a.predicted < b.predicted; });
      if (post < worst->predicted) *worst = {std::move(assign), post};
    }
  };

  std::vector<std::uint8_t> assign(m);
  if (m <= 16) {
    const std::uint32_t full = (1u << m) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      for (std::size_t i = 0; i < m; ++i) assign[i] = (mask >> i) & 1u;
      consider(assign);
      if (!halving.empty() && choice.evaluated >= 256) break;
    }
  } else {
    const std::size_t samples = 64 * m;
    for (std::size_t k = 0; k < samples; ++k) {
      std::size_t ones = 0;
      for (std::size_t i = 0; i < m; ++i) ones += assign[i] = static_cast<std::uint8_t>(rng_() & 1u);
      if (ones == 0 || ones == m) continue;
      consider(assign);
      if (!halving.empty() && choice.evaluated >= 256) break;
    }
  }

  for (auto& c : halving) c.gain = coverage.newly_covered(from_assignment(alphabet, c.assign));
  std::stable_sort(halving.begin(), halving.end(), [](const Candidate& a, const Candidate& b) {
    return a.gain != b.gain ? a.gain > b.gain : a.predicted < b.predicted;
  });
  std::sort(fallback.begin(), fallback.end(),
            [](const Candidate& a, const Candidate& b) { return a.predicted < b.predicted; });

  for (const auto* pool : {&halving, &fallback}) {
    for (const auto& c : *pool) {
      Partition p = from_assignment(alphabet, c.assign);
      if (2 * simulate(p) <= choice.pre + 1) {
        choice.partition = std::move(p);
        choice.predicted = c.predicted;
        return choice;
      }
    }
  }
  throw NoHalvingPartitionFound("target " + std::string(target_name(target)) + " stays above " +
                                std::to_string(choice.pre / 2) + " after " + std::to_string(choice.evaluated) +
                                " candidates");
}

Partition PartitionChooser::best_coverage(const std::vector<SymbolId>& alphabet, const CoverageState& coverage) {
  const auto m = alphabet.size();
  std::vector<std::uint8_t> assign(m, 0);
  bool seeded = false;
  for (std::size_t i = 0; i < m && !seeded; ++i) {
    for (std::size_t j = 0; j < m && !seeded; ++j) {
      if (i != j && !coverage.covered(alphabet[i], alphabet[j])) {
        std::vector<std::uint8_t> fixed(m, 0);
        assign[j] = 1;
        fixed[i] = fixed[j] = 1;
        for (std::size_t c = 0; c < m; ++c) {
          if (fixed[c]) continue;
          std::size_t as_left = 0;
          std::size_t as_right = 0;
          for (std::size_t o = 0; o < m; ++o) {
            if (o == c || !(fixed[o])) continue;
            if (assign[o] == 1 && !coverage.covered(alphabet[c], alphabet[o])) ++as_left;
            if (assign[o] == 0 && !coverage.covered(alphabet[o], alphabet[c])) ++as_right;
          }
          assign[c] = as_right > as_left ? 1 : 0;
          fixed[c] = 1;
        }
        seeded = true;
      }
    }
  }
  Partition best = from_assignment(alphabet, assign);
  auto best_gain = coverage.newly_covered(best);
  for (auto& p : canonical_schedule(alphabet)) {
    const auto gain = coverage.newly_covered(p);
    if (gain > best_gain) {
      best_gain = gain;
      best = std::move(p);
    }
  }
  return best;
}

}  // namespace wordeq
