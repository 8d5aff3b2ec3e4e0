#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "wordeq/errors.hpp"
#include "wordeq/generator.hpp"
#include "wordeq/guided.hpp"
#include "wordeq/strategy.hpp"

using namespace wordeq;
using testsupport::id;
using testsupport::sub;
using testsupport::word;

namespace {

struct Setup {
  Equation eq;
  Substitution sigma;
  InputLayout layout;
  LetterSet gamma;
  NewLetterTest is_new;

  Setup(std::string_view text, std::initializer_list<std::pair<char, std::string_view>> images,
        NewLetterRule rule = NewLetterRule::OutsidePhaseAlphabet)
      : eq(parse_equation(text)), sigma(sub(eq, images)), layout(eq), gamma(eq.letters()),
        is_new(eq.symbols(), gamma, rule, 1) {}

  Setup(Instance inst)
      : eq(std::move(inst.eq)), sigma(normalize_solution(eq, inst.solution)), layout(eq), gamma(eq.letters()),
        is_new(eq.symbols(), gamma, NewLetterRule::OutsidePhaseAlphabet, 1) {}

  BlockState classify_now() const { return classify(eq, sigma, layout, is_new); }
};

using Flags = std::array<bool, 2>;

// S_c after partition p, computed on the images alone: pops by the pair
// rule, pair compression into letters outside gamma, blocking by the
// definition, ORed with the blocking already known.
std::size_t variable_sum_after(const Setup& s, const BlockState& before, const Partition& p) {
  std::size_t total = 0;
  for (const auto& [x, w0] : s.sigma) {
    Word w = w0;
    if (!w.empty() && p.in_right(w.front())) w.erase(w.begin());
    if (!w.empty() && p.in_left(w.back())) w.pop_back();
    // Marker value outside every alphabet stands for a fresh pair letter.
    const SymbolId fresh = 1'000'000;
    Word c;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i + 1 < w.size() && p.in_left(w[i]) && p.in_right(w[i + 1])) {
        c.push_back(fresh);
        ++i;
      } else {
        c.push_back(w[i]);
      }
    }
    auto is_new = [&](SymbolId l) { return l == fresh || !s.gamma.contains(l); };
    Flags blocked{true, true};
    if (c.size() >= 2) {
      blocked[0] = is_new(c[0]) || is_new(c[1]);
      blocked[1] = is_new(c[c.size() - 1]) || is_new(c[c.size() - 2]);
    }
    if (const auto it = before.variables.find(x); it != before.variables.end()) {
      blocked[0] = blocked[0] || it->second[0];
      blocked[1] = blocked[1] || it->second[1];
    }
    const auto n = s.eq.occurrences(x);
    for (auto b : blocked) total += b ? 0 : n;
  }
  return total;
}

}  // namespace

TEST_CASE("phase-start images of length >= 2 are unblocked") {
  Setup s("abcX=Xabc", {{'X', "abc"}});
  const auto st = s.classify_now();
  CHECK(st.variables.at(id(s.eq, 'X')) == Flags{false, false});
}

TEST_CASE("single letter image is blocked on both ends") {
  Setup s("aX=Xa", {{'X', "a"}});
  const auto st = s.classify_now();
  CHECK(st.variables.at(id(s.eq, 'X')) == Flags{true, true});
}

TEST_CASE("new second letter blocks an end") {
  Setup s("aX=Xa", {{'X', "a"}});
  auto& t = *s.eq.table();
  const auto a = id(s.eq, 'a');
  const auto b = t.intern('b');
  s.gamma.insert(b);
  const auto pair = t.fresh_letter(OriginKind::PairFresh, 1);
  const auto block = t.fresh_letter(OriginKind::BlockFresh, 1);
  const auto x = id(s.eq, 'X');

  s.sigma[x] = {a, pair, b, a};
  CHECK(s.classify_now().variables.at(x) == Flags{true, false});

  s.sigma[x] = {a, block, b, a};
  CHECK(s.classify_now().variables.at(x) == Flags{true, false});
  const NewLetterTest pair_only(s.eq.symbols(), s.gamma, NewLetterRule::PairCompressionOnly, 1);
  CHECK(classify(s.eq, s.sigma, s.layout, pair_only).variables.at(x) == Flags{false, false});
}

TEST_CASE("depfactor ends follow the letters around their extent") {
  Setup s("abX=Xab", {{'X', "ab"}});
  const auto st = s.classify_now();
  const auto& lhs = st.depfactors[0];
  REQUIRE(lhs.size() == 5);
  CHECK(lhs[0] == Flags{true, true});   // marker
  CHECK(lhs[1] == Flags{true, false});  // 'a': nothing to its left
  CHECK(lhs[2] == Flags{true, false});  // 'b': one letter to its left
  CHECK(lhs[3] == Flags{false, true});  // X: produces the last two letters
  CHECK(lhs[4] == Flags{true, true});
}

TEST_CASE("sums over unblocked ends") {
  Setup s("XaX=bY", {{'X', "ab"}, {'Y', "abaab"}});
  const auto x = id(s.eq, 'X');
  const auto y = id(s.eq, 'Y');
  BlockState st = s.classify_now();
  for (auto& side : st.depfactors) {
    for (auto& f : side) f = {true, true};
  }
  st.variables[x] = {false, false};
  st.variables[y] = {false, false};
  const auto sums = compute_sums(st, s.eq, s.layout);
  CHECK(sums.c == 6);
  CHECK(sums.a == 2 * (2 * s.layout.symbol_abs(x) + s.layout.symbol_abs(y)));
  CHECK(sums.b == 0);
  CHECK(sums.d == 0);

  st.variables[x] = {true, true};
  st.variables[y] = {true, true};
  CHECK(compute_sums(st, s.eq, s.layout) == StrategySums{});
}

TEST_CASE("phase start: S_a is twice the weighted variable sizes") {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 20 && seed < 200; ++seed) {
    Setup s(generate_instance(seed, 3, 3, 6, 6));
    std::size_t expected = 0;
    bool all_long = true;
    for (auto x : s.eq.variables()) {
      all_long = all_long && s.sigma.at(x).size() >= 2;
      std::size_t n = 0;
      for (auto side : {Side::Lhs, Side::Rhs}) {
        for (const auto& o : s.eq.side(side)) n += o.symbol == x;
      }
      expected += 2 * n * s.layout.symbol_abs(x);
    }
    if (!all_long) continue;
    ++checked;
    CHECK(compute_sums(s.classify_now(), s.eq, s.layout).a == expected);
  }
  CHECK(checked == 20);
}

TEST_CASE("partition ({a},{b}) halves S_c on abX=Xab") {
  Setup s("abX=Xab", {{'X', "abab"}});
  const auto a = id(s.eq, 'a');
  const auto b = id(s.eq, 'b');
  const auto st = s.classify_now();
  REQUIRE(compute_sums(st, s.eq, s.layout).c == 4);

  const Partition ab({a}, {b});
  CHECK(variable_sum_after(s, st, ab) == 0);

  PartitionChooser chooser(0);
  const auto alphabet = s.eq.letters();
  const CoverageState cov(alphabet);
  const auto choice = chooser.choose(s.eq, materialize(s.eq, s.sigma), s.sigma, st, s.layout, s.is_new, alphabet,
                                     cov, 2, [&](const Partition& p) { return variable_sum_after(s, st, p); });
  CHECK_FALSE(choice.by_coverage);
  CHECK(choice.pre == 4);
  CHECK(2 * variable_sum_after(s, st, choice.partition) <= 4);
}

TEST_CASE("predicted S_c matches an independent simulation") {
  int compared = 0;
  // The chooser runs after block compression, so sigma(U) has no two equal
  // adjacent letters.
  auto compressed = [](const Setup& s) {
    const auto u = apply_substitution(s.eq, s.sigma).first;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i] == u[i + 1]) return false;
    }
    return true;
  };
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    Setup s(generate_instance(seed, 2, 5, 5, 7));
    const auto st = s.classify_now();
    const auto alphabet = s.eq.letters();
    if (alphabet.size() < 2 || !compressed(s)) continue;
    const CoverageState cov(alphabet);
    PartitionChooser chooser(seed);
    const auto sim = [&](const Partition& p) { return variable_sum_after(s, st, p); };
    const auto choice = chooser.choose(s.eq, materialize(s.eq, s.sigma), s.sigma, st, s.layout, s.is_new, alphabet,
                                       cov, 2, sim);
    if (choice.by_coverage) continue;
    ++compared;
    CHECK(choice.predicted == sim(choice.partition));
    CHECK(2 * sim(choice.partition) <= choice.pre + 1);
  }
  CHECK(compared > 20);
}

TEST_CASE("zero target falls back to coverage") {
  Setup s("aXb=abX", {{'X', "b"}});
  const auto st = s.classify_now();
  const auto alphabet = s.eq.letters();
  const CoverageState cov(alphabet);
  PartitionChooser chooser(0);
  const auto choice = chooser.choose(s.eq, materialize(s.eq, s.sigma), s.sigma, st, s.layout, s.is_new, alphabet,
                                     cov, 2, [](const Partition&) -> std::size_t { return 0; });
  CHECK(choice.by_coverage);
  CHECK(choice.pre == 0);
  CHECK(cov.newly_covered(choice.partition) == 1);
}

TEST_CASE("no halving partition") {
  Setup s("abX=Xab", {{'X', "abab"}});
  const auto st = s.classify_now();
  const auto alphabet = s.eq.letters();
  PartitionChooser chooser(0);
  CHECK_THROWS_AS(chooser.choose(s.eq, materialize(s.eq, s.sigma), s.sigma, st, s.layout, s.is_new, alphabet,
                                 CoverageState(alphabet), 2, [](const Partition&) -> std::size_t { return 4; }),
                  NoHalvingPartitionFound);
}

TEST_CASE("blocking never clears") {
  Setup s("aX=Xa", {{'X', "aa"}});
  const auto x = id(s.eq, 'X');
  BlockState state;
  state.variables[x] = {true, false};
  BlockState fresh;
  fresh.variables[x] = {false, true};
  const auto messages = merge_blocking(state, fresh, s.eq.symbols());
  CHECK(messages.size() == 1);
  CHECK(state.variables[x] == Flags{true, true});
  CHECK(merge_blocking(state, fresh, s.eq.symbols()).size() == 1);
  BlockState same = state;
  CHECK(merge_blocking(state, same, s.eq.symbols()).empty());
}

TEST_CASE("greedy coverage is at least as good as the canonical schedule") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const std::size_t m = 1 + rng() % 9;
    std::vector<SymbolId> alphabet;
    for (std::size_t i = 0; i < m; ++i) alphabet.push_back(static_cast<SymbolId>(10 + 3 * i));
    CoverageState cov(alphabet);
    const auto schedule = canonical_schedule(alphabet);
    for (const auto& p : schedule) {
      if (rng() % 2) cov.cover(p);
    }
    const auto best = PartitionChooser::best_coverage(alphabet, cov);
    for (const auto& p : schedule) CHECK(cov.newly_covered(best) >= cov.newly_covered(p));
    if (cov.uncovered() > 0) CHECK(cov.newly_covered(best) > 0);
  }
}

TEST_CASE("singleton alphabet has nothing to cover") {
  const std::vector<SymbolId> alphabet{7};
  const CoverageState cov(alphabet);
  CHECK(cov.uncovered() == 0);
  CHECK(cov.newly_covered(PartitionChooser::best_coverage(alphabet, cov)) == 0);
}
