#include "wordeq/generator.hpp"

#include <algorithm>
#include <random>

#include "wordeq/errors.hpp"

namespace wordeq {

namespace {

constexpr int kMaxAttempts = 200;

}  // namespace

Instance generate_instance(std::uint64_t seed, std::size_t n_vars, std::size_t n_letters,
                           std::size_t side_len, std::size_t sol_len) {
  if (n_letters == 0 || n_letters > 26 || n_vars > 26) {
    throw GenerationFailed("need 1..26 letters and at most 26 variables");
  }
  if (side_len == 0) throw GenerationFailed("side length must be positive");

  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto chance = [&rng](double p) { return std::bernoulli_distribution(p)(rng); };

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto symbols = std::make_shared<SymbolTable>();
    std::vector<SymbolId> letters;
    std::vector<SymbolId> vars;
    for (std::size_t i = 0; i < n_letters; ++i) letters.push_back(symbols->intern(static_cast<char>('a' + i)));
    for (std::size_t i = 0; i < n_vars; ++i) vars.push_back(symbols->intern(static_cast<char>('A' + i)));

    Substitution sigma;
    for (auto x : vars) {
      const std::size_t len = (sol_len == 0 || chance(0.05)) ? 0 : uniform(1, sol_len);
      Word img(len);
      for (auto& c : img) c = letters[uniform(0, n_letters - 1)];
      sigma[x] = std::move(img);
    }

    std::vector<SymbolId> lhs;
    for (std::size_t i = 0; i < side_len; ++i) {
      if (!vars.empty() && chance(0.35)) {
        lhs.push_back(vars[uniform(0, vars.size() - 1)]);
      } else {
        lhs.push_back(letters[uniform(0, n_letters - 1)]);
      }
    }

    std::vector<SymbolId> rhs;
    if (vars.empty()) {
      rhs = lhs;
    } else {
      Word image;
      for (auto id : lhs) {
        if (symbols->is_variable(id)) {
          image.insert(image.end(), sigma[id].begin(), sigma[id].end());
        } else {
          image.push_back(id);
        }
      }
      if (image.empty()) continue;
      // Factor sigma(U) greedily at random: at each offset either emit a
      // letter or a variable whose image matches there.
      std::size_t i = 0;
      while (i < image.size()) {
        std::vector<SymbolId> matches;
        for (auto x : vars) {
          const auto& img = sigma[x];
          if (!img.empty() && i + img.size() <= image.size() &&
              std::equal(img.begin(), img.end(), image.begin() + static_cast<std::ptrdiff_t>(i))) {
            matches.push_back(x);
          }
        }
        if (chance(0.08)) {
          for (auto x : vars) {
            if (sigma[x].empty()) rhs.push_back(x);
          }
        }
        if (!matches.empty() && chance(0.6)) {
          const auto x = matches[uniform(0, matches.size() - 1)];
          rhs.push_back(x);
          i += sigma[x].size();
        } else {
          rhs.push_back(image[i++]);
        }
      }
    }
    if (rhs.empty()) continue;
    if (chance(0.5)) std::swap(lhs, rhs);

    Equation eq = make_equation(symbols, lhs, rhs);
    Substitution planted;
    for (auto x : eq.variables()) planted[x] = sigma[x];
    if (!check_solution(eq, planted)) continue;
    return {std::move(eq), std::move(planted)};
  }
  throw GenerationFailed("no instance after " + std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace wordeq
