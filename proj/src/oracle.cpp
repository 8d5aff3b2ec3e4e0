#include "wordeq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wordeq/errors.hpp"

namespace wordeq {

namespace {

struct SideShape {
  std::size_t letters = 0;
  std::map<SymbolId, std::size_t> var_counts;
};

SideShape shape_of(const Equation& eq, Side s) {
  SideShape shape;
  for (const auto& o : eq.side(s)) {
    if (o.symbol == eq.symbols().end_marker()) continue;
    if (eq.symbols().is_variable(o.symbol)) {
      ++shape.var_counts[o.symbol];
    } else {
      ++shape.letters;
    }
  }
  return shape;
}

}  // namespace

OracleResult brute_force_solve(const Equation& eq, std::size_t max_len, std::size_t budget) {
  const auto vars = eq.variables();
  auto alphabet = eq.letters();
  std::sort(alphabet.begin(), alphabet.end(), [&](SymbolId a, SymbolId b) {
    return eq.symbols().display(a) < eq.symbols().display(b);
  });
  const std::size_t k = vars.size();
  const std::size_t m = alphabet.size();
  const std::size_t max_img = m == 0 ? 0 : max_len;

  const auto lhs = shape_of(eq, Side::Lhs);
  const auto rhs = shape_of(eq, Side::Rhs);
  auto count_in = [](const SideShape& s, SymbolId v) {
    auto it = s.var_counts.find(v);
    return it == s.var_counts.end() ? std::size_t{0} : it->second;
  };

  // All length vectors whose images give both sides the same length.
  std::vector<std::vector<std::size_t>> shapes;
  std::vector<std::size_t> lens(k, 0);
  long double total = 0;
  while (true) {
    std::size_t lu = lhs.letters;
    std::size_t lv = rhs.letters;
    for (std::size_t i = 0; i < k; ++i) {
      lu += count_in(lhs, vars[i]) * lens[i];
      lv += count_in(rhs, vars[i]) * lens[i];
    }
    if (lu == lv) {
      shapes.push_back(lens);
      long double n = 1;
      for (auto l : lens) n *= std::pow(static_cast<long double>(m), static_cast<long double>(l));
      total += n;
    }
    std::size_t i = 0;
    while (i < k && lens[i] == max_img) lens[i++] = 0;
    if (i == k) break;
    ++lens[i];
  }
  if (total > static_cast<long double>(budget)) {
    throw ResourceExceeded("oracle enumeration of " + std::to_string(static_cast<double>(total)) +
                           " candidates exceeds budget " + std::to_string(budget));
  }

  auto weight = [&](const std::vector<std::size_t>& l) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < k; ++i) w += (count_in(lhs, vars[i]) + count_in(rhs, vars[i])) * l[i];
    return w;
  };
  std::stable_sort(shapes.begin(), shapes.end(), [&](const auto& a, const auto& b) {
    const auto wa = weight(a);
    const auto wb = weight(b);
    return wa != wb ? wa < wb : a < b;
  });

  OracleResult result;
  Substitution sigma;
  for (const auto& shape : shapes) {
    // Odometer over digit strings; the most significant digit is the first
    // letter of the first variable, giving lexicographic order.
    std::vector<std::size_t> digits(std::accumulate(shape.begin(), shape.end(), std::size_t{0}), 0);
    while (true) {
      std::size_t d = 0;
      for (std::size_t i = 0; i < k; ++i) {
        Word& img = sigma[vars[i]];
        img.resize(shape[i]);
        for (auto& letter : img) letter = alphabet[digits[d++]];
      }
      ++result.candidates;
      if (check_solution(eq, sigma)) {
        result.witness = sigma;
        return result;
      }
      std::size_t pos = digits.size();
      while (pos > 0 && digits[pos - 1] + 1 == m) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }
  return result;
}

}  // namespace wordeq
