#include "wordeq/depstate.hpp"

#include <bit>
#include <cmath>
#include <map>

namespace wordeq {

namespace {

constexpr std::array<Side, 2> kSides{Side::Lhs, Side::Rhs};

std::size_t side_index(Side s) { return static_cast<std::size_t>(s); }

// Flattened (side, lo, hi, lo, hi, ...) used as a map key for classes.
std::vector<std::uint32_t> class_key(const Depfactor& d) {
  std::vector<std::uint32_t> key{static_cast<std::uint32_t>(d.side())};
  for (const auto& iv : d.parts()) {
    key.push_back(iv.lo);
    key.push_back(iv.hi);
  }
  return key;
}

template <typename Fn>
void for_each_position(const Depfactor& d, Fn&& fn) {
  for (const auto& iv : d.parts()) {
    for (auto p = iv.lo; p <= iv.hi; ++p) fn(p);
  }
}

}  // namespace

InputLayout::InputLayout(const Equation& eq) {
  std::map<SymbolId, std::size_t> freq;
  for (auto s : kSides) {
    for (const auto& o : eq.side(s)) {
      symbols_[side_index(s)].push_back(o.symbol);
      ++freq[o.symbol];
    }
  }
  code_ = build_huffman(freq);
  for (auto s : kSides) {
    auto& bits = bits_[side_index(s)];
    for (auto id : symbols_[side_index(s)]) {
      bits.push_back(code_.length(id));
      total_ += bits.back();
    }
  }
}

std::size_t InputLayout::abs_of(const Depfactor& d) const {
  std::size_t total = 0;
  const auto& bits = bits_[idx(d.side())];
  for_each_position(d, [&](std::uint32_t p) { total += bits[p]; });
  return total;
}

std::size_t InputLayout::symbol_abs(SymbolId id) const {
  return code_.contains(id) ? code_.length(id) : 0;
}

SupportSizes support_sizes(const Equation& eq, const InputLayout& layout) {
  SupportSizes out;
  for (auto s : kSides) {
    std::vector<long> diff(layout.positions(s) + 1, 0);
    for (auto side : kSides) {
      for (const auto& o : eq.side(side)) {
        if (o.dep.side() != s) continue;
        for (const auto& iv : o.dep.parts()) {
          ++diff[iv.lo];
          --diff[iv.hi + 1];
        }
      }
    }
    auto& sup = out[side_index(s)];
    sup.resize(layout.positions(s));
    long run = 0;
    for (std::size_t p = 0; p < sup.size(); ++p) {
      run += diff[p];
      sup[p] = static_cast<std::size_t>(run);
    }
  }
  return out;
}

void DepCounters::start_phase(const Equation& eq, const InputLayout& layout) {
  k = support_sizes(eq, layout);
  for (auto s : kSides) {
    popped[side_index(s)].assign(layout.positions(s), 0);
    extended[side_index(s)].assign(layout.positions(s), 0);
  }
}

void DepCounters::add_pop(const Depfactor& basic) {
  if (!basic.tracked()) return;
  auto& v = popped[side_index(basic.side())];
  if (basic.min() < v.size()) ++v[basic.min()];
}

void DepCounters::add_extension(Side s, std::uint32_t pos) {
  auto& v = extended[side_index(s)];
  if (pos < v.size()) ++v[pos];
}

void extend_for_block(Equation& eq, const LetterSet& gamma, DepCounters* counters) {
  if (!eq.tracks_depfactors()) return;
  for (auto s : kSides) {
    auto& occ = eq.side_for_dep_update(s);
    std::vector<Depfactor> old;
    old.reserve(occ.size());
    for (const auto& o : occ) old.push_back(o.dep);
    std::size_t i = 1;
    while (i + 1 < occ.size()) {
      if (!gamma.contains(occ[i].symbol)) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 < occ.size() && occ[j].symbol == occ[i].symbol) ++j;
      // block [i, j); neighbours are read from the snapshot
      Depfactor merged = old[i - 1];
      for (std::size_t k = i; k <= j; ++k) merged.absorb(old[k]);
      if (counters != nullptr) {
        for_each_position(merged, [&](std::uint32_t p) {
          for (std::size_t k = i; k < j; ++k) {
            if (!old[k].contains(p)) {
              counters->add_extension(merged.side(), p);
              break;
            }
          }
        });
      }
      for (std::size_t k = i; k < j; ++k) occ[k].dep = merged;
      i = j;
    }
  }
}

void extend_for_pair(Equation& eq, const Partition& p, DepCounters* counters, bool right_first) {
  if (!eq.tracks_depfactors()) return;
  auto pass = [&](std::vector<Occurrence>& occ, bool left_set) {
    std::vector<Depfactor> old;
    old.reserve(occ.size());
    for (const auto& o : occ) old.push_back(o.dep);
    for (std::size_t i = 1; i + 1 < occ.size(); ++i) {
      const auto sym = occ[i].symbol;
      if (left_set ? !p.in_left(sym) : !p.in_right(sym)) continue;
      const auto& neighbour = old[left_set ? i + 1 : i - 1];
      if (counters != nullptr) {
        for_each_position(neighbour, [&](std::uint32_t pos) {
          if (!old[i].contains(pos)) counters->add_extension(neighbour.side(), pos);
        });
      }
      occ[i].dep.absorb(neighbour);
    }
  };
  for (auto s : kSides) {
    auto& occ = eq.side_for_dep_update(s);
    pass(occ, !right_first);
    pass(occ, right_first);
  }
}

Potentials compute_potentials(const Equation& eq, const InputLayout& layout) {
  Potentials out;
  const auto sup = support_sizes(eq, layout);
  for (auto s : kSides) {
    for (std::size_t p = 0; p < sup[side_index(s)].size(); ++p) {
      const auto n = static_cast<double>(sup[side_index(s)][p]);
      out.h_d += static_cast<double>(layout.abs_at(s, static_cast<std::uint32_t>(p))) * n;
      out.h_n += 2.0 * n * std::log2(n + 1.0);
    }
  }
  std::map<std::vector<std::uint32_t>, std::size_t> class_size;
  for (auto s : kSides) {
    for (const auto& o : eq.side(s)) ++class_size[class_key(o.dep)];
  }
  for (auto s : kSides) {
    for (const auto& o : eq.side(s)) {
      out.depfactor_bits += layout.abs_of(o.dep) + std::bit_width(class_size[class_key(o.dep)]);
    }
  }
  return out;
}

std::vector<std::pair<std::uint32_t, SymbolId>> similarity_key(const Depfactor& d,
                                                               const InputLayout& layout) {
  std::vector<std::pair<std::uint32_t, SymbolId>> key;
  if (!d.tracked()) return key;
  const auto base = d.min();
  for_each_position(d, [&](std::uint32_t p) { key.emplace_back(p - base, layout.symbol_at(d.side(), p)); });
  return key;
}

std::vector<Violation> verify_invariants(const Equation& eq, const InputLayout& layout) {
  std::vector<Violation> out;
  auto report = [&out](const char* rule, Side s, std::size_t i, std::string what) {
    out.push_back({rule, std::string(side_name(s)) + "[" + std::to_string(i) + "]: " + what});
  };

  struct Range {
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t count = 0;
  };
  auto note = [](Range& r, std::size_t i) {
    if (r.count == 0) r.first = i;
    r.last = i;
    ++r.count;
  };

  // Similarity key -> symbol string of the first class seen with it.
  std::map<std::vector<std::pair<std::uint32_t, SymbolId>>, std::vector<SymbolId>> class_strings;

  for (auto s : kSides) {
    const auto& occ = eq.side(s);
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (!occ[i].dep.tracked()) {
        report("D1", s, i, "untracked depfactor");
        return out;
      }
      if (occ[i].dep.side() != s) report("D1", s, i, "depfactor from the other side");
    }

    std::vector<Range> sup(layout.positions(s));
    std::map<std::vector<std::uint32_t>, Range> classes;
    std::vector<std::pair<std::vector<std::uint32_t>, const Depfactor*>> class_order;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      const auto& d = occ[i].dep;
      if (d.side() == s) {
        for_each_position(d, [&](std::uint32_t p) { note(sup[p], i); });
      }
      auto key = class_key(d);
      auto& r = classes[key];
      if (r.count == 0) class_order.emplace_back(key, &d);
      note(r, i);
      if (i > 0 && !comparable(occ[i - 1].dep, d)) {
        report("D2", s, i, occ[i - 1].dep.to_string() + " vs " + d.to_string());
      }
    }
    for (std::size_t p = 0; p < sup.size(); ++p) {
      const auto& r = sup[p];
      if (r.count > 0 && r.last - r.first + 1 != r.count) {
        report("D1", s, r.first, "sup of position " + std::to_string(p) + " not contiguous");
      }
    }
    for (const auto& [key, d] : class_order) {
      const auto& r = classes[key];
      if (r.last - r.first + 1 != r.count) {
        report("D1", s, r.first, "class " + d->to_string() + " not contiguous");
        continue;
      }
      std::vector<SymbolId> str;
      for (std::size_t i = r.first; i <= r.last; ++i) str.push_back(occ[i].symbol);
      auto [it, inserted] = class_strings.emplace(similarity_key(*d, layout), str);
      if (!inserted && it->second != str) {
        report("D3", s, r.first, "class " + d->to_string() + " differs from a similar class");
      }
    }
  }
  return out;
}

std::array<std::vector<DNumber>, 2> assign_d_numbers(const Equation& eq, const InputLayout& layout) {
  std::array<std::vector<DNumber>, 2> out;
  std::map<std::vector<std::pair<std::uint32_t, SymbolId>>, std::size_t> codes;
  std::map<std::vector<std::uint32_t>, std::size_t> sizes;
  for (auto s : kSides) {
    for (const auto& o : eq.side(s)) ++sizes[class_key(o.dep)];
  }
  for (auto s : kSides) {
    std::map<std::vector<std::uint32_t>, std::size_t> seen;
    for (const auto& o : eq.side(s)) {
      const auto key = class_key(o.dep);
      auto [it, inserted] = codes.emplace(similarity_key(o.dep, layout), codes.size());
      out[side_index(s)].push_back({it->second, ++seen[key], sizes[key]});
    }
  }
  return out;
}

}  // namespace wordeq
