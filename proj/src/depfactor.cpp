#include "wordeq/depfactor.hpp"

#include <algorithm>

#include "wordeq/errors.hpp"

namespace wordeq {

Depfactor Depfactor::basic(Side side, std::uint32_t pos) {
  Depfactor d;
  d.side_ = side;
  d.parts_.push_back({pos, pos});
  return d;
}

Depfactor Depfactor::from_positions(Side side, std::vector<std::uint32_t> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  Depfactor d;
  d.side_ = side;
  for (auto p : positions) {
    if (!d.parts_.empty() && d.parts_.back().hi + 1 == p) {
      d.parts_.back().hi = p;
    } else {
      d.parts_.push_back({p, p});
    }
  }
  return d;
}

bool Depfactor::contains(std::uint32_t pos) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), pos,
                             [](std::uint32_t p, const Interval& iv) { return p < iv.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return pos <= it->hi;
}

std::size_t Depfactor::count() const {
  std::size_t n = 0;
  for (const auto& iv : parts_) n += iv.hi - iv.lo + 1;
  return n;
}

std::vector<std::uint32_t> Depfactor::positions() const {
  std::vector<std::uint32_t> out;
  for (const auto& iv : parts_) {
    for (auto p = iv.lo; p <= iv.hi; ++p) out.push_back(p);
  }
  return out;
}

void Depfactor::absorb(const Depfactor& other) {
  if (!other.tracked()) return;
  if (!tracked()) {
    *this = other;
    return;
  }
  std::vector<Interval> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  auto push = [&merged](Interval iv) {
    if (!merged.empty() && merged.back().hi + 1 >= iv.lo) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  };
  while (i < parts_.size() || j < other.parts_.size()) {
    if (j == other.parts_.size() || (i < parts_.size() && parts_[i].lo <= other.parts_[j].lo)) {
      push(parts_[i++]);
    } else {
      push(other.parts_[j++]);
    }
  }
  parts_ = std::move(merged);
}

std::string Depfactor::to_string() const {
  std::string s = side_name(side_);
  s += "{";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k].lo);
    if (parts_[k].hi != parts_[k].lo) s += ".." + std::to_string(parts_[k].hi);
  }
  s += "}";
  return s;
}

bool depfactor_le(const Depfactor& a, const Depfactor& b) {
  if (a.side() != b.side()) return a.side() == Side::Lhs;
  return a.min() <= b.min() && a.max() <= b.max();
}

bool comparable(const Depfactor& a, const Depfactor& b) {
  return depfactor_le(a, b) || depfactor_le(b, a);
}

Depfactor sum_depfactors(const Depfactor& a, const Depfactor& b) {
  if (!a.tracked() || !b.tracked()) {
    throw IncomparableDepfactors("cannot sum untracked depfactors");
  }
  if (a.side() != b.side() || !comparable(a, b)) {
    throw IncomparableDepfactors(a.to_string() + " and " + b.to_string());
  }
  Depfactor out = a;
  out.absorb(b);
  return out;
}

}  // namespace wordeq
