#include "wordeq/equation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "wordeq/errors.hpp"

namespace wordeq {

namespace {

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::vector<Occurrence> with_markers(const std::vector<SymbolId>& symbols, Side side) {
  std::vector<Occurrence> out;
  out.reserve(symbols.size() + 2);
  std::uint32_t pos = 0;
  out.push_back({0, Depfactor::basic(side, pos++)});
  for (auto id : symbols) out.push_back({id, Depfactor::basic(side, pos++)});
  out.push_back({0, Depfactor::basic(side, pos++)});
  return out;
}

}  // namespace

Equation::Equation(std::shared_ptr<SymbolTable> symbols, std::vector<Occurrence> lhs,
                   std::vector<Occurrence> rhs)
    : symbols_(std::move(symbols)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  recount();
}

void Equation::set_sides(std::vector<Occurrence> lhs, std::vector<Occurrence> rhs) {
  lhs_ = std::move(lhs);
  rhs_ = std::move(rhs);
  recount();
}

void Equation::set_side(Side s, std::vector<Occurrence> occs) {
  (s == Side::Lhs ? lhs_ : rhs_) = std::move(occs);
  recount();
}

void Equation::recount() {
  for (auto& [var, n] : counts_) n = 0;
  for (const auto* side : {&lhs_, &rhs_}) {
    for (const auto& o : *side) {
      if (symbols_->is_variable(o.symbol)) ++counts_[o.symbol];
    }
  }
}

bool Equation::bookkeeping_consistent() const {
  std::map<SymbolId, std::size_t> fresh;
  for (const auto* side : {&lhs_, &rhs_}) {
    for (const auto& o : *side) {
      if (symbols_->is_variable(o.symbol)) ++fresh[o.symbol];
    }
  }
  for (const auto& [var, n] : counts_) {
    auto it = fresh.find(var);
    const std::size_t actual = it == fresh.end() ? 0 : it->second;
    if (actual != n) return false;
  }
  for (const auto& [var, n] : fresh) {
    if (!counts_.contains(var)) return false;
  }
  return true;
}

std::vector<SymbolId> Equation::letters() const {
  std::vector<SymbolId> out;
  std::vector<bool> seen(symbols_->size(), false);
  for (const auto* side : {&lhs_, &rhs_}) {
    for (const auto& o : *side) {
      if (symbols_->is_letter(o.symbol) && !seen[o.symbol]) {
        seen[o.symbol] = true;
        out.push_back(o.symbol);
      }
    }
  }
  return out;
}

std::vector<SymbolId> Equation::variables() const {
  std::vector<SymbolId> out;
  for (const auto* side : {&lhs_, &rhs_}) {
    for (const auto& o : *side) {
      if (symbols_->is_variable(o.symbol) &&
          std::find(out.begin(), out.end(), o.symbol) == out.end()) {
        out.push_back(o.symbol);
      }
    }
  }
  return out;
}

std::size_t Equation::occurrences(SymbolId var) const {
  auto it = counts_.find(var);
  return it == counts_.end() ? 0 : it->second;
}

bool Equation::has_variables() const {
  return std::any_of(counts_.begin(), counts_.end(), [](const auto& kv) { return kv.second > 0; });
}

void Equation::untrack_depfactors() {
  for (auto* side : {&lhs_, &rhs_}) {
    for (auto& o : *side) o.dep = Depfactor{};
  }
}

std::string Equation::render() const {
  std::string out;
  for (const auto* side : {&lhs_, &rhs_}) {
    if (side == &rhs_) out += " = ";
    for (std::size_t i = 1; i + 1 < side->size(); ++i) out += symbols_->display((*side)[i].symbol);
  }
  return out;
}

Equation make_equation(std::shared_ptr<SymbolTable> symbols, const std::vector<SymbolId>& lhs,
                       const std::vector<SymbolId>& rhs) {
  return Equation(std::move(symbols), with_markers(lhs, Side::Lhs), with_markers(rhs, Side::Rhs));
}

Equation parse_equation(std::string_view text) {
  text = strip_comment(text);
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("missing '='");
  if (text.find('=', eq + 1) != std::string_view::npos) throw ParseError("more than one '='");
  auto symbols = std::make_shared<SymbolTable>();
  auto tokenize = [&symbols](std::string_view part, const char* which) {
    std::vector<SymbolId> ids;
    for (char c : part) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      ids.push_back(symbols->intern(c));
    }
    if (ids.empty()) throw ParseError(std::string("empty ") + which + " side");
    return ids;
  };
  const auto lhs = tokenize(text.substr(0, eq), "left");
  const auto rhs = tokenize(text.substr(eq + 1), "right");
  return make_equation(std::move(symbols), lhs, rhs);
}

Equation read_equation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (is_blank(strip_comment(line))) continue;
    return parse_equation(line);
  }
  throw ParseError("no equation in " + path);
}

std::string render_word(const SymbolTable& symbols, const Word& w) {
  std::string out;
  for (auto id : w) out += symbols.display(id);
  return out;
}

std::pair<Word, Word> apply_substitution(const Equation& eq, const Substitution& sigma) {
  auto expand = [&](const std::vector<Occurrence>& side) {
    Word out;
    for (const auto& o : side) {
      if (o.symbol == eq.symbols().end_marker()) continue;
      if (eq.symbols().is_variable(o.symbol)) {
        auto it = sigma.find(o.symbol);
        if (it == sigma.end()) throw MissingVariable(eq.symbols().display(o.symbol));
        out.insert(out.end(), it->second.begin(), it->second.end());
      } else {
        out.push_back(o.symbol);
      }
    }
    return out;
  };
  return {expand(eq.lhs()), expand(eq.rhs())};
}

bool check_solution(const Equation& eq, const Substitution& sigma) {
  const auto [u, v] = apply_substitution(eq, sigma);
  return u == v;
}

std::string render_witness(const SymbolTable& symbols, const Substitution& sigma) {
  std::string out;
  for (const auto& [var, image] : sigma) {
    out += symbols.display(var) + " = " + (image.empty() ? "<eps>" : render_word(symbols, image)) + "\n";
  }
  return out;
}

Substitution parse_witness(std::string_view text, const Equation& eq) {
  Substitution sigma;
  auto& table = *eq.table();
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    auto line = strip_comment(raw);
    if (is_blank(line)) continue;
    const auto eqpos = line.find('=');
    if (eqpos == std::string_view::npos) throw ParseError("witness line without '='");
    std::string name;
    for (char c : line.substr(0, eqpos)) {
      if (!std::isspace(static_cast<unsigned char>(c))) name += c;
    }
    if (name.size() != 1 || !std::isupper(static_cast<unsigned char>(name[0]))) {
      throw ParseError("bad witness variable '" + name + "'");
    }
    const auto var = table.find(name[0]);
    if (var < 0) throw ParseError("witness variable " + name + " not in equation");
    std::string body;
    for (char c : line.substr(eqpos + 1)) {
      if (!std::isspace(static_cast<unsigned char>(c))) body += c;
    }
    Word image;
    if (body != "<eps>") {
      for (char c : body) {
        if (!std::islower(static_cast<unsigned char>(c))) {
          throw ParseError(std::string("illegal witness letter '") + c + "'");
        }
        image.push_back(table.intern(c));
      }
    }
    sigma[static_cast<SymbolId>(var)] = std::move(image);
  }
  return sigma;
}

Substitution read_witness_file(const std::string& path, const Equation& eq) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_witness(buf.str(), eq);
}

}  // namespace wordeq
