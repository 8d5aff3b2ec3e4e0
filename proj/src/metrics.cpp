#include "wordeq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wordeq/errors.hpp"

namespace wordeq {

using ojson = nlohmann::ordered_json;

namespace {

const char* const kCsvHeader =
    "phase,step,kind,partition,lhs_len,rhs_len,letter_bits,variable_bits,total_bits,padded_bits,"
    "h_d,h_n,depfactor_bits,s_a,s_b,s_c,s_d,target,uncovered";

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::size_t to_size(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw ParseError("bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer '" + s + "'");
  }
}

double to_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stod(s, &used);
    if (used != s.size()) throw ParseError("bad number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad number '" + s + "'");
  }
}

ojson step_json(const StepRecord& r) {
  return ojson{{"phase", r.phase},
               {"step", r.step},
               {"kind", r.kind},
               {"partition", r.partition},
               {"lhs_len", r.lhs_len},
               {"rhs_len", r.rhs_len},
               {"letter_bits", r.letter_bits},
               {"variable_bits", r.variable_bits},
               {"total_bits", r.total_bits},
               {"padded_bits", r.padded_bits},
               {"h_d", round6(r.h_d)},
               {"h_n", round6(r.h_n)},
               {"depfactor_bits", r.depfactor_bits},
               {"s_a", r.s_a},
               {"s_b", r.s_b},
               {"s_c", r.s_c},
               {"s_d", r.s_d},
               {"target", r.target},
               {"uncovered", r.uncovered}};
}

ojson phase_json(const PhaseSummary& p) {
  return ojson{{"phase", p.phase},
               {"partitions", p.partitions},
               {"h_d_start", round6(p.h_d_start)},
               {"h_n_start", round6(p.h_n_start)},
               {"h_d_end", round6(p.h_d_end)},
               {"h_n_end", round6(p.h_n_end)},
               {"h_peak", round6(p.h_peak)},
               {"sum_k", p.sum_k},
               {"sum_p", p.sum_p},
               {"sum_e", p.sum_e},
               {"max_p", p.max_p},
               {"max_e", p.max_e},
               {"sum_h_p", round6(p.sum_h_p)},
               {"sum_h_e", round6(p.sum_h_e)}};
}

}  // namespace

double h_of(double x) { return x * std::log2(x + 1.0); }

double round6(double x) { return std::round(x * 1e6) / 1e6; }

bool transient_step(const std::string& kind) { return kind == "block_pop" || kind == "block_extend"; }

double RunMetrics::max_ratio() const {
  double best = 0;
  if (input_abs == 0) return best;
  for (const auto& s : steps) {
    if (transient_step(s.kind)) continue;
    best = std::max(best, (s.h_d + s.h_n) / static_cast<double>(input_abs));
  }
  return best;
}

std::string export_csv(const RunMetrics& m) {
  std::ostringstream out;
  out << "# wordeq-metrics v" << kMetricsSchemaVersion << "\n" << kCsvHeader << "\n";
  for (const auto& r : m.steps) {
    out << r.phase << ',' << r.step << ',' << r.kind << ',' << r.partition << ',' << r.lhs_len << ','
        << r.rhs_len << ',' << r.letter_bits << ',' << r.variable_bits << ',' << r.total_bits << ','
        << r.padded_bits << ',' << fixed6(r.h_d) << ',' << fixed6(r.h_n) << ',' << r.depfactor_bits << ','
        << r.s_a << ',' << r.s_b << ',' << r.s_c << ',' << r.s_d << ',' << r.target << ',' << r.uncovered
        << "\n";
  }
  return out.str();
}

RunMetrics parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "# wordeq-metrics v" + std::to_string(kMetricsSchemaVersion)) {
    throw ParseError("missing metrics schema line");
  }
  if (!std::getline(in, line) || line != kCsvHeader) throw ParseError("unexpected CSV header");
  RunMetrics m;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c = split(line, ',');
    if (c.size() != 19) throw ParseError("expected 19 columns, got " + std::to_string(c.size()));
    StepRecord r;
    r.phase = static_cast<int>(to_size(c[0]));
    r.step = to_size(c[1]);
    r.kind = c[2];
    r.partition = to_size(c[3]);
    r.lhs_len = to_size(c[4]);
    r.rhs_len = to_size(c[5]);
    r.letter_bits = to_size(c[6]);
    r.variable_bits = to_size(c[7]);
    r.total_bits = to_size(c[8]);
    r.padded_bits = to_size(c[9]);
    r.h_d = to_double(c[10]);
    r.h_n = to_double(c[11]);
    r.depfactor_bits = to_size(c[12]);
    r.s_a = to_size(c[13]);
    r.s_b = to_size(c[14]);
    r.s_c = to_size(c[15]);
    r.s_d = to_size(c[16]);
    r.target = c[17];
    r.uncovered = to_size(c[18]);
    m.steps.push_back(std::move(r));
  }
  return m;
}

std::string export_json(const RunMetrics& m) {
  ojson doc;
  doc["schema_version"] = kMetricsSchemaVersion;
  doc["input_abs"] = m.input_abs;
  doc["input_letter_bits"] = m.input_letter_bits;
  doc["max_ratio"] = round6(m.max_ratio());
  doc["steps"] = ojson::array();
  for (const auto& s : m.steps) doc["steps"].push_back(step_json(s));
  doc["phases"] = ojson::array();
  for (const auto& p : m.phases) doc["phases"].push_back(phase_json(p));
  return doc.dump(2) + "\n";
}

RunMetrics parse_json(const std::string& text) {
  try {
    const auto doc = ojson::parse(text);
    if (doc.at("schema_version").get<int>() != kMetricsSchemaVersion) throw ParseError("unsupported schema version");
    RunMetrics m;
    m.input_abs = doc.at("input_abs").get<std::size_t>();
    m.input_letter_bits = doc.at("input_letter_bits").get<std::size_t>();
    for (const auto& j : doc.at("steps")) {
      StepRecord r;
      r.phase = j.at("phase").get<int>();
      r.step = j.at("step").get<std::size_t>();
      r.kind = j.at("kind").get<std::string>();
      r.partition = j.at("partition").get<std::size_t>();
      r.lhs_len = j.at("lhs_len").get<std::size_t>();
      r.rhs_len = j.at("rhs_len").get<std::size_t>();
      r.letter_bits = j.at("letter_bits").get<std::size_t>();
      r.variable_bits = j.at("variable_bits").get<std::size_t>();
      r.total_bits = j.at("total_bits").get<std::size_t>();
      r.padded_bits = j.at("padded_bits").get<std::size_t>();
      r.h_d = j.at("h_d").get<double>();
      r.h_n = j.at("h_n").get<double>();
      r.depfactor_bits = j.at("depfactor_bits").get<std::size_t>();
      r.s_a = j.at("s_a").get<std::size_t>();
      r.s_b = j.at("s_b").get<std::size_t>();
      r.s_c = j.at("s_c").get<std::size_t>();
      r.s_d = j.at("s_d").get<std::size_t>();
      r.target = j.at("target").get<std::string>();
      r.uncovered = j.at("uncovered").get<std::size_t>();
      m.steps.push_back(std::move(r));
    }
    for (const auto& j : doc.at("phases")) {
      PhaseSummary p;
      p.phase = j.at("phase").get<int>();
      p.partitions = j.at("partitions").get<std::size_t>();
      p.h_d_start = j.at("h_d_start").get<double>();
      p.h_n_start = j.at("h_n_start").get<double>();
      p.h_d_end = j.at("h_d_end").get<double>();
      p.h_n_end = j.at("h_n_end").get<double>();
      p.h_peak = j.at("h_peak").get<double>();
      p.sum_k = j.at("sum_k").get<std::size_t>();
      p.sum_p = j.at("sum_p").get<std::size_t>();
      p.sum_e = j.at("sum_e").get<std::size_t>();
      p.max_p = j.at("max_p").get<std::size_t>();
      p.max_e = j.at("max_e").get<std::size_t>();
      p.sum_h_p = j.at("sum_h_p").get<double>();
      p.sum_h_e = j.at("sum_h_e").get<double>();
      m.phases.push_back(p);
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("metrics JSON: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

std::vector<BoundCheck> check_space_bounds(const RunMetrics& m) {
  std::vector<BoundCheck> out;
  const auto abs = static_cast<double>(m.input_abs);
  for (const auto& p : m.phases) {
    out.push_back({"h_d_recurrence", p.phase, p.h_d_end, 2.0 / 3.0 * p.h_d_start + 41.0 * abs});
    out.push_back({"h_n_recurrence", p.phase, p.h_n_end, 5.0 / 6.0 * p.h_n_start + 15540.0 * abs});
    out.push_back({"intra_phase_peak", p.phase, p.h_peak, 8.0 * (p.h_d_start + p.h_n_start) + 2104.0 * abs});
    out.push_back({"sum_h_pops", p.phase, p.sum_h_p, 129.0 * abs});
    out.push_back({"sum_h_extensions", p.phase, p.sum_h_e, 129.0 * abs});
  }
  return out;
}

}  // namespace wordeq
