#include "basislex/io.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "text_util.h"

namespace basislex {

namespace {

double to_double(std::string_view s, std::size_t line, std::string_view what) {
  const std::string tmp(detail::trim(s));
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) {
    throw ParseError("bad " + std::string(what) + " '" + tmp + "'", line);
  }
  return v;
}

std::int64_t to_int(std::string_view s, std::size_t line, std::string_view what) {
  s = detail::trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'", line);
  }
  return v;
}

bool to_bool(std::string_view s, std::size_t line, std::string_view what) {
  s = detail::trim(s);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'", line);
}

std::string fmt_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

}  // namespace

Algorithm parse_algorithm(std::string_view text) {
  if (text == "alg1" || text == "grow_prune") return Algorithm::kGrowPrune;
  if (text == "alg2" || text == "exhaustive") return Algorithm::kExhaustive;
  throw ParseError("unknown algorithm '" + std::string(text) + "'");
}

std::string algorithm_name(Algorithm a) { return a == Algorithm::kGrowPrune ? "alg1" : "alg2"; }

RunConfig parse_run_config(std::string_view text, RunConfig cfg) {
  std::string class_overrides;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    auto line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key = value", ln);
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));

    if (key == "algorithm") {
      try {
        cfg.algorithm = parse_algorithm(value);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), ln);
      }
    } else if (key == "seed_percent") {
      cfg.seed_percent = to_double(value, ln, key);
    } else if (key == "epsilon") {
      cfg.epsilon = to_int(value, ln, key);
    } else if (key == "max_iterations") {
      cfg.max_iterations = static_cast<int>(to_int(value, ln, key));
    } else if (key == "weights") {
      const auto parts = detail::split(value, ',');
      if (parts.size() != 4) throw ParseError("weights needs four values", ln);
      try {
        cfg.weights = WeightSet(to_double(parts[0], ln, key), to_double(parts[1], ln, key),
                                to_double(parts[2], ln, key), to_double(parts[3], ln, key));
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), ln);
      }
    } else if (key == "sequence_cap") {
      cfg.sequence_cap = static_cast<std::size_t>(to_int(value, ln, key));
    } else if (key == "min_segment") {
      cfg.min_segment = static_cast<int>(to_int(value, ln, key));
    } else if (key == "include_whole") {
      cfg.include_whole = to_bool(value, ln, key);
    } else if (key == "ortho_heuristic") {
      if (value == "exact") {
        cfg.ortho.check = OrthoCheck::kExact;
      } else if (value == "positional") {
        cfg.ortho.check = OrthoCheck::kPositional;
      } else {
        throw ParseError("ortho_heuristic must be exact or positional", ln);
      }
    } else if (key == "penalty") {
      cfg.cost.penalty = to_double(value, ln, key);
    } else if (key == "pav_inverted") {
      cfg.cost.pav_inverted = to_bool(value, ln, key);
    } else if (key == "cost_basis") {
      if (value == "post_ortho") {
        cfg.cost_basis = CostBasis::kOrthogonal;
      } else if (value == "pre_ortho") {
        cfg.cost_basis = CostBasis::kPreOrtho;
      } else {
        throw ParseError("cost_basis must be post_ortho or pre_ortho", ln);
      }
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(to_int(value, ln, key));
    } else if (key == "vowels" || key == "digraphs") {
      class_overrides += std::string(key) + " = " + std::string(value) + "\n";
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", ln);
    }
  }
  if (!class_overrides.empty()) {
    auto table = parse_char_classes(class_overrides);
    // parse_char_classes resets absent keys to the standard table; keep ours.
    if (class_overrides.find("vowels") != std::string::npos) cfg.char_classes.vowels = table.vowels;
    if (class_overrides.find("digraphs") != std::string::npos) {
      cfg.char_classes.digraphs = table.digraphs;
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path, RunConfig base) {
  const auto text = detail::read_file(path.string());
  try {
    return parse_run_config(text, std::move(base));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_stats_csv(const std::vector<IterationStats>& trace, std::ostream& out) {
  out << "iteration,B_m,B,J,BmJ,C\n";
  for (const auto& s : trace) {
    out << s.iteration << ',' << s.b_m_size << ',' << s.b_size << ',' << s.j_total << ','
        << fmt_double(s.b_m_times_j, 0) << ',' << fmt_double(s.cost, 4) << '\n';
  }
}

std::vector<IterationStats> parse_stats_csv(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty() || detail::trim(lines[0]) != "iteration,B_m,B,J,BmJ,C") {
    throw ParseError("expected header iteration,B_m,B,J,BmJ,C", 1);
  }
  std::vector<IterationStats> trace;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (detail::trim(lines[i]).empty()) continue;
    const auto f = detail::split(lines[i], ',');
    if (f.size() != 6) throw ParseError("expected 6 columns", i + 1);
    IterationStats s;
    s.iteration = static_cast<int>(to_int(f[0], i + 1, "iteration"));
    s.b_m_size = to_int(f[1], i + 1, "B_m");
    s.b_size = to_int(f[2], i + 1, "B");
    s.j_total = to_int(f[3], i + 1, "J");
    s.b_m_times_j = to_double(f[4], i + 1, "BmJ");
    s.cost = to_double(f[5], i + 1, "C");
    trace.push_back(s);
  }
  return trace;
}

void write_stats_json(const std::vector<IterationStats>& trace, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : trace) {
    rows.push_back({{"iteration", s.iteration},
                    {"B_m", s.b_m_size},
                    {"B", s.b_size},
                    {"J", s.j_total},
                    {"BmJ", s.b_m_times_j},
                    {"C", s.cost}});
  }
  out << nlohmann::json{{"iterations", rows}}.dump(2) << '\n';
}

std::vector<IterationStats> parse_stats_json(std::string_view text) {
  std::vector<IterationStats> trace;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& r : doc.at("iterations")) {
      IterationStats s;
      s.iteration = r.at("iteration").get<int>();
      s.b_m_size = r.at("B_m").get<std::int64_t>();
      s.b_size = r.at("B").get<std::int64_t>();
      s.j_total = r.at("J").get<std::int64_t>();
      s.b_m_times_j = r.at("BmJ").get<double>();
      s.cost = r.at("C").get<double>();
      trace.push_back(s);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed stats json: ") + e.what());
  }
  return trace;
}

std::vector<IterationStats> load_stats(const std::filesystem::path& path) {
  const auto text = detail::read_file(path.string());
  try {
    return path.extension() == ".json" ? parse_stats_json(text) : parse_stats_csv(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_cost_curve_csv(const std::vector<IterationStats>& trace, std::ostream& out) {
  out << "iteration,C\n";
  for (const auto& s : trace) out << s.iteration << ',' << fmt_double(s.cost, 4) << '\n';
}

void write_b_vs_j_csv(const std::vector<IterationStats>& trace, std::ostream& out) {
  out << "iteration,B,J\n";
  for (const auto& s : trace) out << s.iteration << ',' << s.b_size << ',' << s.j_total << '\n';
}

void write_bm_j_csv(const std::vector<IterationStats>& trace, std::ostream& out) {
  out << "iteration,BmJ\n";
  for (const auto& s : trace) out << s.iteration << ',' << fmt_double(s.b_m_times_j, 0) << '\n';
}

void write_basis(const Basis& basis, std::ostream& out) {
  for (const auto& w : basis.texts()) out << w << '\n';
}

Basis parse_basis(std::string_view text) {
  Basis basis;
  for (auto line : detail::split_lines(text)) {
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    basis.insert(line);
  }
  return basis;
}

Basis load_basis(const std::filesystem::path& path) {
  return parse_basis(detail::read_file(path.string()));
}

void write_segmentations(const std::vector<NameSegmentation>& segs, std::ostream& out) {
  std::vector<const NameSegmentation*> order;
  for (const auto& s : segs) order.push_back(&s);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return a->name < b->name; });
  for (const auto* s : order) out << s->name << '\t' << detail::join(s->words, " ") << '\n';
}

std::vector<NameWords> parse_segmentations(std::string_view text) {
  std::vector<NameWords> out;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::trim(lines[i]).empty() || lines[i].front() == '#') continue;
    const auto f = detail::split(lines[i], '\t');
    if (f.size() != 2) throw ParseError("expected name<TAB>words", i + 1);
    NameWords nw{std::string(detail::trim(f[0])), {}};
    std::istringstream in{std::string(f[1])};
    std::string w;
    while (in >> w) nw.words.push_back(w);
    if (nw.name.empty() || nw.words.empty()) throw ParseError("empty segmentation", i + 1);
    out.push_back(std::move(nw));
  }
  return out;
}

std::vector<NameWords> load_segmentations(const std::filesystem::path& path) {
  const auto text = detail::read_file(path.string());
  try {
    return parse_segmentations(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace basislex
