#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "basislex/corpus.h"
#include "basislex/engine.h"
#include "basislex/error.h"
#include "basislex/io.h"
#include "basislex/lexicon.h"
#include "basislex/ortho.h"
#include "basislex/syntax.h"

namespace basislex::cli {

namespace {

namespace fs = std::filesystem;

struct CorpusArgs {
  std::string names;
  std::string format = "plain";
  int min_length = 3;
};

struct RunArgs {
  std::string config;
  std::string algo;
  std::string weights;
  std::string syntax;
  double seed_percent = 0.0;
  int max_iterations = 0;
  std::int64_t epsilon = 0;
  unsigned threads = 1;
  std::string ortho_heuristic;
};

void add_corpus_options(CLI::App* app, CorpusArgs& a) {
  app->add_option("--names", a.names, "Names file")->required();
  app->add_option("--format", a.format, "plain | name_freq")->capture_default_str();
  app->add_option("--min-length", a.min_length, "Drop shorter names")->capture_default_str();
}

void add_run_options(CLI::App* app, RunArgs& a) {
  app->add_option("--config", a.config, "key=value run configuration");
  app->add_option("--algo", a.algo, "alg1 | alg2");
  app->add_option("--weights", a.weights, "Four comma-separated weights");
  app->add_option("--seed-percent", a.seed_percent, "Seed threshold as a fraction of max frequency");
  app->add_option("--max-iterations", a.max_iterations);
  app->add_option("--epsilon", a.epsilon);
  app->add_option("--threads", a.threads, "Worker threads, 0 = all cores");
  app->add_option("--ortho-heuristic", a.ortho_heuristic, "exact | positional");
  app->add_option("--syntax", a.syntax, "Vowel/digraph override file");
}

Corpus read_corpus(const CorpusArgs& a) {
  return normalize(load_names(a.names, parse_name_file_format(a.format)), a.min_length);
}

// Config file first, then any flag given on the command line.
RunConfig build_config(CLI::App* app, const RunArgs& a, std::ostream& err) {
  RunConfig cfg;
  if (!a.config.empty()) cfg = load_run_config(a.config);
  if (!a.syntax.empty()) cfg.char_classes = load_char_classes(a.syntax);
  std::string overrides;
  auto flag = [&](const char* name, const std::string& key, const std::string& value) {
    if (app->count(name)) overrides += key + " = " + value + "\n";
  };
  flag("--algo", "algorithm", a.algo);
  flag("--weights", "weights", a.weights);
  flag("--seed-percent", "seed_percent", std::to_string(a.seed_percent));
  flag("--max-iterations", "max_iterations", std::to_string(a.max_iterations));
  flag("--epsilon", "epsilon", std::to_string(a.epsilon));
  flag("--threads", "threads", std::to_string(a.threads));
  flag("--ortho-heuristic", "ortho_heuristic", a.ortho_heuristic);
  if (!overrides.empty()) cfg = parse_run_config(overrides, cfg);
  cfg.on_warning = [&err](const std::string& msg) { err << "warning: " << msg << '\n'; };
  cfg.validate();
  return cfg;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw IoError("cannot write " + p.string());
  return f;
}

template <typename Fn>
void write_file(const fs::path& p, Fn&& fn) {
  auto f = open_out(p);
  fn(f);
  if (!f) throw IoError("error writing " + p.string());
}

std::string format_weights(const WeightSet& w) {
  std::ostringstream ss;
  ss << w.mu() << ',' << w.nu() << ',' << w.demand() << ',' << w.fourth();
  return ss.str();
}

int cmd_induce(CLI::App* app, const CorpusArgs& ca, const RunArgs& ra, const std::string& out_dir,
               std::ostream& out, std::ostream& err) {
  const auto cfg = build_config(app, ra, err);
  const auto corpus = read_corpus(ca);
  const auto result = run(corpus, cfg);

  const fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "basis.txt", [&](std::ostream& f) { write_basis(result.basis, f); });
  write_file(dir / "segmentations.tsv",
             [&](std::ostream& f) { write_segmentations(result.segmentations, f); });
  write_file(dir / "stats.csv", [&](std::ostream& f) { write_stats_csv(result.trace, f); });
  write_file(dir / "stats.json", [&](std::ostream& f) { write_stats_json(result.trace, f); });
  write_file(dir / "cost_curve.csv", [&](std::ostream& f) { write_cost_curve_csv(result.trace, f); });
  write_file(dir / "b_vs_j.csv", [&](std::ostream& f) { write_b_vs_j_csv(result.trace, f); });
  write_file(dir / "bm_j.csv", [&](std::ostream& f) { write_bm_j_csv(result.trace, f); });

  out << "names: " << corpus.total_unique() << '\n'
      << "iterations: " << result.trace.size() << (result.converged ? "" : " (not converged)")
      << '\n'
      << "basis: " << result.basis.size() << '\n'
      << "joins: " << result.final_joins << '\n'
      << "cost: " << std::fixed << std::setprecision(4) << result.final_cost << '\n';
  return kExitOk;
}

int cmd_ortho(const std::string& basis_path, bool check_only, const std::string& out_path,
              const std::string& heuristic, std::ostream& out, std::ostream& err) {
  const auto basis = load_basis(basis_path);
  if (check_only) {
    const auto report = is_ortho(basis);
    for (const auto& w : report.witnesses) {
      out << w.word << " =";
      for (std::size_t i = 0; i < w.parts.size(); ++i) out << (i ? " ⊕ " : " ") << w.parts[i];
      out << '\n';
    }
    if (report.orthogonal) {
      out << "orthogonal: " << basis.size() << " words\n";
      return kExitOk;
    }
    out << "rank deficient: " << report.witnesses.size() << " of " << basis.size()
        << " words are concatenations of others\n";
    return kExitValidation;
  }
  OrthoOptions opt;
  if (heuristic == "positional") {
    opt.check = OrthoCheck::kPositional;
  } else if (heuristic != "exact") {
    throw ParseError("--heuristic must be exact or positional");
  }
  const auto result = make_ortho_detailed(basis, opt);
  for (const auto& w : result.removed) err << "removed " << w << '\n';
  if (out_path.empty()) {
    write_basis(result.basis, out);
  } else {
    write_file(out_path, [&](std::ostream& f) { write_basis(result.basis, f); });
  }
  return kExitOk;
}

int cmd_transcribe(const std::string& names_path, const std::string& names_format,
                   const std::string& basis_path, const std::string& seg_path,
                   const std::string& table_path, const std::string& format,
                   const std::string& out_path, std::ostream& out, std::ostream& err) {
  const auto fmt = parse_lexicon_format(format);
  std::optional<Basis> basis;
  if (!basis_path.empty()) basis = load_basis(basis_path);
  auto loaded = load_transcriptions(table_path, basis ? &*basis : nullptr);
  for (const auto& w : loaded.warnings) err << "warning: " << w << '\n';

  auto segs = load_segmentations(seg_path);
  if (!names_path.empty()) {
    const auto corpus = normalize(load_names(names_path, parse_name_file_format(names_format)));
    std::erase_if(segs, [&](const NameWords& s) { return !corpus.contains(s.name); });
  }
  if (basis) {
    std::set<std::string> outside;
    for (const auto& s : segs) {
      for (const auto& w : s.words) {
        if (!basis->contains(w)) outside.insert(w);
      }
    }
    if (!outside.empty()) {
      err << "segmentation words not in the basis:\n";
      for (const auto& w : outside) err << "  " << w << '\n';
      return kExitValidation;
    }
  }

  Lexicon lex;
  try {
    lex = build_lexicon(segs, loaded.table);
  } catch (const MissingTranscriptionError& e) {
    err << "missing transcriptions (" << e.missing().size() << "):\n";
    for (const auto& w : e.missing()) err << "  " << w << '\n';
    return kExitValidation;
  }
  if (out_path.empty()) {
    emit_lexicon(lex, fmt, out);
  } else {
    write_file(out_path, [&](std::ostream& f) { emit_lexicon(lex, fmt, f); });
  }
  return kExitOk;
}

int cmd_report(const std::string& stats_path, std::ostream& out) {
  const auto trace = load_stats(stats_path);
  out << std::left << std::setw(6) << "iter" << std::right << std::setw(10) << "B_m"
      << std::setw(10) << "B" << std::setw(10) << "J" << std::setw(16) << "BmJ" << std::setw(14)
      << "C" << '\n';
  for (const auto& s : trace) {
    out << std::left << std::setw(6) << s.iteration << std::right << std::setw(10) << s.b_m_size
        << std::setw(10) << s.b_size << std::setw(10) << s.j_total << std::setw(16)
        << std::setprecision(6) << std::defaultfloat << s.b_m_times_j << std::setw(14)
        << std::fixed << std::setprecision(1) << s.cost << std::defaultfloat << '\n';
  }
  const auto report = check_convergence(trace);
  if (!report.sufficient()) {
    out << "insufficient trace: convergence needs at least two iterations\n";
    return kExitOk;
  }
  for (const auto& st : report.steps) {
    out << st.from_iteration << "->" << st.to_iteration
        << "  |B| non-increasing: " << (st.basis_non_increasing ? "pass" : "FAIL")
        << "  |B_m||J| non-increasing: " << (st.product_non_increasing ? "pass" : "FAIL") << '\n';
  }
  return report.all_pass() ? kExitOk : kExitValidation;
}

int cmd_grid(CLI::App* app, const CorpusArgs& ca, const RunArgs& ra, double step,
             const std::string& out_path, std::ostream& out, std::ostream& err) {
  auto cfg = build_config(app, ra, err);
  cfg.on_warning = nullptr;  // one non-convergence warning per tuple is noise
  const auto corpus = read_corpus(ca);
  const auto result = grid_search_weights(corpus, cfg, step);
  auto write_table = [&](std::ostream& f) {
    f << "w_mu,w_nu,w_p,w_4,C,B,J\n";
    for (const auto& r : result.table) {
      f << format_weights(r.weights) << ',' << std::fixed << std::setprecision(4) << r.cost
        << std::defaultfloat << ',' << r.basis_size << ',' << r.joins << '\n';
    }
  };
  if (!out_path.empty()) write_file(out_path, write_table);
  out << "tuples: " << result.table.size() << '\n'
      << "best weights: " << format_weights(result.best) << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Induce a sub-word basis for a names corpus and build a pronunciation lexicon"};
  app.require_subcommand(1);

  CorpusArgs induce_corpus, grid_corpus;
  RunArgs induce_run, grid_run;
  std::string out_dir;
  auto* induce = app.add_subcommand("induce", "Induce a basis and write its reports");
  add_corpus_options(induce, induce_corpus);
  add_run_options(induce, induce_run);
  induce->add_option("--out", out_dir, "Output directory")->required();

  std::string basis_path, ortho_out, heuristic = "exact";
  bool check_only = false;
  auto* ortho = app.add_subcommand("ortho", "Check or enforce basis orthogonality");
  ortho->add_option("--basis", basis_path, "Basis file")->required();
  ortho->add_flag("--check-only", check_only, "Report violations, exit 1 if any");
  ortho->add_option("--out", ortho_out, "Write the orthogonal basis here (default stdout)");
  ortho->add_option("--heuristic", heuristic, "exact | positional")->capture_default_str();

  std::string t_names, t_names_format = "plain", t_basis, t_segs, t_table, t_format = "tsv", t_out;
  auto* transcribe = app.add_subcommand("transcribe", "Compose pronunciations for segmented names");
  transcribe->add_option("--names", t_names, "Only transcribe names in this file");
  transcribe->add_option("--names-format", t_names_format)->capture_default_str();
  transcribe->add_option("--basis", t_basis, "Basis file to validate against");
  transcribe->add_option("--segmentations", t_segs, "name<TAB>words file")->required();
  transcribe->add_option("--table", t_table, "word<TAB>darpa<TAB>sapi file")->required();
  transcribe->add_option("--format", t_format, "tsv | festival | sapi")->capture_default_str();
  transcribe->add_option("--out", t_out, "Output file (default stdout)");

  std::string stats_path;
  auto* report = app.add_subcommand("report", "Print a stats trace and check convergence");
  report->add_option("--stats", stats_path, "stats.csv or stats.json")->required();

  double step = 0.1;
  std::string grid_out;
  auto* grid = app.add_subcommand("grid-search", "Search the weight simplex for the lowest cost");
  add_corpus_options(grid, grid_corpus);
  add_run_options(grid, grid_run);
  grid->add_option("--step", step, "Grid spacing")->capture_default_str();
  grid->add_option("--out", grid_out, "Write the full table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitIo;
  }

  try {
    if (*induce) return cmd_induce(induce, induce_corpus, induce_run, out_dir, out, err);
    if (*ortho) return cmd_ortho(basis_path, check_only, ortho_out, heuristic, out, err);
    if (*transcribe) {
      return cmd_transcribe(t_names, t_names_format, t_basis, t_segs, t_table, t_format, t_out,
                            out, err);
    }
    if (*report) return cmd_report(stats_path, out);
    if (*grid) return cmd_grid(grid, grid_corpus, grid_run, step, grid_out, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace basislex::cli
