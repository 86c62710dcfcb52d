#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "basislex/basis.h"
#include "basislex/engine.h"
#include "basislex/lexicon.h"

namespace basislex {

// key = value lines, '#' starts a comment. Recognised keys:
//   algorithm        alg1 | alg2
//   seed_percent     fraction of the maximum frequency, e.g. 0.40
//   epsilon          stop once an iteration grows the basis by <= epsilon words
//   max_iterations
//   weights          four comma-separated values summing to 1
//   sequence_cap     candidate sequences kept per name
//   min_segment      shortest segment for alg2
//   include_whole    true | false
//   ortho_heuristic  exact | positional
//   penalty          stands in for 1/0 in the cost
//   pav_inverted     true | false
//   cost_basis       post_ortho | pre_ortho
//   threads          0 = hardware concurrency
//   vowels, digraphs as in the syntax override file
// Settings not mentioned keep their value from `base`.
RunConfig parse_run_config(std::string_view text, RunConfig base = {});
RunConfig load_run_config(const std::filesystem::path& path, RunConfig base = {});

Algorithm parse_algorithm(std::string_view text);
std::string algorithm_name(Algorithm a);

// iteration,B_m,B,J,BmJ,C
void write_stats_csv(const std::vector<IterationStats>& trace, std::ostream& out);
std::vector<IterationStats> parse_stats_csv(std::string_view text);

void write_stats_json(const std::vector<IterationStats>& trace, std::ostream& out);
std::vector<IterationStats> parse_stats_json(std::string_view text);

// Reads either format, chosen by the file extension (.json or anything else).
std::vector<IterationStats> load_stats(const std::filesystem::path& path);

// Plot series: iteration,C / iteration,B,J / iteration,BmJ
void write_cost_curve_csv(const std::vector<IterationStats>& trace, std::ostream& out);
void write_b_vs_j_csv(const std::vector<IterationStats>& trace, std::ostream& out);
void write_bm_j_csv(const std::vector<IterationStats>& trace, std::ostream& out);

// One word per line, sorted. Reading skips blank and '#' lines.
void write_basis(const Basis& basis, std::ostream& out);
Basis parse_basis(std::string_view text);
Basis load_basis(const std::filesystem::path& path);

// name<TAB>space-separated words, sorted by name.
void write_segmentations(const std::vector<NameSegmentation>& segs, std::ostream& out);
std::vector<NameWords> parse_segmentations(std::string_view text);
std::vector<NameWords> load_segmentations(const std::filesystem::path& path);

}  // namespace basislex
