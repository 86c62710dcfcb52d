#include "cli.h"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "basislex/io.h"
#include "doctest.h"
#include "oracles.h"

namespace fs = std::filesystem;
using namespace basislex;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "basislex");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("basislex_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string path(const std::string& name = "") const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = BASISLEX_TEST_DATA;

}  // namespace

TEST_CASE("induce writes every report") {
  TempDir tmp;
  const auto pc = oracle::make_planted_corpus(17, 20, 500);
  std::string names;
  for (const auto& [n, f] : pc.names) names += n + "\t" + std::to_string(f) + "\n";
  const auto names_path = tmp.file("names.tsv", names);

  const auto r = run_cli({"induce", "--names", names_path, "--format", "name_freq", "--out", tmp.path("run")});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  for (const char* f : {"basis.txt", "segmentations.tsv", "stats.csv", "stats.json", "cost_curve.csv",
                        "b_vs_j.csv", "bm_j.csv"}) {
    CHECK_MESSAGE(fs::exists(tmp.path("run/") + f), f);
  }
  const auto trace = load_stats(tmp.path("run/stats.csv"));
  CHECK(load_stats(tmp.path("run/stats.json")).size() == trace.size());
  CHECK(r.out.find("iterations: " + std::to_string(trace.size())) != std::string::npos);

  // the outputs are readable by the other commands
  const auto basis = load_basis(tmp.path("run/basis.txt"));
  CHECK(load_segmentations(tmp.path("run/segmentations.tsv")).size() == pc.names.size());
  CHECK(run_cli({"ortho", "--basis", tmp.path("run/basis.txt"), "--check-only"}).code == 0);
  const auto rep = run_cli({"report", "--stats", tmp.path("run/stats.csv")});
  CHECK((rep.code == 0 || rep.code == 1));

  // same input, same bytes
  const auto again = run_cli({"induce", "--names", names_path, "--format", "name_freq", "--threads", "3",
                              "--out", tmp.path("again")});
  REQUIRE(again.code == 0);
  for (const char* f : {"basis.txt", "segmentations.tsv", "stats.csv", "stats.json"}) {
    CHECK(slurp(tmp.path("run/") + f) == slurp(tmp.path("again/") + f));
  }
}

TEST_CASE("induce flags override the config file") {
  TempDir tmp;
  const auto names = tmp.file("names.txt", "ram\nsita\nram\nabc\n");
  const auto cfg = tmp.file("run.cfg", "algorithm = alg1\nmax_iterations = 1\n");
  const auto r = run_cli({"induce", "--names", names, "--config", cfg, "--algo", "alg2", "--out", tmp.path("o")});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  // the exhaustive algorithm on names too short to split keeps every name
  CHECK(slurp(tmp.path("o/basis.txt")) == "abc\nram\nsita\n");
  CHECK(load_stats(tmp.path("o/stats.csv")).size() == 1);
}

TEST_CASE("induce errors") {
  TempDir tmp;
  const auto empty = tmp.file("empty.txt", "jo\nk\n");
  auto r = run_cli({"induce", "--names", empty, "--out", tmp.path("o")});
  CHECK(r.code == 1);
  CHECK(r.err.find("empty corpus after normalization") != std::string::npos);

  r = run_cli({"induce", "--names", tmp.path("missing.txt"), "--out", tmp.path("o")});
  CHECK(r.code == 2);

  const auto bad = tmp.file("bad.tsv", "rama\tx\n");
  r = run_cli({"induce", "--names", bad, "--format", "name_freq", "--out", tmp.path("o")});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 1") != std::string::npos);

  const auto names = tmp.file("names.txt", "rama\n");
  r = run_cli({"induce", "--names", names, "--weights", "0.5,0.5,0.5,0", "--out", tmp.path("o")});
  CHECK(r.code == 2);
  r = run_cli({"induce", "--names", names, "--seed-percent", "2", "--out", tmp.path("o")});
  CHECK(r.code == 1);
  CHECK(run_cli({}).code == 2);
}

TEST_CASE("ortho command") {
  TempDir tmp;
  auto r = run_cli({"ortho", "--basis", tmp.file("b.txt", "ra\nma\nrama\n"), "--check-only"});
  CHECK(r.code == 1);
  CHECK(r.out.find("rama = ra ⊕ ma\n") != std::string::npos);

  const auto ok = tmp.file("ok.txt", "kanth\nma\nra\n");
  r = run_cli({"ortho", "--basis", ok, "--check-only"});
  CHECK(r.code == 0);
  CHECK(slurp(ok) == "kanth\nma\nra\n");

  r = run_cli({"ortho", "--basis",
               tmp.file("k.txt", "krishn\nkrish\nrish\nkris\nris\nish\nhna\nna\nkr\nhn\nis\nri\nsh\nkrishna\n")});
  CHECK(r.code == 0);
  CHECK(r.out.find("krishna\n") == std::string::npos);
  CHECK(r.err.find("removed krishna") != std::string::npos);

  r = run_cli({"ortho", "--basis", tmp.file("b2.txt", "ra\nma\nrama\n"), "--out", tmp.path("o.txt")});
  CHECK(r.code == 0);
  CHECK(slurp(tmp.path("o.txt")) == "ma\nra\n");

  CHECK(run_cli({"ortho", "--basis", tmp.path("none.txt")}).code == 2);
}

TEST_CASE("transcribe command") {
  TempDir tmp;
  const auto table = kData + "/basis_transcriptions.tsv";
  auto r = run_cli({"transcribe", "--segmentations", kData + "/name_segmentations.tsv", "--table", table,
                    "--out", tmp.path("lex.tsv")});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  const auto lex = parse_lexicon_tsv(slurp(tmp.path("lex.tsv")));
  CHECK(lex.at("rajeshwar").darpa == "r a jh ey s v ax r");
  CHECK(lex.at("rajeshwar").sapi == "r a j E S v a r");
  CHECK(lex.at("ramakanth").darpa == "r a m aa k aa n th");

  const auto segs = tmp.file("s.tsv", "narendra\tna ren dra\n");
  r = run_cli({"transcribe", "--segmentations", segs, "--table", table});
  CHECK(r.code == 1);
  CHECK(r.err.find("  dra\n") != std::string::npos);

  r = run_cli({"transcribe", "--segmentations", tmp.file("e.tsv", ""), "--table", table, "--format", "sapi"});
  CHECK(r.code == 0);
  CHECK(r.out == "# name lexicon, SAPI phones\n");

  r = run_cli({"transcribe", "--segmentations", kData + "/name_segmentations.tsv", "--table", table,
               "--format", "festival", "--names", tmp.file("n.txt", "rajeshwar\n")});
  CHECK(r.code == 0);
  CHECK(r.out == ";; name lexicon, DARPA phones\n(\"rajeshwar\" nil (r a jh ey s v ax r))\n");

  r = run_cli({"transcribe", "--segmentations", kData + "/name_segmentations.tsv", "--table", table,
               "--basis", tmp.file("b.txt", "ra\nma\nkanth\n")});
  CHECK(r.code == 1);
  CHECK(r.err.find("shwar") != std::string::npos);

  r = run_cli({"transcribe", "--segmentations", segs, "--table", tmp.file("dup.tsv", "ra\tr a\tr a\nra\tr a\tr a\n")});
  CHECK(r.code == 2);
}

TEST_CASE("report command") {
  TempDir tmp;
  auto r = run_cli({"report", "--stats", kData + "/published_trace.csv"});
  CHECK(r.code == 1);
  CHECK(r.out.find("1->2  |B| non-increasing: pass  |B_m||J| non-increasing: pass") != std::string::npos);
  CHECK(r.out.find("3->4  |B| non-increasing: FAIL  |B_m||J| non-increasing: pass") != std::string::npos);
  CHECK(r.out.find("4->5  |B| non-increasing: FAIL  |B_m||J| non-increasing: pass") != std::string::npos);

  r = run_cli({"report", "--stats", tmp.file("one.csv", "iteration,B_m,B,J,BmJ,C\n1,5,4,3,15,5.5\n")});
  CHECK(r.code == 0);
  CHECK(r.out.find("insufficient trace") != std::string::npos);

  r = run_cli({"report", "--stats",
               tmp.file("mono.csv", "iteration,B_m,B,J,BmJ,C\n1,9,8,6,54,9\n2,8,7,6,48,8\n3,7,7,6,42,8\n")});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  CHECK(run_cli({"report", "--stats", tmp.file("bad.csv", "nonsense\n")}).code == 2);
}

TEST_CASE("grid-search command") {
  TempDir tmp;
  const auto names = tmp.file("names.txt", "ramesh\nramesh\nrameshwar\n");
  const auto r = run_cli({"grid-search", "--names", names, "--step", "0.5", "--out", tmp.path("grid.csv")});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(r.out.find("tuples: 10\n") != std::string::npos);
  const auto table = slurp(tmp.path("grid.csv"));
  CHECK(std::count(table.begin(), table.end(), '\n') == 11);
  CHECK(run_cli({"grid-search", "--names", names, "--step", "0.3"}).code == 1);
}
