#include "basislex/lexicon.h"

#include <sstream>

#include "basislex/error.h"
#include "doctest.h"

using namespace basislex;

namespace {

const char* kTable =
    "kanth\tk aa n th\tk A n th\n"
    "ma\tm aa\tm A\n"
    "ra\tr a\tr a\n"
    "je\tjh ey\tj E\n"
    "shwar\ts v ax r\tS v a r\n"
    "ram\tr aa m\tr A m\n";

TranscriptionTable table() { return parse_transcriptions(kTable).table; }

std::size_t phone_count(const std::string& s) {
  std::istringstream in(s);
  std::size_t n = 0;
  std::string p;
  while (in >> p) ++n;
  return n;
}

}  // namespace

TEST_CASE("parsing transcription tables") {
  const auto loaded = parse_transcriptions(kTable);
  CHECK(loaded.table.size() == 6);
  CHECK(*loaded.table.find("kanth") == TranscriptionEntry{"kanth", "k aa n th", "k A n th"});
  CHECK(*loaded.table.find("ma") == TranscriptionEntry{"ma", "m aa", "m A"});
  CHECK(loaded.table.find("dra") == nullptr);
  CHECK(loaded.warnings.empty());

  const auto spaced = parse_transcriptions("# comment\n\nra\tr   a\t r a \r\n");
  CHECK(spaced.table.find("ra")->darpa == "r a");
  CHECK(spaced.table.find("ra")->sapi == "r a");

  try {
    parse_transcriptions("ra\tr a\tr a\nma\tm aa\tm A\nra\tr aa\tr A\n");
    FAIL("duplicate accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'ra'") != std::string::npos);
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_transcriptions("ra\t\tr a\n"), ParseError);
  CHECK_THROWS_AS(parse_transcriptions("ra\tr a\n"), ParseError);

  const Basis b(std::vector<std::string>{"ra", "ma"});
  const auto checked = parse_transcriptions(kTable, &b);
  CHECK(checked.table.size() == 6);
  CHECK(checked.warnings.size() == 4);
}

TEST_CASE("composition concatenates in segment order") {
  const auto t = table();
  const auto p = compose("ramakanth", {"ra", "ma", "kanth"}, t);
  CHECK(p.darpa == "r a m aa k aa n th");
  const auto q = compose("rajeshwar", {"ra", "je", "shwar"}, t);
  CHECK(q.darpa == "r a jh ey s v ax r");
  CHECK(q.sapi == "r a j E S v a r");

  const auto single = compose("ram", {"ram"}, t);
  CHECK(single.darpa == "r aa m");
  CHECK(single.sapi == "r A m");

  CHECK_THROWS_AS(compose("ramakanth", {"ra", "ma"}, t), ValidationError);
  try {
    compose("narendra", {"na", "ren", "dra"}, t);
    FAIL("missing words accepted");
  } catch (const MissingTranscriptionError& e) {
    CHECK(e.missing() == std::vector<std::string>{"na", "ren", "dra"});
  }
}

TEST_CASE("composition is a homomorphism") {
  const auto t = table();
  const std::vector<std::vector<std::string>> seqs = {
      {"ra", "ma"}, {"ram", "kanth"}, {"je", "shwar", "ra"}, {"ma", "ma", "ma"}, {"kanth"}};
  for (const auto& a : seqs) {
    for (const auto& b : seqs) {
      std::string na, nb;
      for (const auto& w : a) na += w;
      for (const auto& w : b) nb += w;
      auto ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      const auto pa = compose(na, a, t);
      const auto pb = compose(nb, b, t);
      const auto pab = compose(na + nb, ab, t);
      CHECK(pab.darpa == pa.darpa + " " + pb.darpa);
      CHECK(pab.sapi == pa.sapi + " " + pb.sapi);
      CHECK(phone_count(pab.darpa) == phone_count(pa.darpa) + phone_count(pb.darpa));
    }
  }
}

TEST_CASE("building a lexicon reports every missing word") {
  const auto t = table();
  const std::vector<NameWords> segs = {
      {"ramakanth", {"ra", "ma", "kanth"}}, {"narendra", {"na", "ren", "dra"}}, {"kamlesh", {"kam", "le", "sh"}}};
  try {
    build_lexicon(segs, t);
    FAIL("missing words accepted");
  } catch (const MissingTranscriptionError& e) {
    CHECK(e.missing() == std::vector<std::string>{"dra", "kam", "le", "na", "ren", "sh"});
  }
  const auto lex = build_lexicon({segs[0]}, t);
  REQUIRE(lex.size() == 1);
  CHECK(lex.at("ramakanth").words == std::vector<std::string>{"ra", "ma", "kanth"});
  CHECK(build_lexicon({}, t).empty());
}

TEST_CASE("emitting lexicons") {
  const auto t = table();
  const auto lex = build_lexicon({{"rama", {"ra", "ma"}}, {"kanth", {"kanth"}}}, t);

  std::ostringstream tsv;
  emit_lexicon(lex, LexiconFormat::kTsv, tsv);
  CHECK(tsv.str() ==
        "name\twords\tdarpa\tsapi\n"
        "kanth\tkanth\tk aa n th\tk A n th\n"
        "rama\tra ma\tr a m aa\tr a m A\n");
  CHECK(parse_lexicon_tsv(tsv.str()) == lex);

  std::ostringstream festival;
  emit_lexicon(lex, LexiconFormat::kFestival, festival);
  CHECK(festival.str() ==
        ";; name lexicon, DARPA phones\n"
        "(\"kanth\" nil (k aa n th))\n"
        "(\"rama\" nil (r a m aa))\n");

  std::ostringstream sapi;
  emit_lexicon(lex, LexiconFormat::kSapi, sapi);
  CHECK(sapi.str() == "# name lexicon, SAPI phones\nkanth\tk A n th\nrama\tr a m A\n");

  std::ostringstream empty;
  emit_lexicon({}, LexiconFormat::kTsv, empty);
  CHECK(empty.str() == "name\twords\tdarpa\tsapi\n");
  CHECK(parse_lexicon_tsv(empty.str()).empty());

  CHECK(parse_lexicon_format("festival") == LexiconFormat::kFestival);
  CHECK_THROWS_AS(parse_lexicon_format("xml"), ParseError);
}
