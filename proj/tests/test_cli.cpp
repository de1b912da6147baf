#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "tablut/counting.hpp"

using namespace tablut;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<const char*> args) {
  args.insert(args.begin(), "tablut");
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

constexpr const char* kInitial = "3BBB3/4B4/4W4/B3W3B/BBWWKWWBB/B3W3B/4W4/4B4/3BBB3 w";

}  // namespace

TEST_CASE("bounds as json keeps exact integers") {
  const Result r = run({"bounds", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  const auto report = counting::bounds_report();
  REQUIRE(doc["terms"].size() == 13);
  for (const auto& e : report.entries) {
    const auto& j = doc["terms"][std::string(counting::name(e.term))];
    REQUIRE(j["exact"].is_string());
    CHECK(counting::BigCount(j["exact"].get<std::string>()) == e.exact);
    CHECK(j["display"] == e.display);
    CHECK(j["published"] == e.published.text());
    CHECK(j["matches_published"] == e.matches_published);
  }
  CHECK(doc["terms"]["total"]["published"] == "1.4e27");
  CHECK(doc["terms"]["no_end_refined"]["display"] == "9.5e26");
  CHECK(doc["literature"].size() == 7);
}

TEST_CASE("bounds as csv") {
  const Result r = run({"bounds", "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 14);
  CHECK(rows[0] == "term,exact,display,published,matches_published");
  CHECK(rows[1].rfind("naive,141440778841410474143624665261815556472832,1.4e41,~1e41,true", 0) == 0);
  CHECK(rows[13].rfind("total,", 0) == 0);
}

TEST_CASE("bounds as text") {
  const Result r = run({"bounds"});
  REQUIRE(r.code == cli::kOk);
  for (const char* term : {"naive", "no_end_v1", "alpha", "zeta", "end", "total"})
    CHECK(r.out.find(term) != std::string::npos);
  CHECK(r.out.find("Nine Men's Morris") != std::string::npos);
  CHECK(r.out.find("literature reference") != std::string::npos);
  CHECK(run({"bounds", "--format", "xml"}).code == cli::kError);
}

TEST_CASE("legal") {
  const Result r = run({"legal", kInitial});
  REQUIRE(r.code == cli::kOk);
  const auto rows = lines(r.out);
  CHECK(rows.size() == 56);
  CHECK(std::is_sorted(rows.begin(), rows.end()));
  // The position may also be given as two words.
  CHECK(run({"legal", "3BBB3/4B4/4W4/B3W3B/BBWWKWWBB/B3W3B/4W4/4B4/3BBB3", "w"}).out == r.out);

  const Result over = run({"legal", "9/9/9/9/9/9/9/9/1K7 b"});
  CHECK(over.code == cli::kError);
  CHECK(over.err.find("game over") != std::string::npos);

  const Result bad = run({"legal", "9/9/9/9/4KK3/9/9/9/9 w"});
  CHECK(bad.code == cli::kError);
  CHECK(bad.err.find("4KK3") != std::string::npos);
  CHECK(lines(bad.err).size() == 1);
}

TEST_CASE("apply") {
  const Result r = run({"apply", "9/9/9/9/9/9/2K6/9/9 w", "c3-c1"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out == "position: 9/9/9/9/9/9/9/9/2K6 b\ncaptures: \noutcome: white wins: escape\n");

  const Result take = run({"apply", "9/9/9/9/4K4/9/2WB3W1/9/9 w", "h3-e3"});
  REQUIRE(take.code == cli::kOk);
  CHECK(take.out.find("captures: d3\n") != std::string::npos);
  CHECK(take.out.find("outcome: white wins: opponent eliminated") != std::string::npos);

  const Result null_move = run({"apply", "9/9/9/9/4K4/9/9/9/9 w", "e5-e5"});
  CHECK(null_move.code == cli::kError);
  CHECK(null_move.err.find("null move") != std::string::npos);

  const Result bad_square = run({"apply", kInitial, "e4-z4"});
  CHECK(bad_square.code == cli::kError);
  CHECK(bad_square.err.find("z4") != std::string::npos);
}

TEST_CASE("playout") {
  CHECK(run({"playout", kInitial}).code == cli::kError);
  const Result a = run({"playout", kInitial, "--seed", "9", "--max-plies", "50"});
  const Result b = run({"playout", kInitial, "--seed", "9", "--max-plies", "50"});
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("seed: 9\nplies: ", 0) == 0);
  CHECK(a.out.find("outcome: ") != std::string::npos);
}

TEST_CASE("verify") {
  const Result geo = run({"verify", "geometry"});
  CHECK(geo.code == cli::kOk);
  CHECK(geo.out.find("8/8 PASS") != std::string::npos);

  const Result place = run({"verify", "placements", "--max-region", "8"});
  CHECK(place.code == cli::kOk);
  CHECK(place.out.find("165/165 PASS") != std::string::npos);
  CHECK(run({"verify", "placements", "--max-region", "15"}).code == cli::kError);

  const Result perft = run({"verify", "perft", "--depth", "2"});
  CHECK(perft.code == cli::kOk);
  CHECK(perft.out.find("4408") != std::string::npos);
  CHECK(run({"verify", "perft", "--depth", "9"}).code == cli::kError);
  CHECK(run({"verify"}).code == cli::kError);
}
