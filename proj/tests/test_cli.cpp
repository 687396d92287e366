#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trimlat/cli_run.hpp"
#include "trimlat/counting.hpp"
#include "test_support.hpp"

using namespace trimlat;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& body) {
  fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

fs::path write_graph(const std::string& name, const Graph& g) {
  std::ostringstream body;
  body << "p edge " << g.vertex_count() << " " << g.edges().size() << "\n";
  for (auto [u, v] : g.edges()) body << "e " << u + 1 << " " << v + 1 << "\n";
  return write_temp(name, body.str());
}

struct RunResult {
  int code;
  std::string out, err;
  std::vector<std::string> lines;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  RunResult result{code, out.str(), err.str(), {}};
  std::istringstream ss(result.out);
  std::string line;
  while (std::getline(ss, line)) result.lines.push_back(line);
  return result;
}

std::string field(const cli::Record& record, const std::string& key) {
  for (const auto& [k, v] : record)
    if (k == key) return v;
  return {};
}

}  // namespace

TEST_CASE("graph parsing accepts both input styles") {
  std::istringstream dimacs("c a path\np edge 3 2\ne 1 2\ne 2 3\n");
  Graph g = cli::parse_graph(dimacs);
  CHECK(g.vertex_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));

  std::istringstream plain("1 2\n2 3\n");
  Graph g2 = cli::parse_graph(plain);
  CHECK(g2.vertex_count() == 3);
  CHECK(g2.edges() == g.edges());
}

TEST_CASE("graph parsing collapses duplicates and flags bad lines") {
  std::istringstream dup("p edge 2 2\ne 1 2\ne 1 2\n");
  CHECK(cli::parse_graph(dup).edges().size() == 1);

  std::istringstream loop("p edge 2 1\ne 1 1\n");
  CHECK_THROWS_MATCHES(cli::parse_graph(loop), cli::ParseError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("line 2")));

  std::istringstream range("p edge 2 1\ne 1 5\n");
  CHECK_THROWS_AS(cli::parse_graph(range), cli::ParseError);

  std::istringstream garbage("p edge 2 1\nq 1 2\n");
  CHECK_THROWS_AS(cli::parse_graph(garbage), cli::ParseError);

  std::istringstream empty("");
  CHECK_THROWS_AS(cli::parse_graph(empty), cli::ParseError);
}

TEST_CASE("masks and records round-trip through their text forms") {
  for (Mask x : {Mask{0}, mask_of({0}), mask_of({1, 3}), mask_of({0, 2, 4})})
    CHECK(cli::parse_mask_text(cli::format_mask(x)) == x);
  CHECK(cli::format_mask(mask_of({0, 2})) == "{1,3}");
  CHECK(cli::format_mask(0) == "{}");

  cli::Record record{{"mask", "{1,3}"}, {"value", "-12"}, {"k", "2"}};
  CHECK(cli::parse_record(cli::format_record(record)) == record);
  CHECK_THROWS_AS(cli::parse_mask_text("1,3"), std::invalid_argument);
}

TEST_CASE("chromatic command prints the number and a record") {
  fs::path petersen = write_graph("trimlat_test_petersen.col",
                                  ttest::petersen_graph());
  RunResult mis = run({"chromatic", petersen.string()});
  REQUIRE(mis.code == 0);
  REQUIRE(mis.lines.size() == 2);
  CHECK(mis.lines[0] == "3");

  RunResult bip = run({"chromatic", "--method", "bipartite", petersen.string()});
  REQUIRE(bip.code == 0);
  CHECK(bip.lines[0] == "3");
  cli::Record record = cli::parse_record(bip.lines[1]);
  CHECK(field(record, "answer") == "3");
  CHECK(field(record, "method") == "bipartite");
  CHECK(field(record, "n") == "10");
  CHECK(!field(record, "visited").empty());
  CHECK(!field(record, "bound").empty());
}

TEST_CASE("domatic command answers named instances") {
  fs::path k4 = write_graph("trimlat_test_k4.col", ttest::complete_graph(4));
  RunResult number = run({"domatic", k4.string()});
  REQUIRE(number.code == 0);
  CHECK(number.lines[0] == "4");

  RunResult decide = run({"domatic", "--decide", "3", k4.string()});
  REQUIRE(decide.code == 0);
  CHECK(decide.lines[0] == "true");

  fs::path c4 = write_graph("trimlat_test_c4.col", ttest::cycle_graph(4));
  RunResult mim = run({"domatic", "--mim", "2", c4.string()});
  REQUIRE(mim.code == 0);
  CHECK(mim.lines[0] == "true");
  RunResult no = run({"domatic", "--decide", "3", c4.string()});
  REQUIRE(no.code == 0);
  CHECK(no.lines[0] == "false");  // decision goes in the output, not the code
}

TEST_CASE("count command emits parseable tables") {
  fs::path c5 = write_graph("trimlat_test_c5.col", ttest::cycle_graph(5));
  RunResult result = run({"count", "--kind", "cover", "--family", "maxind",
                          "-k", "3", c5.string()});
  REQUIRE(result.code == 0);
  REQUIRE(result.lines.size() >= 2);
  cli::Record summary = cli::parse_record(result.lines[0]);
  CHECK(field(summary, "kind") == "cover");
  CHECK(field(summary, "family_size") == "5");

  Graph g = ttest::cycle_graph(5);
  TupleCounts reference = cover_numbers(enumerate_maximal_independent(g), 3);
  CHECK(result.lines.size() == 1 + reference.table.entries().size());
  std::size_t i = 1;
  for (const auto& [mask, value] : reference.table.entries()) {
    cli::Record row = cli::parse_record(result.lines[i++]);
    CHECK(cli::parse_mask_text(field(row, "mask")) == mask);
    CHECK(mpz_class(field(row, "value")) == value);
  }
}

TEST_CASE("transform command round-trips through its own output") {
  fs::path table = write_temp("trimlat_test_table.txt",
                              "mask={4} value=1\n"
                              "mask={1,2,4} value=1\n"
                              "mask={1,3} value=2\n");
  RunResult zeta = run({"transform", "--op", "zeta", table.string()});
  REQUIRE(zeta.code == 0);
  cli::Record summary = cli::parse_record(zeta.lines[0]);
  CHECK(field(summary, "visited") == "10");

  // the transform of the example table, checked by value
  bool saw_top = false;
  std::ostringstream feedback;
  for (std::size_t i = 1; i < zeta.lines.size(); ++i) {
    cli::Record row = cli::parse_record(zeta.lines[i]);
    feedback << zeta.lines[i] << "\n";
    if (field(row, "mask") == "{1,2,3,4}") {
      saw_top = true;
      CHECK(field(row, "value") == "4");
    }
  }
  CHECK(saw_top);

  // feeding the zeta output into the moebius op recovers the input
  fs::path zeta_file = write_temp("trimlat_test_zeta.txt", feedback.str());
  RunResult back = run({"transform", "--op", "moebius", zeta_file.string()});
  REQUIRE(back.code == 0);
  std::map<std::string, std::string> recovered;
  for (std::size_t i = 1; i < back.lines.size(); ++i) {
    cli::Record row = cli::parse_record(back.lines[i]);
    recovered[field(row, "mask")] = field(row, "value");
  }
  CHECK(recovered ==
        std::map<std::string, std::string>{
            {"{4}", "1"}, {"{1,2,4}", "1"}, {"{1,3}", "2"}});
}

TEST_CASE("bounds command reproduces the published rows") {
  RunResult result = run({"bounds", "--delta", "3..8"});
  REQUIRE(result.code == 0);
  REQUIRE(result.lines.size() == 6);
  cli::Record first = cli::parse_record(result.lines[0]);
  CHECK(field(first, "delta") == "3");
  CHECK(field(first, "domatic_base") == "1.9344");
  CHECK(field(first, "chromatic_base") == "1.8613");
  cli::Record last = cli::parse_record(result.lines[5]);
  CHECK(field(last, "domatic_base") == "1.9992");
  CHECK(field(last, "chromatic_base") == "1.9961");
}

TEST_CASE("bench command reports visited counts against bounds") {
  RunResult result =
      run({"bench", "--delta", "3", "--max-n", "8", "--random", "1"});
  REQUIRE(result.code == 0);
  REQUIRE(result.lines.size() >= 3);  // two unions plus one random instance
  cli::Record first = cli::parse_record(result.lines[0]);
  CHECK(field(first, "instance") == "union_k4_x1");
  CHECK(field(first, "visited") == "15");           // all dominating sets of K4
  CHECK(field(first, "visited_filtered") == "14");  // minus the full set
}

TEST_CASE("json mode emits one parseable document") {
  fs::path k4 = write_graph("trimlat_test_k4.col", ttest::complete_graph(4));
  RunResult result = run({"--json", "chromatic", k4.string()});
  REQUIRE(result.code == 0);
  nlohmann::json doc = nlohmann::json::parse(result.out);
  CHECK(doc["command"] == "chromatic");
  CHECK(doc["answer"] == 4);

  RunResult bounds = run({"--json", "bounds", "--delta", "3"});
  nlohmann::json doc2 = nlohmann::json::parse(bounds.out);
  CHECK(doc2["rows"][0]["delta"] == 3);
}

TEST_CASE("size guards refuse, force and the environment override") {
  fs::path big = write_graph("trimlat_test_big.col", ttest::edgeless_graph(21));
  RunResult refused = run({"domatic", big.string()});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("guard") != std::string::npos);

  RunResult forced = run({"domatic", "--force", big.string()});
  REQUIRE(forced.code == 0);
  CHECK(forced.lines[0] == "1");

  setenv("TRIMLAT_MAX_N", "22", 1);
  RunResult env = run({"domatic", big.string()});
  unsetenv("TRIMLAT_MAX_N");
  REQUIRE(env.code == 0);
  CHECK(env.lines[0] == "1");
}

TEST_CASE("unknown flags fall back to usage") {
  RunResult result = run({"chromatic", "--bogus", "x.col"});
  CHECK(result.code != 0);

  RunResult none = run({});
  CHECK(none.code != 0);
}
