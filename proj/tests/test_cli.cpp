#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hmjoin/cli.hpp"
#include "hmjoin/io.hpp"
#include "support.hpp"

using namespace hmjoin;
using hmjoin::testing::fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("hmjoin_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("charpoly prints the factored form") {
  const auto r = run({"charpoly", fixture("p2_2_k2_k5.json")});
  REQUIRE(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j["charpoly_factored"] == "(λ + 2)(λ + 1)^4(λ - 1)(λ - 5)");
  CHECK(j["identity_holds"] == true);
  CHECK(j["charpoly_direct"] == j["charpoly_block"]);
}

TEST_CASE("verify reports the ledger") {
  const auto r = run({"verify", fixture("p3_3.json")});
  REQUIRE(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j["identity_holds"] == true);
  bool zero_row = false;
  for (const auto& row : j["ledger"])
    if (row["factor"] == 1 && row["text"] == "λ") {
      zero_row = true;
      CHECK(row["bound"] == 0);
      CHECK(row["observed"] == 1);
    }
  CHECK(zero_row);
}

TEST_CASE("family, classify, reduce and join verbs") {
  const auto fam = run({"family", "petersen", "5", "2", "--charpoly"});
  REQUIRE(fam.code == kExitOk);
  const Json f = fam.json();
  CHECK(f["order"] == 10);
  CHECK(f["regular"] == true);
  CHECK(f["degrees"][0] == 3);
  CHECK(f["report"]["identity_holds"] == true);

  const auto cls = run({"classify", fixture("p2_2_k2_k5.json")});
  REQUIRE(cls.code == kExitOk);
  for (const auto& factor : cls.json()["factors"])
    for (const auto& c : factor["classes"]) CHECK(c["flag"] == c["numeric_flag"]);

  const auto red = run({"reduce", fixture("lollipop_4_3.json")});
  REQUIRE(red.code == kExitOk);
  CHECK(red.json()["reduced"]["m"] == 1);

  const auto el = run({"join", "--edge-list", fixture("minimal.json")});
  REQUIRE(el.code == kExitOk);
  CHECK(el.out.find('1') != std::string::npos);

  const auto uni = run({"universal", "--preset", "L", fixture("p4_generalized.json")});
  REQUIRE(uni.code == kExitOk);
}

TEST_CASE("cospectral verb") {
  const auto self = run({"cospectral", fixture("p4_generalized.json"), fixture("p4_generalized.json"),
                         "--kind", "L"});
  CHECK(self.code == kExitOk);
  const auto search = run({"cospectral", "--search", "--kind", "A", "--budget", "16"});
  REQUIRE(search.code == kExitOk);
  CHECK(search.json()["certificates"].is_array());
}

TEST_CASE("exit codes and diagnostics") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"bogus"}).code == kExitInput);
  CHECK(run({"charpoly", "/nonexistent/spec.json"}).code == kExitInput);

  const auto label0 = temp_file(
      "label0.json", R"({"host": {"n": 1, "edges": []}, "m": 1, "factors": [{"n": 2, "edges": []}], "indexing": [[1, 0]]})");
  const auto r0 = run({"charpoly", label0});
  CHECK(r0.code == kExitInput);
  CHECK(r0.err.find("/indexing/0/1") != std::string::npos);

  const auto no_m =
      temp_file("no_m.json", R"({"host": {"n": 1, "edges": []}, "factors": [{"n": 1, "edges": []}], "indexing": [[1]]})");
  const auto rm = run({"charpoly", no_m});
  CHECK(rm.code == kExitInput);
  CHECK(rm.err.find("/m") != std::string::npos);

  const auto broken = temp_file("broken.json", "{\n  \"host\": [1,\n");
  const auto rb = run({"charpoly", broken});
  CHECK(rb.code == kExitInput);
  CHECK(rb.err.find(broken + ":") != std::string::npos);

  CHECK(run({"charpoly", fixture("minimal.json")}).code == kExitOk);
  CHECK(run({"universal", "--preset", "seidel", fixture("p2_2_k2_k5.json")}).code == kExitInput);
}

TEST_CASE("spec round trip and deterministic output") {
  hmjoin::testing::Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const JoinSpec s = hmjoin::testing::random_spec(rng);
    CHECK(join_spec_from_json(join_spec_to_json(s)) == s);
    const auto g = hmjoin::testing::random_generalized(rng);
    CHECK(generalized_spec_from_json(generalized_spec_to_json(g)) == g);
  }
  const auto a = run({"charpoly", fixture("p3_3.json")});
  const auto b = run({"charpoly", fixture("p3_3.json")});
  CHECK(a.out == b.out);
  const auto path = temp_file("out.json", "");
  CHECK(run({"-o", path, "charpoly", fixture("p3_3.json")}).code == kExitOk);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
}
