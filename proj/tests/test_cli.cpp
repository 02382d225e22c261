#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "mjump_app.hpp"

using namespace milnor_jump;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(MJUMP_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("jump --json") {
  const Result r = run({"jump", "11,6,5", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"lambda_hyp\":4,\"lambda_nd\":3,\"realizer\":[1,3,2],\"source\":\"interior\"}\n");
}

TEST_CASE("jump text with trace") {
  const Result r = run({"jump", "11,6,5", "--trace"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("lambda_nd   3") != std::string::npos);
  CHECK(r.out.find("l=1: -4*p'1 -5*p'2 +6*p'3 = 1, i_tilde=6 >= p3=5, inadmissible") != std::string::npos);
  CHECK(r.out.find("l=2: -8*p'1 -4*p'2 +7*p'3 = 2, i_tilde=7 >= p3=5, inadmissible") != std::string::npos);
  CHECK(r.out.find("l=3: -1*p'1 -3*p'2 +3*p'3 = 3, i_tilde=3 < p3=5, admissible") != std::string::npos);
}

TEST_CASE("jump 3,3 uses the hyperplane") {
  const Result r = run({"jump", "3,3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda_nd   2") != std::string::npos);
  CHECK(r.out.find("source      hyperplane") != std::string::npos);
}

TEST_CASE("jump --check-oracle") {
  const Result r = run({"jump", "4,6,9", "--check-oracle", "--json"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("oracle").at("agrees") == true);
  CHECK(doc.at("oracle").at("lambda_nd") == doc.at("lambda_nd"));
}

TEST_CASE("mu and nu") {
  CHECK(run({"mu", "11,6,5"}).out == "200\n");
  CHECK(run({"mu", "11,6,5", "--json"}).out == "{\"mu\":200}\n");
  CHECK(run({"nu", "--support", sample("bp_3_2.json")}).out == "2\n");
  CHECK(run({"nu", "--support", sample("two_facets.json")}).out == "1\n");
  CHECK(run({"nu", "--support", sample("mixed_3d.json")}).out == "11\n");
}

TEST_CASE("deformation reports every route") {
  const Result r = run({"deformation", "11,6,5", "--monomial", "0,3,2", "--json"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("oracle") == 30);
  CHECK(doc.at("boundary") == 30);
  CHECK(doc.at("interior").is_null());
  CHECK(doc.at("jump") == 30);
}

TEST_CASE("oracle, table and verify") {
  CHECK(json::parse(run({"oracle", "4,4", "--json"}).out).at("lambda_nd") == 3);
  const Result t = run({"table", "--n", "2", "--pmax", "6"});
  CHECK(t.code == 0);
  CHECK(t.out.find("p1\\p2") == 0);
  const json rows = json::parse(run({"table", "--n", "3", "--pmax", "3", "--json"}).out).at("rows");
  CHECK(rows.size() == 8);
  const Result v = run({"verify", "--n", "2", "--pmax", "6", "--json"});
  CHECK(v.code == 0);
  CHECK(json::parse(v.out).at("ok") == true);
}

TEST_CASE("invalid input exits with code 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"jump", "1,6,5"},
           {"jump", "3,x"},
           {"jump", ""},
           {"mu", "0"},
           {"deformation", "3,3", "--monomial", "2,1"},
           {"deformation", "3,3", "--monomial", "3,3"},
           {"deformation", "3,3", "--monomial", "0,0"},
           {"deformation", "3,3", "--monomial", "1,1,1"},
           {"nu", "--support", sample("non_convenient.json")},
           {"nu", "--support", sample("missing.json")},
           {"table", "--n", "2", "--pmax", "1"},
           {"frobnicate"},
           {},
       }) {
    const Result r = run(args);
    INFO(r.err);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("guards are reported as invalid input") {
  CHECK(run({"oracle", "11,6,5", "--max-oracle-points", "10"}).code == 2);
  CHECK(run({"jump", "2,2,2,2,2,2,2", "--max-dimension", "6"}).code == 2);
}

TEST_CASE("help exits cleanly") { CHECK(run({"--help"}).code == 0); }
