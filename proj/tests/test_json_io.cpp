#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "milnor_jump/json_io.hpp"

using namespace milnor_jump;

TEST_CASE("parse_integer_list") {
  CHECK(parse_integer_list("11,6,5") == std::vector<std::int64_t>{11, 6, 5});
  CHECK(parse_integer_list("7") == std::vector<std::int64_t>{7});
  CHECK(parse_integer_list("-1,2") == std::vector<std::int64_t>{-1, 2});
  for (const char* bad : {"", ",", "1,", ",1", "1,,2", "1 ,2", "x", "3.5", "1;2", "99999999999999999999"}) {
    CHECK_THROWS_AS(parse_integer_list(bad), InvalidInput);
  }
}

TEST_CASE("integer_json switches to strings beyond 2^53 - 1") {
  CHECK(integer_json(Integer(42)) == json(42));
  CHECK(integer_json(Integer(kMaxSafeJsonInteger)).is_number_integer());
  CHECK(integer_json(Integer(kMaxSafeJsonInteger) + 1) == json("9007199254740992"));
  CHECK(integer_json(-(Integer(kMaxSafeJsonInteger) + 1)).is_string());
}

TEST_CASE("support files") {
  const SupportSet s = parse_support_json(json::parse("[[3,0],[0,2],[3,0]]"));
  CHECK(s.dimension() == 2);
  CHECK(s.size() == 2);
  for (const char* bad : {"{}", "[]", "[[]]", "[[1,2],[3]]", "[[1,-2]]", "[[1.5,2]]", "[1,2]", "[[\"1\"]]"}) {
    CHECK_THROWS_AS(parse_support_json(json::parse(bad)), InvalidInput);
  }
  CHECK_THROWS_AS(load_support_file("/nonexistent/support.json"), InvalidInput);
  CHECK(load_support_file(std::string(MJUMP_SAMPLES_DIR) + "/bp_11_6_5.json").size() == 3);
}

TEST_CASE("report JSON has stable keys and round-trips") {
  const JumpReport r = lambda_nd({11, 6, 5});
  const json plain = report_json(r, false);
  CHECK(plain.dump() == R"({"lambda_hyp":4,"lambda_nd":3,"realizer":[1,3,2],"source":"interior"})");

  const json traced = report_json(r, true);
  const json reparsed = json::parse(traced.dump());
  CHECK(reparsed == traced);
  CHECK(reparsed.at("k0") == 3);
  REQUIRE(reparsed.at("interior_trace").size() == 3);
  CHECK(reparsed["interior_trace"][0]["solution"]["i_tilde"] == 6);
  CHECK(reparsed["interior_trace"][1]["solution"]["i_low"] == json::array({8, 4}));
  CHECK(reparsed["hyperplane_jumps"][2]["lifted_jump"] == 4);

  CHECK(report_json(lambda_nd({5}), false).at("lambda_hyp").is_null());
}

TEST_CASE("integer_json round-trips through strings for any magnitude") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    Integer v = rng();
    v *= rng();
    v >>= static_cast<unsigned>(rng() % 120);
    if (trial % 2) v = -v;
    const json j = json::parse(integer_json(v).dump());
    const Integer back = j.is_string() ? Integer(j.get<std::string>()) : Integer(j.get<std::int64_t>());
    REQUIRE(back == v);
  }
}
