#include <doctest.h>

#include "finsum/json_io.hpp"

using namespace finsum;
using nlohmann::json;

TEST_CASE("spec JSON round trip, decimal strings throughout") {
    FsSpec spec;
    spec.generators = {BigInt("12345678901234567890"), BigInt("99999999999999999999999")};
    spec.k = 4;
    spec.shift = 7;
    json j = io::spec_to_json(spec);
    CHECK(j["generators"][0] == "12345678901234567890");
    CHECK(j["shift"] == "7");
    FsSpec back = io::spec_from_json(j);
    CHECK(back.generators == spec.generators);
    CHECK(back.k == 4);
    CHECK(back.shift == 7);
}

TEST_CASE("matrix JSON accepts bare rows and the full object") {
    auto bare = io::system_from_json(json::parse("[[1,1,-1]]"));
    CHECK(bare.rows == 1);
    CHECK(bare.cols == 3);
    CHECK(bare.at(0, 2) == -1);

    auto object = io::system_from_json(io::system_to_json(bare));
    CHECK(object.entries == bare.entries);

    CHECK_THROWS_AS(io::system_from_json(json::parse("[[1,2],[3]]")), Error);
}

TEST_CASE("cover and word JSON") {
    SubsetCover cover{{{1, 3}, {2, 3}}};
    CHECK(io::cover_to_json(cover).dump() == "[[1,3],[2,3]]");
    CHECK(io::cover_from_json(json::parse("[[3,1],[2,3]]")).subsets ==
          std::vector<std::vector<int>>{{1, 3}, {2, 3}});

    ParametricWord word{{1, -1}, 3, 1};
    json wj = io::word_to_json(word);
    CHECK(wj.dump() == "[1,\"*\"]");
    CHECK(io::word_from_json(wj, 3) == word);

    ParametricWord plane{{-1, 2, -2, -1}, 3, 2};
    CHECK(io::word_from_json(io::word_to_json(plane), 3) == plane);
}

TEST_CASE("ground set JSON variants") {
    auto interval = io::ground_from_json(json::parse(R"({"interval": [1, 9]})"));
    CHECK(interval.size() == 9);
    auto cube = io::ground_from_json(json::parse(R"({"cube": {"t": 2, "n": 3}})"));
    CHECK(cube.size() == 8);
    auto values = io::ground_from_json(json::parse(R"({"values": ["5", "1"]})"));
    CHECK(values.values().front() == 1);
    auto fs = io::ground_from_json(
        json::parse(R"({"fs": {"generators": ["1","5"], "k": 3, "shift": "0"}})"));
    CHECK(fs.fs_origin().has_value());
    CHECK(fs.size() == 8);
    CHECK_THROWS_AS(io::ground_from_json(json::parse("{}")), Error);
}

TEST_CASE("target JSON round trips") {
    for (const char* text : {
             R"({"kind":"ap","len":3})",
             R"({"kind":"brauer","len":2,"s":"1"})",
             R"({"kind":"line"})",
             R"({"kind":"subspace","dim":2})",
             R"({"kind":"equation","system":[[2,-1]],"distinct":false})",
             R"({"kind":"shifted-fs","k":3,"t":1})",
         }) {
        json j = json::parse(text);
        Target target = io::target_from_json(j);
        Target back = io::target_from_json(io::target_to_json(target));
        CHECK(io::target_to_json(target) == io::target_to_json(back));
    }
}

TEST_CASE("verdict JSON carries budget information") {
    Verdict v;
    v.status = Verdict::Status::Inconclusive;
    v.budget = 10;
    v.explored = 11;
    v.seed = 1729;
    json j = io::verdict_to_json(v);
    CHECK(j["holds"].is_null());
    CHECK(j["inconclusive"] == "budget");
    CHECK(j["budget"] == 10);
    CHECK(j["seed"] == 1729);
}

TEST_CASE("rational witnesses serialize as p/q strings") {
    Rational q(3, 6);
    CHECK(to_fraction(q) == "1/2");
    CHECK(to_fraction(Rational(-4, 2)) == "-2");
    CHECK(parse_fraction("1/2") == Rational(1, 2));
    CHECK(parse_fraction("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_fraction("1/0"), Error);
}
