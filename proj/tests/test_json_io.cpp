#include <doctest.h>

#include <algorithm>
#include <random>

#include "borel/errors.hpp"
#include "borel/json_io.hpp"

using namespace borel;
using borel::io::json;

TEST_CASE("root serialization shape") {
    CHECK(io::root_to_json(Root({1, 3, 4, 2})).dump() == "[1,3,4,2]");
    CHECK(io::root_from_json(json::parse("[1,3,4,2]")) == Root({1, 3, 4, 2}));
    CHECK_THROWS_AS(io::root_from_json(json::parse("{}")), domain_error);
}

TEST_CASE("antichain payload carries the type label") {
    RootSystem f4(RootSystemType::parse("F4"));
    Antichain g = make_antichain(f4, {Root({1, 1, 0, 0}), Root({0, 1, 1, 0}), Root({0, 0, 1, 1})});
    json j = io::antichain_to_json(f4, g);
    CHECK(j.at("type") == "F4");
    CHECK(io::antichain_from_json(f4, j) == g);
    j["type"] = "E6";
    CHECK_THROWS_AS(io::antichain_from_json(f4, j), domain_error);
}

TEST_CASE("weyl words serialize with 1-based letters") {
    WeylWord w{{0, 2}};
    json j = io::word_to_json(w);
    CHECK(j.dump() == R"({"word":[1,3]})");
    CHECK(io::word_from_json(j) == w);
    CHECK_THROWS_AS(io::word_from_json(json::parse(R"({"word":[0]})")), domain_error);
}

TEST_CASE("random round-trips across object kinds") {
    std::mt19937_64 rng(2024);
    for (const char* label : {"A3", "B4", "F4", "D4xA1"}) {
        RootSystem rs(RootSystemType::parse(label));
        for (int k = 0; k < 25; ++k) {
            Antichain g = sample_antichain(rs, rng);
            CHECK(io::antichain_from_json(rs, io::antichain_to_json(rs, g)) == g);

            RootIdeal ideal = up_closure(rs, g);
            CHECK(io::ideal_from_json(rs, io::ideal_to_json(rs, ideal)) == ideal);

            Certificate c = minimize_n(rs, g);
            Certificate back = io::certificate_from_json(rs, io::certificate_to_json(rs, c));
            CHECK(back.antichain == c.antichain);
            CHECK(back.coweight == c.coweight);
            CHECK(back.level == c.level);
            CHECK(back.minimal == c.minimal);

            std::map<Root, Rat> terms;
            std::uniform_int_distribution<int> num(-6, 6);
            for (const Root& r : ideal.roots) {
                int v = num(rng);
                if (v != 0) terms.emplace(r, Rat(v, 2));
            }
            NilpotentElement x = make_element(rs, std::move(terms));
            CHECK(io::element_from_json(rs, io::element_to_json(rs, x)) == x);
        }
    }
}

TEST_CASE("rationals in element payloads are strings") {
    RootSystem a2(RootSystemType::parse("A2"));
    NilpotentElement x = make_element(a2, {{Root({1, 1}), Rat(5, 2)}});
    json j = io::element_to_json(a2, x);
    CHECK(j.at("terms")[0].at("coeff") == "5/2");
    CHECK(Rat::parse("5/2") == Rat(5, 2));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK_THROWS(Rat::parse("x/y"));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("duplicate element roots are rejected") {
    RootSystem a2(RootSystemType::parse("A2"));
    json j{{"terms", json::array({json{{"root", {1, 0}}, {"coeff", "1"}},
                                  json{{"root", {1, 0}}, {"coeff", "2"}}})}};
    CHECK_THROWS_AS(io::element_from_json(a2, j), domain_error);
}

TEST_CASE("ideal payloads must be upward closed") {
    RootSystem a2(RootSystemType::parse("A2"));
    json j{{"roots", json::array({json::array({1, 0})})}};
    CHECK_THROWS_AS(io::ideal_from_json(a2, j), domain_error);
}

TEST_CASE("csv layout: one flattened column group per member root") {
    RootSystem b2(RootSystemType::parse("B2"));
    std::vector<Antichain> list = list_antichains(b2, AntichainFilter::All);
    std::string csv = io::antichains_to_csv(b2, list);
    CHECK(csv.rfind("index,size,roots\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(list.size()) + 1);
}
