#include <doctest.h>

#include <set>

#include "borel/errors.hpp"
#include "borel/roots.hpp"

using namespace borel;

TEST_CASE("type labels parse and print") {
    CHECK(RootSystemType::parse("A2").label() == "A2");
    CHECK(RootSystemType::parse("F4").label() == "F4");
    CHECK(RootSystemType::parse("D4xA1").label() == "D4xA1");
    CHECK(RootSystemType::parse("B3xG2xA1").total_rank() == 6);
    CHECK_THROWS_AS(RootSystemType::parse("H3"), domain_error);
    CHECK_THROWS_AS(RootSystemType::parse("A"), domain_error);
    CHECK_THROWS_AS(RootSystemType::parse("A2x"), domain_error);
}

TEST_CASE("rank bounds per family") {
    CHECK_THROWS_AS(RootSystemType::parse("A0"), domain_error);
    CHECK_THROWS_AS(RootSystemType::parse("B1"), domain_error);
    CHECK_THROWS_AS(RootSystemType::parse("C1"), domain_error);
    CHECK_THROWS_AS(RootSystemType::parse("D3"), domain_error);
    CHECK_THROWS_AS(RootSystemType::parse("E5"), domain_error);
    CHECK_THROWS_AS(RootSystemType::parse("E9"), domain_error);
    CHECK_THROWS_AS(RootSystemType::parse("F3"), domain_error);
    CHECK_THROWS_AS(RootSystemType::parse("G3"), domain_error);
    CHECK_NOTHROW(RootSystemType::parse("E6"));
    CHECK_NOTHROW(RootSystemType::parse("D4"));
}

TEST_CASE("A2 positive roots are the two simples and their sum") {
    RootSystem rs(RootSystemType::parse("A2"));
    std::set<std::vector<int>> have;
    for (const Root& r : rs.positive_roots()) have.insert(r.coeffs);
    CHECK(have == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("positive root counts match dimension arithmetic") {
    // (dim g - rank)/2 for the exceptional types; classical closed forms
    CHECK(RootSystem(RootSystemType::parse("F4")).num_positive() == (52 - 4) / 2);
    CHECK(RootSystem(RootSystemType::parse("E6")).num_positive() == (78 - 6) / 2);
    CHECK(RootSystem(RootSystemType::parse("E7")).num_positive() == (133 - 7) / 2);
    CHECK(RootSystem(RootSystemType::parse("E8")).num_positive() == (248 - 8) / 2);
    CHECK(RootSystem(RootSystemType::parse("G2")).num_positive() == (14 - 2) / 2);
    CHECK(RootSystem(RootSystemType::parse("A5")).num_positive() == 5 * 6 / 2);
    CHECK(RootSystem(RootSystemType::parse("B4")).num_positive() == 16);
    CHECK(RootSystem(RootSystemType::parse("C4")).num_positive() == 16);
    CHECK(RootSystem(RootSystemType::parse("D5")).num_positive() == 20);
}

TEST_CASE("products have block Cartan data and disjoint supports") {
    RootSystem rs(RootSystemType::parse("D4xA1"));
    CHECK(rs.rank() == 5);
    CHECK(rs.num_positive() == 12 + 1);
    for (int i = 0; i < 4; ++i) {
        CHECK(rs.cartan()[static_cast<std::size_t>(i)][4] == 0);
        CHECK(rs.cartan()[4][static_cast<std::size_t>(i)] == 0);
    }
    for (const Root& r : rs.positive_roots()) {
        bool in_d4 = false, in_a1 = false;
        for (int i = 0; i < 4; ++i) in_d4 = in_d4 || r.coeffs[static_cast<std::size_t>(i)] != 0;
        in_a1 = r.coeffs[4] != 0;
        CHECK(in_d4 != in_a1);
    }
}

TEST_CASE("generation is idempotent") {
    for (const char* label : {"A3", "B3", "G2", "F4"}) {
        RootSystem rs(RootSystemType::parse(label));
        auto again = generate_positive_roots(rs.cartan());
        CHECK(again == rs.positive_roots());
    }
}

TEST_CASE("reflection closure: alpha - <alpha, alpha_i^vee> alpha_i stays a root") {
    for (const char* label : {"A4", "B4", "C4", "D4", "G2", "F4"}) {
        RootSystem rs(RootSystemType::parse(label));
        for (const Root& a : rs.positive_roots())
            for (int i = 0; i < rs.rank(); ++i) {
                Root img = a;
                img.coeffs[static_cast<std::size_t>(i)] -= rs.pairing_with_simple_coroot(a, i);
                CHECK(rs.is_root(img));
            }
    }
}

TEST_CASE("height-1 roots are exactly the simples") {
    for (const char* label : {"A3", "C3", "F4", "E6"}) {
        RootSystem rs(RootSystemType::parse(label));
        int count = 0;
        for (const Root& r : rs.positive_roots())
            if (r.height() == 1) {
                ++count;
                CHECK(r == rs.simple_root(root_support(rs, r).front()));
            }
        CHECK(count == rs.rank());
    }
}

TEST_CASE("compare_roots on hand cases") {
    RootSystem a2(RootSystemType::parse("A2"));
    CHECK(compare_roots(a2, Root({1, 0}), Root({1, 1})) == RootOrder::Less);
    CHECK(compare_roots(a2, Root({1, 1}), Root({1, 0})) == RootOrder::Greater);
    CHECK(compare_roots(a2, Root({1, 0}), Root({0, 1})) == RootOrder::Incomparable);
    CHECK(compare_roots(a2, Root({1, 0}), Root({1, 0})) == RootOrder::Equal);
    RootSystem f4(RootSystemType::parse("F4"));
    CHECK(compare_roots(f4, Root({0, 1, 2, 0}), Root({1, 1, 1, 0})) == RootOrder::Incomparable);
    CHECK_THROWS_AS(compare_roots(a2, Root({2, 0}), Root({1, 0})), domain_error);
}

TEST_CASE("compare_roots is a strict partial order") {
    for (const char* label : {"A3", "B3", "C4", "G2", "F4"}) {
        RootSystem rs(RootSystemType::parse(label));
        std::vector<Root> all = rs.positive_roots();
        for (const Root& r : rs.positive_roots()) all.push_back(r.negated());
        for (const Root& a : all) {
            CHECK(compare_roots(rs, a, a) == RootOrder::Equal);
            for (const Root& b : all) {
                auto ab = compare_roots(rs, a, b);
                auto ba = compare_roots(rs, b, a);
                if (ab == RootOrder::Less) CHECK(ba == RootOrder::Greater);
                if (ab == RootOrder::Incomparable) CHECK(ba == RootOrder::Incomparable);
            }
        }
        // transitivity over positive roots
        const auto& pos = rs.positive_roots();
        for (const Root& a : pos)
            for (const Root& b : pos) {
                if (compare_roots(rs, a, b) != RootOrder::Less) continue;
                for (const Root& c : pos)
                    if (compare_roots(rs, b, c) == RootOrder::Less)
                        CHECK(compare_roots(rs, a, c) == RootOrder::Less);
            }
    }
}

TEST_CASE("root_support") {
    RootSystem a3(RootSystemType::parse("A3"));
    CHECK(root_support(a3, Root({1, 1, 0})) == std::vector<int>{0, 1});
    RootSystem f4(RootSystemType::parse("F4"));
    CHECK(f4.is_positive_root(Root({1, 3, 4, 2})));
    CHECK(root_support(f4, Root({1, 3, 4, 2})) == std::vector<int>{0, 1, 2, 3});
    for (int i = 0; i < f4.rank(); ++i)
        CHECK(root_support(f4, f4.simple_root(i)) == std::vector<int>{i});
    CHECK_THROWS_AS(root_support(a3, Root({-1, 0, 0})), domain_error);
}

TEST_CASE("evaluate_on_coweight") {
    Coweight ones{1, 1, 1, 1};
    CHECK(evaluate_on_coweight(Root({1, 1, 0, 0}), ones) == 2);
    CHECK(evaluate_on_coweight(Root({1, 3, 4, 2}), ones) == 10);
    Coweight zeros{0, 0, 0, 0};
    CHECK(evaluate_on_coweight(Root({1, 3, 4, 2}), zeros) == 0);
    CHECK_THROWS_AS(evaluate_on_coweight(Root({1, 0}), ones), domain_error);
}

TEST_CASE("sorted order is by height then lexicographic") {
    RootSystem rs(RootSystemType::parse("B3"));
    const auto& pos = rs.positive_roots();
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        int ha = pos[i].height(), hb = pos[i + 1].height();
        CHECK((ha < hb || (ha == hb && pos[i].coeffs < pos[i + 1].coeffs)));
    }
}

TEST_CASE("classification round-trips generated Cartan matrices") {
    for (const char* label : {"A1", "A5", "B2", "B4", "C3", "D4", "D6", "E6", "E7", "E8", "F4",
                              "G2", "D4xA1", "A2xB2xG2"}) {
        RootSystemType t = RootSystemType::parse(label);
        auto comps = classify_cartan(cartan_matrix(t));
        REQUIRE(comps.size() == t.components.size());
        for (std::size_t k = 0; k < comps.size(); ++k) {
            // B2 is the canonical name for the rank-2 double-edge diagram
            Family want = t.components[k].first;
            if (want == Family::C && t.components[k].second == 2) want = Family::B;
            CHECK(comps[k].family == want);
            CHECK(comps[k].rank == t.components[k].second);
        }
    }
}

TEST_CASE("bilinear form: lengths and integrality of pairings") {
    RootSystem f4(RootSystemType::parse("F4"));
    // two root lengths, ratio 2
    std::set<Rat> lengths;
    for (const Root& r : f4.positive_roots()) lengths.insert(f4.bilinear_form(r, r));
    REQUIRE(lengths.size() == 2);
    CHECK(*lengths.begin() == Rat(2));
    CHECK(*std::next(lengths.begin()) == Rat(4));
    // <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha) is an integer
    for (const Root& a : f4.positive_roots())
        for (const Root& b : f4.positive_roots()) {
            Rat pairing = Rat(2) * f4.bilinear_form(b, a) / f4.bilinear_form(a, a);
            CHECK(pairing.den() == 1);
        }
}
