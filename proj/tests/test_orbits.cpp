#include <doctest.h>

#include <random>

#include "borel/errors.hpp"
#include "borel/orbits.hpp"

using namespace borel;

namespace {

NilpotentElement ones_on(const RootSystem& rs, const std::vector<Root>& roots) {
    std::map<Root, Rat> terms;
    for (const Root& r : roots) terms.emplace(r, Rat(1));
    return make_element(rs, std::move(terms));
}

} // namespace

TEST_CASE("support, socle and minimal ideal of simple elements") {
    RootSystem a2(RootSystemType::parse("A2"));
    NilpotentElement x = ones_on(a2, {Root({1, 0}), Root({1, 1})});
    SupportDecomposition dec = support_and_socle(a2, x);
    CHECK(dec.support == std::vector<Root>{Root({1, 0}), Root({1, 1})});
    CHECK(dec.socle.roots == std::vector<Root>{Root({1, 0})});
    CHECK(dec.ideal.roots == std::vector<Root>{Root({1, 0}), Root({1, 1})});

    SupportDecomposition zero = support_and_socle(a2, NilpotentElement{});
    CHECK(zero.support.empty());
    CHECK(zero.socle.empty());
    CHECK(zero.ideal.empty());
}

TEST_CASE("make_element validates and drops zeros") {
    RootSystem a2(RootSystemType::parse("A2"));
    std::map<Root, Rat> terms{{Root({1, 0}), Rat(0)}, {Root({1, 1}), Rat(2, 3)}};
    NilpotentElement x = make_element(a2, terms);
    CHECK(x.terms.size() == 1);
    CHECK_THROWS_AS(make_element(a2, std::map<Root, Rat>{{Root({2, 0}), Rat(1)}}), domain_error);
}

TEST_CASE("named fixtures load, validate and have the expected socles") {
    for (const char* name : {"A6", "B4", "C4", "D5", "E6", "F4"}) {
        Fixture f = load_fixture(name);
        CHECK(f.system.type().label() == name);
        for (const auto& [root, coeff] : f.element.terms) {
            CHECK(f.system.is_positive_root(root));
            CHECK(coeff == Rat(1));
        }
    }
    Fixture b4 = load_fixture("B4");
    SupportDecomposition dec = support_and_socle(b4.system, b4.element);
    CHECK(dec.socle.roots == std::vector<Root>{Root({0, 0, 0, 1}), Root({0, 1, 0, 0})});

    Fixture f4 = load_fixture("F4");
    CHECK(f4.element.terms.size() == 5);
    CHECK(f4.element.terms.count(Root({1, 3, 4, 2})) == 1);

    Fixture c4 = load_fixture("C4");
    CHECK(c4.element.terms.size() == 5);
    CHECK(c4.element.terms.count(Root({0, 2, 2, 1})) == 1);

    CHECK_THROWS_AS(load_fixture("Z9"), domain_error);
}

TEST_CASE("in_m_bullet hand cases") {
    RootSystem a2(RootSystemType::parse("A2"));
    RootIdeal ideal = up_closure(a2, {Root({1, 0})});
    CHECK(in_m_bullet(a2, ones_on(a2, {Root({1, 0}), Root({1, 1})}), ideal));
    CHECK(!in_m_bullet(a2, ones_on(a2, {Root({1, 1})}), ideal));
    CHECK(!in_m_bullet(a2, ones_on(a2, {Root({0, 1})}), ideal));
    CHECK(in_m_bullet(a2, NilpotentElement{}, RootIdeal{}));
    CHECK(!in_m_bullet(a2, NilpotentElement{}, ideal));
}

TEST_CASE("each 0/1 element lies in exactly one minimal stratum") {
    for (const char* label : {"A2", "A3"}) {
        RootSystem rs(RootSystemType::parse(label));
        std::vector<RootIdeal> ideals;
        for (const Antichain& g : list_antichains(rs, AntichainFilter::All))
            ideals.push_back(up_closure(rs, g));
        const int n = rs.num_positive();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<Root> support;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) support.push_back(rs.root_at(i));
            NilpotentElement x = ones_on(rs, support);
            int strata = 0;
            for (const RootIdeal& ideal : ideals)
                if (in_m_bullet(rs, x, ideal)) ++strata;
            CHECK(strata == 1);
        }
    }
}

TEST_CASE("torus scaling preserves support, socle and minimal ideal") {
    RootSystem d4(RootSystemType::parse("D4"));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 30; ++k) {
        Antichain g = sample_antichain(d4, rng);
        RootIdeal ideal = up_closure(d4, g);
        NilpotentElement y = ones_on(d4, ideal.roots);
        Coweight h{3, 1, 4, 1};
        NilpotentElement scaled = torus_scale(d4, y, h, Rat(2, 3));
        SupportDecomposition a = support_and_socle(d4, y);
        SupportDecomposition b = support_and_socle(d4, scaled);
        CHECK(a.support == b.support);
        CHECK(a.socle == b.socle);
        CHECK(a.ideal == b.ideal);
    }
}

TEST_CASE("torus_degenerate hand cases") {
    RootSystem a2(RootSystemType::parse("A2"));
    std::map<Root, Rat> terms{{Root({1, 0}), Rat(1)}, {Root({0, 1}), Rat(1)}, {Root({1, 1}), Rat(5)}};
    NilpotentElement y = make_element(a2, terms);
    Certificate cert{make_antichain(a2, {Root({1, 0}), Root({0, 1})}), {1, 1}, 1, false, {}};
    NilpotentElement limit = torus_degenerate(a2, y, cert);
    CHECK(limit.terms.size() == 2);
    CHECK(limit.terms.at(Root({1, 0})) == Rat(1));
    CHECK(limit.terms.count(Root({1, 1})) == 0);

    // already minimal support: unchanged
    NilpotentElement x = make_element(a2, {{Root({1, 1}), Rat(7, 2)}});
    Certificate cx{make_antichain(a2, {Root({1, 1})}), {1, 1}, 2, false, {}};
    CHECK(torus_degenerate(a2, x, cx) == x);

    // coefficients surviving the limit are preserved verbatim
    RootSystem f4(RootSystemType::parse("F4"));
    Antichain row1 = make_antichain(f4, {Root({1, 1, 0, 0}), Root({0, 1, 1, 0}), Root({0, 0, 1, 1})});
    RootIdeal ideal = up_closure(f4, row1);
    NilpotentElement big = ones_on(f4, ideal.roots);
    Certificate c{row1, {1, 1, 1, 1}, 2, false, {}};
    NilpotentElement lim = torus_degenerate(f4, big, c);
    CHECK(support_and_socle(f4, lim).support == row1.roots);
}

TEST_CASE("torus_degenerate rejects mismatched certificates") {
    RootSystem a2(RootSystemType::parse("A2"));
    NilpotentElement y = ones_on(a2, {Root({1, 0}), Root({1, 1})});
    Certificate wrong{make_antichain(a2, {Root({1, 1})}), {1, 1}, 2, false, {}};
    CHECK_THROWS_AS(torus_degenerate(a2, y, wrong), domain_error);
    Certificate invalid{make_antichain(a2, {Root({1, 0})}), {0, 1}, 1, false, {}};
    CHECK_THROWS_AS(torus_degenerate(a2, y, invalid), domain_error);
}

TEST_CASE("degeneration lands on the socle support and stays in the stratum") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (const char* label : {"A4", "B4", "C5", "D6", "E6", "F4", "G2", "E8"}) {
        RootSystem rs(RootSystemType::parse(label));
        for (int k = 0; k < 25; ++k) {
            Antichain g = sample_antichain(rs, rng);
            RootIdeal ideal = up_closure(rs, g);
            std::map<Root, Rat> terms;
            for (const Root& r : g.roots) terms.emplace(r, Rat(1 + (k % 5)));
            for (const Root& r : ideal.roots)
                if (!terms.count(r)) {
                    int c = coeff(rng);
                    if (c != 0) terms.emplace(r, Rat(c, 2));
                }
            NilpotentElement y = make_element(rs, std::move(terms));
            REQUIRE(in_m_bullet(rs, y, ideal));
            Certificate cert = minimize_n(rs, g);
            NilpotentElement limit = torus_degenerate(rs, y, cert);
            CHECK(support_and_socle(rs, limit).support == g.roots);
            CHECK(in_m_bullet(rs, limit, ideal));
        }
    }
}

TEST_CASE("same_torus_orbit_linindep") {
    RootSystem a2(RootSystemType::parse("A2"));
    NilpotentElement x = ones_on(a2, {Root({1, 0}), Root({0, 1})});
    NilpotentElement y = make_element(a2, {{Root({1, 0}), Rat(3)}, {Root({0, 1}), Rat(-2)}});
    CHECK(same_torus_orbit_linindep(a2, x, y));
    CHECK(!same_torus_orbit_linindep(a2, ones_on(a2, {Root({1, 0})}),
                                     ones_on(a2, {Root({0, 1})})));
    NilpotentElement dependent = ones_on(a2, {Root({1, 0}), Root({0, 1}), Root({1, 1})});
    CHECK_THROWS_AS(same_torus_orbit_linindep(a2, dependent, x), domain_error);
}
