#include <doctest.h>

#include <algorithm>

#include "borel/chevalley.hpp"
#include "borel/errors.hpp"

using namespace borel;

namespace {

Root plus(const Root& a, const Root& b) {
    Root s = a;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) s.coeffs[i] += b.coeffs[i];
    return s;
}

std::int64_t n_or_zero(const RootSystem& rs, const StructureConstants& sc, const Root& a,
                       const Root& b) {
    if (!rs.is_positive_root(plus(a, b))) return 0;
    return sc.coefficient(a, b);
}

int string_length(const RootSystem& rs, const Root& a, const Root& b) {
    int p = 0;
    Root cur = b;
    for (;;) {
        for (std::size_t i = 0; i < cur.coeffs.size(); ++i) cur.coeffs[i] -= a.coeffs[i];
        if (!rs.is_root(cur)) break;
        ++p;
    }
    return p;
}

} // namespace

TEST_CASE("A2 constants") {
    RootSystem rs(RootSystemType::parse("A2"));
    StructureConstants sc = StructureConstants::build(rs);
    Root a1({1, 0}), a2({0, 1});
    std::int64_t n = sc.coefficient(a1, a2);
    CHECK((n == 1 || n == -1));
    CHECK(sc.coefficient(a2, a1) == -n);
    CHECK(!sc.defined(a1, a1));              // 2*alpha_1 is not a root
    CHECK(sc.coefficient(a1, a1) == 0);
    CHECK(!sc.defined(Root({1, 1}), a1));
}

TEST_CASE("string-length magnitude and antisymmetry everywhere") {
    for (const char* label : {"A3", "B3", "C3", "C4", "D4", "G2", "F4"}) {
        RootSystem rs(RootSystemType::parse(label));
        StructureConstants sc = StructureConstants::build(rs);
        for (const Root& a : rs.positive_roots())
            for (const Root& b : rs.positive_roots()) {
                if (!rs.is_positive_root(plus(a, b))) continue;
                std::int64_t n = sc.coefficient(a, b);
                CHECK(std::abs(n) == string_length(rs, a, b) + 1);
                CHECK(sc.coefficient(b, a) == -n);
            }
    }
}

TEST_CASE("Jacobi identity on all positive triples of rank <= 4 systems") {
    for (const char* label : {"A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4",
                              "B2xA1"}) {
        RootSystem rs(RootSystemType::parse(label));
        StructureConstants sc = StructureConstants::build(rs);
        const auto& pos = rs.positive_roots();
        for (const Root& a : pos)
            for (const Root& b : pos)
                for (const Root& c : pos) {
                    std::int64_t j = 0;
                    if (rs.is_positive_root(plus(a, b)))
                        j += n_or_zero(rs, sc, a, b) * n_or_zero(rs, sc, plus(a, b), c);
                    if (rs.is_positive_root(plus(b, c)))
                        j += n_or_zero(rs, sc, b, c) * n_or_zero(rs, sc, plus(b, c), a);
                    if (rs.is_positive_root(plus(c, a)))
                        j += n_or_zero(rs, sc, c, a) * n_or_zero(rs, sc, plus(c, a), b);
                    CHECK(j == 0);
                }
    }
}

TEST_CASE("the large exceptional tables build cleanly") {
    for (const char* label : {"E6", "E7", "E8"})
        CHECK_NOTHROW(StructureConstants::build(RootSystem(RootSystemType::parse(label))));
}

TEST_CASE("weight space bases in A2") {
    RootSystem rs(RootSystemType::parse("A2"));
    RootIdeal full{rs.positive_roots()};

    WeightMonomialSpace w1 = weight_space_basis(rs, full, {-1, -1});
    CHECK(w1.basis.size() == 2); // xi_1 xi_2 and xi_{12}

    WeightMonomialSpace w2 = weight_space_basis(rs, full, {-1, 0});
    CHECK(w2.basis.size() == 1);

    WeightMonomialSpace w3 = weight_space_basis(rs, full, {-1, -2});
    CHECK(w3.basis.size() == 2); // xi_1 xi_2^2 and xi_2 xi_{12}

    WeightMonomialSpace w0 = weight_space_basis(rs, full, {0, 0});
    CHECK(w0.basis.size() == 1); // the constant

    CHECK_THROWS_AS(weight_space_basis(rs, full, {1, -1}), domain_error);
    CHECK_THROWS_AS(weight_space_basis(rs, full, {-1}), domain_error);
}

TEST_CASE("every listed monomial sums to minus the weight, duplicate free") {
    RootSystem rs(RootSystemType::parse("B2"));
    RootIdeal full{rs.positive_roots()};
    for (int x = 0; x <= 3; ++x)
        for (int y = 0; y <= 3; ++y) {
            WeightMonomialSpace w = weight_space_basis(rs, full, {-x, -y});
            for (const Monomial& m : w.basis) {
                std::vector<int> sum(2, 0);
                for (int idx : m.root_indices)
                    for (int i = 0; i < 2; ++i)
                        sum[static_cast<std::size_t>(i)] +=
                            rs.root_at(idx).coeffs[static_cast<std::size_t>(i)];
                CHECK(sum == std::vector<int>{x, y});
            }
            auto dedup = w.basis;
            dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
            CHECK(dedup.size() == w.basis.size());
        }
}

TEST_CASE("invariant subspaces of the A2 nilradical") {
    RootSystem rs(RootSystemType::parse("A2"));
    StructureConstants sc = StructureConstants::build(rs);
    RootIdeal full{rs.positive_roots()};

    InvariantBasis inv = invariant_subspace(rs, full, {-1, -1}, ActingSet::FullNilradical, sc);
    REQUIRE(inv.kernel.size() == 1);
    // spanned by xi_1 xi_2, the square-free socle monomial
    Monomial socle_monomial{{rs.index_of(Root({0, 1})), rs.index_of(Root({1, 0}))}};
    auto it = std::find(inv.space.basis.begin(), inv.space.basis.end(), socle_monomial);
    REQUIRE(it != inv.space.basis.end());
    std::size_t idx = static_cast<std::size_t>(it - inv.space.basis.begin());
    for (std::size_t c = 0; c < inv.kernel[0].size(); ++c)
        CHECK(inv.kernel[0][c].is_zero() == (c != idx));

    InvariantBasis deep = invariant_subspace(rs, full, {-1, -2}, ActingSet::FullNilradical, sc);
    REQUIRE(deep.kernel.size() == 1);
    Monomial deep_monomial{{rs.index_of(Root({0, 1})), rs.index_of(Root({0, 1})),
                            rs.index_of(Root({1, 0}))}};
    auto jt = std::find(deep.space.basis.begin(), deep.space.basis.end(), deep_monomial);
    REQUIRE(jt != deep.space.basis.end());
    std::size_t jdx = static_cast<std::size_t>(jt - deep.space.basis.begin());
    for (std::size_t c = 0; c < deep.kernel[0].size(); ++c)
        CHECK(deep.kernel[0][c].is_zero() == (c != jdx));
}

TEST_CASE("an abelian principal ideal is killed by every derivation") {
    RootSystem rs(RootSystemType::parse("A2"));
    StructureConstants sc = StructureConstants::build(rs);
    RootIdeal principal = up_closure(rs, {Root({1, 1})});
    InvariantBasis inv = invariant_subspace(rs, principal, {-1, -1}, ActingSet::FullNilradical, sc);
    REQUIRE(inv.space.basis.size() == 1);
    REQUIRE(inv.kernel.size() == 1);
    CHECK(!inv.kernel[0][0].is_zero());
}

TEST_CASE("kernel vectors are exactly annihilated by the acting derivations") {
    // multiply each kernel vector back through the raw derivation action
    RootSystem rs(RootSystemType::parse("A3"));
    StructureConstants sc = StructureConstants::build(rs);
    for (const Antichain& g : list_antichains(rs, AntichainFilter::NonEmpty)) {
        RootIdeal ideal = up_closure(rs, g);
        std::vector<int> lambda(3, 0);
        for (const Root& r : g.roots)
            for (int i = 0; i < 3; ++i) lambda[static_cast<std::size_t>(i)] -= r.coeffs[static_cast<std::size_t>(i)];
        InvariantBasis inv = invariant_subspace(rs, ideal, lambda, ActingSet::FullNilradical, sc);
        for (const auto& vec : inv.kernel) {
            for (const Root& beta : rs.positive_roots()) {
                // image weight component
                std::vector<int> lam_up = lambda;
                bool in_cone = true;
                for (int i = 0; i < 3; ++i) {
                    lam_up[static_cast<std::size_t>(i)] += beta.coeffs[static_cast<std::size_t>(i)];
                    if (lam_up[static_cast<std::size_t>(i)] > 0) in_cone = false;
                }
                if (!in_cone) continue;
                WeightMonomialSpace cod = weight_space_basis(rs, ideal, lam_up);
                std::map<Monomial, Rat> image;
                for (std::size_t c = 0; c < inv.space.basis.size(); ++c) {
                    if (vec[c].is_zero()) continue;
                    const Monomial& mono = inv.space.basis[c];
                    for (std::size_t t = 0; t < mono.root_indices.size(); ++t) {
                        if (t > 0 && mono.root_indices[t] == mono.root_indices[t - 1]) continue;
                        const Root& alpha = rs.root_at(mono.root_indices[t]);
                        Root stepped = alpha;
                        for (int i = 0; i < 3; ++i)
                            stepped.coeffs[static_cast<std::size_t>(i)] -= beta.coeffs[static_cast<std::size_t>(i)];
                        if (!rs.is_positive_root(stepped) || !ideal.contains(stepped)) continue;
                        int mult = static_cast<int>(std::count(mono.root_indices.begin(),
                                                               mono.root_indices.end(),
                                                               mono.root_indices[t]));
                        Monomial img = mono;
                        img.root_indices.erase(std::find(img.root_indices.begin(),
                                                         img.root_indices.end(),
                                                         mono.root_indices[t]));
                        img.root_indices.insert(std::lower_bound(img.root_indices.begin(),
                                                                 img.root_indices.end(),
                                                                 rs.index_of(stepped)),
                                                rs.index_of(stepped));
                        image[img] += vec[c] * Rat(mult * sc.coefficient(beta, stepped));
                    }
                }
                for (const auto& [mono, coeff] : image) CHECK(coeff.is_zero());
            }
        }
    }
}

TEST_CASE("flipping the sign convention changes no dimensions or socle spans") {
    RootSystem rs(RootSystemType::parse("A3"));
    StructureConstants plus = StructureConstants::build(rs, StructureConstants::SignConvention::Plus);
    StructureConstants minus =
        StructureConstants::build(rs, StructureConstants::SignConvention::Minus);
    RootIdeal full{rs.positive_roots()};
    for (const std::vector<int>& lambda :
         std::vector<std::vector<int>>{{-1, -1, 0}, {-1, -1, -1}, {0, -1, -1}, {-1, -2, -1}}) {
        InvariantBasis a = invariant_subspace(rs, full, lambda, ActingSet::FullNilradical, plus);
        InvariantBasis b = invariant_subspace(rs, full, lambda, ActingSet::FullNilradical, minus);
        CHECK(a.kernel.size() == b.kernel.size());
        for (std::size_t k = 0; k < a.kernel.size(); ++k)
            for (std::size_t c = 0; c < a.kernel[k].size(); ++c)
                CHECK(a.kernel[k][c].is_zero() == b.kernel[k][c].is_zero());
    }
}

TEST_CASE("socle monomial invariance by pure root arithmetic") {
    RootSystem a2(RootSystemType::parse("A2"));
    CHECK(check_socle_monomial_invariance(a2, RootIdeal{a2.positive_roots()}).pass);
    CHECK(check_socle_monomial_invariance(a2, up_closure(a2, {Root({1, 1})})).pass);

    RootSystem f4(RootSystemType::parse("F4"));
    Antichain row1 = make_antichain(f4, {Root({1, 1, 0, 0}), Root({0, 1, 1, 0}), Root({0, 0, 1, 1})});
    CHECK(check_socle_monomial_invariance(f4, up_closure(f4, row1)).pass);

    for (const Root& r : f4.positive_roots())
        CHECK(check_socle_monomial_invariance(f4, up_closure(f4, {r})).pass);
}
