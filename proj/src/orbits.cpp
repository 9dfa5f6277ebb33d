#include "borel/orbits.hpp"

#include <algorithm>

#include "borel/errors.hpp"
#include "borel/linalg.hpp"

namespace borel {

NilpotentElement make_element(const RootSystem& rs, std::map<Root, Rat> terms) {
    NilpotentElement x;
    for (auto& [root, coeff] : terms) {
        if (coeff.is_zero()) continue;
        if (!rs.is_positive_root(root))
            throw domain_error("element term " + to_string(root) + " is not a positive root of " +
                               rs.type().label());
        x.terms.emplace(root, coeff);
    }
    return x;
}

SupportDecomposition support_and_socle(const RootSystem& rs, const NilpotentElement& x) {
    SupportDecomposition out;
    for (const auto& [root, coeff] : x.terms) {
        if (!rs.is_positive_root(root))
            throw domain_error("element term " + to_string(root) + " is not a positive root");
        out.support.push_back(root);
    }
    std::sort(out.support.begin(), out.support.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.coeffs < b.coeffs;
    });
    std::vector<Root> minimal;
    for (const Root& a : out.support) {
        bool is_min = true;
        for (const Root& b : out.support)
            if (compare_roots(rs, b, a) == RootOrder::Less) { is_min = false; break; }
        if (is_min) minimal.push_back(a);
    }
    out.socle = make_antichain(rs, std::move(minimal));
    out.ideal = up_closure(rs, out.socle);
    return out;
}

bool in_m_bullet(const RootSystem& rs, const NilpotentElement& x, const RootIdeal& ideal) {
    Antichain soc = socle(rs, ideal);
    SupportDecomposition dec = support_and_socle(rs, x);

    bool first = true; // socle(ideal) within supp(x) within ideal
    for (const Root& g : soc.roots)
        if (std::find(dec.support.begin(), dec.support.end(), g) == dec.support.end()) {
            first = false;
            break;
        }
    if (first)
        for (const Root& s : dec.support)
            if (!ideal.contains(s)) { first = false; break; }

    bool second = true; // x lies in the ideal and its minimal ideal is the ideal
    for (const Root& s : dec.support)
        if (!ideal.contains(s)) { second = false; break; }
    second = second && dec.ideal == ideal;

    if (first != second)
        throw invariant_violation("the two minimal-ideal characterizations disagree");
    return first;
}

NilpotentElement torus_scale(const RootSystem& rs, const NilpotentElement& x,
                             std::span<const std::int64_t> h, const Rat& t) {
    if (t.is_zero()) throw domain_error("torus_scale requires a nonzero parameter");
    NilpotentElement out;
    for (const auto& [root, coeff] : x.terms) {
        if (!rs.is_positive_root(root))
            throw domain_error("element term " + to_string(root) + " is not a positive root");
        std::int64_t e = evaluate_on_coweight(root, h);
        Rat factor(1);
        Rat base = e >= 0 ? t : Rat(1) / t;
        for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k) factor *= base;
        out.terms.emplace(root, factor * coeff);
    }
    return out;
}

NilpotentElement torus_degenerate(const RootSystem& rs, const NilpotentElement& y,
                                  const Certificate& socle_certificate) {
    SupportDecomposition dec = support_and_socle(rs, y);
    if (!(socle_certificate.antichain == dec.socle))
        throw domain_error("certificate antichain is not the socle of the element's minimal ideal");
    if (!verify_certificate(rs, socle_certificate).valid)
        throw domain_error("torus_degenerate: certificate is invalid");
    if (!in_m_bullet(rs, y, dec.ideal))
        throw domain_error("torus_degenerate: element is outside its own minimal stratum");

    NilpotentElement out;
    for (const auto& [root, coeff] : y.terms) {
        std::int64_t v = evaluate_on_coweight(root, socle_certificate.coweight);
        if (v == socle_certificate.level) out.terms.emplace(root, coeff);
        else if (v < socle_certificate.level)
            throw invariant_violation("ideal root below the certificate hyperplane");
    }
    return out;
}

bool same_torus_orbit_linindep(const RootSystem& rs, const NilpotentElement& x,
                               const NilpotentElement& y) {
    SupportDecomposition dx = support_and_socle(rs, x);
    linalg::Matrix cols(static_cast<std::size_t>(rs.rank()),
                        std::vector<Rat>(dx.support.size(), Rat(0)));
    for (std::size_t j = 0; j < dx.support.size(); ++j)
        for (int i = 0; i < rs.rank(); ++i)
            cols[static_cast<std::size_t>(i)][j] = Rat(dx.support[j].coeffs[static_cast<std::size_t>(i)]);
    if (linalg::rank(cols) != static_cast<int>(dx.support.size()))
        throw domain_error("support is linearly dependent: torus-orbit test is outside contract");
    SupportDecomposition dy = support_and_socle(rs, y);
    return dx.support == dy.support;
}

Fixture load_fixture(const std::string& name) {
    struct Entry {
        const char* type;
        std::vector<std::vector<int>> roots;
    };
    static const std::map<std::string, Entry> fixtures = {
        {"A6", {"A6", {{1,0,0,0,0,0}, {0,0,1,0,0,0}, {0,0,0,1,0,0}, {0,0,0,0,0,1},
                        {1,1,0,0,0,0}, {0,0,0,0,1,1}, {0,1,1,1,1,0}}}},
        {"B4", {"B4", {{0,1,0,0}, {0,0,0,1}, {1,1,0,0}, {0,1,1,0}, {1,1,2,2}}}},
        {"C4", {"C4", {{1,0,0,0}, {0,0,1,0}, {0,0,0,1}, {1,1,0,0}, {0,2,2,1}}}},
        {"D5", {"D5", {{0,1,0,0,0}, {0,0,0,1,0}, {0,0,0,0,1}, {1,1,0,0,0}, {0,1,1,0,0},
                        {1,1,2,1,1}}}},
        {"E6", {"E6", {{1,0,0,0,0,0}, {0,1,0,0,0,0}, {0,0,1,0,0,0}, {0,0,0,0,1,0},
                        {0,0,0,0,0,1}, {0,1,0,1,0,0}, {1,1,2,3,2,1}}}},
        {"F4", {"F4", {{1,0,0,0}, {0,0,1,0}, {0,0,0,1}, {1,1,0,0}, {1,3,4,2}}}},
    };
    auto it = fixtures.find(name);
    if (it == fixtures.end()) throw domain_error("unknown fixture '" + name + "'");
    RootSystem rs(RootSystemType::parse(it->second.type));
    std::map<Root, Rat> terms;
    for (const auto& coeffs : it->second.roots) {
        Root r(coeffs);
        if (!rs.is_positive_root(r))
            throw invariant_violation("fixture root " + to_string(r) +
                                      " is not a positive root of " + it->second.type);
        terms.emplace(std::move(r), Rat(1));
    }
    NilpotentElement element = make_element(rs, std::move(terms));
    return Fixture{std::move(rs), std::move(element)};
}

} // namespace borel
