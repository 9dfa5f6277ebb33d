#include "borel/json_io.hpp"

#include "borel/errors.hpp"

namespace borel::io {

namespace {

void expect_type_label(const RootSystem& rs, const json& j) {
    if (!j.contains("type")) return; // tolerated on input
    if (j.at("type").get<std::string>() != rs.type().label())
        throw domain_error("payload type '" + j.at("type").get<std::string>() +
                           "' does not match system " + rs.type().label());
}

} // namespace

json root_to_json(const Root& a) {
    return json(a.coeffs);
}

Root root_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("root payload must be an integer array");
    return Root(j.get<std::vector<int>>());
}

std::vector<Root> root_list_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("expected an array of roots");
    std::vector<Root> out;
    for (const json& r : j) out.push_back(root_from_json(r));
    return out;
}

json antichain_to_json(const RootSystem& rs, const Antichain& g) {
    json roots = json::array();
    for (const Root& r : g.roots) roots.push_back(root_to_json(r));
    return json{{"type", rs.type().label()}, {"roots", std::move(roots)}};
}

Antichain antichain_from_json(const RootSystem& rs, const json& j) {
    expect_type_label(rs, j);
    return make_antichain(rs, root_list_from_json(j.at("roots")));
}

json ideal_to_json(const RootSystem& rs, const RootIdeal& ideal) {
    json roots = json::array();
    for (const Root& r : ideal.roots) roots.push_back(root_to_json(r));
    return json{{"type", rs.type().label()}, {"roots", std::move(roots)}};
}

RootIdeal ideal_from_json(const RootSystem& rs, const json& j) {
    expect_type_label(rs, j);
    std::vector<Root> roots = root_list_from_json(j.at("roots"));
    RootIdeal ideal{std::move(roots)};
    socle(rs, ideal); // validates upward closure
    return ideal;
}

json word_to_json(const WeylWord& w) {
    json letters = json::array();
    for (int i : w.letters) letters.push_back(i + 1);
    return json{{"word", std::move(letters)}};
}

WeylWord word_from_json(const json& j) {
    WeylWord w;
    for (const json& v : j.at("word")) {
        int letter = v.get<int>();
        if (letter < 1) throw domain_error("word letters are 1-based simple indices");
        w.letters.push_back(letter - 1);
    }
    return w;
}

json certificate_to_json(const RootSystem& rs, const Certificate& c) {
    json antichain = json::array();
    for (const Root& r : c.antichain.roots) antichain.push_back(root_to_json(r));
    return json{{"type", rs.type().label()}, {"antichain", std::move(antichain)},
                {"H", c.coweight},           {"n", c.level},
                {"minimal", c.minimal},      {"trace", c.trace}};
}

Certificate certificate_from_json(const RootSystem& rs, const json& j) {
    expect_type_label(rs, j);
    Certificate c;
    c.antichain = make_antichain(rs, root_list_from_json(j.at("antichain")));
    c.coweight = j.at("H").get<Coweight>();
    c.level = j.at("n").get<std::int64_t>();
    c.minimal = j.value("minimal", false);
    if (j.contains("trace")) c.trace = j.at("trace").get<std::vector<std::string>>();
    return c;
}

json verification_to_json(const VerificationReport& r) {
    json lines = json::array();
    for (const VerificationLine& l : r.lines)
        lines.push_back(json{{"constraint", l.constraint}, {"value", l.value}, {"ok", l.ok}});
    return json{{"valid", r.valid}, {"lines", std::move(lines)}};
}

json element_to_json(const RootSystem& rs, const NilpotentElement& x) {
    json terms = json::array();
    for (const auto& [root, coeff] : x.terms)
        terms.push_back(json{{"root", root_to_json(root)}, {"coeff", coeff.str()}});
    return json{{"type", rs.type().label()}, {"terms", std::move(terms)}};
}

NilpotentElement element_from_json(const RootSystem& rs, const json& j) {
    expect_type_label(rs, j);
    std::map<Root, Rat> terms;
    for (const json& t : j.at("terms")) {
        Root r = root_from_json(t.at("root"));
        Rat c = Rat::parse(t.at("coeff").get<std::string>());
        auto [it, inserted] = terms.emplace(std::move(r), c);
        if (!inserted) throw domain_error("element lists a root twice");
    }
    return make_element(rs, std::move(terms));
}

json invariant_basis_to_json(const RootSystem& rs, const RootIdeal& ideal,
                             const std::vector<int>& lambda, const InvariantBasis& basis) {
    json monomials = json::array();
    for (const Monomial& m : basis.space.basis) {
        json roots = json::array();
        for (int idx : m.root_indices) roots.push_back(root_to_json(rs.root_at(idx)));
        monomials.push_back(std::move(roots));
    }
    json kernel = json::array();
    for (const auto& vec : basis.kernel) {
        json row = json::array();
        for (const Rat& v : vec) row.push_back(v.str());
        kernel.push_back(std::move(row));
    }
    return json{{"type", rs.type().label()},
                {"ideal", ideal_to_json(rs, ideal).at("roots")},
                {"lambda", lambda},
                {"dimension", basis.kernel.size()},
                {"monomials", std::move(monomials)},
                {"kernel", std::move(kernel)}};
}

std::string antichains_to_csv(const RootSystem& rs, const std::vector<Antichain>& list) {
    std::string out = "index,size,roots\n";
    for (std::size_t i = 0; i < list.size(); ++i) {
        out += std::to_string(i) + ',' + std::to_string(list[i].size());
        for (const Root& r : list[i].roots)
            for (int c : r.coeffs) out += ',' + std::to_string(c);
        out += '\n';
    }
    (void)rs;
    return out;
}

} // namespace borel::io
