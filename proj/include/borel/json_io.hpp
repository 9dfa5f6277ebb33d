#pragma once

#include <string>

#include <json.hpp>

#include "borel/certificates.hpp"
#include "borel/chevalley.hpp"
#include "borel/orbits.hpp"
#include "borel/poset.hpp"
#include "borel/roots.hpp"
#include "borel/weyl.hpp"

namespace borel::io {

using json = nlohmann::ordered_json;

// roots as plain integer arrays: [1,3,4,2]
json root_to_json(const Root& a);
Root root_from_json(const json& j);

// {"type":"F4","roots":[[1,1,0,0],[0,1,1,0]]}
json antichain_to_json(const RootSystem& rs, const Antichain& g);
Antichain antichain_from_json(const RootSystem& rs, const json& j);
json ideal_to_json(const RootSystem& rs, const RootIdeal& ideal);
RootIdeal ideal_from_json(const RootSystem& rs, const json& j);

/// Bare list of root arrays, the shape taken by --antichain flags.
std::vector<Root> root_list_from_json(const json& j);

// {"word":[1,3]} with 1-based letters
json word_to_json(const WeylWord& w);
WeylWord word_from_json(const json& j);

// {"type":"F4","antichain":[...],"H":[1,1,1,1],"n":2,"minimal":true,"trace":[...]}
json certificate_to_json(const RootSystem& rs, const Certificate& c);
Certificate certificate_from_json(const RootSystem& rs, const json& j);

json verification_to_json(const VerificationReport& r);

// {"type":"F4","terms":[{"root":[1,1,0,0],"coeff":"5/2"}]} with rationals as strings
json element_to_json(const RootSystem& rs, const NilpotentElement& x);
NilpotentElement element_from_json(const RootSystem& rs, const json& j);

json invariant_basis_to_json(const RootSystem& rs, const RootIdeal& ideal,
                             const std::vector<int>& lambda, const InvariantBasis& basis);

/// CSV row block for a list of antichains: index, size, then the flattened
/// coefficient columns of each member root.
std::string antichains_to_csv(const RootSystem& rs, const std::vector<Antichain>& list);

} // namespace borel::io
