#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "borel/linalg.hpp"
#include "borel/poset.hpp"
#include "borel/roots.hpp"

namespace borel {

/// Structure constants N_{a,b} with [X_a, X_b] = N_{a,b} X_{a+b} over the
/// positive roots, built from extraspecial pairs processed by height.
/// |N_{a,b}| is the root-string length p+1 and N_{b,a} = -N_{a,b}.
class StructureConstants {
public:
    /// Sign given to each extraspecial pair; either consistent choice yields
    /// a valid basis, and outcomes downstream are convention-independent.
    enum class SignConvention { Plus, Minus };

    static StructureConstants build(const RootSystem& rs,
                                    SignConvention convention = SignConvention::Plus);

    /// N_{a,b}; zero when a+b is not a root. Inputs must be positive roots.
    std::int64_t coefficient(const Root& a, const Root& b) const;
    bool defined(const Root& a, const Root& b) const; // a+b is a root

    const RootSystem& system() const { return *rs_; }

private:
    const RootSystem* rs_ = nullptr;
    std::map<std::pair<int, int>, std::int64_t> table_; // positive-root ordinals
};

/// Monomial in the coordinate functions: a multiset of positive-root
/// ordinals, sorted ascending. The empty monomial is the constant 1.
struct Monomial {
    std::vector<int> root_indices;

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const { return root_indices < o.root_indices; }
};

/// Basis of one weight component of the coordinate ring of an ideal:
/// all multisets of ideal roots with the prescribed sum.
struct WeightMonomialSpace {
    std::vector<int> weight;      // lambda, all entries <= 0
    std::vector<Monomial> basis;  // sorted, duplicate free
};

/// Complete enumeration of ideal-root multisets summing to -lambda.
/// Throws domain_error when lambda has a positive entry.
WeightMonomialSpace weight_space_basis(const RootSystem& rs, const RootIdeal& ideal,
                                       const std::vector<int>& lambda);

enum class ActingSet {
    FullNilradical,      // derivations from every positive root
    SubsystemNilradical, // derivations from the span of the socle
};

struct InvariantBasis {
    WeightMonomialSpace space;
    std::vector<std::vector<Rat>> kernel; // coefficient vectors over space.basis
};

/// Exact kernel of the stacked derivation matrices on one weight component.
InvariantBasis invariant_subspace(const RootSystem& rs, const RootIdeal& ideal,
                                  const std::vector<int>& lambda, ActingSet acting,
                                  const StructureConstants& constants);

struct SocleInvarianceReport {
    bool pass = false;
    std::int64_t pairs_checked = 0;
    std::string failure; // empty when pass
};

/// Pure root arithmetic check that every derivation annihilates the product
/// of the socle coordinates: no beta in Delta+ may step a socle root down
/// into the ideal. Failure would contradict minimality of the socle.
SocleInvarianceReport check_socle_monomial_invariance(const RootSystem& rs, const RootIdeal& ideal);

} // namespace borel
