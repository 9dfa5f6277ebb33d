#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "borel/rational.hpp"

namespace borel {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A finite reduced type: product of irreducible components, e.g. "F4" or "D4xA1".
struct RootSystemType {
    std::vector<std::pair<Family, int>> components;

    int total_rank() const;
    bool irreducible() const { return components.size() == 1; }
    std::string label() const;          // "A2", "D4xA1"
    static RootSystemType parse(const std::string& label);

    /// Throws domain_error naming the offending component when a rank is
    /// out of range for its family (A>=1, B,C>=2, D>=4, E in 6..8, F=4, G=2).
    void validate() const;

    bool operator==(const RootSystemType&) const = default;
};

/// Integer coefficient vector over the simple basis. All entries share one
/// sign and the vector belongs to the generated root set of its system.
struct Root {
    std::vector<int> coeffs;

    Root() = default;
    explicit Root(std::vector<int> c) : coeffs(std::move(c)) {}

    int height() const;
    bool positive() const { return height() > 0; }
    Root negated() const;

    auto operator<=>(const Root&) const = default;
};

enum class RootOrder { Less, Greater, Equal, Incomparable };

/// "[1,2,1,0]" — the JSON shape, also used in error messages.
std::string to_string(const Root& a);

using Coweight = std::vector<std::int64_t>; // value on each simple coroot slot

/// alpha(H) = sum of coeff[i] * H[i]; the dual-basis evaluation model.
std::int64_t evaluate_on_coweight(const Root& a, std::span<const std::int64_t> h);

using CartanMatrix = std::vector<std::vector<int>>; // A[i][j] = <alpha_j, alpha_i^vee>

/// Immutable root system: Cartan data plus the full positive root set,
/// sorted by (height, lexicographic). Safe to share across threads.
class RootSystem {
public:
    explicit RootSystem(RootSystemType type);

    const RootSystemType& type() const { return type_; }
    int rank() const { return static_cast<int>(cartan_.size()); }
    bool irreducible() const { return type_.irreducible(); }
    const CartanMatrix& cartan() const { return cartan_; }

    const std::vector<Root>& positive_roots() const { return positives_; }
    int num_positive() const { return static_cast<int>(positives_.size()); }

    bool is_positive_root(const Root& a) const;
    bool is_root(const Root& a) const; // positive or negative
    /// Ordinal of a positive root in the sorted order; throws domain_error if absent.
    int index_of(const Root& a) const;
    const Root& root_at(int index) const { return positives_[static_cast<std::size_t>(index)]; }
    Root simple_root(int i) const; // i is 0-based

    /// <a, alpha_i^vee> computed from the Cartan matrix (a need not be a root).
    int pairing_with_simple_coroot(const Root& a, int i) const;

    /// Symmetrized form (a,b) with short roots normalized to length^2 = 2
    /// per component. Exact rational.
    Rat bilinear_form(const Root& a, const Root& b) const;

private:
    RootSystemType type_;
    CartanMatrix cartan_;
    std::vector<Root> positives_;
    std::map<std::vector<int>, int> index_;
    std::vector<Rat> symmetrizer_; // d_i with (alpha_i, alpha_j) = d_i * A[i][j]
};

RootSystem build_root_system(const RootSystemType& type);

/// Strict partial-order comparison in the root poset: Less iff b-a is a
/// nonzero vector with all entries >= 0. Inputs must belong to Delta.
RootOrder compare_roots(const RootSystem& rs, const Root& a, const Root& b);

/// 0-based indices of the nonzero coefficients of a positive root.
std::vector<int> root_support(const RootSystem& rs, const Root& a);

/// Plumbing shared with the certificate engine: the Cartan matrix of a
/// typed system, and generation/classification of root data from a matrix.
CartanMatrix cartan_matrix(const RootSystemType& type);
std::vector<Root> generate_positive_roots(const CartanMatrix& cartan);

/// One irreducible factor of a Cartan matrix, with the permutation taking
/// standard Bourbaki-numbered indices to indices of the input matrix.
struct ComponentClassification {
    Family family;
    int rank;
    std::vector<int> to_ambient; // to_ambient[standard index] = input index
};

/// Decompose a valid Cartan matrix into classified irreducible factors.
/// Throws invariant_violation when the matrix is not of finite type.
std::vector<ComponentClassification> classify_cartan(const CartanMatrix& cartan);

} // namespace borel
