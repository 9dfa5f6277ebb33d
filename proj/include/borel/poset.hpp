#pragma once

#include <functional>
#include <random>
#include <vector>

#include "borel/roots.hpp"

namespace borel {

/// Pairwise incomparable positive roots, sorted in the system's root order.
struct Antichain {
    std::vector<Root> roots;

    bool empty() const { return roots.empty(); }
    std::size_t size() const { return roots.size(); }
    bool operator==(const Antichain&) const = default;
};

/// Upward-closed subset of the positive roots, sorted in the system's order.
struct RootIdeal {
    std::vector<Root> roots;

    bool empty() const { return roots.empty(); }
    std::size_t size() const { return roots.size(); }
    bool contains(const Root& a) const;
    bool operator==(const RootIdeal&) const = default;
};

/// Validates pairwise incomparability and membership; sorts canonically.
Antichain make_antichain(const RootSystem& rs, std::vector<Root> roots);

/// Smallest upward-closed set containing the given positive roots.
RootIdeal up_closure(const RootSystem& rs, const std::vector<Root>& gens);
RootIdeal up_closure(const RootSystem& rs, const Antichain& g);

/// Minimal elements of an upward-closed set. Throws domain_error naming a
/// violating pair when the input is not upward closed.
Antichain socle(const RootSystem& rs, const RootIdeal& ideal);

enum class AntichainFilter {
    All,
    NonEmpty,
    /// Antichains with at least 3 elements, full simple support, no simple
    /// member, maximal by inclusion (see MaximalityReading).
    MaximalSimpleFree,
};

/// Two readings of "maximal by inclusion" for the MaximalSimpleFree filter:
/// maximal among antichains disjoint from the simples, or maximal among
/// antichains satisfying all three filter properties. They provably select
/// the same sets (adding a non-simple incomparable root preserves all three
/// properties); both are implemented so the equality can be demonstrated.
enum class MaximalityReading { DisjointFamily, ConstrainedFamily };

/// Deterministic, duplicate-free enumeration in index-lexicographic order.
void enumerate_antichains(const RootSystem& rs, AntichainFilter filter,
                          const std::function<void(const Antichain&)>& visit,
                          MaximalityReading reading = MaximalityReading::DisjointFamily);

std::vector<Antichain> list_antichains(const RootSystem& rs, AntichainFilter filter,
                                       MaximalityReading reading = MaximalityReading::DisjointFamily);

struct Delta1Stats {
    int delta1_size = 0;            // roots whose first simple coefficient is nonzero
    int max_antichain_size = 0;     // over antichains contained in that set
    std::int64_t antichain_count = 0; // nonempty antichains contained in that set
};

/// Statistics of the first-node slice of an irreducible system.
Delta1Stats delta1_stats(const RootSystem& rs);

/// Fallback count used when pinning the slice-count interpretation: number
/// of distinct nonempty intersections of maximal simple-free antichains
/// with the slice.
std::int64_t delta1_slice_intersection_count(const RootSystem& rs);

struct SubsystemElement {
    Root root;
    std::vector<std::int64_t> gamma_coords; // coordinates over the antichain basis
};

struct AntichainSubsystem {
    std::vector<SubsystemElement> all_roots;      // Z-span members of Delta
    std::vector<SubsystemElement> positive_roots; // N-span members
    RootSystemType subsystem_type;                // classified from the induced Cartan data
};

/// Roots lying in the span of an antichain, with their exact coordinates.
/// Throws domain_error on non-antichain or linearly dependent input.
AntichainSubsystem antichain_subsystem(const RootSystem& rs, const Antichain& g);

/// Seeded random antichain (possibly large or small, never empty for
/// systems of rank >= 1). Deterministic for a fixed generator state.
Antichain sample_antichain(const RootSystem& rs, std::mt19937_64& rng);

} // namespace borel
