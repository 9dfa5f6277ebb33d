#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace borel::reference {

/// Golden row of the F4 certificate table: a maximal antichain together
/// with a published coweight and its minimal level.
struct F4Row {
    std::vector<std::vector<int>> antichain;
    std::vector<std::int64_t> coweight;
    std::int64_t level;
};

inline const std::vector<F4Row>& f4_certificate_table() {
    static const std::vector<F4Row> table = {
        {{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}, {1, 1, 1, 1}, 2},
        {{{1, 1, 0, 0}, {0, 1, 2, 0}, {0, 0, 1, 1}}, {2, 1, 1, 2}, 3},
        {{{1, 1, 0, 0}, {0, 1, 2, 0}, {0, 1, 1, 1}}, {2, 1, 1, 1}, 3},
        {{{1, 1, 1, 0}, {0, 1, 2, 0}, {0, 0, 1, 1}}, {1, 1, 1, 2}, 3},
        {{{1, 1, 1, 0}, {0, 1, 2, 0}, {0, 1, 1, 1}}, {1, 1, 1, 1}, 3},
        {{{1, 1, 2, 0}, {1, 1, 1, 1}, {0, 1, 2, 1}}, {1, 1, 1, 1}, 4},
        {{{1, 1, 2, 0}, {1, 1, 1, 1}, {0, 1, 2, 2}}, {2, 1, 1, 1}, 5},
        {{{1, 2, 2, 0}, {1, 1, 1, 1}, {0, 1, 2, 1}}, {1, 1, 1, 2}, 5},
        {{{1, 2, 2, 0}, {1, 1, 1, 1}, {0, 1, 2, 2}}, {3, 1, 1, 2}, 7},
        {{{1, 2, 2, 0}, {1, 1, 2, 1}, {0, 1, 2, 2}}, {1, 1, 1, 1}, 5},
    };
    return table;
}

struct FamilyCountExpectation {
    std::string type;
    std::int64_t count;
};

inline const std::vector<FamilyCountExpectation>& maximal_family_counts() {
    static const std::vector<FamilyCountExpectation> counts = {
        {"F4", 10}, {"E6", 91}, {"E7", 512}, {"E8", 3289}};
    return counts;
}

struct Delta1Expectation {
    std::string type;
    int slice_size;
    int max_antichain;
    std::int64_t possibilities;
};

inline const std::vector<Delta1Expectation>& delta1_expectations() {
    static const std::vector<Delta1Expectation> stats = {
        {"F4", 15, 2, 22}, {"E6", 16, 2, 26}, {"E7", 33, 3, 119}, {"E8", 78, 5, 1348}};
    return stats;
}

struct ExtremalExpectation {
    std::string type;
    std::int64_t max_minimal_level;
};

inline const std::vector<ExtremalExpectation>& extremal_levels() {
    static const std::vector<ExtremalExpectation> levels = {
        {"E6", 9}, {"E7", 14}, {"E8", 25}};
    return levels;
}

} // namespace borel::reference
