#pragma once

#include <cstddef>
#include <vector>

#include "borel/poset.hpp"
#include "borel/roots.hpp"

namespace borel {

/// Sequence of simple reflections, applied left to right: the word {i, j}
/// sends a root a to s_j(s_i(a)). Letters are 0-based simple indices.
struct WeylWord {
    std::vector<int> letters;

    bool operator==(const WeylWord&) const = default;
};

/// s_i(a) = a - <a, alpha_i^vee> alpha_i. The result is again a root.
Root simple_reflection(const RootSystem& rs, int i, const Root& a);

std::vector<Root> apply_word(const RootSystem& rs, const WeylWord& w, std::vector<Root> roots);

struct ConjugationResult {
    WeylWord word;
    std::vector<Root> image;       // verified subset of the simple roots
    std::size_t expanded_states = 0;
};

inline constexpr std::size_t kDefaultConjugationBudget = 1'000'000;

/// Finds a Weyl word sending the antichain into the simple roots.
/// Best-first search over image sets scored by total distance-to-simple
/// height, with memoization of visited images. The returned word is not
/// canonical; the verified postcondition w(g) within the simples is.
/// Throws search_exhausted when the state budget runs out.
ConjugationResult conjugate_antichain_to_simple(const RootSystem& rs, const Antichain& g,
                                                std::size_t budget = kDefaultConjugationBudget);

} // namespace borel
