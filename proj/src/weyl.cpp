#include "borel/weyl.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "borel/errors.hpp"

namespace borel {

Root simple_reflection(const RootSystem& rs, int i, const Root& a) {
    if (i < 0 || i >= rs.rank()) throw domain_error("simple reflection index out of range");
    if (!rs.is_root(a))
        throw domain_error("simple_reflection: " + to_string(a) + " is not a root of " +
                           rs.type().label());
    int pairing = rs.pairing_with_simple_coroot(a, i);
    Root out = a;
    out.coeffs[static_cast<std::size_t>(i)] -= pairing;
    return out;
}

std::vector<Root> apply_word(const RootSystem& rs, const WeylWord& w, std::vector<Root> roots) {
    for (int letter : w.letters)
        for (Root& r : roots) r = simple_reflection(rs, letter, r);
    return roots;
}

namespace {

using ImageKey = std::vector<std::vector<int>>; // sorted coefficient vectors

ImageKey key_of(const std::vector<Root>& image) {
    ImageKey k;
    k.reserve(image.size());
    for (const Root& r : image) k.push_back(r.coeffs);
    std::sort(k.begin(), k.end());
    return k;
}

/// Distance-to-simple score: ht-1 for positive images, 1-ht for negative.
/// Zero exactly when every image is a simple root.
long score_of(const std::vector<Root>& image) {
    long s = 0;
    for (const Root& r : image) {
        int h = r.height();
        s += h > 0 ? h - 1 : 1 - h;
    }
    return s;
}

} // namespace

ConjugationResult conjugate_antichain_to_simple(const RootSystem& rs, const Antichain& g,
                                                std::size_t budget) {
    Antichain checked = make_antichain(rs, g.roots);
    if (checked.empty())
        throw domain_error("conjugate_antichain_to_simple requires a nonempty antichain");

    struct Node {
        long score;
        std::size_t word_len;
        ImageKey key;
        std::vector<Root> image;
        WeylWord word;

        bool operator>(const Node& o) const {
            if (score != o.score) return score > o.score;
            if (word_len != o.word_len) return word_len > o.word_len;
            return key > o.key;
        }
    };

    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> frontier;
    std::map<ImageKey, bool> visited;

    auto push = [&](std::vector<Root> image, WeylWord word) {
        ImageKey k = key_of(image);
        if (visited.count(k)) return;
        visited.emplace(k, true);
        frontier.push(Node{score_of(image), word.letters.size(), std::move(k), std::move(image),
                           std::move(word)});
    };

    push(checked.roots, WeylWord{});
    std::size_t expanded = 0;
    while (!frontier.empty()) {
        Node cur = frontier.top();
        frontier.pop();
        if (cur.score == 0) {
            // verify the contract before returning
            std::vector<Root> image = apply_word(rs, cur.word, checked.roots);
            for (const Root& r : image)
                if (r.height() != 1)
                    throw invariant_violation("conjugation postcondition failed");
            return ConjugationResult{std::move(cur.word), std::move(image), expanded};
        }
        if (++expanded > budget)
            throw search_exhausted("conjugation search exhausted its state budget of " +
                                   std::to_string(budget));
        for (int i = 0; i < rs.rank(); ++i) {
            std::vector<Root> next;
            next.reserve(cur.image.size());
            for (const Root& r : cur.image) next.push_back(simple_reflection(rs, i, r));
            WeylWord w = cur.word;
            w.letters.push_back(i);
            push(std::move(next), std::move(w));
        }
    }
    throw invariant_violation("conjugation search emptied its frontier without a solution");
}

} // namespace borel
