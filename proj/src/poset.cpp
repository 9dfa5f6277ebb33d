#include "borel/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "borel/errors.hpp"
#include "borel/linalg.hpp"

namespace borel {

namespace {

bool root_order_less(const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
}

void sort_roots(std::vector<Root>& roots) {
    std::sort(roots.begin(), roots.end(), root_order_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
}

/// Word-packed bitset over positive root ordinals.
struct RootMask {
    std::vector<std::uint64_t> words;

    explicit RootMask(int n) : words((static_cast<std::size_t>(n) + 63) / 64, 0) {}
    void set(int i) { words[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void clear(int i) { words[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
    bool intersects(const RootMask& o) const {
        for (std::size_t w = 0; w < words.size(); ++w)
            if (words[w] & o.words[w]) return true;
        return false;
    }
};

struct PosetContext {
    const RootSystem& rs;
    int n;
    std::vector<RootMask> comparable; // comparable[i]: j != i with i,j comparable
    std::vector<std::uint32_t> support; // simple-support bits per root
    std::uint32_t full_support;
    std::vector<bool> simple;

    explicit PosetContext(const RootSystem& r)
        : rs(r), n(r.num_positive()), full_support((r.rank() >= 32) ? 0 : ((1u << r.rank()) - 1)) {
        comparable.assign(static_cast<std::size_t>(n), RootMask(n));
        support.resize(static_cast<std::size_t>(n));
        simple.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const Root& a = rs.root_at(i);
            std::uint32_t s = 0;
            for (int k = 0; k < rs.rank(); ++k)
                if (a.coeffs[static_cast<std::size_t>(k)] != 0) s |= 1u << k;
            support[static_cast<std::size_t>(i)] = s;
            simple[static_cast<std::size_t>(i)] = a.height() == 1;
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (compare_roots(rs, rs.root_at(i), rs.root_at(j)) != RootOrder::Incomparable) {
                    comparable[static_cast<std::size_t>(i)].set(j);
                    comparable[static_cast<std::size_t>(j)].set(i);
                }
    }

    bool extendable_by_nonsimple(const RootMask& chosen, const std::vector<int>& chosen_idx) const {
        for (int r = 0; r < n; ++r) {
            if (simple[static_cast<std::size_t>(r)] || chosen.test(r)) continue;
            bool ok = true;
            for (int c : chosen_idx)
                if (comparable[static_cast<std::size_t>(c)].test(r)) { ok = false; break; }
            if (ok) return true;
        }
        return false;
    }
};

Antichain antichain_from_indices(const RootSystem& rs, const std::vector<int>& idx) {
    Antichain g;
    g.roots.reserve(idx.size());
    for (int i : idx) g.roots.push_back(rs.root_at(i));
    return g;
}

/// Depth-first descent over root ordinals; prunes by comparability with the
/// chosen prefix, so the work is proportional to the number of antichains.
void descend(const PosetContext& ctx, const std::vector<int>& universe, std::size_t from,
             std::vector<int>& chosen, RootMask& chosen_mask,
             const std::function<void(const std::vector<int>&, const RootMask&)>& visit) {
    visit(chosen, chosen_mask);
    for (std::size_t k = from; k < universe.size(); ++k) {
        int i = universe[k];
        bool ok = true;
        for (int c : chosen)
            if (ctx.comparable[static_cast<std::size_t>(c)].test(i)) { ok = false; break; }
        if (!ok) continue;
        chosen.push_back(i);
        chosen_mask.set(i);
        descend(ctx, universe, k + 1, chosen, chosen_mask, visit);
        chosen.pop_back();
        chosen_mask.clear(i);
    }
}

} // namespace

bool RootIdeal::contains(const Root& a) const {
    return std::find(roots.begin(), roots.end(), a) != roots.end();
}

Antichain make_antichain(const RootSystem& rs, std::vector<Root> roots) {
    for (const Root& r : roots)
        if (!rs.is_positive_root(r))
            throw domain_error("antichain contains a vector that is not a positive root of " +
                               rs.type().label());
    sort_roots(roots);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (compare_roots(rs, roots[i], roots[j]) != RootOrder::Incomparable)
                throw domain_error("not an antichain: two members are comparable");
    return Antichain{std::move(roots)};
}

RootIdeal up_closure(const RootSystem& rs, const std::vector<Root>& gens) {
    for (const Root& g : gens)
        if (!rs.is_positive_root(g))
            throw domain_error("up_closure: generator is not a positive root of " + rs.type().label());
    RootIdeal ideal;
    for (const Root& a : rs.positive_roots()) {
        for (const Root& g : gens) {
            RootOrder o = compare_roots(rs, g, a);
            if (o == RootOrder::Less || o == RootOrder::Equal) {
                ideal.roots.push_back(a);
                break;
            }
        }
    }
    return ideal;
}

RootIdeal up_closure(const RootSystem& rs, const Antichain& g) {
    return up_closure(rs, g.roots);
}

Antichain socle(const RootSystem& rs, const RootIdeal& ideal) {
    for (const Root& a : ideal.roots)
        if (!rs.is_positive_root(a))
            throw domain_error("socle: ideal contains a non-root");
    for (const Root& a : ideal.roots)
        for (const Root& b : rs.positive_roots()) {
            RootOrder o = compare_roots(rs, a, b);
            if (o == RootOrder::Less && !ideal.contains(b))
                throw domain_error("not upward closed: contains " + to_string(a) +
                                   " but not " + to_string(b));
        }
    Antichain soc;
    for (const Root& a : ideal.roots) {
        bool minimal = true;
        for (const Root& b : ideal.roots)
            if (compare_roots(rs, b, a) == RootOrder::Less) { minimal = false; break; }
        if (minimal) soc.roots.push_back(a);
    }
    sort_roots(soc.roots);
    return soc;
}

void enumerate_antichains(const RootSystem& rs, AntichainFilter filter,
                          const std::function<void(const Antichain&)>& visit,
                          MaximalityReading reading) {
    PosetContext ctx(rs);
    std::vector<int> universe;
    const bool maximal = filter == AntichainFilter::MaximalSimpleFree;
    for (int i = 0; i < ctx.n; ++i)
        if (!maximal || !ctx.simple[static_cast<std::size_t>(i)]) universe.push_back(i);

    if (maximal && rs.rank() >= 32)
        throw domain_error("the maximal-simple-free filter supports rank < 32");

    std::vector<int> chosen;
    RootMask mask(ctx.n);
    auto sink = [&](const std::vector<int>& idx, const RootMask& m) {
        switch (filter) {
            case AntichainFilter::All:
                break;
            case AntichainFilter::NonEmpty:
                if (idx.empty()) return;
                break;
            case AntichainFilter::MaximalSimpleFree: {
                if (idx.size() < 3) return;
                std::uint32_t sup = 0;
                for (int i : idx) sup |= ctx.support[static_cast<std::size_t>(i)];
                if (sup != ctx.full_support) return;
                // both readings reduce to: no non-simple root can be added
                (void)reading;
                if (ctx.extendable_by_nonsimple(m, idx)) return;
                break;
            }
        }
        visit(antichain_from_indices(rs, idx));
    };
    descend(ctx, universe, 0, chosen, mask, sink);
}

std::vector<Antichain> list_antichains(const RootSystem& rs, AntichainFilter filter,
                                       MaximalityReading reading) {
    std::vector<Antichain> out;
    enumerate_antichains(rs, filter, [&](const Antichain& g) { out.push_back(g); }, reading);
    return out;
}

Delta1Stats delta1_stats(const RootSystem& rs) {
    if (!rs.irreducible())
        throw domain_error("delta1_stats requires an irreducible root system");
    PosetContext ctx(rs);
    std::vector<int> universe;
    for (int i = 0; i < ctx.n; ++i)
        if (rs.root_at(i).coeffs[0] != 0) universe.push_back(i);

    Delta1Stats stats;
    stats.delta1_size = static_cast<int>(universe.size());
    std::vector<int> chosen;
    RootMask mask(ctx.n);
    descend(ctx, universe, 0, chosen, mask, [&](const std::vector<int>& idx, const RootMask&) {
        if (idx.empty()) return;
        stats.antichain_count += 1;
        stats.max_antichain_size = std::max(stats.max_antichain_size, static_cast<int>(idx.size()));
    });
    return stats;
}

std::int64_t delta1_slice_intersection_count(const RootSystem& rs) {
    if (!rs.irreducible())
        throw domain_error("delta1_slice_intersection_count requires an irreducible root system");
    std::set<std::vector<Root>> slices;
    enumerate_antichains(rs, AntichainFilter::MaximalSimpleFree, [&](const Antichain& g) {
        std::vector<Root> slice;
        for (const Root& r : g.roots)
            if (r.coeffs[0] != 0) slice.push_back(r);
        if (!slice.empty()) slices.insert(std::move(slice));
    });
    return static_cast<std::int64_t>(slices.size());
}

AntichainSubsystem antichain_subsystem(const RootSystem& rs, const Antichain& g) {
    Antichain checked = make_antichain(rs, g.roots);
    if (checked.empty()) throw domain_error("antichain_subsystem requires a nonempty antichain");
    const int k = static_cast<int>(checked.size());
    const int l = rs.rank();

    linalg::Matrix basis(static_cast<std::size_t>(l), std::vector<Rat>(static_cast<std::size_t>(k)));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < l; ++i)
            basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Rat(checked.roots[static_cast<std::size_t>(j)].coeffs[static_cast<std::size_t>(i)]);
    if (linalg::rank(basis) != k)
        throw domain_error("antichain_subsystem: input roots are linearly dependent");

    AntichainSubsystem out;
    auto consider = [&](const Root& delta) {
        std::vector<Rat> rhs(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i) rhs[static_cast<std::size_t>(i)] = Rat(delta.coeffs[static_cast<std::size_t>(i)]);
        auto x = linalg::solve_unique(basis, rhs);
        if (!x) return;
        std::vector<std::int64_t> coords;
        bool integral = true, nonneg = true;
        for (const Rat& c : *x) {
            if (c.den() != 1) { integral = false; break; }
            coords.push_back(c.num());
            if (c.num() < 0) nonneg = false;
        }
        if (!integral) return;
        out.all_roots.push_back({delta, coords});
        if (nonneg) out.positive_roots.push_back({delta, coords});
    };
    for (const Root& a : rs.positive_roots()) {
        consider(a);
        consider(a.negated());
    }

    // Cartan data of the generated subsystem, the antichain acting as simple basis
    CartanMatrix sub(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rat v = Rat(2) * rs.bilinear_form(checked.roots[static_cast<std::size_t>(j)],
                                              checked.roots[static_cast<std::size_t>(i)]) /
                    rs.bilinear_form(checked.roots[static_cast<std::size_t>(i)],
                                     checked.roots[static_cast<std::size_t>(i)]);
            if (v.den() != 1)
                throw invariant_violation("antichain pairing is not integral");
            sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(v.num());
        }
    RootSystemType t;
    for (const ComponentClassification& c : classify_cartan(sub))
        t.components.emplace_back(c.family, c.rank);
    out.subsystem_type = std::move(t);
    return out;
}

Antichain sample_antichain(const RootSystem& rs, std::mt19937_64& rng) {
    const int n = rs.num_positive();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<int> target_dist(1, std::max(1, rs.rank()));
    const int target = target_dist(rng);
    std::vector<Root> picked;
    for (int i : order) {
        const Root& cand = rs.root_at(i);
        bool ok = true;
        for (const Root& p : picked)
            if (compare_roots(rs, p, cand) != RootOrder::Incomparable) { ok = false; break; }
        if (ok) picked.push_back(cand);
        if (static_cast<int>(picked.size()) >= target) break;
    }
    return make_antichain(rs, std::move(picked));
}

} // namespace borel
