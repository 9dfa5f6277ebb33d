#include "borel/roots.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "borel/errors.hpp"

namespace borel {

namespace {

const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E: return "E";
        case Family::F: return "F";
        case Family::G: return "G";
    }
    return "?";
}

bool rank_valid(Family f, int rank) {
    switch (f) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 2;
        case Family::C: return rank >= 2;
        case Family::D: return rank >= 4;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

CartanMatrix irreducible_cartan(Family f, int rank) {
    CartanMatrix a(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    switch (f) {
        case Family::A:
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            a[rank - 1][rank - 2] = -2; // last simple root is short
            break;
        case Family::C:
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            a[rank - 2][rank - 1] = -2; // last simple root is long
            break;
        case Family::D:
            for (int i = 0; i + 1 < rank - 2; ++i) link(i, i + 1);
            link(rank - 3, rank - 2);
            link(rank - 3, rank - 1);
            break;
        case Family::E:
            // chain 1-3-4-5-..., branch node 2 attached to 4
            link(0, 2);
            for (int i = 2; i + 1 < rank; ++i) link(i, i + 1);
            link(1, 3);
            break;
        case Family::F:
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[2][1] = -2;
            break;
        case Family::G:
            link(0, 1);
            a[0][1] = -3;
            break;
    }
    return a;
}

} // namespace

int RootSystemType::total_rank() const {
    int r = 0;
    for (const auto& [f, rank] : components) r += rank;
    return r;
}

std::string RootSystemType::label() const {
    std::string out;
    for (const auto& [f, rank] : components) {
        if (!out.empty()) out += 'x';
        out += family_name(f);
        out += std::to_string(rank);
    }
    return out;
}

void RootSystemType::validate() const {
    if (components.empty()) throw domain_error("root system type has no components");
    for (const auto& [f, rank] : components)
        if (!rank_valid(f, rank))
            throw domain_error(std::string("invalid rank ") + std::to_string(rank) +
                               " for family " + family_name(f));
}

RootSystemType RootSystemType::parse(const std::string& label) {
    RootSystemType t;
    std::size_t pos = 0;
    while (pos < label.size()) {
        char c = label[pos];
        if (c < 'A' || c > 'G')
            throw domain_error("cannot parse type label '" + label + "'");
        ++pos;
        std::size_t start = pos;
        while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
        if (start == pos) throw domain_error("cannot parse type label '" + label + "'");
        t.components.emplace_back(static_cast<Family>(c), std::stoi(label.substr(start, pos - start)));
        if (pos < label.size()) {
            if (label[pos] != 'x') throw domain_error("cannot parse type label '" + label + "'");
            ++pos;
            if (pos == label.size()) throw domain_error("cannot parse type label '" + label + "'");
        }
    }
    t.validate();
    return t;
}

int Root::height() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

std::string to_string(const Root& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.coeffs[i]);
    }
    out += ']';
    return out;
}

Root Root::negated() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
}

std::int64_t evaluate_on_coweight(const Root& a, std::span<const std::int64_t> h) {
    if (a.coeffs.size() != h.size())
        throw domain_error("coweight length does not match root length");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < h.size(); ++i)
        acc = checked_add(acc, checked_mul(a.coeffs[i], h[i]));
    return acc;
}

CartanMatrix cartan_matrix(const RootSystemType& type) {
    type.validate();
    const int n = type.total_rank();
    CartanMatrix a(n, std::vector<int>(n, 0));
    int offset = 0;
    for (const auto& [f, rank] : type.components) {
        CartanMatrix block = irreducible_cartan(f, rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) a[offset + i][offset + j] = block[i][j];
        offset += rank;
    }
    return a;
}

std::vector<Root> generate_positive_roots(const CartanMatrix& cartan) {
    const int n = static_cast<int>(cartan.size());
    const int height_cap = 4 * n + 16;
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> level;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        found.insert(e);
        level.push_back(std::move(e));
    }
    int height = 1;
    while (!level.empty()) {
        if (++height > height_cap)
            throw invariant_violation("root generation did not close: matrix is not of finite type");
        std::set<std::vector<int>> next;
        for (const auto& alpha : level) {
            for (int i = 0; i < n; ++i) {
                // alpha_i-string through alpha: q = p - <alpha, alpha_i^vee>
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += cartan[i][j] * alpha[j];
                int p = 0;
                std::vector<int> down = alpha;
                for (;;) {
                    down[i] -= 1;
                    if (down[i] < 0 || !found.count(down)) break;
                    ++p;
                }
                if (p - pairing >= 1) {
                    std::vector<int> up = alpha;
                    up[i] += 1;
                    next.insert(std::move(up));
                }
            }
        }
        level.assign(next.begin(), next.end());
        for (auto& v : next) found.insert(v);
    }
    std::vector<Root> roots;
    roots.reserve(found.size());
    for (const auto& v : found) roots.emplace_back(v);
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        int ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.coeffs < b.coeffs;
    });
    return roots;
}

RootSystem::RootSystem(RootSystemType type) : type_(std::move(type)) {
    type_.validate();
    cartan_ = cartan_matrix(type_);
    positives_ = generate_positive_roots(cartan_);
    for (int i = 0; i < static_cast<int>(positives_.size()); ++i)
        index_.emplace(positives_[static_cast<std::size_t>(i)].coeffs, i);

    // symmetrizer: d_i with (alpha_i, alpha_j) = d_i A[i][j], short roots at d = 1
    const int n = rank();
    symmetrizer_.assign(static_cast<std::size_t>(n), Rat(0));
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        if (done[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        done[static_cast<std::size_t>(s)] = true;
        symmetrizer_[static_cast<std::size_t>(s)] = Rat(1);
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            comp.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (done[static_cast<std::size_t>(j)] || cartan_[i][j] == 0 || i == j) continue;
                done[static_cast<std::size_t>(j)] = true;
                symmetrizer_[static_cast<std::size_t>(j)] =
                    symmetrizer_[static_cast<std::size_t>(i)] * Rat(cartan_[i][j], cartan_[j][i]);
                q.push(j);
            }
        }
        Rat lo = symmetrizer_[static_cast<std::size_t>(comp.front())];
        for (int i : comp)
            if (symmetrizer_[static_cast<std::size_t>(i)] < lo) lo = symmetrizer_[static_cast<std::size_t>(i)];
        for (int i : comp) symmetrizer_[static_cast<std::size_t>(i)] /= lo;
    }
}

bool RootSystem::is_positive_root(const Root& a) const {
    return index_.count(a.coeffs) > 0;
}

bool RootSystem::is_root(const Root& a) const {
    return is_positive_root(a) || index_.count(a.negated().coeffs) > 0;
}

int RootSystem::index_of(const Root& a) const {
    auto it = index_.find(a.coeffs);
    if (it == index_.end()) throw domain_error("not a positive root of " + type_.label());
    return it->second;
}

Root RootSystem::simple_root(int i) const {
    if (i < 0 || i >= rank()) throw domain_error("simple root index out of range");
    std::vector<int> e(static_cast<std::size_t>(rank()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return Root(std::move(e));
}

int RootSystem::pairing_with_simple_coroot(const Root& a, int i) const {
    int acc = 0;
    for (int j = 0; j < rank(); ++j) acc += cartan_[i][j] * a.coeffs[static_cast<std::size_t>(j)];
    return acc;
}

Rat RootSystem::bilinear_form(const Root& a, const Root& b) const {
    Rat acc(0);
    for (int i = 0; i < rank(); ++i) {
        if (a.coeffs[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < rank(); ++j) {
            if (b.coeffs[static_cast<std::size_t>(j)] == 0 || cartan_[i][j] == 0) continue;
            acc += symmetrizer_[static_cast<std::size_t>(i)] *
                   Rat(a.coeffs[static_cast<std::size_t>(i)]) *
                   Rat(b.coeffs[static_cast<std::size_t>(j)]) * Rat(cartan_[i][j]);
        }
    }
    return acc;
}

RootSystem build_root_system(const RootSystemType& type) {
    return RootSystem(type);
}

RootOrder compare_roots(const RootSystem& rs, const Root& a, const Root& b) {
    if (!rs.is_root(a) || !rs.is_root(b))
        throw domain_error("compare_roots: input is not a root of " + rs.type().label());
    bool some_pos = false, some_neg = false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        int d = b.coeffs[i] - a.coeffs[i];
        if (d > 0) some_pos = true;
        if (d < 0) some_neg = true;
    }
    if (!some_pos && !some_neg) return RootOrder::Equal;
    if (some_pos && some_neg) return RootOrder::Incomparable;
    return some_pos ? RootOrder::Less : RootOrder::Greater;
}

std::vector<int> root_support(const RootSystem& rs, const Root& a) {
    if (!rs.is_positive_root(a))
        throw domain_error("root_support: input is not a positive root of " + rs.type().label());
    std::vector<int> out;
    for (int i = 0; i < rs.rank(); ++i)
        if (a.coeffs[static_cast<std::size_t>(i)] != 0) out.push_back(i);
    return out;
}

namespace {

struct Diagram {
    const CartanMatrix& a;
    std::vector<int> nodes; // ambient indices of one connected component

    int mult(int i, int j) const { return a[i][j] * a[j][i]; }
    std::vector<int> neighbours(int i) const {
        std::vector<int> out;
        for (int j : nodes)
            if (j != i && a[i][j] != 0) out.push_back(j);
        return out;
    }
};

/// Walk a path component starting from endpoint `from`.
std::vector<int> walk_path(const Diagram& d, int from) {
    std::vector<int> order{from};
    int prev = -1, cur = from;
    for (;;) {
        int next = -1;
        for (int nb : d.neighbours(cur))
            if (nb != prev) { next = nb; break; }
        if (next < 0) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

ComponentClassification classify_component(const Diagram& d) {
    const int r = static_cast<int>(d.nodes.size());
    if (r == 1) return {Family::A, 1, {d.nodes[0]}};

    int max_mult = 1;
    for (std::size_t x = 0; x < d.nodes.size(); ++x)
        for (std::size_t y = x + 1; y < d.nodes.size(); ++y)
            if (d.a[d.nodes[x]][d.nodes[y]] != 0)
                max_mult = std::max(max_mult, d.mult(d.nodes[x], d.nodes[y]));

    if (max_mult == 3) {
        if (r != 2) throw invariant_violation("triple edge in a component of rank != 2");
        int i = d.nodes[0], j = d.nodes[1];
        if (d.a[i][j] != -3) std::swap(i, j); // alpha_1 is the short root, its row holds -3
        return {Family::G, 2, {i, j}};
    }

    if (max_mult == 2) {
        if (r == 2) {
            int i = d.nodes[0], j = d.nodes[1];
            if (d.a[j][i] != -2) std::swap(i, j); // alpha_2 short: its row holds -2
            return {Family::B, 2, {i, j}};
        }
        for (int n : d.nodes)
            if (d.neighbours(n).size() > 2)
                throw invariant_violation("double edge with a branch node: not finite type");
        int endpoint = -1;
        for (int n : d.nodes)
            if (d.neighbours(n).size() == 1) { endpoint = n; break; }
        std::vector<int> path = walk_path(d, endpoint);
        int dpos = -1;
        for (int k = 0; k + 1 < r; ++k)
            if (d.mult(path[static_cast<std::size_t>(k)], path[static_cast<std::size_t>(k + 1)]) == 2) dpos = k;
        if (dpos == 0) {
            std::reverse(path.begin(), path.end());
            dpos = r - 2;
        }
        if (dpos == r - 2) {
            int last = path[static_cast<std::size_t>(r - 1)], before = path[static_cast<std::size_t>(r - 2)];
            Family fam = (d.a[last][before] == -2) ? Family::B : Family::C;
            return {fam, r, path};
        }
        if (r == 4 && dpos == 1) {
            if (d.a[path[2]][path[1]] != -2) std::reverse(path.begin(), path.end());
            if (d.a[path[2]][path[1]] != -2)
                throw invariant_violation("rank-4 double-edge component is not F4");
            return {Family::F, 4, path};
        }
        throw invariant_violation("double edge position does not match any finite type");
    }

    // simply laced
    std::vector<int> branch, ends;
    for (int n : d.nodes) {
        std::size_t deg = d.neighbours(n).size();
        if (deg > 3) throw invariant_violation("node of degree > 3: not finite type");
        if (deg == 3) branch.push_back(n);
        if (deg == 1) ends.push_back(n);
    }
    if (branch.empty()) {
        int start = *std::min_element(ends.begin(), ends.end());
        return {Family::A, r, walk_path(d, start)};
    }
    if (branch.size() > 1) throw invariant_violation("two branch nodes: not finite type");
    int fork = branch.front();

    std::vector<std::vector<int>> arms; // each ordered from the fork outwards
    for (int nb : d.neighbours(fork)) {
        std::vector<int> arm{nb};
        int prev = fork, cur = nb;
        for (;;) {
            int next = -1;
            for (int x : d.neighbours(cur))
                if (x != prev) { next = x; break; }
            if (next < 0) break;
            arm.push_back(next);
            prev = cur;
            cur = next;
        }
        arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.front() < y.front();
    });
    const std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();

    if (a0 == 1 && a1 == 1) { // type D, fork = alpha_{l-2}
        std::vector<int> perm(static_cast<std::size_t>(r));
        const std::vector<int>& long_arm = arms[2];
        for (std::size_t k = 0; k < long_arm.size(); ++k)
            perm[long_arm.size() - 1 - k] = long_arm[k];
        perm[static_cast<std::size_t>(r - 3)] = fork;
        perm[static_cast<std::size_t>(r - 2)] = arms[0][0];
        perm[static_cast<std::size_t>(r - 1)] = arms[1][0];
        return {Family::D, r, perm};
    }
    if (a0 == 1 && a1 == 2 && (a2 >= 2 && a2 <= 4)) { // E6..E8
        std::vector<int> perm(static_cast<std::size_t>(r));
        perm[0] = arms[1][1];
        perm[1] = arms[0][0];
        perm[2] = arms[1][0];
        perm[3] = fork;
        for (std::size_t k = 0; k < a2; ++k) perm[4 + k] = arms[2][k];
        return {Family::E, r, perm};
    }
    throw invariant_violation("branch arm profile does not match any finite type");
}

} // namespace

std::vector<ComponentClassification> classify_cartan(const CartanMatrix& cartan) {
    const int n = static_cast<int>(cartan.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<ComponentClassification> out;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            comp.push_back(i);
            for (int j = 0; j < n; ++j)
                if (!seen[static_cast<std::size_t>(j)] && cartan[i][j] != 0 && i != j) {
                    seen[static_cast<std::size_t>(j)] = true;
                    q.push(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        Diagram d{cartan, comp};
        ComponentClassification c = classify_component(d);
        CartanMatrix ref = irreducible_cartan(c.family, c.rank);
        for (int i = 0; i < c.rank; ++i)
            for (int j = 0; j < c.rank; ++j)
                if (cartan[c.to_ambient[static_cast<std::size_t>(i)]]
                          [c.to_ambient[static_cast<std::size_t>(j)]] != ref[i][j])
                    throw invariant_violation("classification produced a wrong diagram isomorphism");
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.to_ambient.front() < y.to_ambient.front();
    });
    return out;
}

} // namespace borel
