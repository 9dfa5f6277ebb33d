#include "borel/chevalley.hpp"

#include <algorithm>

#include "borel/errors.hpp"

namespace borel {

namespace {

std::vector<int> vec_add(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::vector<int> vec_sub(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

/// p = max{ k : b - k a is a root }; the downward string length.
int string_down(const RootSystem& rs, const Root& a, const Root& b) {
    int p = 0;
    Root cur = b;
    for (;;) {
        cur = Root(vec_sub(cur.coeffs, a.coeffs));
        if (!rs.is_root(cur)) break;
        ++p;
    }
    return p;
}

} // namespace

StructureConstants StructureConstants::build(const RootSystem& rs, SignConvention convention) {
    StructureConstants sc;
    sc.rs_ = &rs;
    const int n = rs.num_positive();
    const std::int64_t extraspecial_sign = convention == SignConvention::Plus ? 1 : -1;

    auto lookup_roots = [&](const Root& a, const Root& b) -> std::int64_t {
        Root sum(vec_add(a.coeffs, b.coeffs));
        if (!rs.is_positive_root(sum)) return 0;
        auto it = sc.table_.find({rs.index_of(a), rs.index_of(b)});
        if (it == sc.table_.end())
            throw invariant_violation("structure constant recursion touched an unresolved pair");
        return it->second;
    };
    auto len2 = [&](const Root& r) { return rs.bilinear_form(r, r); };

    // roots are sorted by height, so every constant referenced below has a
    // strictly smaller sum and is already in the table
    for (int k = 0; k < n; ++k) {
        const Root& gamma = rs.root_at(k);
        if (gamma.height() == 1) continue;

        std::vector<std::pair<int, int>> pairs; // (i, j) with i < j, root_i + root_j = gamma
        for (int i = 0; i < n; ++i) {
            Root rest(vec_sub(gamma.coeffs, rs.root_at(i).coeffs));
            if (!rs.is_positive_root(rest)) continue;
            int j = rs.index_of(rest);
            if (i < j) pairs.emplace_back(i, j);
        }
        if (pairs.empty())
            throw invariant_violation("non-simple positive root admits no decomposition");

        const auto [es_i, es_j] = pairs.front(); // minimal first member: the extraspecial pair
        const Root& alpha_star = rs.root_at(es_i);
        const Root& beta_star = rs.root_at(es_j);
        std::int64_t n_star =
            extraspecial_sign * (string_down(rs, alpha_star, beta_star) + 1);
        sc.table_[{es_i, es_j}] = n_star;
        sc.table_[{es_j, es_i}] = -n_star;

        // Every other pair (delta, eps) is pinned by the extraspecial value
        // through the four-root relation on (alpha*, beta*, -delta, -eps),
        // with the mixed-sign constants rewritten by length ratios:
        //
        //   N_{delta,eps} = (gamma,gamma)/N* * (
        //       (w,w) / ((beta*,beta*)(eps,eps))   * N_{delta,w} N_{alpha*,w}
        //     - (u,u) / ((beta*,beta*)(delta,delta)) * N_{eps,u}  N_{alpha*,u} )
        //
        // where u = delta - alpha* and w = eps - alpha* (= beta* - delta);
        // a missing root drops its term, and at least one term survives.
        for (std::size_t p = 1; p < pairs.size(); ++p) {
            const Root& delta = rs.root_at(pairs[p].first);
            const Root& eps = rs.root_at(pairs[p].second);
            Root u(vec_sub(delta.coeffs, alpha_star.coeffs));
            Root w(vec_sub(eps.coeffs, alpha_star.coeffs));
            Rat acc(0);
            if (rs.is_root(w))
                acc += len2(w) / (len2(beta_star) * len2(eps)) *
                       Rat(lookup_roots(delta, w)) * Rat(lookup_roots(alpha_star, w));
            if (rs.is_root(u))
                acc -= len2(u) / (len2(beta_star) * len2(delta)) *
                       Rat(lookup_roots(eps, u)) * Rat(lookup_roots(alpha_star, u));
            Rat value = len2(gamma) / Rat(n_star) * acc;
            if (value.den() != 1 || value.is_zero())
                throw invariant_violation("structure constant relation produced a non-admissible value");
            sc.table_[{pairs[p].first, pairs[p].second}] = value.num();
            sc.table_[{pairs[p].second, pairs[p].first}] = -value.num();
        }
    }
    return sc;
}

std::int64_t StructureConstants::coefficient(const Root& a, const Root& b) const {
    int i = rs_->index_of(a);
    int j = rs_->index_of(b);
    Root sum(vec_add(a.coeffs, b.coeffs));
    if (!rs_->is_positive_root(sum)) return 0;
    auto it = table_.find({i, j});
    if (it == table_.end())
        throw invariant_violation("structure constant table is missing a defined pair");
    return it->second;
}

bool StructureConstants::defined(const Root& a, const Root& b) const {
    rs_->index_of(a);
    rs_->index_of(b);
    return rs_->is_positive_root(Root(vec_add(a.coeffs, b.coeffs)));
}

WeightMonomialSpace weight_space_basis(const RootSystem& rs, const RootIdeal& ideal,
                                       const std::vector<int>& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank())
        throw domain_error("weight length does not match rank");
    for (int v : lambda)
        if (v > 0) throw domain_error("weight must lie in the non-positive simple cone");

    std::vector<int> target(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) target[i] = -lambda[i];

    WeightMonomialSpace out;
    out.weight = lambda;

    // bounded knapsack over the ideal's roots in sorted order
    std::vector<int> ideal_idx;
    for (const Root& r : ideal.roots) ideal_idx.push_back(rs.index_of(r));
    std::sort(ideal_idx.begin(), ideal_idx.end());

    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t from, std::vector<int>& remaining) -> void {
        bool zero = std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; });
        if (zero) {
            out.basis.push_back(Monomial{chosen});
            return;
        }
        for (std::size_t k = from; k < ideal_idx.size(); ++k) {
            const Root& r = rs.root_at(ideal_idx[k]);
            bool fits = true;
            for (std::size_t i = 0; i < remaining.size(); ++i)
                if (r.coeffs[i] > remaining[i]) { fits = false; break; }
            if (!fits) continue;
            for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] -= r.coeffs[i];
            chosen.push_back(ideal_idx[k]);
            self(self, k, remaining); // same root may repeat
            chosen.pop_back();
            for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] += r.coeffs[i];
        }
    };
    std::vector<int> remaining = target;
    rec(rec, 0, remaining);
    std::sort(out.basis.begin(), out.basis.end());
    return out;
}

InvariantBasis invariant_subspace(const RootSystem& rs, const RootIdeal& ideal,
                                  const std::vector<int>& lambda, ActingSet acting,
                                  const StructureConstants& constants) {
    InvariantBasis out;
    out.space = weight_space_basis(rs, ideal, lambda);
    const std::size_t dim = out.space.basis.size();
    if (dim == 0) return out;

    std::vector<Root> acting_roots;
    if (acting == ActingSet::FullNilradical) {
        acting_roots = rs.positive_roots();
    } else {
        Antichain soc = socle(rs, ideal);
        if (soc.empty()) {
            acting_roots.clear(); // empty ideal: nothing acts, everything is invariant
        } else {
            for (const SubsystemElement& e : antichain_subsystem(rs, soc).positive_roots)
                acting_roots.push_back(e.root);
        }
    }

    linalg::Matrix stacked;
    for (const Root& beta : acting_roots) {
        // codomain weight lambda + beta
        std::vector<int> lam_up(lambda.size());
        bool in_cone = true;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            lam_up[i] = lambda[i] + beta.coeffs[i];
            if (lam_up[i] > 0) in_cone = false;
        }
        if (!in_cone) continue; // empty codomain: the derivation vanishes here
        WeightMonomialSpace cod = weight_space_basis(rs, ideal, lam_up);
        if (cod.basis.empty()) continue;
        std::map<Monomial, std::size_t> cod_index;
        for (std::size_t r = 0; r < cod.basis.size(); ++r) cod_index.emplace(cod.basis[r], r);

        linalg::Matrix mat(cod.basis.size(), std::vector<Rat>(dim, Rat(0)));
        bool nonzero = false;
        for (std::size_t c = 0; c < dim; ++c) {
            const Monomial& mono = out.space.basis[c];
            for (std::size_t t = 0; t < mono.root_indices.size(); ++t) {
                if (t > 0 && mono.root_indices[t] == mono.root_indices[t - 1]) continue;
                const Root& alpha = rs.root_at(mono.root_indices[t]);
                Root stepped(vec_sub(alpha.coeffs, beta.coeffs));
                if (!rs.is_positive_root(stepped) || !ideal.contains(stepped)) continue;
                std::int64_t coeff = constants.coefficient(beta, stepped);
                int multiplicity = static_cast<int>(
                    std::count(mono.root_indices.begin(), mono.root_indices.end(),
                               mono.root_indices[t]));
                Monomial image = mono;
                image.root_indices.erase(
                    std::find(image.root_indices.begin(), image.root_indices.end(),
                              mono.root_indices[t]));
                image.root_indices.insert(
                    std::lower_bound(image.root_indices.begin(), image.root_indices.end(),
                                     rs.index_of(stepped)),
                    rs.index_of(stepped));
                auto it = cod_index.find(image);
                if (it == cod_index.end())
                    throw invariant_violation("derivation image left its weight component");
                mat[it->second][c] += Rat(checked_mul(coeff, multiplicity));
                nonzero = true;
            }
        }
        if (nonzero)
            for (auto& row : mat) stacked.push_back(std::move(row));
    }

    if (stacked.empty()) {
        // no constraints: the whole component is invariant
        for (std::size_t c = 0; c < dim; ++c) {
            std::vector<Rat> v(dim, Rat(0));
            v[c] = Rat(1);
            out.kernel.push_back(std::move(v));
        }
        return out;
    }
    out.kernel = linalg::nullspace(std::move(stacked), static_cast<int>(dim));
    return out;
}

SocleInvarianceReport check_socle_monomial_invariance(const RootSystem& rs, const RootIdeal& ideal) {
    SocleInvarianceReport report;
    Antichain soc = socle(rs, ideal);
    for (const Root& beta : rs.positive_roots()) {
        for (const Root& alpha : soc.roots) {
            report.pairs_checked += 1;
            Root stepped(vec_sub(alpha.coeffs, beta.coeffs));
            if (rs.is_positive_root(stepped) && ideal.contains(stepped)) {
                report.pass = false;
                report.failure = "derivation by " + to_string(beta) + " steps socle root " +
                                 to_string(alpha) + " into the ideal";
                return report;
            }
        }
    }
    report.pass = true;
    return report;
}

} // namespace borel
