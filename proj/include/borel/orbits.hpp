#pragma once

#include <map>
#include <string>

#include "borel/certificates.hpp"
#include "borel/poset.hpp"
#include "borel/rational.hpp"
#include "borel/roots.hpp"

namespace borel {

/// Sparse nilpotent element: positive roots mapped to nonzero rational
/// coefficients in the fixed root-vector basis.
struct NilpotentElement {
    std::map<Root, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const NilpotentElement&) const = default;
};

/// Drops explicit zero coefficients and validates every key.
NilpotentElement make_element(const RootSystem& rs, std::map<Root, Rat> terms);

struct SupportDecomposition {
    std::vector<Root> support; // sorted in the system's root order
    Antichain socle;           // minimal support roots
    RootIdeal ideal;           // minimal ideal containing the element
};

SupportDecomposition support_and_socle(const RootSystem& rs, const NilpotentElement& x);

/// Whether the minimal ideal containing x is exactly the given ideal:
/// socle(ideal) within supp(x) within ideal. Cross-checked against the
/// second characterization (x in ideal with matching closure).
bool in_m_bullet(const RootSystem& rs, const NilpotentElement& x, const RootIdeal& ideal);

/// Scale each coefficient by t^(alpha(H)); support is preserved exactly.
NilpotentElement torus_scale(const RootSystem& rs, const NilpotentElement& x,
                             std::span<const std::int64_t> h, const Rat& t);

/// Symbolic limit of t^(-n) (t^H . y) as t -> 0: keeps exactly the
/// coefficients on the certificate hyperplane, which form the socle
/// support. Coefficients are preserved verbatim; no numerics involved.
NilpotentElement torus_degenerate(const RootSystem& rs, const NilpotentElement& y,
                                  const Certificate& socle_certificate);

/// Torus-orbit membership for linearly independent supports, where the
/// orbit is cut out by the support condition alone. Throws domain_error
/// when the support of x is linearly dependent.
bool same_torus_orbit_linindep(const RootSystem& rs, const NilpotentElement& x,
                               const NilpotentElement& y);

struct Fixture {
    RootSystem system;
    NilpotentElement element;
};

/// Named regression elements with non-minimal-support behaviour, one per
/// type in {A6, B4, C4, D5, E6, F4}; all coefficients are 1 and every
/// listed root is validated against the generated positive roots.
Fixture load_fixture(const std::string& name);

} // namespace borel
