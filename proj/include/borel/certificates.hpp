#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "borel/poset.hpp"
#include "borel/roots.hpp"

namespace borel {

/// Hyperplane certificate for an antichain: a coweight H, given by its
/// values b_i = alpha_i(H) on the simple roots, and a level n with
/// b_i >= 1 for all i and gamma(H) = n for every antichain member.
struct Certificate {
    Antichain antichain;
    Coweight coweight;       // b_1..b_l
    std::int64_t level = 0;  // n
    bool minimal = false;    // produced by the exact minimizer
    std::vector<std::string> trace; // construction steps, innermost last
};

struct VerificationLine {
    std::string constraint;   // human-readable description
    std::int64_t value = 0;   // evaluated quantity
    bool ok = false;
};

struct VerificationReport {
    bool valid = false;
    std::vector<VerificationLine> lines;
};

/// Checks positivity of every b_i and the level equation for every
/// antichain member. Invalidity is a report outcome, never an exception.
VerificationReport verify_certificate(const RootSystem& rs, const Certificate& c);

/// Constructive certificate following the case analysis: direct formulas
/// for one or two roots, support restriction, per-component products,
/// the totally-ordered-slice argument for types A/B/C, the two fork
/// subcases for type D, simple-root peeling, and an exact minimizer
/// fallback for the remaining exceptional configurations. The result is
/// verified before being returned; an internal dispatch failure raises
/// invariant_violation carrying the recursion trace.
Certificate construct_certificate(const RootSystem& rs, const Antichain& g);

/// Certificate with provably minimal level: iterates candidate levels
/// upward from max height and solves the integer feasibility system by
/// depth-first assignment with interval propagation, in exact arithmetic.
/// Of the coweights realizing the minimal level, returns the
/// lexicographically smallest.
Certificate minimize_n(const RootSystem& rs, const Antichain& g);

/// Elements of the ideal sitting on the certificate hyperplane; equals the
/// socle of the ideal whenever the certificate is valid for that socle.
std::vector<Root> hyperplane_face(const RootSystem& rs, const RootIdeal& ideal,
                                  const Certificate& c);

} // namespace borel
