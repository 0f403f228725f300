#pragma once

// Isomorphism-invariant verification tools for finitely presented groups:
// abelianization via integer Smith normal form, homomorphism counting into
// symmetric groups, and Tietze simplification.
//
// Fingerprint equality is evidence of isomorphism, never proof: the
// isomorphism problem for finitely presented groups is undecidable, and
// these counts only guard against construction bugs.

#include <vector>

#include "linkgroups/presentation.hpp"

namespace linkgroups {

struct AbelianInvariants {
    int free_rank = 0;
    std::vector<long long> torsion; // invariant factors d1 | d2 | ..., each >= 2

    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Smith normal form of the exponent-sum matrix, exact integer arithmetic.
AbelianInvariants abelianize(const GroupPresentation& G);

inline constexpr int kDefaultDegreeCap = 5;

// |Hom(G, S_k)| by backtracking over generator images, checking each
// relation as soon as its last generator is assigned.
long long hom_count(const GroupPresentation& G, int k, int degree_cap = kDefaultDegreeCap);

struct HomFingerprint {
    std::vector<long long> counts; // counts[i] = |Hom(G, S_{i+1})|

    friend bool operator==(const HomFingerprint&, const HomFingerprint&) = default;
};

HomFingerprint fingerprint(const GroupPresentation& G, int kmax,
                           int degree_cap = kDefaultDegreeCap);

// Presentation moves: eliminate a generator occurring exactly once in some
// relation, drop identity/duplicate relations, freely and cyclically reduce.
// Stops once `budget` moves have been applied.
GroupPresentation tietze_simplify(const GroupPresentation& G, int budget = 1000);

} // namespace linkgroups
