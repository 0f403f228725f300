#pragma once

// Builders for the torus-link covers and the closed-form knot-group
// presentations they must reproduce: plain torus links, torus links with a
// companion unknot threading the interior and/or exterior of the carrier
// torus, and links nested across concentric tori.

#include <string>
#include <vector>

#include "linkgroups/svk.hpp"

namespace linkgroups {

struct TorusLinkParams {
    int n = 1; // component count
    int p = 0; // meridian winding
    int q = 0; // longitude winding
};

// n >= 1, (p,q) != (0,0), gcd(p,q) = 1.
void validate_params(const TorusLinkParams& params);

struct LinkSpec {
    std::vector<TorusLinkParams> levels; // innermost first
    bool interior_unknot = false;        // companion circle through the torus hole
    bool exterior_unknot = false;        // companion circle around the torus
};

void validate_spec(const LinkSpec& spec);

// Cycle graphs on n base points for both cover pieces, n disjoint overlap
// loops, inclusion images winding the cycles p resp. q times, and the
// standard path retractions.
PushoutInput build_link_groupoids(const TorusLinkParams& params);

// <a, b, f_1..f_{n-1} | a^p b^-q, a^p f_k b^-q f_k^-1>.
GroupPresentation torus_link_group(const TorusLinkParams& params);

// As build_link_groupoids plus one commuting loop per piece for the
// companion unknots.
PushoutInput build_unknot_groupoids(const TorusLinkParams& params);

// <a, dA, b, dB, f_k | [a,dA], [b,dB], a^p b^-q, a^p f_k b^-q f_k^-1>.
GroupPresentation link_with_unknots_group(const TorusLinkParams& params);

// Adds the relation gen = 1 and eliminates gen; this is what removing an
// unknotted component from the link does to the group.
GroupPresentation fill_unknot(const GroupPresentation& G, std::string_view label);

// Closed form for a nested link with the exterior companion unknot
// (exterior_unknot must be set; fill the top generator afterwards to drop
// it).  Level a contributes a_a, b_a, f-generators, and the commutation of
// b_a with a_{a+1}.
GroupPresentation nested_link_group(const LinkSpec& spec);

// Same group computed inductively through the pushout engine: each level
// re-enters as the object group of the interior piece, glued along the
// relation (cycle product) = a_level.
GroupPresentation nested_link_group_engine(const LinkSpec& spec);

// Label of the outermost generator of the engine-built nested presentation
// (the one that fill_unknot removes when no exterior unknot is wanted).
std::string nested_engine_top_label(std::size_t level_count);

// Full dispatch used by the CLI and the acceptance suite: closed-form and
// engine routes for any valid LinkSpec, companion unknots filled in as the
// flags require.
GroupPresentation closed_form_group(const LinkSpec& spec);
GroupPresentation engine_group(const LinkSpec& spec);

} // namespace linkgroups
